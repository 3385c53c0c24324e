#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "fextremal/errors.hpp"
#include "fextremal/graph.hpp"
#include "support.hpp"

using namespace fextremal;

namespace {

Tree path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return validate_tree(n, std::move(e));
}

Tree star(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.push_back({0, i});
  return validate_tree(n, std::move(e));
}

std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("validate_tree accepts paths, stars, and the one-vertex tree") {
  Tree p = path(4);
  CHECK(p.n == 4);
  CHECK(p.edges.size() == 3);
  for (auto [u, v] : p.edges) CHECK(u < v);
  CHECK(sorted_copy(p.adj[1]) == std::vector<int>{0, 2});

  Tree s = star(5);
  CHECK(s.adj[0].size() == 4);
  CHECK(s.adj[3] == std::vector<int>{0});

  Tree k1 = validate_tree(1, {});
  CHECK(k1.n == 1);
  CHECK(k1.edges.empty());
}

TEST_CASE("validate_tree normalizes edge endpoint order") {
  Tree t = validate_tree(3, {{2, 1}, {1, 0}});
  for (auto [u, v] : t.edges) CHECK(u < v);
  std::set<std::pair<int, int>> got(t.edges.begin(), t.edges.end());
  CHECK(got == std::set<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("validate_tree rejects malformed input with a specific error") {
  CHECK_THROWS_AS(validate_tree(0, {}), DomainError);
  CHECK_THROWS_AS(validate_tree(-3, {}), DomainError);
  CHECK_THROWS_AS(validate_tree(2, {{0, 2}}), DomainError);
  CHECK_THROWS_AS(validate_tree(2, {{-1, 0}}), DomainError);
  CHECK_THROWS_AS(validate_tree(2, {{0, 0}}), SelfLoop);
  CHECK_THROWS_AS(validate_tree(3, {{0, 1}, {1, 0}, {1, 2}}), DuplicateEdge);
  CHECK_THROWS_AS(validate_tree(2, {}), NotConnected);
  CHECK_THROWS_AS(validate_tree(4, {{0, 1}, {2, 3}}), NotConnected);
  CHECK_THROWS_AS(validate_tree(3, {{0, 1}, {1, 2}, {0, 2}}), HasCycle);
}

TEST_CASE("degree helpers agree on small trees") {
  Tree p = path(4);
  CHECK(vertex_degrees(p) == std::vector<int>{1, 2, 2, 1});
  CHECK(degrees(p).degrees == std::vector<int>{2, 2, 1, 1});

  DegreeSpec spec = degree_spec(degrees(p));
  REQUIRE(spec.entries.size() == 2);
  CHECK(spec.entries[0] == DegreeSpecEntry{2, 2});
  CHECK(spec.entries[1] == DegreeSpecEntry{1, 2});
  CHECK(format_degree_spec(spec) == "2^2,1^2");
  CHECK(parse_degree_spec("2^2,1^2") == spec);

  CHECK(degrees(validate_tree(1, {})).degrees.empty());
  CHECK(degree_spec({}).entries.empty());
  CHECK(format_degree_spec({}).empty());
  CHECK(parse_degree_spec("").entries.empty());
}

TEST_CASE("degree_spec requires a non-increasing sequence") {
  CHECK_THROWS_AS(degree_spec(DegreeSequence{{1, 2}}), DomainError);
}

TEST_CASE("expand validates spec shape and total") {
  DegreeSequence s = expand(parse_degree_spec("4^3,3^1,1^9"), 13);
  std::vector<int> expected{4, 4, 4, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1};
  CHECK(s.degrees == expected);

  CHECK_THROWS_AS(expand(parse_degree_spec("4^3,3^1,1^9"), 12),
                  InconsistentTotal);
  CHECK_THROWS_AS(expand(DegreeSpec{{{1, 2}, {4, 1}}}, 3), DomainError);
  CHECK_THROWS_AS(expand(DegreeSpec{{{2, 0}}}, 0), DomainError);
  CHECK_THROWS_AS(expand(DegreeSpec{{{-1, 2}}}, 2), DomainError);
}

TEST_CASE("parse_degree_spec rejects malformed text") {
  CHECK_THROWS_AS(parse_degree_spec("4^"), ParseError);
  CHECK_THROWS_AS(parse_degree_spec("4"), ParseError);
  CHECK_THROWS_AS(parse_degree_spec("a^2"), ParseError);
  CHECK_THROWS_AS(parse_degree_spec("4^b"), ParseError);
  CHECK_THROWS_AS(parse_degree_spec("4^2x"), ParseError);
  CHECK_THROWS_AS(parse_degree_spec("4^3,,1^2"), ParseError);
  CHECK_THROWS_AS(parse_degree_spec("1^2,4^1"), ParseError);
  CHECK_THROWS_AS(parse_degree_spec("4^0"), ParseError);
  CHECK_THROWS_AS(parse_degree_spec("-1^2"), ParseError);
}

TEST_CASE("is_tree_degree_sequence") {
  CHECK(is_tree_degree_sequence(DegreeSequence{{1, 1}}));
  CHECK(is_tree_degree_sequence(DegreeSequence{{2, 2, 1, 1}}));
  CHECK(is_tree_degree_sequence(DegreeSequence{{}}));  // one-vertex tree
  CHECK_FALSE(is_tree_degree_sequence(DegreeSequence{{3, 1, 1}}));
  CHECK_FALSE(is_tree_degree_sequence(DegreeSequence{{2, 2, 2}}));
  CHECK_FALSE(is_tree_degree_sequence(DegreeSequence{{0}}));
  CHECK_FALSE(is_tree_degree_sequence(DegreeSequence{{2, 1, 1, 0}}));
}

TEST_CASE("tree_from_degree_sequence realizes any tree degree sequence") {
  Tree s = tree_from_degree_sequence(DegreeSequence{{3, 1, 1, 1}});
  CHECK(canonical_code(s) == canonical_code(star(4)));

  // input order does not matter
  Tree s2 = tree_from_degree_sequence(DegreeSequence{{1, 3, 1, 1}});
  CHECK(canonical_code(s2) == canonical_code(star(4)));

  Tree p = tree_from_degree_sequence(DegreeSequence{{2, 2, 1, 1}});
  CHECK(canonical_code(p) == canonical_code(path(4)));

  CHECK(tree_from_degree_sequence(DegreeSequence{{1, 1}}).edges.size() == 1);
  CHECK(tree_from_degree_sequence(DegreeSequence{{}}).n == 1);

  CHECK_THROWS_AS(tree_from_degree_sequence(DegreeSequence{{2, 2, 2}}),
                  NotRealizable);
  CHECK_THROWS_AS(tree_from_degree_sequence(DegreeSequence{{3, 1, 1}}),
                  NotRealizable);
}

TEST_CASE("tree_center") {
  CHECK(sorted_copy(tree_center(path(4))) == std::vector<int>{1, 2});
  CHECK(tree_center(path(5)) == std::vector<int>{2});
  CHECK(tree_center(star(7)) == std::vector<int>{0});
  CHECK(tree_center(validate_tree(1, {})) == std::vector<int>{0});
  CHECK(sorted_copy(tree_center(path(2))) == std::vector<int>{0, 1});
}

TEST_CASE("canonical_code is a relabeling invariant") {
  // the same path under two labelings
  Tree p = path(4);
  Tree p2 = validate_tree(4, {{3, 1}, {1, 0}, {0, 2}});
  CHECK(canonical_code(p) == canonical_code(p2));
  CHECK(canonical_code(p) != canonical_code(star(4)));

  // hub position does not matter for stars
  Tree s = validate_tree(4, {{2, 0}, {2, 1}, {2, 3}});
  CHECK(canonical_code(s) == canonical_code(star(4)));
}

TEST_CASE("canonical_code separates all classes on six vertices") {
  // all labeled trees on 6 vertices via their Prufer codes
  std::set<std::string> codes;
  std::vector<int> code(4, 0);
  for (;;) {
    codes.insert(canonical_code(testsupport::prufer_decode(code)));
    int k = 3;
    while (k >= 0 && code[k] == 5) code[k--] = 0;
    if (k < 0) break;
    code[k] += 1;
  }
  CHECK(codes.size() == 6);
}

TEST_CASE("edge_type_counts") {
  EdgeTypeMatrix m = edge_type_counts(path(4));
  CHECK(m.at(1, 2) == 2);
  CHECK(m.at(2, 1) == 2);
  CHECK(m.at(2, 2) == 1);
  CHECK(m.at(1, 1) == 0);
  CHECK(m.total() == 3);

  EdgeTypeMatrix s = edge_type_counts(star(5));
  CHECK(s.at(1, 4) == 4);
  CHECK(s.total() == 4);
}
