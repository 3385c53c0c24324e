#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "fextremal/errors.hpp"
#include "fextremal/extremal.hpp"
#include "fextremal/invariants.hpp"
#include "fextremal/transform.hpp"
#include "support.hpp"

using namespace fextremal;
using testsupport::path;
using testsupport::star;

TEST_CASE("f_delta pinned values") {
  CHECK(f_delta(2, 2) == 12);
  CHECK(f_delta(3, 2) == 30);
  CHECK(f_delta(5, 3) == 72);
  // gain from the shift: (d_u+1)^3 - d_u^3 + (d_v-1)^3 - d_v^3
  CHECK(f_delta(4, 4) == 61 - 37);
  CHECK_THROWS_AS(f_delta(2, 3), DomainError);
  CHECK_THROWS_AS(f_delta(3, 1), DomainError);
  CHECK_THROWS_AS(f_delta(1, 1), DomainError);
}

TEST_CASE("middle_degree_vertices") {
  MiddleSet mid = middle_degree_vertices(path(5), 3);
  CHECK(mid.vertices == std::vector<int>{1, 2, 3});

  CHECK(middle_degree_vertices(star(5), 4).vertices.empty());
  CHECK(middle_degree_vertices(path(2), 5).vertices.empty());

  // degree-descending order, ids break ties
  Tree t = validate_tree(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  MiddleSet m = middle_degree_vertices(t, 4);
  CHECK(m.vertices == std::vector<int>{0, 3});

  CHECK_THROWS_AS(middle_degree_vertices(star(6), 4), DegreeBoundViolated);
}

TEST_CASE("edge_shift moves one edge endpoint") {
  // path 0-1-2-3: pulling 3's edge from 2 to 1 makes the star at 1
  Tree p = path(4);
  Tree s = edge_shift(p, 1, 2, 3);
  CHECK(canonical_code(s) == canonical_code(star(4)));
  CHECK(f_index(p).exact == 18);
  CHECK(f_index(s).exact == 30);
  // w keeps its degree, so the change is exactly f_delta of u and v
  CHECK(f_index(s).exact - f_index(p).exact == f_delta(2, 2));

  // shifts may also lower F; the operation itself is direction-neutral
  Tree st = star(5);
  Tree off = edge_shift(st, 1, 0, 2);
  CHECK(f_index(off).exact == 38);
}

TEST_CASE("edge_shift argument validation order") {
  Tree p = path(4);
  CHECK_THROWS_AS(edge_shift(p, -1, 2, 3), DomainError);
  CHECK_THROWS_AS(edge_shift(p, 1, 2, 4), DomainError);
  CHECK_THROWS_AS(edge_shift(p, 2, 2, 3), DomainError);
  CHECK_THROWS_AS(edge_shift(p, 1, 2, 1), DomainError);
  CHECK_THROWS_AS(edge_shift(p, 0, 1, 3), EdgeMissing);
  CHECK_THROWS_AS(edge_shift(p, 3, 1, 2), EdgePresent);
  // moving a leaf's only edge strands the leaf
  CHECK_THROWS_AS(edge_shift(p, 3, 0, 1), WouldDisconnect);
  // u on w's side of vw: reattaching would strand v's side
  CHECK_THROWS_AS(edge_shift(path(5), 0, 3, 2), WouldDisconnect);
}

TEST_CASE("extremalize pinned runs") {
  Tree r7 = extremalize(path(7), 4);
  CHECK(f_index(r7).exact == 96);
  CHECK(format_degree_spec(degree_spec(degrees(r7))) == "4^1,3^1,1^5");

  Tree r12 = extremalize(path(12), 4);
  CHECK(f_index(r12).exact == 208);

  // already extremal: no shifts happen
  long long shifts = 0;
  Tree s = extremalize(star(5), 4, [&shifts](const ShiftRecord&) { ++shifts; });
  CHECK(shifts == 0);
  CHECK(canonical_code(s) == canonical_code(star(5)));

  // a single middle vertex is also terminal
  shifts = 0;
  extremalize(star(5), 6, [&shifts](const ShiftRecord&) { ++shifts; });
  CHECK(shifts == 0);

  CHECK(f_index(extremalize(path(60), 3)).exact ==
        extremal_spec(60, 3).f_value);
}

TEST_CASE("extremalize rejects out-of-domain input") {
  CHECK_THROWS_AS(extremalize(star(5), 3), DegreeBoundViolated);
  CHECK_THROWS_AS(extremalize(validate_tree(1, {}), 4), DomainError);
}

TEST_CASE("the shift iteration is a certified strictly improving run") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 2 + static_cast<int>(rng() % 39);
    int delta = 2 + static_cast<int>(rng() % 5);
    Tree t = testsupport::random_tree_max_degree(n, delta, rng);

    std::vector<ShiftRecord> trace;
    Tree result = extremalize(t, delta, [&trace](const ShiftRecord& rec) {
      trace.push_back(rec);
    });

    // replay the trace independently, step by step
    Tree cur = t;
    long long expected_step = 1;
    for (const ShiftRecord& rec : trace) {
      REQUIRE(rec.step == expected_step++);
      REQUIRE(rec.f_before == testsupport::f_brute(cur));
      std::vector<int> deg = vertex_degrees(cur);
      REQUIRE(rec.f_after - rec.f_before ==
              f_delta(deg[rec.u], deg[rec.v]));
      REQUIRE(rec.f_after > rec.f_before);
      cur = edge_shift(cur, rec.u, rec.v, rec.w);
      REQUIRE(testsupport::f_brute(cur) == rec.f_after);
    }
    REQUIRE(canonical_code(cur) == canonical_code(result));

    // terminal state carries the extremal degree spec
    REQUIRE(degree_spec(degrees(result)) == extremal_spec(n, delta).spec);
    REQUIRE(testsupport::f_brute(result) == extremal_spec(n, delta).f_value);
  }
}

TEST_CASE("construct_extremal pinned shapes") {
  Tree t8 = construct_extremal(8, 4);
  CHECK(edge_type_counts(t8).counts ==
        std::map<std::pair<int, int>, long long>{{{1, 4}, 6}, {{4, 4}, 1}});

  Tree t6 = construct_extremal(6, 4);
  CHECK(edge_type_counts(t6).counts ==
        std::map<std::pair<int, int>, long long>{
            {{1, 2}, 1}, {{1, 4}, 3}, {{2, 4}, 1}});

  Tree t7 = construct_extremal(7, 4);
  CHECK(edge_type_counts(t7).counts ==
        std::map<std::pair<int, int>, long long>{
            {{1, 3}, 2}, {{1, 4}, 3}, {{3, 4}, 1}});

  CHECK(canonical_code(construct_extremal(5, 100)) ==
        canonical_code(star(5)));
  CHECK(construct_extremal(2, 5).edges.size() == 1);

  Tree big = construct_extremal(1000, 4);
  CHECK(big.n == 1000);
  CHECK(f_index(big).exact == 21942);
}

TEST_CASE("construct_extremal realizes the spec on a grid") {
  for (long long delta = 2; delta <= 6; ++delta) {
    for (long long n = 2; n <= 200; n += 3) {
      Tree t = construct_extremal(n, delta);
      ExtremalSpec es = extremal_spec(n, delta);
      REQUIRE(degree_spec(degrees(t)) == es.spec);
      REQUIRE(f_index(t).exact == es.f_value);
    }
  }
}
