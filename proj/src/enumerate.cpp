#include "fextremal/enumerate.hpp"

#include <algorithm>
#include <string>

#include "fextremal/errors.hpp"
#include "fextremal/invariants.hpp"

namespace fextremal {

// Free trees are walked as canonical level sequences: layout[i] is the
// depth of vertex i in a depth-first layout of the tree rooted at its
// center(ish) root, and the walk moves from the rooted path to the star by
// successor steps (Wright, Richmond, Odlyzko, McKay). Each valid layout is
// one isomorphism class.
namespace {

// p < 0 means locate the working position: the last entry of depth > 1.
// Returns false when no successor exists (layout is the star).
bool next_rooted_tree(std::vector<int>& layout, int p = -1) {
  if (p < 0) {
    p = static_cast<int>(layout.size()) - 1;
    while (p > 0 && layout[p] == 1) --p;
  }
  if (p == 0) return false;
  int q = p - 1;
  while (layout[q] != layout[p] - 1) --q;
  for (size_t i = p; i < layout.size(); ++i) layout[i] = layout[i - p + q];
  return true;
}

struct SplitLayout {
  std::vector<int> left;  // first root subtree, re-rooted (depths - 1)
  std::vector<int> rest;  // the tree with that subtree removed
};

SplitLayout split_tree(const std::vector<int>& layout) {
  int n = static_cast<int>(layout.size());
  int m = n;
  bool one_seen = false;
  for (int i = 0; i < n; ++i) {
    if (layout[i] == 1) {
      if (one_seen) {
        m = i;
        break;
      }
      one_seen = true;
    }
  }
  SplitLayout s;
  s.left.reserve(m - 1);
  for (int i = 1; i < m; ++i) s.left.push_back(layout[i] - 1);
  s.rest.reserve(n - m + 1);
  s.rest.push_back(0);
  for (int i = m; i < n; ++i) s.rest.push_back(layout[i]);
  return s;
}

// A rooted layout represents a free tree canonically iff the first root
// subtree is no higher than the rest, with size and lexicographic
// tie-breaks. Invalid layouts are repaired by jumping to the next valid
// one; the jump always exists below the star.
void next_free_tree(std::vector<int>& layout) {
  SplitLayout s = split_tree(layout);
  int left_h = *std::max_element(s.left.begin(), s.left.end());
  int rest_h = *std::max_element(s.rest.begin(), s.rest.end());
  bool valid = rest_h >= left_h;
  if (valid && rest_h == left_h) {
    if (s.left.size() > s.rest.size())
      valid = false;
    else if (s.left.size() == s.rest.size() && s.left > s.rest)
      valid = false;
  }
  if (valid) return;

  int p = static_cast<int>(s.left.size());
  int old_depth = layout[p];
  next_rooted_tree(layout, p);  // p >= 1, so a successor always exists
  if (old_depth > 2) {
    SplitLayout ns = split_tree(layout);
    int h = *std::max_element(ns.left.begin(), ns.left.end());
    int n = static_cast<int>(layout.size());
    for (int k = 0; k <= h; ++k) layout[n - h - 1 + k] = k + 1;
  }
}

}  // namespace

void generate_free_trees(int n, const EnumFilter& filter,
                         const TreeVisitor& visit, int ceiling) {
  if (n < 1 || n > ceiling)
    throw DomainError("free tree generation supports 1 <= n <= " +
                      std::to_string(ceiling) + ", got " + std::to_string(n));

  std::vector<int> want_degrees;  // non-increasing, empty = no spec filter
  if (filter.degree_spec && n > 1) {
    DegreeSequence s = expand(*filter.degree_spec, n);
    if (!is_tree_degree_sequence(s))
      throw NotRealizable("degree-spec filter is not a tree degree sequence");
    want_degrees = std::move(s.degrees);
  }

  if (n == 1) {
    // only the empty spec matches the one-vertex tree's empty sequence
    if (filter.degree_spec && !filter.degree_spec->entries.empty())
      throw NotRealizable("no positive-degree spec matches the one-vertex tree");
    visit(validate_tree(1, {}));
    return;
  }

  // rooted path layout: a chain of n/2+1 under the root plus a chain of
  // the remaining vertices
  std::vector<int> layout;
  layout.reserve(n);
  for (int i = 0; i <= n / 2; ++i) layout.push_back(i);
  for (int i = 1; i <= (n + 1) / 2 - 1; ++i) layout.push_back(i);

  std::vector<int> parent(n), last_at_depth(n), deg(n), sorted_deg(n);
  while (true) {
    next_free_tree(layout);

    // parent of i is the most recent vertex one level up
    last_at_depth[0] = 0;
    std::fill(deg.begin(), deg.end(), 0);
    int max_deg = 0;
    for (int i = 1; i < n; ++i) {
      int d = layout[i];
      parent[i] = last_at_depth[d - 1];
      last_at_depth[d] = i;
      ++deg[i];
      max_deg = std::max(max_deg, ++deg[parent[i]]);
    }

    bool keep = filter.max_degree == 0 || max_deg <= filter.max_degree;
    if (keep && !want_degrees.empty()) {
      sorted_deg = deg;
      std::sort(sorted_deg.begin(), sorted_deg.end(), std::greater<int>());
      keep = sorted_deg == want_degrees;
    }
    if (keep) {
      std::vector<std::pair<int, int>> edges;
      edges.reserve(n - 1);
      for (int i = 1; i < n; ++i) edges.push_back({parent[i], i});
      if (!visit(validate_tree(n, std::move(edges)))) return;
    }

    if (!next_rooted_tree(layout)) return;
  }
}

long long count_with_spec(int n, const DegreeSpec& spec, int ceiling) {
  EnumFilter filter;
  // matching trees have exactly the spec's top degree, so bound generation
  if (!spec.entries.empty()) filter.max_degree = spec.entries.front().degree;
  filter.degree_spec = spec;
  long long count = 0;
  generate_free_trees(
      n, filter,
      [&count](const Tree&) {
        ++count;
        return true;
      },
      ceiling);
  return count;
}

namespace {

MaxFReport extremal_search(int n, int delta, int ceiling, int cap,
                           bool maximize) {
  MaxFReport report;
  report.n = n;
  report.delta = delta;
  EnumFilter filter;
  if (delta > 0) filter.max_degree = delta;

  bool have = false;
  generate_free_trees(
      n, filter,
      [&](const Tree& t) {
        long long f = f_index(t).exact;
        bool better = !have || (maximize ? f > report.f_max : f < report.f_max);
        if (better) {
          report.f_max = f;
          report.winning_specs.clear();
          report.counts.clear();
          report.representatives.clear();
          have = true;
        } else if (f != report.f_max) {
          return true;
        }
        DegreeSpec spec = degree_spec(degrees(t));
        size_t k = 0;
        while (k < report.winning_specs.size() &&
               !(report.winning_specs[k] == spec))
          ++k;
        if (k == report.winning_specs.size()) {
          report.winning_specs.push_back(std::move(spec));
          report.counts.push_back(0);
          report.representatives.emplace_back();
        }
        ++report.counts[k];
        if (static_cast<int>(report.representatives[k].size()) < cap)
          report.representatives[k].push_back(t);
        return true;
      },
      ceiling);
  if (!have) throw DomainError("no tree satisfied the search filter");
  return report;
}

}  // namespace

MaxFReport max_f_search(int n, int delta, int ceiling, int representative_cap) {
  if (delta < 2) throw DomainError("max_f_search requires delta >= 2");
  return extremal_search(n, delta, ceiling, representative_cap, true);
}

MaxFReport min_f_search(int n, int ceiling, int representative_cap) {
  return extremal_search(n, 0, ceiling, representative_cap, false);
}

}  // namespace fextremal
