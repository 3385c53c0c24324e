#pragma once

#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fextremal/graph.hpp"

namespace testsupport {

// Decodes a Prufer code into the labeled tree on code.size() + 2 vertices.
// Independent of the library's tree constructions: only validate_tree is
// shared, and that is itself under test.
inline fextremal::Tree prufer_decode(const std::vector<int>& code) {
  int n = static_cast<int>(code.size()) + 2;
  std::vector<int> remaining(n, 1);
  for (int v : code) remaining[v] += 1;
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 0; v < n; ++v)
    if (remaining[v] == 1) leaves.push(v);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int v : code) {
    int leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, v});
    if (--remaining[v] == 1) leaves.push(v);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  edges.push_back({a, b});
  return fextremal::validate_tree(n, std::move(edges));
}

inline fextremal::Tree path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return fextremal::validate_tree(n, std::move(e));
}

inline fextremal::Tree star(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.push_back({0, i});
  return fextremal::validate_tree(n, std::move(e));
}

inline fextremal::Tree random_labeled_tree(int n, std::mt19937_64& rng) {
  if (n == 1) return fextremal::validate_tree(1, {});
  if (n == 2) return fextremal::validate_tree(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);
  return prufer_decode(code);
}

// Random tree with all degrees <= dmax (dmax >= 2): vertex k attaches to a
// uniformly random earlier vertex that still has room. Such a vertex always
// exists since 2(k-1) < 2k <= k * dmax.
inline fextremal::Tree random_tree_max_degree(int n, int dmax,
                                              std::mt19937_64& rng) {
  if (n == 1) return fextremal::validate_tree(1, {});
  std::vector<int> deg(n, 0);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  std::vector<int> eligible;
  for (int k = 1; k < n; ++k) {
    eligible.clear();
    for (int u = 0; u < k; ++u)
      if (deg[u] < dmax) eligible.push_back(u);
    std::uniform_int_distribution<size_t> pick(0, eligible.size() - 1);
    int u = eligible[pick(rng)];
    edges.push_back({u, k});
    deg[u] += 1;
    deg[k] += 1;
  }
  return fextremal::validate_tree(n, std::move(edges));
}

// Sum of cubed degrees, computed with the dumbest possible loop.
inline long long f_brute(const fextremal::Tree& t) {
  long long total = 0;
  for (int d : fextremal::vertex_degrees(t))
    total += static_cast<long long>(d) * d * d;
  return total;
}

// Number of isomorphism classes of trees on n vertices, by decoding every
// Prufer code and deduplicating canonical codes. Exponential; n <= 9.
inline long long count_free_trees_by_prufer(int n) {
  if (n <= 2) return 1;
  std::set<std::string> seen;
  std::vector<int> code(n - 2, 0);
  for (;;) {
    seen.insert(fextremal::canonical_code(prufer_decode(code)));
    int k = n - 3;
    while (k >= 0 && code[k] == n - 1) code[k--] = 0;
    if (k < 0) break;
    code[k] += 1;
  }
  return static_cast<long long>(seen.size());
}

}  // namespace testsupport
