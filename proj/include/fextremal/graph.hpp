#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fextremal/errors.hpp"

namespace fextremal {

// Labeled tree on vertices 0..n-1. Immutable after construction; build one
// through validate_tree so the invariants (connected, acyclic, n-1 edges,
// no self-loops or duplicates) are guaranteed to hold.
struct Tree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // each stored with first < second
  std::vector<std::vector<int>> adj;
};

// Non-increasing list of vertex degrees. The one-vertex tree has an empty
// degree sequence by convention, so every index of it is 0.
struct DegreeSequence {
  std::vector<int> degrees;
  bool operator==(const DegreeSequence&) const = default;
};

// Compact multiset notation [x1^c1, x2^c2, ...] with strictly decreasing
// degrees x_i and positive counts. Counts are 64-bit so specs for very large
// n never need to be expanded.
struct DegreeSpecEntry {
  int degree = 0;
  long long count = 0;
  bool operator==(const DegreeSpecEntry&) const = default;
};

struct DegreeSpec {
  std::vector<DegreeSpecEntry> entries;
  bool operator==(const DegreeSpec&) const = default;
};

// Edge counts by endpoint degree class: counts[(i,j)] with i <= j is the
// number of edges joining a degree-i vertex to a degree-j vertex. Only
// nonzero entries are stored.
struct EdgeTypeMatrix {
  std::map<std::pair<int, int>, long long> counts;

  long long at(int i, int j) const;
  // sum over all classes; equals n-1 for a tree
  long long total() const;
};

// Validates and builds a tree. Checks run in this order: vertex ids in
// range, no self-loops, no duplicate edges, connectivity, acyclicity.
// An acyclic graph with fewer than n-1 edges is necessarily disconnected,
// so WrongEdgeCount is only a defensive residual check.
Tree validate_tree(int n, std::vector<std::pair<int, int>> edges);

// Degree of each vertex, indexed by vertex id.
std::vector<int> vertex_degrees(const Tree& t);

// Sorted non-increasing degree sequence; sums to 2(n-1) for n >= 2.
DegreeSequence degrees(const Tree& t);

// Run-length compression of a non-increasing sequence, and its inverse.
// expand throws InconsistentTotal when the spec's total count differs
// from n.
DegreeSpec degree_spec(const DegreeSequence& s);
DegreeSequence expand(const DegreeSpec& spec, long long n);

// True iff the sequence is realizable as a tree: all entries >= 1 and the
// sum is 2(n-1), where n is the sequence length. The empty sequence stands
// for the one-vertex tree and is accepted.
bool is_tree_degree_sequence(const DegreeSequence& s);

// Greedy breadth-first realization of a tree degree sequence: the largest
// degree becomes the root with d_1 children, every later vertex k gets
// d_k - 1 children. The slot count works out exactly because
// sum d_k - (n-1) = n-1. Throws NotRealizable when the sequence fails
// is_tree_degree_sequence.
Tree tree_from_degree_sequence(const DegreeSequence& s);

// Center of the tree: one vertex, or two adjacent vertices when bicentral.
std::vector<int> tree_center(const Tree& t);

// Canonical byte string: equal codes iff the trees are isomorphic. Rooted
// subtree encoding ("(" sorted children ")") at the center; a bicentral
// tree takes the lexicographically smaller of its two center rootings.
std::string canonical_code(const Tree& t);

// Edge counts per endpoint degree class. Satisfies, for every class i,
// sum_{j != i} m_ij + 2 m_ii = i * n_i.
EdgeTypeMatrix edge_type_counts(const Tree& t);

// Text form "4^3,3^1,1^9": comma-separated degree^count in decreasing
// degree order.
std::string format_degree_spec(const DegreeSpec& spec);
DegreeSpec parse_degree_spec(const std::string& text);

}  // namespace fextremal
