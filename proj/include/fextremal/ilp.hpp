#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fextremal/graph.hpp"

namespace fextremal {

enum class IlpRelation { eq, le };

struct IlpConstraint {
  std::string name;  // "C1", "C2", "C3", "C4_i"
  std::vector<std::pair<int, long long>> terms;  // (variable index, coefficient)
  IlpRelation rel = IlpRelation::eq;
  long long rhs = 0;
};

struct IlpVariable {
  std::string name;  // "n3", "m1_4"
  long long lower = 0;
  long long upper = 0;
  long long objective = 0;  // i^3 on n_i, 0 on m_ij
};

// Maximize sum i^3 n_i over degree-class counts n_i and edge-type counts
// m_ij subject to:
//   C1   sum n_i = n
//   C2   sum i n_i = 2(n-1)
//   C3   sum_{i=2}^{delta-1} n_i <= 1          (omitted when delta = 2)
//   C4_i sum_{j != i} m_ij + 2 m_ii = i n_i    (one row per i)
// with 0 <= n_i <= n-1 and 0 <= m_ij <= n-1. Variable layout: n_1..n_delta
// first, then m_ij for 1 <= i <= j <= delta in lexicographic order.
struct IlpInstance {
  long long n = 0;
  int delta = 0;
  std::vector<IlpVariable> vars;
  std::vector<IlpConstraint> constraints;

  int n_index(int i) const;         // variable index of n_i, 1 <= i <= delta
  int m_index(int i, int j) const;  // variable index of m_ij, i <= j
};

struct IlpSolution {
  int delta = 0;
  std::vector<long long> n_i;  // n_i[d] for d = 1..delta; slot 0 unused
  std::map<std::pair<int, int>, long long> m_ij;  // nonzero entries only
  long long objective = 0;
};

// Throws DomainError unless n >= 2 and 2 <= delta <= n-1.
IlpInstance build_instance(long long n, int delta);

// Exact structured solver. C3 leaves at most one middle degree class with
// count <= 1, so the candidate degree vectors are the no-middle one plus
// one per x in [2, delta-1], each pinned by C1 and C2. Ties go to the
// no-middle candidate, then to the smallest x. The winning vector gets a
// deterministic m_ij completion that saturates m_{1,delta}, then
// m_{x,delta}, then m_{delta,delta}, subject to staying completable.
// Throws Infeasible only for instances not produced by build_instance.
IlpSolution solve(const IlpInstance& inst);

// True iff every constraint row, every variable bound, and the stated
// objective hold exactly.
bool verify_solution(const IlpInstance& inst, const IlpSolution& sol);

// Generic exact branch-and-bound over the instance rows, knowing nothing
// of their structure. Exponential in principle; meant as an independent
// cross-check of solve on small instances.
long long solve_branch_and_bound(const IlpInstance& inst);

// Builds a concrete tree whose degree multiset matches sol.n_i. The tree's
// edge-type matrix need not equal sol.m_ij: the program does not encode
// connectivity, so several non-isomorphic trees (and some non-trees) share
// a feasible m_ij. Throws NotRealizable when the degree multiset is not a
// tree degree sequence.
Tree realize_solution(const IlpSolution& sol);

}  // namespace fextremal
