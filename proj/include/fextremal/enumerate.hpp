#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fextremal/graph.hpp"

namespace fextremal {

// Filter applied during free-tree generation. The max-degree bound prunes
// candidates before trees are materialized; an exact degree-spec match is
// applied on top of that.
struct EnumFilter {
  int max_degree = 0;  // 0 = unbounded
  std::optional<DegreeSpec> degree_spec;
};

// Return false to stop the generation early.
using TreeVisitor = std::function<bool(const Tree&)>;

// Result of an exhaustive extremal search. f_max holds the maximum (or
// minimum, for min_f_search) F-index over the enumerated family. Winning
// specs appear in generation order; counts[i] is the number of isomorphism
// classes realizing winning_specs[i], and representatives[i] holds up to
// the configured cap of those trees.
struct MaxFReport {
  long long n = 0;
  int delta = 0;  // 0 when the search had no degree bound
  long long f_max = 0;
  std::vector<DegreeSpec> winning_specs;
  std::vector<long long> counts;
  std::vector<std::vector<Tree>> representatives;
};

// Visits exactly one representative per isomorphism class of free trees on
// n vertices that satisfy the filter. Generation walks canonical level
// sequences by successor (Wright/Richmond/Odlyzko/McKay), so no
// isomorphism rejection is needed. Throws DomainError for n < 1 or
// n > ceiling; NotRealizable when a degree-spec filter is not a tree
// degree sequence.
void generate_free_trees(int n, const EnumFilter& filter,
                         const TreeVisitor& visit, int ceiling = 24);

// Number of isomorphism classes whose degree multiset equals spec.
long long count_with_spec(int n, const DegreeSpec& spec, int ceiling = 24);

// Maximum F-index over free trees on n vertices with max degree <= delta
// (delta is clamped to n-1). Throws DomainError for delta < 2 or n out of
// range.
MaxFReport max_f_search(int n, int delta, int ceiling = 24,
                        int representative_cap = 10);

// Minimum F-index over all free trees on n vertices, no degree bound.
MaxFReport min_f_search(int n, int ceiling = 24, int representative_cap = 10);

}  // namespace fextremal
