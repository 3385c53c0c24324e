#pragma once

#include <string>

#include "fextremal/graph.hpp"

namespace fextremal {

// Value of a degree-based index. Integer-exponent indices are exact 64-bit
// integers with overflow-checked arithmetic (the supported domain, up to
// n = 10^6 with degrees up to 400 cubed, peaks around 1e17, well inside
// int64). Fractional exponents produce a double.
struct IndexValue {
  bool is_exact = true;
  long long exact = 0;
  double approx = 0.0;

  double value() const { return is_exact ? static_cast<double>(exact) : approx; }
  // exact: decimal integer; approximate: fixed 12 fractional digits
  std::string str() const;
};

// Overflow-checked helpers; throw std::overflow_error instead of wrapping.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);
long long ipow_checked(long long base, int exp);

// Forgotten index: sum of cubed degrees.
IndexValue f_index(const Tree& t);

// First Zagreb: sum of squared degrees. Second Zagreb: sum over edges of
// the product of endpoint degrees.
IndexValue first_zagreb(const Tree& t);
IndexValue second_zagreb(const Tree& t);

// General first Zagreb index: sum over vertices of d(v)^alpha. Exact when
// alpha is an integer >= 2, approximate otherwise. alpha in {0, 1} is
// rejected with InvalidAlpha. Identical to the zeroth-order general Randic
// index, provided as an alias.
IndexValue general_first_zagreb(const Tree& t, double alpha);
IndexValue zeroth_order_general_randic(const Tree& t, double alpha);

// Same value computed over edges: sum of d(u)^(alpha-1) + d(v)^(alpha-1).
IndexValue general_first_zagreb_edge_form(const Tree& t, double alpha);

// Randic connectivity index: sum over edges of 1/sqrt(d(u) d(v)).
IndexValue randic_index(const Tree& t);

// Cube sum over a degree spec without materializing the sequence; the
// F-index of any tree realizing the spec.
long long f_index_of_spec(const DegreeSpec& spec);

}  // namespace fextremal
