#pragma once

#include "fextremal/graph.hpp"
#include "fextremal/invariants.hpp"

namespace fextremal {

enum class ExtremalCase { case_i, case_ii };

// "I" or "II"
const char* case_name(ExtremalCase c);

// The unique F-maximal degree spec over trees of order n with maximum
// degree at most delta.
//
// Case I applies when (n-2) mod (delta-1) = 0: the spec is
// [delta^n_delta, 1^n_one]. Otherwise exactly one residue degree
// x in [2, delta-1] satisfies (n-1-x) mod (delta-1) = 0 and the spec is
// [delta^n_delta, x^1, 1^n_one] (Case II).
struct ExtremalSpec {
  long long n = 0;
  long long delta = 0;  // effective bound after clamping to n-1
  ExtremalCase case_tag = ExtremalCase::case_i;
  long long x = 0;  // Case II residue degree; 0 in Case I
  long long n_delta = 0;
  long long n_one = 0;
  long long f_value = 0;
  DegreeSpec spec;
};

// delta >= n-1 is clamped to n-1 (the star regime). n=2 degenerates to the
// single edge [1^2] with the bound collapsed to 1. Throws DomainError for
// n < 2 or delta < 2.
ExtremalSpec extremal_spec(long long n, long long delta);

// Closed-form maximum: Case I gives delta(delta+1)(n-2) + 2(n-1), Case II
// gives (delta^2+delta+2)(n-1) - (delta^2+delta+1)x + x^3. Always exact.
IndexValue f_max_formula(long long n, long long delta);

// Bound fixed at 4 (molecular trees). For n <= 5 the clamp makes this the
// star spec [(n-1)^1, 1^(n-1)].
ExtremalSpec molecular_extremal_spec(long long n);

}  // namespace fextremal
