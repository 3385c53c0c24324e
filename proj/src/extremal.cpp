#include "fextremal/extremal.hpp"

#include <algorithm>
#include <limits>

#include "fextremal/errors.hpp"

namespace fextremal {

const char* case_name(ExtremalCase c) {
  return c == ExtremalCase::case_i ? "I" : "II";
}

namespace {

void check_domain(long long n, long long delta) {
  if (n < 2) throw DomainError("extremal spec requires n >= 2");
  if (delta < 2) throw DomainError("extremal spec requires delta >= 2");
}

ExtremalSpec two_vertex_spec() {
  ExtremalSpec out;
  out.n = 2;
  out.delta = 1;
  out.case_tag = ExtremalCase::case_i;
  out.n_delta = 0;
  out.n_one = 2;
  out.f_value = 2;
  out.spec.entries = {{1, 2}};
  return out;
}

int as_degree(long long d) {
  if (d > std::numeric_limits<int>::max())
    throw DomainError("degree bound exceeds representable range");
  return static_cast<int>(d);
}

}  // namespace

ExtremalSpec extremal_spec(long long n, long long delta) {
  check_domain(n, delta);
  if (n == 2) return two_vertex_spec();

  long long d = std::min(delta, n - 1);
  ExtremalSpec out;
  out.n = n;
  out.delta = d;

  // Residue of n-1 mod (d-1) decides the case: 1 means (n-2) is divisible
  // (Case I); 0 maps to x = d-1; anything else is x itself. d = 2 is
  // always Case I (the path) and must dodge the mod-1 degeneracy.
  long long r = d == 2 ? 1 : (n - 1) % (d - 1);
  if (r == 1) {
    out.case_tag = ExtremalCase::case_i;
    out.n_delta = (n - 2) / (d - 1);
    out.n_one = n - out.n_delta;
    out.spec.entries = {{as_degree(d), out.n_delta}, {1, out.n_one}};
  } else {
    out.case_tag = ExtremalCase::case_ii;
    out.x = r == 0 ? d - 1 : r;
    out.n_delta = (n - 1 - out.x) / (d - 1);
    out.n_one = n - out.n_delta - 1;
    out.spec.entries = {{as_degree(d), out.n_delta},
                        {as_degree(out.x), 1},
                        {1, out.n_one}};
  }

  long long f = checked_mul(checked_mul(checked_mul(d, d), d), out.n_delta);
  f = checked_add(f, out.n_one);
  if (out.case_tag == ExtremalCase::case_ii)
    f = checked_add(f, checked_mul(checked_mul(out.x, out.x), out.x));
  out.f_value = f;
  return out;
}

IndexValue f_max_formula(long long n, long long delta) {
  check_domain(n, delta);
  if (n == 2) return IndexValue{true, 2, 0.0};

  long long d = std::min(delta, n - 1);
  long long r = d == 2 ? 1 : (n - 1) % (d - 1);
  long long f = 0;
  if (r == 1) {
    // delta(delta+1)(n-2) + 2(n-1)
    f = checked_mul(checked_mul(d, d + 1), n - 2);
    f = checked_add(f, checked_mul(2, n - 1));
  } else {
    // (delta^2+delta+2)(n-1) - (delta^2+delta+1)x + x^3
    long long x = r == 0 ? d - 1 : r;
    long long dd = checked_add(checked_mul(d, d), d);
    f = checked_mul(checked_add(dd, 2), n - 1);
    // the positive term dominates (n-1 > d >= x), so plain subtraction
    f -= checked_mul(checked_add(dd, 1), x);
    f = checked_add(f, checked_mul(checked_mul(x, x), x));
  }
  return IndexValue{true, f, 0.0};
}

ExtremalSpec molecular_extremal_spec(long long n) {
  if (n < 2) throw DomainError("molecular extremal spec requires n >= 2");
  return extremal_spec(n, 4);
}

}  // namespace fextremal
