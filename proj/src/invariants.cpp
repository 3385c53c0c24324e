#include "fextremal/invariants.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "fextremal/errors.hpp"

namespace fextremal {

std::string IndexValue::str() const {
  if (is_exact) return std::to_string(exact);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", approx);
  return buf;
}

long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in index computation");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in index computation");
  return r;
}

long long ipow_checked(long long base, int exp) {
  if (exp < 0) throw DomainError("ipow_checked: negative exponent");
  long long r = 1;
  for (int k = 0; k < exp; ++k) r = checked_mul(r, base);
  return r;
}

namespace {

long long sum_degree_powers(const Tree& t, int exp) {
  long long total = 0;
  for (int d : degrees(t).degrees)
    total = checked_add(total, ipow_checked(d, exp));
  return total;
}

// Exponents that stay in exact integer arithmetic. The upper guard only
// protects the double-to-int cast; larger exponents overflow int64 for any
// degree >= 2 regardless.
bool exact_exponent(double alpha) {
  return alpha >= 2.0 && alpha <= 1e9 && alpha == std::floor(alpha);
}

void reject_degenerate_alpha(double alpha) {
  if (alpha == 0.0 || alpha == 1.0)
    throw InvalidAlpha("alpha must differ from 0 and 1");
}

}  // namespace

IndexValue f_index(const Tree& t) {
  return IndexValue{true, sum_degree_powers(t, 3), 0.0};
}

IndexValue first_zagreb(const Tree& t) {
  return IndexValue{true, sum_degree_powers(t, 2), 0.0};
}

IndexValue second_zagreb(const Tree& t) {
  std::vector<int> deg = vertex_degrees(t);
  long long total = 0;
  for (auto [u, v] : t.edges)
    total = checked_add(total, checked_mul(deg[u], deg[v]));
  return IndexValue{true, total, 0.0};
}

IndexValue general_first_zagreb(const Tree& t, double alpha) {
  reject_degenerate_alpha(alpha);
  if (exact_exponent(alpha)) {
    int e = static_cast<int>(alpha);
    long long total = 0;
    for (int d : degrees(t).degrees)
      total = checked_add(total, ipow_checked(d, e));
    return IndexValue{true, total, 0.0};
  }
  double total = 0.0;
  for (int d : degrees(t).degrees)
    total += std::pow(static_cast<double>(d), alpha);
  return IndexValue{false, 0, total};
}

IndexValue zeroth_order_general_randic(const Tree& t, double alpha) {
  return general_first_zagreb(t, alpha);
}

IndexValue general_first_zagreb_edge_form(const Tree& t, double alpha) {
  reject_degenerate_alpha(alpha);
  std::vector<int> deg = vertex_degrees(t);
  if (exact_exponent(alpha)) {
    int e = static_cast<int>(alpha) - 1;
    long long total = 0;
    for (auto [u, v] : t.edges) {
      total = checked_add(total, ipow_checked(deg[u], e));
      total = checked_add(total, ipow_checked(deg[v], e));
    }
    return IndexValue{true, total, 0.0};
  }
  double total = 0.0;
  for (auto [u, v] : t.edges) {
    total += std::pow(static_cast<double>(deg[u]), alpha - 1.0);
    total += std::pow(static_cast<double>(deg[v]), alpha - 1.0);
  }
  return IndexValue{false, 0, total};
}

IndexValue randic_index(const Tree& t) {
  std::vector<int> deg = vertex_degrees(t);
  double total = 0.0;
  for (auto [u, v] : t.edges)
    total += 1.0 / std::sqrt(static_cast<double>(deg[u]) * deg[v]);
  return IndexValue{false, 0, total};
}

long long f_index_of_spec(const DegreeSpec& spec) {
  long long total = 0;
  for (const auto& e : spec.entries) {
    long long d = e.degree;
    long long cube = checked_mul(checked_mul(d, d), d);
    total = checked_add(total, checked_mul(cube, e.count));
  }
  return total;
}

}  // namespace fextremal
