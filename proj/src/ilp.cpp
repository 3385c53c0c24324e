#include "fextremal/ilp.hpp"

#include <algorithm>
#include <climits>
#include <string>

#include "fextremal/errors.hpp"
#include "fextremal/invariants.hpp"

namespace fextremal {

int IlpInstance::n_index(int i) const {
  if (i < 1 || i > delta) throw DomainError("n_index: degree out of range");
  return i - 1;
}

int IlpInstance::m_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > delta) throw DomainError("m_index: degree out of range");
  // pairs (i,*) start after (i-1) earlier blocks of sizes delta, delta-1, ...
  int block = (i - 1) * delta - (i - 1) * (i - 2) / 2;
  return delta + block + (j - i);
}

IlpInstance build_instance(long long n, int delta) {
  if (n < 2) throw DomainError("build_instance: n must be at least 2");
  if (delta < 2 || delta > n - 1)
    throw DomainError("build_instance: delta must satisfy 2 <= delta <= n-1");

  IlpInstance inst;
  inst.n = n;
  inst.delta = delta;
  inst.vars.reserve(delta + delta * (delta + 1) / 2);
  for (int i = 1; i <= delta; ++i) {
    long long cube = static_cast<long long>(i) * i * i;
    inst.vars.push_back({"n" + std::to_string(i), 0, n - 1, cube});
  }
  for (int i = 1; i <= delta; ++i)
    for (int j = i; j <= delta; ++j)
      inst.vars.push_back(
          {"m" + std::to_string(i) + "_" + std::to_string(j), 0, n - 1, 0});

  IlpConstraint c1{"C1", {}, IlpRelation::eq, n};
  IlpConstraint c2{"C2", {}, IlpRelation::eq, 2 * (n - 1)};
  for (int i = 1; i <= delta; ++i) {
    c1.terms.push_back({inst.n_index(i), 1});
    c2.terms.push_back({inst.n_index(i), i});
  }
  inst.constraints.push_back(std::move(c1));
  inst.constraints.push_back(std::move(c2));

  if (delta > 2) {
    IlpConstraint c3{"C3", {}, IlpRelation::le, 1};
    for (int i = 2; i <= delta - 1; ++i) c3.terms.push_back({inst.n_index(i), 1});
    inst.constraints.push_back(std::move(c3));
  }

  for (int i = 1; i <= delta; ++i) {
    IlpConstraint c4{"C4_" + std::to_string(i), {}, IlpRelation::eq, 0};
    for (int j = 1; j <= delta; ++j)
      c4.terms.push_back({inst.m_index(i, j), j == i ? 2 : 1});
    c4.terms.push_back({inst.n_index(i), -static_cast<long long>(i)});
    inst.constraints.push_back(std::move(c4));
  }
  return inst;
}

namespace {

long long cube(long long v) { return checked_mul(checked_mul(v, v), v); }

// Degree vector candidate: leaves, an optional single middle vertex of
// degree x, and degree-delta vertices.
struct Candidate {
  long long n1 = 0;
  long long nd = 0;
  int x = 0;  // 0 means no middle vertex
  long long objective = 0;
};

// m_ij completion for a winning candidate. m_{1,delta} is pushed as high
// as the remaining rows allow, then m_{x,delta}, then m_{delta,delta};
// everything else follows from the C4 rows. Caps keep the result the
// edge-type matrix of an actual tree whenever one exists: at most
// n_delta - 1 edges inside the delta class, none inside a class with
// fewer than two vertices.
void complete_m(const Candidate& c, int delta, IlpSolution& sol) {
  long long dn = static_cast<long long>(delta) * c.nd;
  auto put = [&sol](int i, int j, long long v) {
    if (v > 0) sol.m_ij[{i, j}] = v;
  };
  if (c.x == 0) {
    // v = n1 always completes: dn - n1 = 2(nd - 1) is even and on budget
    put(1, delta, c.n1);
    put(delta, delta, c.nd - 1);
    return;
  }
  long long dd_cap = c.nd >= 2 ? c.nd - 1 : 0;
  for (long long v = std::min(c.n1, dn); v >= 0; --v) {
    long long w_hi = std::min<long long>(c.x, dn - v);
    long long w_lo = std::max<long long>(
        0, std::max(dn - v - 2 * dd_cap, c.x + v - c.n1));
    long long w = w_hi;
    if ((dn - v - w) & 1) --w;  // parity of m_dd; m_11 parity matches
    if (w < w_lo) continue;
    put(1, delta, v);
    put(c.x, delta, w);
    put(delta, delta, (dn - v - w) / 2);
    put(1, c.x, c.x - w);
    put(1, 1, (c.n1 - v - (c.x - w)) / 2);
    return;
  }
  throw Infeasible("no edge-type completion exists for the degree vector");
}

std::vector<long long> solution_values(const IlpInstance& inst,
                                       const IlpSolution& sol) {
  std::vector<long long> values(inst.vars.size(), 0);
  for (int i = 1; i <= inst.delta && i < static_cast<int>(sol.n_i.size()); ++i)
    values[inst.n_index(i)] = sol.n_i[i];
  for (const auto& [key, v] : sol.m_ij)
    values[inst.m_index(key.first, key.second)] = v;
  return values;
}

}  // namespace

IlpSolution solve(const IlpInstance& inst) {
  long long n = inst.n;
  int delta = inst.delta;
  if (n < 2 || delta < 2) throw Infeasible("malformed instance");

  // One candidate per residue class of n-1 mod (delta-1): the no-middle
  // vector plus one per middle degree x. C1 and C2 pin n1 and n_delta.
  // Exactly one candidate has integral counts; the comparison loop still
  // applies the specified tie-breaks (no middle first, then smallest x).
  bool have_best = false;
  Candidate best;
  for (int x = 0; x <= delta - 1; ++x) {
    if (x == 1) continue;
    long long rem = x == 0 ? n - 2 : n - 1 - x;
    if (rem < 0 || rem % (delta - 1) != 0) continue;
    Candidate c;
    c.x = x;
    c.nd = rem / (delta - 1);
    c.n1 = n - c.nd - (x ? 1 : 0);
    if (c.n1 < 0 || c.n1 > n - 1 || c.nd > n - 1) continue;
    c.objective = checked_add(c.n1, checked_mul(cube(delta), c.nd));
    if (x) c.objective = checked_add(c.objective, cube(x));
    if (!have_best || c.objective > best.objective) {
      best = c;
      have_best = true;
    }
  }
  if (!have_best) throw Infeasible("no feasible degree vector");

  IlpSolution sol;
  sol.delta = delta;
  sol.n_i.assign(delta + 1, 0);
  sol.n_i[1] = best.n1;
  if (best.x) sol.n_i[best.x] = 1;
  sol.n_i[delta] += best.nd;  // delta = x is impossible; += is defensive
  sol.objective = best.objective;
  complete_m(best, delta, sol);

  if (!verify_solution(inst, sol))
    throw Infeasible("structured solution failed verification");
  return sol;
}

bool verify_solution(const IlpInstance& inst, const IlpSolution& sol) {
  if (sol.delta != inst.delta) return false;
  if (static_cast<int>(sol.n_i.size()) != inst.delta + 1) return false;
  for (const auto& [key, v] : sol.m_ij)
    if (key.first < 1 || key.first > key.second || key.second > inst.delta ||
        v == 0)
      return false;

  std::vector<long long> values = solution_values(inst, sol);
  for (size_t k = 0; k < values.size(); ++k)
    if (values[k] < inst.vars[k].lower || values[k] > inst.vars[k].upper)
      return false;
  for (const auto& c : inst.constraints) {
    long long sum = 0;
    for (const auto& [idx, coeff] : c.terms) sum += coeff * values[idx];
    if (c.rel == IlpRelation::eq ? sum != c.rhs : sum > c.rhs) return false;
  }

  long long obj = 0;
  for (size_t k = 0; k < values.size(); ++k)
    obj += inst.vars[k].objective * values[k];
  return obj == sol.objective;
}

namespace {

long long div_floor(long long a, long long b) {
  long long q = a / b, r = a % b;
  return r != 0 && ((r < 0) != (b < 0)) ? q - 1 : q;
}

long long div_ceil(long long a, long long b) { return -div_floor(-a, b); }

// Depth-first exact maximization over the raw instance rows. Branches the
// variables in layout order with interval pruning per constraint and an
// optimistic objective bound. Variables carrying objective weight branch
// high to low so good incumbents appear early; the rest branch low to
// high, which reaches sparse completions quickly.
class BranchAndBound {
 public:
  explicit BranchAndBound(const IlpInstance& inst) : inst_(inst) {
    values_.assign(inst.vars.size(), 0);
    fixed_.assign(inst.constraints.size(), 0);
    // suffix sums of the best possible remaining objective
    obj_suffix_.assign(inst.vars.size() + 1, 0);
    for (size_t k = inst.vars.size(); k-- > 0;)
      obj_suffix_[k] = obj_suffix_[k + 1] +
                       std::max(inst.vars[k].objective * inst.vars[k].lower,
                                inst.vars[k].objective * inst.vars[k].upper);
  }

  long long run() {
    dfs(0, 0);
    if (!found_) throw Infeasible("branch and bound found no feasible point");
    return best_;
  }

 private:
  // contribution interval of unassigned variables of one constraint,
  // excluding variable `skip`
  void remaining_interval(const IlpConstraint& c, size_t next, size_t skip,
                          long long& lo, long long& hi) const {
    lo = hi = 0;
    for (const auto& [idx, coeff] : c.terms) {
      if (idx < static_cast<int>(next) || idx == static_cast<int>(skip))
        continue;
      long long a = coeff * inst_.vars[idx].lower;
      long long b = coeff * inst_.vars[idx].upper;
      lo += std::min(a, b);
      hi += std::max(a, b);
    }
  }

  bool prune(size_t next) const {
    for (size_t ci = 0; ci < inst_.constraints.size(); ++ci) {
      const auto& c = inst_.constraints[ci];
      long long lo, hi;
      remaining_interval(c, next, values_.size(), lo, hi);
      long long need = c.rhs - fixed_[ci];
      if (c.rel == IlpRelation::eq ? (need < lo || need > hi) : need < lo)
        return true;
    }
    return false;
  }

  void dfs(size_t next, long long obj) {
    if (found_ && obj + obj_suffix_[next] <= best_) return;
    if (prune(next)) return;
    if (next == values_.size()) {
      best_ = obj;
      found_ = true;
      return;
    }

    const IlpVariable& var = inst_.vars[next];
    long long lo = var.lower, hi = var.upper;
    for (size_t ci = 0; ci < inst_.constraints.size(); ++ci) {
      const auto& c = inst_.constraints[ci];
      long long coeff = 0;
      for (const auto& [idx, cf] : c.terms)
        if (idx == static_cast<int>(next)) coeff = cf;
      if (coeff == 0) continue;
      long long rlo, rhi;
      remaining_interval(c, next, next, rlo, rhi);
      long long top = c.rhs - fixed_[ci] - rlo;   // largest coeff*v allowed
      long long bot = c.rhs - fixed_[ci] - rhi;   // smallest, for eq rows
      if (coeff > 0) {
        hi = std::min(hi, div_floor(top, coeff));
        if (c.rel == IlpRelation::eq) lo = std::max(lo, div_ceil(bot, coeff));
      } else {
        lo = std::max(lo, div_ceil(top, coeff));
        if (c.rel == IlpRelation::eq) hi = std::min(hi, div_floor(bot, coeff));
      }
    }
    if (lo > hi) return;

    bool high_first = var.objective > 0;
    for (long long step = 0; step <= hi - lo; ++step) {
      long long v = high_first ? hi - step : lo + step;
      values_[next] = v;
      for (size_t ci = 0; ci < inst_.constraints.size(); ++ci)
        for (const auto& [idx, cf] : inst_.constraints[ci].terms)
          if (idx == static_cast<int>(next)) fixed_[ci] += cf * v;
      dfs(next + 1, obj + var.objective * v);
      for (size_t ci = 0; ci < inst_.constraints.size(); ++ci)
        for (const auto& [idx, cf] : inst_.constraints[ci].terms)
          if (idx == static_cast<int>(next)) fixed_[ci] -= cf * v;
    }
    values_[next] = 0;
  }

  const IlpInstance& inst_;
  std::vector<long long> values_;
  std::vector<long long> fixed_;
  std::vector<long long> obj_suffix_;
  long long best_ = LLONG_MIN;
  bool found_ = false;
};

}  // namespace

long long solve_branch_and_bound(const IlpInstance& inst) {
  return BranchAndBound(inst).run();
}

Tree realize_solution(const IlpSolution& sol) {
  DegreeSequence s;
  long long total = 0;
  for (int d = sol.delta; d >= 1; --d) {
    if (d >= static_cast<int>(sol.n_i.size())) continue;
    total += sol.n_i[d];
    if (total > (1LL << 31))
      throw NotRealizable("degree multiset too large to materialize");
    s.degrees.insert(s.degrees.end(), static_cast<size_t>(sol.n_i[d]), d);
  }
  return tree_from_degree_sequence(s);
}

}  // namespace fextremal
