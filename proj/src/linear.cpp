#include "lukadmit/linear.hpp"

#include <algorithm>
#include <map>

namespace lukadmit {

namespace {

using Rows = std::vector<LinearConstraint>;

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

BigInt abs_big(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

BigInt ceil_sqrt(const BigInt& s) {
  BigInt r = boost::multiprecision::sqrt(s);
  if (r * r < s) ++r;
  return r;
}

// Drops duplicate coefficient vectors, keeping the tightest constant.
// Returns false on a violated constant row.
bool canonical_rows(Rows& rows, const LinearLimits& limits) {
  std::map<std::vector<BigInt>, BigInt> best;
  for (auto& r : rows) {
    if (!tighten(r)) return false;
    bool constant_row = std::all_of(r.coeffs.begin(), r.coeffs.end(),
                                    [](const BigInt& c) { return c == 0; });
    if (constant_row) continue;
    auto [it, fresh] = best.emplace(r.coeffs, r.constant);
    if (!fresh && r.constant < it->second) it->second = r.constant;
  }
  if (best.size() > limits.max_rows) throw ResourceExceeded("linear system grew past the row guard");
  rows.clear();
  for (auto& [c, k] : best) rows.push_back({c, k});
  // a pair c.x >= -k1, -c.x >= -k2 needs k1 + k2 >= 0
  for (const auto& r : rows) {
    std::vector<BigInt> neg_c(r.coeffs.size());
    for (std::size_t i = 0; i < neg_c.size(); ++i) neg_c[i] = -r.coeffs[i];
    auto it = best.find(neg_c);
    if (it != best.end() && r.constant + it->second < 0) return false;
  }
  return true;
}

bool mentions(const Rows& rows, std::size_t var) {
  return std::any_of(rows.begin(), rows.end(), [&](const auto& r) { return r.coeffs[var] != 0; });
}

bool eliminate(Rows& rows, std::size_t var, const LinearLimits& limits) {
  Rows pos, neg, out;
  for (auto& r : rows) {
    if (r.coeffs[var] > 0)
      pos.push_back(std::move(r));
    else if (r.coeffs[var] < 0)
      neg.push_back(std::move(r));
    else
      out.push_back(std::move(r));
  }
  if (pos.size() * neg.size() > limits.max_rows)
    throw ResourceExceeded("elimination step exceeds the row guard");
  for (const auto& p : pos)
    for (const auto& n : neg) {
      const BigInt a = p.coeffs[var], b = -n.coeffs[var];
      LinearConstraint c{std::vector<BigInt>(p.coeffs.size()), b * p.constant + a * n.constant};
      for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] = b * p.coeffs[i] + a * n.coeffs[i];
      out.push_back(std::move(c));
    }
  rows = std::move(out);
  return canonical_rows(rows, limits);
}

// The elimination order matters for size only; pick the cheapest variable.
std::size_t cheapest(const Rows& rows, const std::vector<std::size_t>& vars) {
  std::size_t best = vars.front();
  long long best_cost = 0;
  bool first = true;
  for (std::size_t v : vars) {
    long long p = 0, n = 0;
    for (const auto& r : rows) {
      if (r.coeffs[v] > 0) ++p;
      if (r.coeffs[v] < 0) ++n;
    }
    long long cost = p * n - p - n;
    if (first || cost < best_cost) {
      best = v;
      best_cost = cost;
      first = false;
    }
  }
  return best;
}

bool eliminate_all_but(Rows& rows, std::size_t nvars, std::optional<std::size_t> keep,
                       const LinearLimits& limits) {
  if (!canonical_rows(rows, limits)) return false;
  for (;;) {
    std::vector<std::size_t> live;
    for (std::size_t v = 0; v < nvars; ++v)
      if (v != keep && mentions(rows, v)) live.push_back(v);
    if (live.empty()) return true;
    if (!eliminate(rows, cheapest(rows, live), limits)) return false;
  }
}

IntegerRange range_of(Rows rows, std::size_t nvars, std::size_t var, const LinearLimits& limits) {
  IntegerRange out;
  if (!eliminate_all_but(rows, nvars, var, limits)) {
    out.empty = true;
    return out;
  }
  for (const auto& r : rows) {
    const BigInt& c = r.coeffs[var];
    if (c > 0) {
      BigInt lo = ceil_div(-r.constant, c);
      if (!out.lo || lo > *out.lo) out.lo = lo;
    } else if (c < 0) {
      BigInt hi = floor_div(r.constant, -c);
      if (!out.hi || hi < *out.hi) out.hi = hi;
    }
  }
  if (out.lo && out.hi && *out.lo > *out.hi) out.empty = true;
  return out;
}

Rows substitute_value(const Rows& rows, std::size_t var, const BigInt& value) {
  Rows out = rows;
  for (auto& r : out) {
    r.constant += r.coeffs[var] * value;
    r.coeffs[var] = 0;
  }
  return out;
}

struct PointSearch {
  std::size_t nvars;
  BigInt bound;
  const LinearLimits& limits;
  std::size_t nodes = 0;
  std::vector<BigInt> point;

  void tick() {
    if (++nodes > limits.max_search_nodes)
      throw ResourceExceeded("integer point search exceeded its node budget");
  }

  bool run(const Rows& rows, std::vector<std::size_t> vars) {
    tick();
    if (vars.empty()) return true;
    // branch on the variable with the narrowest range
    std::size_t pick = 0;
    std::vector<IntegerRange> ranges;
    BigInt width = -1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      IntegerRange r = range_of(rows, nvars, vars[i], limits);
      if (r.empty) return false;
      BigInt lo = r.lo ? std::max(*r.lo, BigInt(-bound)) : BigInt(-bound);
      BigInt hi = r.hi ? std::min(*r.hi, bound) : bound;
      if (lo > hi) return false;
      r.lo = lo;
      r.hi = hi;
      if (width < 0 || hi - lo < width) {
        width = hi - lo;
        pick = i;
      }
      ranges.push_back(std::move(r));
    }
    const std::size_t v = vars[pick];
    const BigInt lo = *ranges[pick].lo, hi = *ranges[pick].hi;
    vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(pick));
    BigInt start = std::clamp(BigInt(0), lo, hi);
    // try start, start+1, start-1, start+2, ...
    for (BigInt step = 0;; ++step) {
      bool any = false;
      for (int sign : {1, -1}) {
        if (step == 0 && sign < 0) continue;
        BigInt t = start + sign * step;
        if (t < lo || t > hi) continue;
        any = true;
        Rows sub = substitute_value(rows, v, t);
        if (vars.empty()) {
          point[v] = t;
          return true;
        }
        tick();
        if (run(sub, vars)) {
          point[v] = t;
          return true;
        }
      }
      if (!any) return false;
    }
  }
};

}  // namespace

void LinearSystem::add_ge(std::vector<BigInt> coeffs, BigInt constant) {
  if (coeffs.size() != nvars_) throw std::invalid_argument("constraint arity mismatch");
  rows_.push_back({std::move(coeffs), std::move(constant)});
}

void LinearSystem::add_eq(const std::vector<BigInt>& coeffs, const BigInt& constant) {
  add_ge(coeffs, constant);
  std::vector<BigInt> neg(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
  add_ge(std::move(neg), -constant);
}

bool LinearSystem::satisfied_by(const std::vector<BigInt>& x) const {
  for (const auto& r : rows_) {
    BigInt v = r.constant;
    for (std::size_t i = 0; i < nvars_; ++i) v += r.coeffs[i] * x[i];
    if (v < 0) return false;
  }
  return true;
}

bool tighten(LinearConstraint& row) {
  BigInt g = 0;
  for (const auto& c : row.coeffs) g = gcd(g, abs_big(c));
  if (g == 0) return row.constant >= 0;
  if (g != 1) {
    for (auto& c : row.coeffs) c /= g;
    row.constant = floor_div(row.constant, g);
  }
  return true;
}

bool shadow_feasible(const LinearSystem& sys, const LinearLimits& limits) {
  Rows rows = sys.rows();
  return eliminate_all_but(rows, sys.nvars(), std::nullopt, limits);
}

IntegerRange project_onto(const LinearSystem& sys, std::size_t var, const LinearLimits& limits) {
  return range_of(sys.rows(), sys.nvars(), var, limits);
}

BigInt small_solution_bound(const LinearSystem& sys) {
  std::vector<std::size_t> live;
  for (std::size_t v = 0; v < sys.nvars(); ++v)
    if (mentions(sys.rows(), v)) live.push_back(v);
  const std::size_t n = live.size();
  std::vector<BigInt> norms;
  for (const auto& r : sys.rows()) {
    BigInt s = r.constant * r.constant;
    for (std::size_t v : live) s += r.coeffs[v] * r.coeffs[v];
    if (s != 0) norms.push_back(ceil_sqrt(s));
  }
  std::sort(norms.begin(), norms.end(), std::greater<>());
  // Hadamard bound on every subdeterminant of [A b], then (n+1) times that.
  BigInt delta = 1;
  for (std::size_t i = 0; i < norms.size() && i < n + 1; ++i) delta *= norms[i];
  return BigInt(n + 1) * delta;
}

std::optional<std::vector<BigInt>> integer_point(const LinearSystem& sys,
                                                 const LinearLimits& limits) {
  Rows rows = sys.rows();
  if (!canonical_rows(rows, limits)) return std::nullopt;
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < sys.nvars(); ++v)
    if (mentions(rows, v)) vars.push_back(v);
  PointSearch search{sys.nvars(), small_solution_bound(sys), limits, 0, {}};
  search.point.assign(sys.nvars(), BigInt(0));
  if (!search.run(rows, vars)) return std::nullopt;
  if (!sys.satisfied_by(search.point)) throw std::logic_error("integer point search returned a non-solution");
  return search.point;
}

}  // namespace lukadmit
