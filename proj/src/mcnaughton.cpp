#include "lukadmit/mcnaughton.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>

#include "json.hpp"
#include "lukadmit/term_dag.hpp"

namespace lukadmit {

using boost::multiprecision::cpp_int;

namespace {

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Rational slope(const PLPoint& a, const PLPoint& b) { return (b.y - a.y) / (b.x - a.x); }

// Drops interior points where the slope does not change.
std::vector<PLPoint> merge_collinear(std::vector<PLPoint> pts) {
  std::vector<PLPoint> out;
  out.reserve(pts.size());
  for (auto& p : pts) {
    while (out.size() >= 2 && slope(out[out.size() - 2], out.back()) == slope(out.back(), p))
      out.pop_back();
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

struct PLBuilder {
  static PLFunc make(std::vector<PLPoint> pts) {
    return PLFunc(merge_collinear(std::move(pts)), PLFunc::Unchecked{});
  }
};

PLFunc::PLFunc(std::vector<PLPoint> points, Unchecked) : pts_(std::move(points)) {}

PLFunc::PLFunc(std::vector<PLPoint> points) {
  if (points.size() < 2) throw PLError("need at least two breakpoints");
  if (points.front().x != 0 || points.back().x != 1)
    throw PLError("breakpoints must run from 0 to 1");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (p.y < 0 || p.y > 1) throw PLError("value outside [0,1]");
    if (i == 0) continue;
    const auto& q = points[i - 1];
    if (!(q.x < p.x)) throw PLError("breakpoints must be strictly increasing");
    Rational m = slope(q, p);
    if (!is_integer(m)) throw PLError("non-integer slope");
    if (!is_integer(q.y - m * q.x)) throw PLError("non-integer intercept");
  }
  pts_ = merge_collinear(std::move(points));
}

PLFunc PLFunc::constant(const Rational& c) { return PLFunc({{0, c}, {1, c}}); }

PLFunc PLFunc::identity() { return PLFunc({{0, 0}, {1, 1}}); }

Rational PLFunc::operator()(const Rational& x) const {
  if (x < 0 || x > 1) throw PLError("argument outside [0,1]");
  auto it = std::lower_bound(pts_.begin(), pts_.end(), x,
                             [](const PLPoint& p, const Rational& v) { return p.x < v; });
  if (it->x == x) return it->y;
  const PLPoint& b = *it;
  const PLPoint& a = *(it - 1);
  return a.y + slope(a, b) * (x - a.x);
}

bool PLFunc::is_constant_one() const {
  return pts_.size() == 2 && pts_[0].y == 1 && pts_[1].y == 1;
}

// ---------------------------------------------------------------- term_to_pl

namespace {

// Combines f and g pointwise. On every piece of the common refinement `sw`
// is linear and op is linear on each side of sw = 0.
template <class Switch, class Op>
PLFunc combine(const PLFunc& f, const PLFunc& g, Switch sw, Op op) {
  std::vector<Rational> xs;
  xs.reserve(f.points().size() + g.points().size());
  std::size_t i = 0, j = 0;
  const auto& fp = f.points();
  const auto& gp = g.points();
  while (i < fp.size() || j < gp.size()) {
    if (j == gp.size() || (i < fp.size() && fp[i].x < gp[j].x)) {
      xs.push_back(fp[i++].x);
    } else if (i == fp.size() || gp[j].x < fp[i].x) {
      xs.push_back(gp[j++].x);
    } else {
      xs.push_back(fp[i].x);
      ++i, ++j;
    }
  }
  // values along xs by walking both breakpoint lists
  auto walker = [&xs](const std::vector<PLPoint>& p) {
    std::vector<Rational> v;
    v.reserve(xs.size());
    std::size_t i = 0;
    for (const auto& x : xs) {
      while (p[i].x < x) ++i;
      if (p[i].x == x)
        v.push_back(p[i].y);
      else
        v.push_back(p[i - 1].y + slope(p[i - 1], p[i]) * (x - p[i - 1].x));
    }
    return v;
  };
  std::vector<Rational> fv = walker(fp), gv = &f == &g ? fv : walker(gp);
  std::vector<PLPoint> out;
  out.reserve(xs.size() * 2);
  Rational pf = fv[0], pg = gv[0];
  out.push_back({xs[0], op(pf, pg)});
  for (std::size_t k = 1; k < xs.size(); ++k) {
    const Rational& nf = fv[k];
    const Rational& ng = gv[k];
    Rational s0 = sw(pf, pg), s1 = sw(nf, ng);
    if ((s0 < 0 && s1 > 0) || (s0 > 0 && s1 < 0)) {
      Rational t = s0 / (s0 - s1);
      Rational x = xs[k - 1] + t * (xs[k] - xs[k - 1]);
      out.push_back({x, op(pf + t * (nf - pf), pg + t * (ng - pg))});
    }
    out.push_back({xs[k], op(nf, ng)});
    pf = nf;
    pg = ng;
  }
  return PLBuilder::make(std::move(out));
}

template <class Switch, class Op>
PLFunc map_unary(const PLFunc& f, Switch sw, Op op) {
  return combine(
      f, f, [&](const Rational& a, const Rational&) { return sw(a); },
      [&](const Rational& a, const Rational&) { return op(a); });
}

Rational clamp01(const Rational& r) {
  if (r < 0) return 0;
  if (r > 1) return 1;
  return r;
}

Rational abs_r(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace

PLFunc term_to_pl(const Formula& f) {
  auto vs = variables(f);
  if (vs.size() > 1) throw PLError("term_to_pl needs a term in at most one variable");
  TermDag dag(std::vector<std::string>(vs.begin(), vs.end()));
  std::int32_t root = dag.add(f);
  std::vector<PLFunc> val;
  val.reserve(dag.nodes().size());
  const PLFunc zero = PLFunc::constant(0), one = PLFunc::constant(1);
  for (const DagNode& n : dag.nodes()) {
    auto A = [&]() -> const PLFunc& { return val[n.lhs]; };
    auto B = [&]() -> const PLFunc& { return val[n.rhs]; };
    auto sum_m1 = [](const Rational& a, const Rational& b) { return a + b - 1; };
    auto diff = [](const Rational& a, const Rational& b) { return a - b; };
    switch (n.op) {
      case Op::Zero: val.push_back(zero); break;
      case Op::One: val.push_back(one); break;
      case Op::Var: val.push_back(PLFunc::identity()); break;
      case Op::Neg:
        val.push_back(map_unary(
            A(), [](const Rational&) { return Rational(0); },
            [](const Rational& a) { return Rational(1 - a); }));
        break;
      case Op::Oplus:
        val.push_back(combine(A(), B(), sum_m1, [](const Rational& a, const Rational& b) {
          return clamp01(a + b);
        }));
        break;
      case Op::Odot:
        val.push_back(combine(A(), B(), sum_m1, [](const Rational& a, const Rational& b) {
          return clamp01(a + b - 1);
        }));
        break;
      case Op::Imp:
        val.push_back(combine(
            A(), B(), [](const Rational& a, const Rational& b) { return b - a; },
            [](const Rational& a, const Rational& b) { return clamp01(1 - a + b); }));
        break;
      case Op::Join:
        val.push_back(combine(A(), B(), diff, [](const Rational& a, const Rational& b) {
          return std::max(a, b);
        }));
        break;
      case Op::Meet:
        val.push_back(combine(A(), B(), diff, [](const Rational& a, const Rational& b) {
          return std::min(a, b);
        }));
        break;
      case Op::Iff:
        val.push_back(combine(A(), B(), diff, [](const Rational& a, const Rational& b) {
          return Rational(1 - abs_r(a - b));
        }));
        break;
      case Op::Mult: {
        Rational k = n.count;
        if (n.count == 0) {
          val.push_back(zero);
          break;
        }
        val.push_back(map_unary(
            A(), [k](const Rational& a) { return k * a - 1; },
            [k](const Rational& a) { return clamp01(k * a); }));
        break;
      }
      case Op::Pow: {
        Rational k = n.count;
        if (n.count == 0) {
          val.push_back(one);
          break;
        }
        val.push_back(map_unary(
            A(), [k](const Rational& a) { return k * a - (k - 1); },
            [k](const Rational& a) { return clamp01(k * a - (k - 1)); }));
        break;
      }
    }
  }
  return val[static_cast<std::size_t>(root)];
}

// ---------------------------------------------------------------- synthesis

namespace {

// Simplest (smallest denominator) rational in the open interval (lo, hi),
// 0 <= lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi) {
  cpp_int fl = numerator(lo) / denominator(lo);
  if (Rational(fl + 1) < hi) return Rational(fl + 1);
  if (lo == Rational(fl)) {
    // (fl, hi): fl + 1/z with z > 1/(hi - fl)
    Rational inv = 1 / (hi - fl);
    cpp_int z = numerator(inv) / denominator(inv) + 1;
    return Rational(fl) + Rational(1) / Rational(z);
  }
  return Rational(fl) + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl));
}

cpp_int unimodular_det(const Rational& u, const Rational& w) {
  return numerator(w) * denominator(u) - numerator(u) * denominator(w);
}

void refine(const Rational& u, const Rational& w, std::vector<Rational>& out) {
  if (unimodular_det(u, w) == 1) {
    out.push_back(w);
    return;
  }
  Rational m = simplest_between(u, w);
  refine(u, m, out);
  refine(m, w, out);
}

// Shape of the smallest known term for clamp(m x - k).
struct Plan {
  enum Kind { Top, Bottom, Var, Times, Power, Step, Compose } kind;
  std::uint64_t size = 0;
  std::uint64_t xs = 0;  // occurrences of x
  std::int64_t a = 0, b = 0, c = 0, d = 0;
};

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r < a ? std::numeric_limits<std::uint64_t>::max() : r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

class StepTerms {
 public:
  explicit StepTerms(std::string var) : x_(Formula::var(std::move(var))) {}

  Formula term(std::int64_t m, std::int64_t k) {
    auto key = std::pair{m, k};
    if (auto it = built_.find(key); it != built_.end()) return it->second;
    const Plan& p = plan(m, k);
    Formula out = Formula::zero();
    switch (p.kind) {
      case Plan::Top: out = neg(Formula::zero()); break;
      case Plan::Bottom: out = Formula::zero(); break;
      case Plan::Var: out = x_; break;
      case Plan::Times: out = mult(static_cast<std::uint32_t>(m), x_); break;
      case Plan::Power: out = pow(x_, static_cast<std::uint32_t>(m)); break;
      case Plan::Step: out = oplus(odot(term(m - 1, k - 1), x_), term(m - 1, k)); break;
      case Plan::Compose:
        out = substitute(term(p.c, p.d), {{x_.name(), term(p.a, p.b)}});
        break;
    }
    built_.emplace(key, out);
    return out;
  }

 private:
  const Plan& plan(std::int64_t m, std::int64_t k) {
    auto key = std::pair{m, k};
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    Plan best{};
    if (k < 0) {
      best = {Plan::Top, 2, 0};
    } else if (k >= m) {
      best = {Plan::Bottom, 1, 0};
    } else if (m == 1) {
      best = {Plan::Var, 1, 1};
    } else if (k == 0) {
      best = {Plan::Times, 2, 1};
    } else if (k == m - 1) {
      best = {Plan::Power, 2, 1};
    } else {
      best.size = std::numeric_limits<std::uint64_t>::max();
      bool composite = false;
      for (std::int64_t a = 2; a < m; ++a) {
        if (m % a != 0) continue;
        composite = true;
        std::int64_t c = m / a, b = k / c, d = k % c;
        const Plan& outer = plan(c, d);
        const Plan& inner = plan(a, b);
        std::uint64_t sz = sat_add(outer.size, sat_mul(outer.xs, inner.size - 1));
        if (sz < best.size) best = {Plan::Compose, sz, sat_mul(outer.xs, inner.xs), a, b, c, d};
      }
      // stepping down costs a quadratic number of states, so only small or
      // prime slopes do it
      if (!composite || m <= 12) {
        const Plan& l = plan(m - 1, k - 1);
        const Plan& r = plan(m - 1, k);
        std::uint64_t sz = sat_add(sat_add(l.size, r.size), 3);
        if (sz < best.size) best = {Plan::Step, sz, l.xs + r.xs + 1};
      }
    }
    return plans_.emplace(key, best).first->second;
  }

  Formula x_;
  std::map<std::pair<std::int64_t, std::int64_t>, Plan> plans_;
  std::map<std::pair<std::int64_t, std::int64_t>, Formula> built_;
};

std::int64_t to_i64(const cpp_int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw PLError("denominator too large for synthesis");
  return static_cast<std::int64_t>(v);
}

}  // namespace

Formula clamp_term(std::int64_t m, std::int64_t k, const std::string& var) {
  if (m < 1) throw PLError("clamp term needs a positive slope");
  return StepTerms(var).term(m, k);
}

Formula synthesize(const PLFunc& g, const std::string& var) {
  if (g.is_constant_one()) return neg(Formula::zero());
  const auto& pts = g.points();
  std::vector<Rational> vs{pts[0].x};
  for (std::size_t i = 1; i < pts.size(); ++i) refine(pts[i - 1].x, pts[i].x, vs);

  StepTerms steps(var);
  std::vector<Formula> hats;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Rational& v = vs[i];
    Rational kv = g(v) * Rational(denominator(v));
    if (!is_integer(kv)) throw PLError("McNaughton condition fails at a vertex");
    std::int64_t k = to_i64(numerator(kv));
    if (k == 0) continue;
    std::optional<Formula> up, down;
    if (i > 0) {
      const Rational& u = vs[i - 1];
      up = steps.term(to_i64(denominator(u)), to_i64(numerator(u)));
    }
    if (i + 1 < vs.size()) {
      const Rational& w = vs[i + 1];
      down = neg(steps.term(to_i64(denominator(w)), to_i64(numerator(w)) - 1));
    }
    Formula hat = up && down ? meet(*up, *down) : up ? *up : *down;
    if (k > 1) hat = mult(static_cast<std::uint32_t>(k), hat);
    hats.push_back(hat);
  }
  if (hats.empty()) return Formula::zero();
  // balanced, so that evaluating the sum stays near-linear
  while (hats.size() > 1) {
    std::vector<Formula> next;
    for (std::size_t i = 0; i + 1 < hats.size(); i += 2) next.push_back(oplus(hats[i], hats[i + 1]));
    if (hats.size() % 2) next.push_back(hats.back());
    hats = std::move(next);
  }
  return hats[0];
}

// ---------------------------------------------------------------- spectra

namespace {

// Length of the longest open gap between the closed pieces of g^-1(1).
Rational longest_gap(const PLFunc& g) {
  const auto& p = g.points();
  Rational best = 0;
  std::optional<Rational> last_one;
  Rational start = 0;  // start of the current gap
  bool in_gap = p[0].y != 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].y == 1) {
      if (in_gap) best = std::max(best, Rational(p[i].x - start));
      in_gap = false;
      bool flat = i + 1 < p.size() && p[i + 1].y == 1;
      if (!flat) {
        in_gap = true;
        start = p[i].x;
      }
    }
  }
  if (in_gap) best = std::max(best, Rational(1 - start));
  return best;
}

std::int64_t candidate_bound(const PLFunc& g) {
  Rational gap = longest_gap(g);
  Rational inv = 1 / gap;
  cpp_int c = (numerator(inv) + denominator(inv) - 1) / denominator(inv);
  return to_i64(c);
}

// g = 1 on [x, x+e) (right) or (x-e, x] (left) for some e > 0.
bool flat_one(const PLFunc& g, const Rational& x, bool right) {
  if (g(x) != 1) return false;
  const auto& p = g.points();
  auto it = std::lower_bound(p.begin(), p.end(), x,
                             [](const PLPoint& q, const Rational& v) { return q.x < v; });
  if (right) {
    if (it->x == x) ++it;
    return it != p.end() && it->y == 1;
  }
  return (it - 1)->y == 1;
}

}  // namespace

Spectrum valid_chains(const PLFunc& g) {
  if (g.is_constant_one()) return {true, {}};
  Spectrum out;
  std::int64_t K = candidate_bound(g);
  for (std::int64_t k = 1; k <= K; ++k) {
    bool ok = true;
    for (std::int64_t t = 0; t <= k && ok; ++t) ok = g(Rational(t, k)) == 1;
    if (ok) out.ks.insert(k);
  }
  return out;
}

Spectrum valid_lex_chains(const PLFunc& g) {
  if (g.is_constant_one()) return {true, {}};
  Spectrum out;
  std::int64_t K = candidate_bound(g);
  for (std::int64_t k = 1; k <= K; ++k) {
    bool ok = true;
    for (std::int64_t t = 0; t <= k && ok; ++t) {
      Rational x(t, k);
      if (t > 0) ok = flat_one(g, x, false);
      if (ok && t < k) ok = flat_one(g, x, true);
    }
    if (ok) out.ks.insert(k);
  }
  return out;
}

std::string format_spectrum(const Spectrum& s) {
  if (s.all) return "all";
  std::string out = "{";
  bool first = true;
  for (auto k : s.ks) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(k);
  }
  return out + "}";
}

// ---------------------------------------------------------------- JSON

std::string pl_to_json(const PLFunc& g) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : g.points())
    arr.push_back({to_i64(numerator(p.x)), to_i64(denominator(p.x)), to_i64(numerator(p.y)),
                   to_i64(denominator(p.y))});
  return arr.dump();
}

PLFunc pl_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw PLError(std::string("bad PL JSON: ") + e.what());
  }
  if (!j.is_array()) throw PLError("PL JSON must be an array");
  std::vector<PLPoint> pts;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 4) throw PLError("each breakpoint needs four integers");
    std::int64_t v[4];
    for (int i = 0; i < 4; ++i) {
      if (!row[i].is_number_integer()) throw PLError("each breakpoint needs four integers");
      v[i] = row[i].get<std::int64_t>();
    }
    if (v[1] == 0 || v[3] == 0) throw PLError("zero denominator");
    pts.push_back({Rational(v[0], v[1]), Rational(v[2], v[3])});
  }
  return PLFunc(std::move(pts));
}

}  // namespace lukadmit
