#include "lukadmit/consequence.hpp"

#include <limits>

#include "lukadmit/term_dag.hpp"

namespace lukadmit {

Quasiequation to_quasiequation(const Rule& r) {
  Quasiequation q{{}, {r.conclusion, Formula::one()}};
  for (const auto& p : r.premises) q.antecedent.push_back({p, Formula::one()});
  return q;
}

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Formula parse_at(std::string_view text, std::size_t offset) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), e.position() + offset);
  }
}

Equation parse_equation(std::string_view text, std::size_t offset) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos)
    throw ParseError("expected exactly one '=' in an equation", offset + 1);
  return {parse_at(text.substr(0, eq), offset), parse_at(text.substr(eq + 1), offset + eq + 1)};
}

}  // namespace

Quasiequation parse_quasiequation(std::string_view text) {
  auto arrow = text.find("=>");
  if (arrow == std::string_view::npos) throw ParseError("expected '=>'", text.size() + 1);
  Quasiequation q;
  std::size_t off = 0;
  std::string_view ante = trim(text.substr(0, arrow), off);
  std::size_t start = off;
  while (!ante.empty()) {
    auto amp = ante.find('&');
    std::string_view piece = ante.substr(0, amp);
    q.antecedent.push_back(parse_equation(piece, start));
    if (amp == std::string_view::npos) break;
    ante.remove_prefix(amp + 1);
    start += amp + 1;
  }
  q.consequent = parse_equation(text.substr(arrow + 2), arrow + 2);
  return q;
}

std::string print_quasiequation(const Quasiequation& q) {
  std::string out;
  for (std::size_t i = 0; i < q.antecedent.size(); ++i) {
    if (i) out += " & ";
    out += print_formula(q.antecedent[i].lhs) + " = " + print_formula(q.antecedent[i].rhs);
  }
  out += out.empty() ? "=> " : " => ";
  return out + print_formula(q.consequent.lhs) + " = " + print_formula(q.consequent.rhs);
}

std::set<std::string> variables(const Quasiequation& q) {
  std::set<std::string> out;
  auto add = [&](const Formula& f) {
    auto v = variables(f);
    out.insert(v.begin(), v.end());
  };
  for (const auto& e : q.antecedent) {
    add(e.lhs);
    add(e.rhs);
  }
  add(q.consequent.lhs);
  add(q.consequent.rhs);
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Valid: return "valid";
    case Verdict::Invalid: return "invalid";
    case Verdict::ResourceExceeded: return "resource-exceeded";
  }
  return "?";
}

namespace {

// DAG over all sides of q; variables in sorted order.
struct Compiled {
  TermDag dag;
  std::vector<std::pair<std::int32_t, std::int32_t>> antecedent;
  std::optional<std::pair<std::int32_t, std::int32_t>> consequent;

  Compiled(const Quasiequation& q, bool with_consequent) : dag(sorted_vars(q)) {
    for (const auto& e : q.antecedent) antecedent.emplace_back(dag.add(e.lhs), dag.add(e.rhs));
    if (with_consequent) consequent.emplace(dag.add(q.consequent.lhs), dag.add(q.consequent.rhs));
    else {
      // keep the consequent's variables in the assignment
      dag.add(q.consequent.lhs);
      dag.add(q.consequent.rhs);
    }
  }

  static std::vector<std::string> sorted_vars(const Quasiequation& q) {
    auto v = variables(q);
    return {v.begin(), v.end()};
  }
};

template <class E>
std::map<std::string, E> to_map(const std::vector<std::string>& names, const std::vector<E>& xs) {
  std::map<std::string, E> out;
  for (std::size_t i = 0; i < names.size(); ++i) out.emplace(names[i], xs[i]);
  return out;
}

std::uint64_t power_or_max(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

// Exhaustive search over the listed candidate values of each variable; a hit
// is an assignment satisfying the antecedent and failing the consequent.
template <class Alg>
std::optional<std::vector<typename Alg::Element>> first_hit(
    const Compiled& c, const Alg& alg,
    const std::vector<std::vector<typename Alg::Element>>& candidates) {
  using E = typename Alg::Element;
  const std::size_t k = c.dag.variables().size();
  std::vector<std::size_t> idx(k, 0);
  std::vector<E> point(k), vals;
  for (const auto& cand : candidates)
    if (cand.empty()) return std::nullopt;
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) point[i] = candidates[i][idx[i]];
    evaluate_into(c.dag, alg, std::span<const E>(point), vals);
    bool ok = true;
    for (const auto& [l, r] : c.antecedent)
      if (!(vals[l] == vals[r])) {
        ok = false;
        break;
      }
    if (ok && (!c.consequent || !(vals[c.consequent->first] == vals[c.consequent->second])))
      return point;
    std::size_t i = 0;
    while (i < k && ++idx[i] == candidates[i].size()) idx[i++] = 0;
    if (i == k) return std::nullopt;
  }
}

Outcome<std::int64_t> finite_search(const Quasiequation& q, std::int64_t n, bool with_consequent,
                                    const EngineLimits& limits) {
  FiniteChain chain(n);
  Compiled c(q, with_consequent);
  const auto& names = c.dag.variables();
  Outcome<std::int64_t> out;
  if (power_or_max(static_cast<std::uint64_t>(n + 1), names.size()) > limits.max_assignments) {
    out.verdict = Verdict::ResourceExceeded;
    out.note = "exhaustive search over L(" + std::to_string(n) + ") with " +
               std::to_string(names.size()) + " variables exceeds the assignment guard";
    return out;
  }
  std::vector<std::int64_t> all;
  for (std::int64_t x = 0; x <= n; ++x) all.push_back(x);
  std::vector<std::vector<std::int64_t>> cand(names.size(), all);
  if (auto hit = first_hit(c, chain, cand)) {
    out.verdict = Verdict::Invalid;
    out.witness = to_map(names, *hit);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symbolic search over L_n^s: first coordinates are enumerated, second
// coordinates are affine forms in the unknown b's.

struct Overflow {};

std::int64_t add_ck(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t mul_ck(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

struct Affine {
  std::vector<std::int64_t> c;
  std::int64_t k = 0;

  bool constant() const {
    for (auto x : c)
      if (x) return false;
    return true;
  }
};

Affine combine(const Affine& x, std::int64_t p, const Affine& y, std::int64_t q) {
  Affine r;
  r.c.resize(x.c.size());
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = add_ck(mul_ck(p, x.c[i]), mul_ck(q, y.c[i]));
  r.k = add_ck(mul_ck(p, x.k), mul_ck(q, y.k));
  return r;
}

struct Sym {
  std::int64_t a = 0;
  Affine b;
};

Sym lin(const Sym& x, std::int64_t p, const Sym& y, std::int64_t q) {
  return {add_ck(mul_ck(p, x.a), mul_ck(q, y.a)), combine(x.b, p, y.b, q)};
}

struct Abort {};

class LexSearch {
 public:
  LexSearch(const Compiled& c, std::int64_t n, std::int64_t s, const EngineLimits& limits)
      : c_(c), n_(n), s_(s), limits_(limits), k_(c.dag.variables().size()), sys_(k_) {
    const auto& nodes = c_.dag.nodes();
    eqs_at_.resize(nodes.size());
    for (std::size_t e = 0; e < c_.antecedent.size(); ++e) {
      auto [l, r] = c_.antecedent[e];
      eqs_at_[static_cast<std::size_t>(std::max(l, r))].push_back(static_cast<std::int32_t>(e));
    }
    if (c_.consequent) {
      auto [l, r] = *c_.consequent;
      eqs_at_[static_cast<std::size_t>(std::max(l, r))].push_back(-1);
    }
    top_ = constant(n_, s_);
    zero_ = constant(0, 0);
  }

  // Returns the witness (a_i, b_i) or nullopt; throws Abort on guard trips.
  std::optional<std::vector<LexElem>> run() {
    std::vector<std::int64_t> a(k_, 0);
    std::uint64_t count = 0;
    for (;;) {
      if (++count > limits_.max_assignments) throw Abort{};
      if (try_first_coordinates(a)) {
        std::vector<LexElem> w;
        for (std::size_t i = 0; i < k_; ++i) w.push_back({a[i], witness_b_[i]});
        return w;
      }
      std::size_t i = 0;
      while (i < k_ && ++a[i] > n_) a[i++] = 0;
      if (i == k_) return std::nullopt;
    }
  }

  bool incomplete() const { return incomplete_; }

 private:
  Sym constant(std::int64_t a, std::int64_t b) const {
    Sym x;
    x.a = a;
    x.b.c.assign(k_, 0);
    x.b.k = b;
    return x;
  }

  bool try_first_coordinates(const std::vector<std::int64_t>& a) {
    a_ = &a;
    sys_ = LinearSystem(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      std::vector<BigInt> coeffs(k_, BigInt(0));
      if (a[i] == 0) {
        coeffs[i] = 1;
        sys_.add_ge(coeffs, BigInt(0));  // b >= 0
      } else if (a[i] == n_) {
        coeffs[i] = -1;
        sys_.add_ge(coeffs, BigInt(s_));  // b <= s
      }
    }
    vals_.assign(c_.dag.nodes().size(), Sym{});
    found_ = false;
    consequent_failed_ = !c_.consequent.has_value();
    node(0);
    return found_;
  }

  void tick() {
    if (++branches_ > limits_.max_branches) throw Abort{};
  }

  std::vector<BigInt> big(const Affine& a) const {
    std::vector<BigInt> out;
    for (auto x : a.c) out.emplace_back(x);
    return out;
  }

  // Runs f under the extra constraint form >= 0, if that stays feasible.
  template <class F>
  void with_ge(const Affine& form, F&& f) {
    if (form.constant()) {
      if (form.k >= 0) f();
      return;
    }
    tick();
    sys_.add_ge(big(form), BigInt(form.k));
    bool feasible = true;
    try {
      feasible = shadow_feasible(sys_, limits_.linear);
    } catch (const ResourceExceeded&) {
    }
    if (feasible) f();
    sys_.pop();
  }

  template <class F>
  void with_eq(const Affine& form, F&& f) {
    if (form.constant()) {
      if (form.k == 0) f();
      return;
    }
    Affine neg = combine(form, -1, form, 0);
    with_ge(form, [&] { with_ge(neg, f); });
  }

  // f(true) under p <= q, f(false) under p > q.
  template <class F>
  void le(const Sym& p, const Sym& q, F&& f) {
    if (p.a != q.a) {
      f(p.a < q.a);
      return;
    }
    Affine d = combine(q.b, 1, p.b, -1);  // q.b - p.b >= 0
    with_ge(d, [&] { f(true); });
    if (found_) return;
    Affine strict = combine(d, -1, d, 0);
    strict.k = add_ck(strict.k, -1);  // p.b - q.b - 1 >= 0
    with_ge(strict, [&] { f(false); });
  }

  void emit(std::size_t i, Sym v) {
    vals_[i] = std::move(v);
    equations(i, 0);
  }

  void cap(std::size_t i, const Sym& t) {
    le(t, top_, [&](bool below) { emit(i, below ? t : top_); });
  }

  void floor0(std::size_t i, const Sym& t) {
    le(t, zero_, [&](bool below) { emit(i, below ? zero_ : t); });
  }

  void node(std::size_t i) {
    if (found_) return;
    const auto& nodes = c_.dag.nodes();
    if (i == nodes.size()) {
      leaf();
      return;
    }
    const DagNode& n = nodes[i];
    auto val = [&](std::int32_t j) -> const Sym& { return vals_[static_cast<std::size_t>(j)]; };
    switch (n.op) {
      case Op::Zero: emit(i, zero_); break;
      case Op::One: emit(i, top_); break;
      case Op::Var: {
        Sym x = constant((*a_)[static_cast<std::size_t>(n.var)], 0);
        x.b.c[static_cast<std::size_t>(n.var)] = 1;
        emit(i, x);
        break;
      }
      case Op::Neg: emit(i, lin(top_, 1, val(n.lhs), -1)); break;
      case Op::Oplus: cap(i, lin(val(n.lhs), 1, val(n.rhs), 1)); break;
      case Op::Odot: floor0(i, lin(lin(val(n.lhs), 1, val(n.rhs), 1), 1, top_, -1)); break;
      case Op::Imp: cap(i, lin(lin(top_, 1, val(n.lhs), -1), 1, val(n.rhs), 1)); break;
      case Op::Join: {
        Sym x = val(n.lhs), y = val(n.rhs);
        le(x, y, [&](bool x_le_y) { emit(i, x_le_y ? y : x); });
        break;
      }
      case Op::Meet: {
        Sym x = val(n.lhs), y = val(n.rhs);
        le(x, y, [&](bool x_le_y) { emit(i, x_le_y ? x : y); });
        break;
      }
      case Op::Iff: {
        Sym d = lin(val(n.lhs), 1, val(n.rhs), -1);
        le(zero_, d, [&](bool nonneg) { emit(i, lin(top_, 1, d, nonneg ? -1 : 1)); });
        break;
      }
      case Op::Mult: cap(i, lin(val(n.lhs), static_cast<std::int64_t>(n.count), zero_, 0)); break;
      case Op::Pow:
        if (n.count == 0)
          emit(i, top_);
        else
          floor0(i, lin(val(n.lhs), static_cast<std::int64_t>(n.count), top_,
                        -(static_cast<std::int64_t>(n.count) - 1)));
        break;
    }
  }

  void equations(std::size_t i, std::size_t j) {
    if (found_) return;
    if (j == eqs_at_[i].size()) {
      node(i + 1);
      return;
    }
    const std::int32_t e = eqs_at_[i][j];
    auto [l, r] = e >= 0 ? c_.antecedent[static_cast<std::size_t>(e)] : *c_.consequent;
    const Sym& L = vals_[static_cast<std::size_t>(l)];
    const Sym& R = vals_[static_cast<std::size_t>(r)];
    Affine d = combine(L.b, 1, R.b, -1);
    if (e >= 0) {
      if (L.a != R.a) return;
      with_eq(d, [&] { equations(i, j + 1); });
      return;
    }
    // consequent: look for the branches where it fails
    auto failed = [&] {
      consequent_failed_ = true;
      equations(i, j + 1);
      consequent_failed_ = false;
    };
    if (L.a != R.a) {
      failed();
      return;
    }
    Affine up = d, down = combine(d, -1, d, 0);
    up.k = add_ck(up.k, -1);      // d >= 1
    down.k = add_ck(down.k, -1);  // -d >= 1
    with_ge(up, failed);
    if (found_) return;
    with_ge(down, failed);
  }

  void leaf() {
    if (!consequent_failed_) return;
    try {
      if (auto p = integer_point(sys_, limits_.linear)) {
        witness_b_ = *p;
        found_ = true;
      }
    } catch (const ResourceExceeded&) {
      incomplete_ = true;
    }
  }

  const Compiled& c_;
  std::int64_t n_, s_;
  const EngineLimits& limits_;
  std::size_t k_;
  LinearSystem sys_;
  std::vector<std::vector<std::int32_t>> eqs_at_;
  std::vector<Sym> vals_;
  Sym top_, zero_;
  const std::vector<std::int64_t>* a_ = nullptr;
  bool found_ = false;
  bool consequent_failed_ = false;
  bool incomplete_ = false;
  std::size_t branches_ = 0;
  std::vector<BigInt> witness_b_;
};

Outcome<LexElem> bounded_search_impl(const Compiled& c, std::int64_t n, std::int64_t s,
                                     std::int64_t bound, std::uint64_t max_assignments) {
  using Small = BasicLexChain<std::int64_t>;
  using SE = Small::Element;
  Small chain(n, s);
  const auto& names = c.dag.variables();
  const std::size_t k = names.size();
  Outcome<LexElem> out;
  auto to_big = [&](const std::vector<SE>& hit) {
    std::map<std::string, LexElem> w;
    for (std::size_t i = 0; i < k; ++i) w.emplace(names[i], LexElem{hit[i].a, BigInt(hit[i].b)});
    return w;
  };
  // elements with |b| == r, for r = 0..bound
  std::vector<std::vector<SE>> ring(static_cast<std::size_t>(bound) + 1);
  for (std::int64_t a = 0; a <= n; ++a)
    for (std::int64_t b = -bound; b <= bound; ++b) {
      SE e{a, b};
      if (chain.contains(e)) ring[static_cast<std::size_t>(b < 0 ? -b : b)].push_back(e);
    }
  std::uint64_t per_var = 0;
  for (const auto& r : ring) per_var += r.size();
  if (power_or_max(per_var, k) > max_assignments) {
    out.verdict = Verdict::ResourceExceeded;
    out.note = "bounded enumeration exceeds the assignment guard";
    return out;
  }
  if (k == 0) {
    if (auto hit = first_hit(c, chain, {})) {
      out.verdict = Verdict::Invalid;
      out.witness = to_big(*hit);
    }
    return out;
  }
  std::vector<SE> below;  // |b| < r
  for (std::int64_t r = 0; r <= bound; ++r) {
    const auto& eq = ring[static_cast<std::size_t>(r)];
    std::vector<SE> upto = below;
    upto.insert(upto.end(), eq.begin(), eq.end());
    // the first coordinate with |b| == r is j
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::vector<SE>> cand;
      for (std::size_t i = 0; i < k; ++i) cand.push_back(i < j ? below : i == j ? eq : upto);
      if (auto hit = first_hit(c, chain, cand)) {
        out.verdict = Verdict::Invalid;
        out.witness = to_big(*hit);
        return out;
      }
    }
    below = std::move(upto);
  }
  return out;
}

template <class Alg>
void check_witness(const Quasiequation& q, const Assignment<Alg>& w, const Alg& alg,
                   bool with_consequent) {
  for (const auto& e : q.antecedent)
    if (!holds(e, w, alg)) throw std::logic_error("witness violates an antecedent equation");
  if (with_consequent && holds(q.consequent, w, alg))
    throw std::logic_error("witness satisfies the consequent");
}

Outcome<LexElem> lex_outcome(const Quasiequation& q, std::int64_t n, const BigInt& s,
                             bool with_consequent, const EngineLimits& limits) {
  Compiled c(q, with_consequent);
  LexChain chain(n, s);
  Outcome<LexElem> out;
  if (s > std::numeric_limits<std::int32_t>::max()) {
    out.verdict = Verdict::ResourceExceeded;
    out.note = "unit too large for the symbolic search";
    return out;
  }
  const auto s64 = static_cast<std::int64_t>(s);
  std::string why;
  try {
    LexSearch search(c, n, s64, limits);
    if (auto w = search.run()) {
      out.verdict = Verdict::Invalid;
      out.witness = to_map(c.dag.variables(), *w);
    } else if (search.incomplete()) {
      why = "integer point search exceeded its budget";
    }
  } catch (const Abort&) {
    why = "branch guard tripped";
  } catch (const Overflow&) {
    why = "coefficient overflow";
  }
  if (!why.empty()) {
    out = bounded_search_impl(c, n, s64, limits.fallback_bound, limits.max_assignments);
    out.bounded_fallback = true;
    if (!out.invalid()) {
      out.verdict = Verdict::ResourceExceeded;
      out.note = why + "; no counterexample with |b| <= " + std::to_string(limits.fallback_bound);
    } else {
      out.note = why + "; counterexample from bounded search";
    }
  }
  if (out.witness) {
    // re-check the witness exactly
    check_witness(q, *out.witness, chain, with_consequent);
  }
  return out;
}


template <class E>
Outcome<ChainElement> widen(const Outcome<E>& o) {
  Outcome<ChainElement> out{o.verdict, std::nullopt, o.bounded_fallback, o.note};
  if (o.witness) {
    std::map<std::string, ChainElement> w;
    for (const auto& [k, v] : *o.witness) w.emplace(k, v);
    out.witness = std::move(w);
  }
  return out;
}

}  // namespace

Outcome<std::int64_t> valid_on_finite_chain(const Quasiequation& q, std::int64_t n,
                                            const EngineLimits& limits) {
  auto out = finite_search(q, n, true, limits);
  if (out.witness) check_witness(q, *out.witness, FiniteChain(n), true);
  return out;
}

Outcome<LexElem> valid_on_lex_chain(const Quasiequation& q, std::int64_t n, const BigInt& s,
                                    const EngineLimits& limits) {
  return lex_outcome(q, n, s, true, limits);
}

Outcome<ChainElement> valid_on_chain(const Quasiequation& q, const Chain& c,
                                     const EngineLimits& limits) {
  if (auto* f = std::get_if<FiniteChain>(&c)) return widen(valid_on_finite_chain(q, f->n(), limits));
  const auto& l = std::get<LexChain>(c);
  return widen(valid_on_lex_chain(q, l.n(), l.s(), limits));
}

Outcome<ChainElement> antecedent_unsatisfiable(const Quasiequation& q, const Chain& c,
                                               const EngineLimits& limits) {
  if (auto* f = std::get_if<FiniteChain>(&c)) {
    auto out = finite_search(q, f->n(), false, limits);
    if (out.witness) check_witness(q, *out.witness, *f, false);
    return widen(out);
  }
  const auto& l = std::get<LexChain>(c);
  return widen(lex_outcome(q, l.n(), l.s(), false, limits));
}

Outcome<LexElem> bounded_lex_search(const Quasiequation& q, std::int64_t n, std::int64_t s,
                                    std::int64_t bound, std::uint64_t max_assignments) {
  Compiled c(q, true);
  return bounded_search_impl(c, n, s, bound, max_assignments);
}

Outcome<ProductAlgebra::Element> valid_on_product(const Quasiequation& q,
                                                  const std::vector<Chain>& factors,
                                                  const EngineLimits& limits) {
  Outcome<ProductAlgebra::Element> out;
  std::vector<Outcome<ChainElement>> sat, valid;
  for (const auto& f : factors) {
    sat.push_back(antecedent_unsatisfiable(q, f, limits));
    if (sat.back().valid()) return out;  // antecedent never holds in the product
  }
  bool all_valid = true;
  std::optional<std::size_t> failing;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    valid.push_back(valid_on_chain(q, factors[i], limits));
    if (valid.back().invalid() && !failing) failing = i;
    if (!valid.back().valid()) all_valid = false;
  }
  if (all_valid) return out;
  bool all_sat = std::all_of(sat.begin(), sat.end(), [](const auto& s) { return s.invalid(); });
  if (failing && all_sat) {
    out.verdict = Verdict::Invalid;
    std::map<std::string, ProductAlgebra::Element> w;
    for (const auto& name : variables(q)) {
      ProductAlgebra::Element e;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& src = i == *failing ? *valid[i].witness : *sat[i].witness;
        e.push_back(src.at(name));
      }
      w.emplace(name, std::move(e));
    }
    out.witness = std::move(w);
    out.bounded_fallback = valid[*failing].bounded_fallback;
    check_witness(q, *out.witness, ProductAlgebra(factors), true);
    return out;
  }
  out.verdict = Verdict::ResourceExceeded;
  out.note = "a factor search exceeded its guard";
  return out;
}

FamilyOutcome valid_on_all(const Quasiequation& q, const std::vector<Chain>& family,
                           const EngineLimits& limits) {
  FamilyOutcome out;
  std::string pending;
  for (const auto& c : family) {
    auto o = valid_on_chain(q, c, limits);
    if (o.invalid()) {
      out.verdict = Verdict::Invalid;
      out.algebra = c;
      out.witness = std::move(o.witness);
      out.bounded_fallback = o.bounded_fallback;
      out.note = std::move(o.note);
      return out;
    }
    if (o.verdict == Verdict::ResourceExceeded && pending.empty())
      pending = format_chain(c) + ": " + o.note;
  }
  if (!pending.empty()) {
    out.verdict = Verdict::ResourceExceeded;
    out.note = std::move(pending);
  }
  return out;
}

std::vector<Chain> variety_generators(const ReducedPair& p) {
  std::vector<Chain> out;
  for (auto i : p.I) out.emplace_back(FiniteChain(i));
  for (auto j : p.J) out.emplace_back(LexChain(j, 0));
  return out;
}

std::vector<Chain> q1_generators(const ReducedPair& p) {
  std::vector<Chain> out;
  for (auto m : p.I) out.emplace_back(FiniteChain(m));
  for (auto n : p.J) out.emplace_back(LexChain(n, 1));
  return out;
}

FamilyOutcome derivable(const Rule& r, const ReducedPair& p, const EngineLimits& limits) {
  return valid_on_all(to_quasiequation(r), variety_generators(p), limits);
}

FamilyOutcome derivable_Q1(const Rule& r, const ReducedPair& p, const EngineLimits& limits) {
  return valid_on_all(to_quasiequation(r), q1_generators(p), limits);
}

}  // namespace lukadmit
