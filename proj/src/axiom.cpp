#include "lukadmit/axiom.hpp"

#include <algorithm>
#include <set>

namespace lukadmit {

namespace {

struct Frac {
  std::int64_t num, den;
};

// Left and right Stern-Brocot parents of a/b (0 < a < b, coprime).
std::pair<Frac, Frac> parents(std::int64_t a, std::int64_t b) {
  // b_l with a * b_l = 1 (mod b)
  std::int64_t r0 = b, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  std::int64_t bl = ((s0 % b) + b) % b;
  std::int64_t al = (a * bl - 1) / b;
  return {{al, bl}, {a - al, b - bl}};
}

Rational frac(std::int64_t n, std::int64_t d) { return Rational(n, d); }

// Points of the bump centred at p = a/b. Zero points are the first neighbours
// closer than 1/(2L); plateaus reach one level further in.
void add_bump(std::int64_t a, std::int64_t b, bool plateau, std::int64_t L,
              std::vector<PLPoint>& out) {
  Rational p = frac(a, b);
  out.push_back({p, 1});
  Rational limit = frac(1, 2 * L);
  auto side = [&](Frac par, bool left) {
    if ((left && a == 0) || (!left && a == b)) return;
    auto at = [&](std::int64_t k) { return frac(k * a + par.num, k * b + par.den); };
    std::int64_t k = 1;
    while (left ? p - at(k) >= limit : at(k) - p >= limit) ++k;
    out.push_back({at(k), 0});
    if (plateau) out.push_back({at(k + 1), 1});
  };
  Frac left{0, 1}, right{1, 0};
  if (b > 1) std::tie(left, right) = parents(a, b);
  side(left, true);
  side(right, false);
}

std::set<std::int64_t> divisors_of_union(const ReducedPair& p) {
  IndexSet all = p.I;
  all.insert(p.J.begin(), p.J.end());
  return divisors(all);
}

}  // namespace

PLFunc design_target(const ReducedPair& pair) {
  std::int64_t L = lcm_of(pair);
  std::set<Rational> plateaus, touches;
  for (auto j : pair.J)
    for (std::int64_t t = 0; t <= j; ++t) plateaus.insert(frac(t, j));
  for (auto i : pair.I)
    for (std::int64_t t = 0; t <= i; ++t)
      if (!plateaus.count(frac(t, i))) touches.insert(frac(t, i));
  std::vector<PLPoint> pts;
  for (const auto* s : {&plateaus, &touches})
    for (const auto& p : *s)
      add_bump(static_cast<std::int64_t>(numerator(p)), static_cast<std::int64_t>(denominator(p)),
               s == &plateaus, L, pts);
  std::sort(pts.begin(), pts.end(), [](const PLPoint& u, const PLPoint& v) { return u.x < v.x; });
  return PLFunc(std::move(pts));
}

bool verify_axiomatizes(const Formula& t, const ReducedPair& pair) {
  PLFunc g = term_to_pl(t);
  Spectrum chains{false, divisors_of_union(pair)};
  Spectrum lex{false, divisors(pair.J)};
  return valid_chains(g) == chains && valid_lex_chains(g) == lex;
}

Formula alpha(const ReducedPair& pair, const std::string& var) {
  Formula t = synthesize(design_target(pair), var);
  if (!verify_axiomatizes(t, pair))
    throw AxiomError("synthesized axiom fails verification for " + format_pair(pair));
  return t;
}

}  // namespace lukadmit
