#include "lukadmit/variety.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace lukadmit {

namespace {

bool divides_other(std::int64_t x, const IndexSet& pool, std::int64_t skip) {
  return std::any_of(pool.begin(), pool.end(),
                     [&](std::int64_t k) { return k != skip && k % x == 0; });
}

void check_positive(const IndexSet& I, const IndexSet& J) {
  if (I.empty() && J.empty()) throw PairError("I and J cannot both be empty");
  for (const auto* s : {&I, &J})
    for (auto x : *s)
      if (x < 1) throw PairError("indices must be positive integers");
}

}  // namespace

bool is_reduced(const IndexSet& I, const IndexSet& J) {
  for (auto n : I) {
    if (divides_other(n, I, n)) return false;
    if (divides_other(n, J, -1)) return false;
  }
  for (auto m : J)
    if (divides_other(m, J, m)) return false;
  return true;
}

ReducedPair reduce(const IndexSet& I, const IndexSet& J) {
  check_positive(I, J);
  ReducedPair out;
  for (auto n : I)
    if (!divides_other(n, I, n) && !divides_other(n, J, -1)) out.I.insert(n);
  for (auto m : J)
    if (!divides_other(m, J, m)) out.J.insert(m);
  return out;
}

ReducedPair make_pair_checked(const IndexSet& I, const IndexSet& J) {
  check_positive(I, J);
  if (!is_reduced(I, J)) throw PairError("pair " + format_pair({I, J}) + " is not reduced");
  return {I, J};
}

bool contains_chain(const ReducedPair& p, std::int64_t k) {
  auto div = [k](std::int64_t x) { return x % k == 0; };
  return std::any_of(p.I.begin(), p.I.end(), div) || std::any_of(p.J.begin(), p.J.end(), div);
}

bool contains_lex_chain(const ReducedPair& p, std::int64_t k) {
  return std::any_of(p.J.begin(), p.J.end(), [k](std::int64_t x) { return x % k == 0; });
}

bool leq(const ReducedPair& a, const ReducedPair& b) {
  return std::all_of(a.I.begin(), a.I.end(), [&](auto i) { return contains_chain(b, i); }) &&
         std::all_of(a.J.begin(), a.J.end(), [&](auto j) { return contains_lex_chain(b, j); });
}

std::int64_t critical_n(const ReducedPair& p) {
  if (p.I.empty() && p.J.empty()) throw PairError("I and J cannot both be empty");
  std::int64_t mi = p.I.empty() ? 0 : *p.I.rbegin();
  std::int64_t mj = p.J.empty() ? 0 : *p.J.rbegin();
  return std::max(mi, mj + 1);
}

IndexSet divisors(std::int64_t n) {
  IndexSet out;
  for (std::int64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.insert(d);
      out.insert(n / d);
    }
  return out;
}

IndexSet divisors(const IndexSet& s) {
  IndexSet out;
  for (auto n : s) out.merge(divisors(n));
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

IndexSet primes_in(const IndexSet& s) {
  IndexSet out;
  for (auto x : s)
    if (is_prime(x)) out.insert(x);
  return out;
}

std::int64_t lcm_of(const ReducedPair& p) {
  std::int64_t l = 1;
  for (const auto* s : {&p.I, &p.J})
    for (auto x : *s) l = std::lcm(l, x);
  return l;
}

DivSets div_sets(const ReducedPair& p) {
  if (p.I.empty() && p.J.empty()) throw PairError("I and J cannot both be empty");
  DivSets d;
  d.div_I = divisors(p.I);
  d.div_J = divisors(p.J);
  for (auto x : primes_in(d.div_J))
    if (!d.div_I.count(x)) d.q_primes.insert(x);
  d.u_primes = primes_in(d.div_I);
  for (auto q : d.u_primes)
    for (auto n : p.I)
      if (n % q == 0) d.I_q[q].insert(n);
  return d;
}

IndexSet parse_index_set(std::string_view text) {
  IndexSet out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view piece = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
    if (!piece.empty()) {
      std::int64_t v = 0;
      auto [p, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
      if (ec != std::errc() || p != piece.data() + piece.size())
        throw PairError("bad index '" + std::string(piece) + "'");
      if (v < 1) throw PairError("indices must be positive integers");
      out.insert(v);
    } else if (comma != std::string_view::npos) {
      throw PairError("empty entry in index list '" + std::string(text) + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_index_set(const IndexSet& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) {
    if (it != s.begin()) out += ",";
    out += std::to_string(*it);
  }
  return out + "}";
}

std::string format_pair(const ReducedPair& p) {
  return "(" + format_index_set(p.I) + "," + format_index_set(p.J) + ")";
}

std::vector<ReducedPair> reduced_pairs_up_to(std::int64_t m) {
  std::vector<ReducedPair> out;
  const std::int64_t count = m;
  // each index in 1..m is absent, in I, or in J
  std::int64_t total = 1;
  for (std::int64_t i = 0; i < count; ++i) total *= 3;
  for (std::int64_t code = 0; code < total; ++code) {
    IndexSet I, J;
    std::int64_t c = code;
    for (std::int64_t k = 1; k <= count; ++k, c /= 3) {
      if (c % 3 == 1) I.insert(k);
      if (c % 3 == 2) J.insert(k);
    }
    if ((I.empty() && J.empty()) || !is_reduced(I, J)) continue;
    out.push_back({I, J});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lukadmit
