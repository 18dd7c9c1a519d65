#include "lukadmit/algebra.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "json.hpp"
#include "lukadmit/term_dag.hpp"
#include "lukadmit/version.hpp"

namespace lukadmit {

using Element = TableAlgebra::Element;

TableAlgebra::TableAlgebra(std::size_t size, std::vector<Element> plus, std::vector<Element> negation,
                           Element zero)
    : n_(size), plus_(std::move(plus)), neg_(std::move(negation)), zero_(zero) {
  if (n_ == 0) throw AlgebraError("empty carrier");
  if (n_ > max_size) throw AlgebraError("carrier larger than " + std::to_string(max_size));
  if (plus_.size() != n_ * n_ || neg_.size() != n_) throw AlgebraError("table shape mismatch");
  const auto N = static_cast<Element>(n_);
  auto in = [N](Element e) { return 0 <= e && e < N; };
  if (!in(zero_)) throw AlgebraError("zero outside carrier");
  for (auto e : plus_)
    if (!in(e)) throw AlgebraError("oplus table leaves the carrier");
  for (auto e : neg_)
    if (!in(e)) throw AlgebraError("neg table leaves the carrier");
  const Element one = top();
  for (Element x = 0; x < N; ++x) {
    if (oplus(x, zero_) != x) throw AlgebraError("MV3 fails: x + 0 != x");
    if (neg(neg(x)) != x) throw AlgebraError("MV4 fails: ~~x != x");
    if (oplus(x, one) != one) throw AlgebraError("MV5 fails: x + ~0 != ~0");
    for (Element y = 0; y < N; ++y) {
      if (oplus(x, y) != oplus(y, x)) throw AlgebraError("MV2 fails: + not commutative");
      if (oplus(neg(oplus(neg(x), y)), y) != oplus(neg(oplus(neg(y), x)), x))
        throw AlgebraError("MV6 fails");
      for (Element z = 0; z < N; ++z)
        if (oplus(oplus(x, y), z) != oplus(x, oplus(y, z)))
          throw AlgebraError("MV1 fails: + not associative");
    }
  }
}

TableAlgebra TableAlgebra::chain(std::int64_t n) { return product(std::vector<std::int64_t>{n}); }

TableAlgebra TableAlgebra::product(const std::vector<std::int64_t>& ns) {
  if (ns.empty()) throw AlgebraError("product needs a factor");
  std::size_t size = 1;
  for (auto n : ns) {
    if (n < 1) throw AlgebraError("chain L_n needs n >= 1");
    size *= static_cast<std::size_t>(n + 1);
    if (size > max_size) throw AlgebraError("carrier larger than " + std::to_string(max_size));
  }
  auto digits = [&](std::size_t x) {
    std::vector<std::int64_t> d(ns.size());
    for (std::size_t i = ns.size(); i-- > 0;) {
      d[i] = static_cast<std::int64_t>(x % static_cast<std::size_t>(ns[i] + 1));
      x /= static_cast<std::size_t>(ns[i] + 1);
    }
    return d;
  };
  auto index = [&](const std::vector<std::int64_t>& d) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) x = x * static_cast<std::size_t>(ns[i] + 1) + d[i];
    return static_cast<Element>(x);
  };
  std::vector<Element> plus(size * size), neg(size);
  for (std::size_t x = 0; x < size; ++x) {
    auto dx = digits(x);
    std::vector<std::int64_t> nx(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) nx[i] = ns[i] - dx[i];
    neg[x] = index(nx);
    for (std::size_t y = 0; y < size; ++y) {
      auto dy = digits(y);
      std::vector<std::int64_t> s(ns.size());
      for (std::size_t i = 0; i < ns.size(); ++i) s[i] = std::min(ns[i], dx[i] + dy[i]);
      plus[x * size + y] = index(s);
    }
  }
  return TableAlgebra(size, std::move(plus), std::move(neg), 0);
}

TableAlgebra TableAlgebra::product(const TableAlgebra& a, const TableAlgebra& b) {
  const std::size_t na = a.size(), nb = b.size(), size = na * nb;
  if (size > max_size) throw AlgebraError("carrier larger than " + std::to_string(max_size));
  auto idx = [nb](std::size_t x, std::size_t y) { return static_cast<Element>(x * nb + y); };
  std::vector<Element> plus(size * size), neg(size);
  for (std::size_t x = 0; x < size; ++x) {
    auto xa = static_cast<Element>(x / nb), xb = static_cast<Element>(x % nb);
    neg[x] = idx(a.neg(xa), b.neg(xb));
    for (std::size_t y = 0; y < size; ++y) {
      auto ya = static_cast<Element>(y / nb), yb = static_cast<Element>(y % nb);
      plus[x * size + y] = idx(a.oplus(xa, ya), b.oplus(xb, yb));
    }
  }
  return TableAlgebra(size, std::move(plus), std::move(neg), idx(a.zero(), b.zero()));
}

Element TableAlgebra::mult(std::uint32_t k, Element x) const {
  Element acc = zero_;
  for (std::uint32_t i = 0; i < k && acc != top(); ++i) acc = oplus(acc, x);
  return acc;
}

Element TableAlgebra::pow(Element x, std::uint32_t k) const {
  return neg(mult(k, neg(x)));
}

bool TableAlgebra::is_chain() const {
  const auto N = static_cast<Element>(n_);
  for (Element x = 0; x < N; ++x)
    for (Element y = x + 1; y < N; ++y)
      if (!leq(x, y) && !leq(y, x)) return false;
  return true;
}

std::int32_t eval(const Formula& f, const std::map<std::string, std::int32_t>& env,
                  const TableAlgebra& alg) {
  auto vs = variables(f);
  std::vector<std::string> names(vs.begin(), vs.end());
  std::vector<Element> vals;
  for (const auto& n : names) {
    auto it = env.find(n);
    if (it == env.end()) throw std::out_of_range("unassigned variable " + n);
    if (it->second < 0 || static_cast<std::size_t>(it->second) >= alg.size())
      throw std::out_of_range("value outside the carrier for " + n);
    vals.push_back(it->second);
  }
  TermDag dag(names);
  auto root = dag.add(f);
  return evaluate(dag, alg, std::span<const Element>(vals))[static_cast<std::size_t>(root)];
}

// ---------------------------------------------------------------- ideals

bool is_ideal(const TableAlgebra& a, const std::vector<Element>& s) {
  std::vector<bool> in(a.size(), false);
  for (auto x : s) {
    if (x < 0 || static_cast<std::size_t>(x) >= a.size()) return false;
    in[x] = true;
  }
  if (!in[a.zero()]) return false;
  const auto N = static_cast<Element>(a.size());
  for (Element x = 0; x < N; ++x) {
    if (!in[x]) continue;
    for (Element y = 0; y < N; ++y) {
      if (in[y] && !in[a.oplus(x, y)]) return false;
      if (!in[y] && a.leq(y, x)) return false;
    }
  }
  return true;
}

TableAlgebra quotient(const TableAlgebra& a, const std::vector<Element>& ideal) {
  if (!is_ideal(a, ideal)) throw AlgebraError("quotient needs an ideal");
  std::vector<bool> in(a.size(), false);
  for (auto x : ideal) in[x] = true;
  const auto N = static_cast<Element>(a.size());
  std::vector<Element> cls(a.size(), -1), rep;
  for (Element x = 0; x < N; ++x) {
    if (cls[x] >= 0) continue;
    auto c = static_cast<Element>(rep.size());
    rep.push_back(x);
    for (Element y = x; y < N; ++y)
      if (cls[y] < 0 && in[a.distance(x, y)]) cls[y] = c;
  }
  const std::size_t m = rep.size();
  std::vector<Element> plus(m * m), neg(m);
  for (std::size_t i = 0; i < m; ++i) {
    neg[i] = cls[a.neg(rep[i])];
    for (std::size_t j = 0; j < m; ++j) plus[i * m + j] = cls[a.oplus(rep[i], rep[j])];
  }
  return TableAlgebra(m, std::move(plus), std::move(neg), cls[a.zero()]);
}

namespace {

// Every ideal of a finite MV-algebra is principal: the down-set of a
// multiple of one element.
std::vector<std::vector<Element>> all_ideals(const TableAlgebra& a) {
  std::set<std::vector<Element>> seen;
  const auto N = static_cast<Element>(a.size());
  for (Element g = 0; g < N; ++g) {
    Element s = a.mult(static_cast<std::uint32_t>(a.size()), g);
    std::vector<Element> down;
    for (Element x = 0; x < N; ++x)
      if (a.leq(x, s)) down.push_back(x);
    seen.insert(std::move(down));
  }
  std::vector<std::vector<Element>> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& u, const auto& v) { return u.size() < v.size(); });
  return out;
}

}  // namespace

std::vector<Ideal> ideals(const TableAlgebra& a) {
  std::vector<Ideal> out;
  for (auto& members : all_ideals(a)) {
    Ideal id{std::move(members)};
    if (id.members.size() < a.size()) {
      TableAlgebra q = quotient(a, id.members);
      id.prime = q.is_chain();
      id.maximal = all_ideals(q).size() == 2;
    }
    out.push_back(std::move(id));
  }
  return out;
}

std::vector<Ideal> spectrum(const TableAlgebra& a) {
  std::vector<Ideal> out;
  for (auto& id : ideals(a))
    if (id.prime) out.push_back(std::move(id));
  return out;
}

bool is_bipartite(const TableAlgebra& a) {
  for (const auto& members : all_ideals(a))
    if (members.size() < a.size() && quotient(a, members).size() == 2) return true;
  return false;
}

// ---------------------------------------------------------------- subalgebras

std::vector<Element> generated_subalgebra(const TableAlgebra& a,
                                          const std::vector<Element>& generators) {
  std::vector<bool> in(a.size(), false);
  std::vector<Element> elems;
  auto add = [&](Element x) {
    if (!in[x]) {
      in[x] = true;
      elems.push_back(x);
    }
  };
  add(a.zero());
  for (auto g : generators) {
    if (g < 0 || static_cast<std::size_t>(g) >= a.size())
      throw AlgebraError("generator outside the carrier");
    add(g);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    Element x = elems[i];
    add(a.neg(x));
    for (std::size_t j = 0; j <= i; ++j) add(a.oplus(x, elems[j]));
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

TableAlgebra subalgebra(const TableAlgebra& a, const std::vector<Element>& elems) {
  std::vector<Element> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Element> pos(a.size(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || static_cast<std::size_t>(sorted[i]) >= a.size())
      throw AlgebraError("element outside the carrier");
    pos[sorted[i]] = static_cast<Element>(i);
  }
  const std::size_t m = sorted.size();
  auto at = [&](Element x) {
    if (pos[x] < 0) throw AlgebraError("subset is not closed under the operations");
    return pos[x];
  };
  std::vector<Element> plus(m * m), neg(m);
  for (std::size_t i = 0; i < m; ++i) {
    neg[i] = at(a.neg(sorted[i]));
    for (std::size_t j = 0; j < m; ++j) plus[i * m + j] = at(a.oplus(sorted[i], sorted[j]));
  }
  return TableAlgebra(m, std::move(plus), std::move(neg), at(a.zero()));
}

// ---------------------------------------------------------------- homomorphisms

namespace {

std::vector<Element> generating_set(const TableAlgebra& a) {
  std::vector<Element> gens;
  std::vector<Element> closure = generated_subalgebra(a, gens);
  const auto N = static_cast<Element>(a.size());
  for (Element x = 0; x < N && closure.size() < a.size(); ++x) {
    if (std::binary_search(closure.begin(), closure.end(), x)) continue;
    gens.push_back(x);
    closure = generated_subalgebra(a, gens);
  }
  return gens;
}

// Extends gens -> vals to a homomorphism, if consistent.
std::optional<std::vector<Element>> extend(const TableAlgebra& a, const TableAlgebra& b,
                                           const std::vector<Element>& gens,
                                           const std::vector<Element>& vals) {
  std::vector<Element> h(a.size(), -1);
  std::vector<Element> done;
  std::deque<Element> todo;
  auto set = [&](Element x, Element v) {
    if (h[x] < 0) {
      h[x] = v;
      todo.push_back(x);
      return true;
    }
    return h[x] == v;
  };
  if (!set(a.zero(), b.zero())) return std::nullopt;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!set(gens[i], vals[i])) return std::nullopt;
  while (!todo.empty()) {
    Element x = todo.front();
    todo.pop_front();
    done.push_back(x);
    if (!set(a.neg(x), b.neg(h[x]))) return std::nullopt;
    for (Element y : done) {
      if (!set(a.oplus(x, y), b.oplus(h[x], h[y]))) return std::nullopt;
    }
  }
  return h;
}

}  // namespace

std::vector<std::vector<Element>> homomorphisms(const TableAlgebra& a, const TableAlgebra& b) {
  std::vector<Element> gens = generating_set(a);
  std::vector<std::vector<Element>> out;
  std::vector<Element> vals(gens.size(), 0);
  const auto M = static_cast<Element>(b.size());
  for (;;) {
    if (auto h = extend(a, b, gens, vals)) out.push_back(std::move(*h));
    std::size_t i = 0;
    while (i < vals.size() && ++vals[i] == M) vals[i++] = 0;
    if (i == vals.size()) break;
  }
  return out;
}

bool isomorphic(const TableAlgebra& a, const TableAlgebra& b) {
  if (a.size() != b.size()) return false;
  for (const auto& h : homomorphisms(a, b)) {
    std::vector<Element> img = h;
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) == img.end()) return true;
  }
  return false;
}

bool in_isp(const TableAlgebra& a, const std::vector<TableAlgebra>& gens) {
  const std::size_t n = a.size();
  std::vector<bool> separated(n * n, false);
  std::size_t missing = n * (n - 1) / 2;
  for (const auto& g : gens) {
    for (const auto& h : homomorphisms(a, g)) {
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
          if (!separated[x * n + y] && h[x] != h[y]) {
            separated[x * n + y] = true;
            --missing;
          }
      if (missing == 0) return true;
    }
  }
  return missing == 0;
}

// ---------------------------------------------------------------- JSON

std::string algebra_to_json(const TableAlgebra& a) {
  nlohmann::ordered_json j;
  j["version"] = json_schema_version;
  j["size"] = a.size();
  j["zero"] = a.zero();
  j["oplus"] = a.oplus_table();
  j["neg"] = a.neg_table();
  return j.dump();
}

TableAlgebra algebra_from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    return TableAlgebra(j.at("size").get<std::size_t>(), j.at("oplus").get<std::vector<Element>>(),
                        j.at("neg").get<std::vector<Element>>(), j.at("zero").get<Element>());
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraError(std::string("bad algebra JSON: ") + e.what());
  }
}

}  // namespace lukadmit
