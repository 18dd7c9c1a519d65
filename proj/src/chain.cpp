#include "lukadmit/chain.hpp"

#include <charconv>
#include <regex>

#include "lukadmit/term_dag.hpp"

namespace lukadmit {

FiniteChain::FiniteChain(std::int64_t n) : n_(n) {
  if (n_ < 1) throw std::invalid_argument("finite chain needs n >= 1");
}

ProductAlgebra::ProductAlgebra(std::vector<Chain> factors) : factors_(std::move(factors)) {}

namespace {

template <class F>
ProductAlgebra::Element unary_map(const std::vector<Chain>& fs, const ProductAlgebra::Element& x,
                                  F&& f) {
  ProductAlgebra::Element out;
  out.reserve(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    out.push_back(std::visit(
        [&](const auto& c) -> ChainElement {
          using C = std::decay_t<decltype(c)>;
          return f(c, std::get<typename C::Element>(x[i]));
        },
        fs[i]));
  }
  return out;
}

template <class F>
ProductAlgebra::Element binary_map(const std::vector<Chain>& fs, const ProductAlgebra::Element& x,
                                   const ProductAlgebra::Element& y, F&& f) {
  ProductAlgebra::Element out;
  out.reserve(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    out.push_back(std::visit(
        [&](const auto& c) -> ChainElement {
          using C = std::decay_t<decltype(c)>;
          using E = typename C::Element;
          return f(c, std::get<E>(x[i]), std::get<E>(y[i]));
        },
        fs[i]));
  }
  return out;
}

}  // namespace

bool ProductAlgebra::contains(const Element& x) const {
  if (x.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!lukadmit::contains(factors_[i], x[i])) return false;
  return true;
}

ProductAlgebra::Element ProductAlgebra::zero() const {
  Element out;
  for (const auto& c : factors_) out.push_back(lukadmit::zero(c));
  return out;
}

ProductAlgebra::Element ProductAlgebra::top() const {
  Element out;
  for (const auto& c : factors_) out.push_back(lukadmit::top(c));
  return out;
}

ProductAlgebra::Element ProductAlgebra::neg(const Element& x) const {
  return unary_map(factors_, x, [](const auto& c, const auto& a) { return c.neg(a); });
}

#define LUKADMIT_PRODUCT_BINARY(NAME)                                                    \
  ProductAlgebra::Element ProductAlgebra::NAME(const Element& x, const Element& y) const { \
    return binary_map(factors_, x, y,                                                    \
                      [](const auto& c, const auto& a, const auto& b) { return c.NAME(a, b); }); \
  }

LUKADMIT_PRODUCT_BINARY(oplus)
LUKADMIT_PRODUCT_BINARY(odot)
LUKADMIT_PRODUCT_BINARY(imp)
LUKADMIT_PRODUCT_BINARY(join)
LUKADMIT_PRODUCT_BINARY(meet)
LUKADMIT_PRODUCT_BINARY(iff)

#undef LUKADMIT_PRODUCT_BINARY

ProductAlgebra::Element ProductAlgebra::mult(std::uint32_t k, const Element& x) const {
  return unary_map(factors_, x, [k](const auto& c, const auto& a) { return c.mult(k, a); });
}

ProductAlgebra::Element ProductAlgebra::pow(const Element& x, std::uint32_t k) const {
  return unary_map(factors_, x, [k](const auto& c, const auto& a) { return c.pow(a, k); });
}

namespace {

template <class Alg>
typename Alg::Element eval_in(const Formula& f, const Assignment<Alg>& env, const Alg& alg) {
  TermDag dag;
  std::int32_t root = dag.add(f);
  std::vector<typename Alg::Element> vals;
  for (const auto& name : dag.variables()) {
    auto it = env.find(name);
    if (it == env.end()) throw EvalError("unbound variable '" + name + "'");
    if (!alg.contains(it->second)) throw EvalError("value of '" + name + "' is outside the carrier");
    vals.push_back(it->second);
  }
  auto out = evaluate(dag, alg, std::span<const typename Alg::Element>(vals));
  return out[static_cast<std::size_t>(root)];
}

}  // namespace

std::int64_t eval(const Formula& f, const Assignment<FiniteChain>& env, const FiniteChain& alg) {
  return eval_in(f, env, alg);
}

LexElem eval(const Formula& f, const Assignment<LexChain>& env, const LexChain& alg) {
  return eval_in(f, env, alg);
}

ProductAlgebra::Element eval(const Formula& f, const Assignment<ProductAlgebra>& env,
                             const ProductAlgebra& alg) {
  return eval_in(f, env, alg);
}

ChainElement eval(const Formula& f, const std::map<std::string, ChainElement>& env,
                  const Chain& alg) {
  return std::visit(
      [&](const auto& c) -> ChainElement {
        using C = std::decay_t<decltype(c)>;
        Assignment<C> typed;
        for (const auto& [k, v] : env) {
          auto* e = std::get_if<typename C::Element>(&v);
          if (!e) throw EvalError("value of '" + k + "' has the wrong element kind");
          typed.emplace(k, *e);
        }
        return eval(f, typed, c);
      },
      alg);
}

bool coradical_member(std::int64_t x, const FiniteChain& c) {
  if (!c.contains(x)) throw EvalError("element outside the carrier");
  return x == c.n();
}

bool coradical_member(const LexElem& x, const LexChain& c) {
  if (!c.contains(x)) throw EvalError("element outside the carrier");
  // (a,b)^k = max(0, k(a,b) - (k-1)(n,s)); with a < n the first coordinate
  // falls below 0 once k > n, with a = n it stays n.
  return x.a == c.n();
}

bool coradical_member(const ChainElement& x, const Chain& c) {
  return std::visit(
      [&](const auto& ch) {
        using C = std::decay_t<decltype(ch)>;
        auto* e = std::get_if<typename C::Element>(&x);
        if (!e) throw EvalError("element kind does not match the chain");
        return coradical_member(*e, ch);
      },
      c);
}

std::function<bool(const ChainElement&)> radical_ideal(const Chain& c) {
  return [c](const ChainElement& x) {
    if (!contains(c, x)) throw EvalError("element outside the carrier");
    if (auto* k = std::get_if<std::int64_t>(&x)) return *k == 0;
    return std::get<LexElem>(x).a == 0;
  };
}

bool contains(const Chain& c, const ChainElement& x) {
  return std::visit(
      [&](const auto& ch) {
        using C = std::decay_t<decltype(ch)>;
        auto* e = std::get_if<typename C::Element>(&x);
        return e != nullptr && ch.contains(*e);
      },
      c);
}

ChainElement top(const Chain& c) {
  return std::visit([](const auto& ch) -> ChainElement { return ch.top(); }, c);
}

ChainElement zero(const Chain& c) {
  return std::visit([](const auto& ch) -> ChainElement { return ch.zero(); }, c);
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

std::int64_t to_i64(const std::string& s, const char* what) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
  return v;
}

BigInt to_big(const std::string& s, const char* what) {
  static const std::regex int_re("[-+]?[0-9]+");
  if (!std::regex_match(s, int_re))
    throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
  return BigInt(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Chain parse_chain(std::string_view text) {
  static const std::regex fin("L\\(([0-9]+)\\)");
  static const std::regex lex("Lex\\(([0-9]+),([-+]?[0-9]+)\\)");
  std::string s = strip(text);
  std::smatch m;
  if (std::regex_match(s, m, fin)) return FiniteChain(to_i64(m[1], "chain size"));
  if (std::regex_match(s, m, lex)) return LexChain(to_i64(m[1], "chain size"), to_big(m[2], "unit"));
  throw std::invalid_argument("unknown algebra '" + std::string(text) +
                              "' (expected L(n) or Lex(n,s))");
}

std::string format_chain(const Chain& c) {
  if (auto* f = std::get_if<FiniteChain>(&c)) return "L(" + std::to_string(f->n()) + ")";
  const auto& l = std::get<LexChain>(c);
  return "Lex(" + std::to_string(l.n()) + "," + l.s().str() + ")";
}

ChainElement parse_element(std::string_view text, const Chain& c) {
  static const std::regex fin("([0-9]+)(?:/([0-9]+))?");
  static const std::regex lex("\\(([0-9]+),([-+]?[0-9]+)\\)(?:@(.*))?");
  std::string s = strip(text);
  std::smatch m;
  ChainElement out;
  if (std::holds_alternative<FiniteChain>(c) && std::regex_match(s, m, fin)) {
    const auto& ch = std::get<FiniteChain>(c);
    if (m[2].matched && to_i64(m[2], "denominator") != ch.n())
      throw std::invalid_argument("element '" + s + "' does not belong to " + format_chain(c));
    out = to_i64(m[1], "element");
  } else if (std::holds_alternative<LexChain>(c) && std::regex_match(s, m, lex)) {
    if (m[3].matched && !(parse_chain(m[3].str()) == c))
      throw std::invalid_argument("element '" + s + "' does not belong to " + format_chain(c));
    out = LexElem{to_i64(m[1], "element"), to_big(m[2], "element")};
  } else {
    throw std::invalid_argument("cannot read '" + s + "' as an element of " + format_chain(c));
  }
  if (!contains(c, out))
    throw std::invalid_argument("element '" + s + "' is outside the carrier of " +
                                format_chain(c));
  return out;
}

std::string format_element(const ChainElement& x, const Chain& c) {
  if (auto* k = std::get_if<std::int64_t>(&x))
    return std::to_string(*k) + "/" + std::to_string(std::get<FiniteChain>(c).n());
  const auto& e = std::get<LexElem>(x);
  return "(" + std::to_string(e.a) + "," + e.b.str() + ")@" + format_chain(c);
}

std::string format_element(const ProductAlgebra::Element& x, const ProductAlgebra& alg) {
  std::string out = "<";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += format_element(x[i], alg.factors()[i]);
  }
  return out + ">";
}

}  // namespace lukadmit
