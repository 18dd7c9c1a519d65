#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lukadmit/formula.hpp"

namespace lukadmit {

using BigInt = boost::multiprecision::cpp_int;

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// L_n = Gamma(Z, n): elements 0..n, k standing for k/n.
class FiniteChain {
 public:
  using Element = std::int64_t;

  explicit FiniteChain(std::int64_t n);

  std::int64_t n() const { return n_; }
  bool contains(Element x) const { return 0 <= x && x <= n_; }

  Element zero() const { return 0; }
  Element top() const { return n_; }
  Element neg(Element x) const { return n_ - x; }
  Element oplus(Element x, Element y) const { return std::min(n_, x + y); }
  Element odot(Element x, Element y) const { return std::max<Element>(0, x + y - n_); }
  Element imp(Element x, Element y) const { return std::min(n_, n_ - x + y); }
  Element join(Element x, Element y) const { return std::max(x, y); }
  Element meet(Element x, Element y) const { return std::min(x, y); }
  Element iff(Element x, Element y) const { return n_ - (x > y ? x - y : y - x); }
  Element mult(std::uint32_t k, Element x) const {
    return std::min<Element>(n_, static_cast<Element>(k) * x);
  }
  Element pow(Element x, std::uint32_t k) const {
    const Element kk = k;
    return std::max<Element>(0, kk * x - (kk - 1) * n_);
  }

  friend bool operator==(const FiniteChain&, const FiniteChain&) = default;

 private:
  std::int64_t n_;
};

/// Element (a, b) of Z x_lex Z.
template <class Int>
struct BasicLexElem {
  std::int64_t a = 0;
  Int b = 0;

  friend bool operator==(const BasicLexElem&, const BasicLexElem&) = default;
  friend std::strong_ordering operator<=>(const BasicLexElem& x, const BasicLexElem& y) {
    if (x.a != y.a) return x.a <=> y.a;
    if (x.b < y.b) return std::strong_ordering::less;
    if (y.b < x.b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

using LexElem = BasicLexElem<BigInt>;

/// L_n^s = Gamma(Z x_lex Z, (n, s)). L_n^omega is s = 0. Any s >= 0 is
/// accepted; (n, s) is a strong unit for every s.
template <class Int>
class BasicLexChain {
 public:
  using Element = BasicLexElem<Int>;

  BasicLexChain(std::int64_t n, Int s) : n_(n), s_(std::move(s)) {
    if (n_ < 1) throw std::invalid_argument("lex chain needs n >= 1");
    if (s_ < 0) throw std::invalid_argument("lex chain needs s >= 0");
  }

  std::int64_t n() const { return n_; }
  const Int& s() const { return s_; }

  bool contains(const Element& x) const {
    if (x.a < 0 || x.a > n_) return false;
    if (x.a == 0 && x.b < 0) return false;
    if (x.a == n_ && x.b > s_) return false;
    return true;
  }

  Element zero() const { return {0, Int(0)}; }
  Element top() const { return {n_, s_}; }
  Element neg(const Element& x) const { return {n_ - x.a, s_ - x.b}; }
  Element oplus(const Element& x, const Element& y) const { return cap(add(x, y)); }
  Element odot(const Element& x, const Element& y) const {
    return floor0(sub(add(x, y), top()));
  }
  Element imp(const Element& x, const Element& y) const {
    return cap(add(sub(top(), x), y));
  }
  Element join(const Element& x, const Element& y) const { return x < y ? y : x; }
  Element meet(const Element& x, const Element& y) const { return y < x ? y : x; }
  Element iff(const Element& x, const Element& y) const {
    return x < y ? sub(top(), sub(y, x)) : sub(top(), sub(x, y));
  }
  Element mult(std::uint32_t k, const Element& x) const { return cap(scale(k, x)); }
  Element pow(const Element& x, std::uint32_t k) const {
    if (k == 0) return top();
    return floor0(sub(scale(k, x), scale(k - 1, top())));
  }

  friend bool operator==(const BasicLexChain&, const BasicLexChain&) = default;

 private:
  static Element add(const Element& x, const Element& y) { return {x.a + y.a, x.b + y.b}; }
  static Element sub(const Element& x, const Element& y) { return {x.a - y.a, x.b - y.b}; }
  static Element scale(std::uint32_t k, const Element& x) {
    return {static_cast<std::int64_t>(k) * x.a, Int(k) * x.b};
  }
  Element cap(const Element& x) const {
    Element u = top();
    return u < x ? u : x;
  }
  Element floor0(const Element& x) const {
    Element z = zero();
    return x < z ? z : x;
  }

  std::int64_t n_;
  Int s_;
};

using LexChain = BasicLexChain<BigInt>;

using Chain = std::variant<FiniteChain, LexChain>;
using ChainElement = std::variant<std::int64_t, LexElem>;

/// Finite direct product of chains; operations are componentwise.
class ProductAlgebra {
 public:
  using Element = std::vector<ChainElement>;

  explicit ProductAlgebra(std::vector<Chain> factors);

  const std::vector<Chain>& factors() const { return factors_; }
  bool contains(const Element& x) const;

  Element zero() const;
  Element top() const;
  Element neg(const Element& x) const;
  Element oplus(const Element& x, const Element& y) const;
  Element odot(const Element& x, const Element& y) const;
  Element imp(const Element& x, const Element& y) const;
  Element join(const Element& x, const Element& y) const;
  Element meet(const Element& x, const Element& y) const;
  Element iff(const Element& x, const Element& y) const;
  Element mult(std::uint32_t k, const Element& x) const;
  Element pow(const Element& x, std::uint32_t k) const;

 private:
  std::vector<Chain> factors_;
};

template <class Alg>
using Assignment = std::map<std::string, typename Alg::Element>;

std::int64_t eval(const Formula& f, const Assignment<FiniteChain>& env, const FiniteChain& alg);
LexElem eval(const Formula& f, const Assignment<LexChain>& env, const LexChain& alg);
ProductAlgebra::Element eval(const Formula& f, const Assignment<ProductAlgebra>& env,
                             const ProductAlgebra& alg);
ChainElement eval(const Formula& f, const std::map<std::string, ChainElement>& env,
                  const Chain& alg);

/// x^k != 0 for every k > 0.
bool coradical_member(std::int64_t x, const FiniteChain& c);
bool coradical_member(const LexElem& x, const LexChain& c);
bool coradical_member(const ChainElement& x, const Chain& c);

/// The unique maximal ideal of the chain: {0} for L_n, {(0,b) : b >= 0} for L_n^s.
std::function<bool(const ChainElement&)> radical_ideal(const Chain& c);

bool contains(const Chain& c, const ChainElement& x);
ChainElement top(const Chain& c);
ChainElement zero(const Chain& c);

/// "L(n)" or "Lex(n,s)".
Chain parse_chain(std::string_view text);
std::string format_chain(const Chain& c);

/// Finite chain elements are written k/n, lex elements (a,b)@Lex(n,s).
/// Inside a known chain the bare forms "k" and "(a,b)" are accepted too.
ChainElement parse_element(std::string_view text, const Chain& c);
std::string format_element(const ChainElement& x, const Chain& c);
std::string format_element(const ProductAlgebra::Element& x, const ProductAlgebra& alg);

}  // namespace lukadmit
