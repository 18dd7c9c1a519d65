#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lukadmit/formula.hpp"

namespace lukadmit {

class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite MV-algebra given by its oplus and negation tables on 0..size-1.
/// Construction checks MV1-MV6 exhaustively.
class TableAlgebra {
 public:
  using Element = std::int32_t;
  static constexpr std::size_t max_size = 64;

  TableAlgebra(std::size_t size, std::vector<Element> oplus, std::vector<Element> neg,
               Element zero);

  /// L_n: element k is k/n.
  static TableAlgebra chain(std::int64_t n);
  /// L_{n1} x ... x L_{nk}, elements in mixed radix with the first factor most
  /// significant.
  static TableAlgebra product(const std::vector<std::int64_t>& ns);
  static TableAlgebra product(const TableAlgebra& a, const TableAlgebra& b);

  std::size_t size() const { return n_; }
  Element zero() const { return zero_; }
  Element top() const { return neg_[zero_]; }
  Element neg(Element x) const { return neg_[x]; }
  Element oplus(Element x, Element y) const { return plus_[x * n_ + y]; }
  Element odot(Element x, Element y) const { return neg(oplus(neg(x), neg(y))); }
  Element imp(Element x, Element y) const { return oplus(neg(x), y); }
  Element join(Element x, Element y) const { return oplus(neg(oplus(neg(x), y)), y); }
  Element meet(Element x, Element y) const { return neg(join(neg(x), neg(y))); }
  Element iff(Element x, Element y) const { return meet(imp(x, y), imp(y, x)); }
  Element mult(std::uint32_t k, Element x) const;
  Element pow(Element x, std::uint32_t k) const;
  /// natural order
  bool leq(Element x, Element y) const { return imp(x, y) == top(); }
  /// d(x,y) = (x * ~y) + (y * ~x)
  Element distance(Element x, Element y) const {
    return oplus(odot(x, neg(y)), odot(y, neg(x)));
  }
  bool is_chain() const;

  const std::vector<Element>& oplus_table() const { return plus_; }
  const std::vector<Element>& neg_table() const { return neg_; }

  friend bool operator==(const TableAlgebra&, const TableAlgebra&) = default;

 private:
  std::size_t n_;
  std::vector<Element> plus_;
  std::vector<Element> neg_;
  Element zero_;
};

std::int32_t eval(const Formula& f, const std::map<std::string, std::int32_t>& env,
                  const TableAlgebra& alg);

struct Ideal {
  std::vector<TableAlgebra::Element> members;  // sorted
  bool prime = false;
  bool maximal = false;

  bool operator==(const Ideal&) const = default;
};

bool is_ideal(const TableAlgebra& a, const std::vector<TableAlgebra::Element>& s);
/// All ideals, smallest first. Prime: proper with a chain quotient. Maximal:
/// proper with a simple quotient.
std::vector<Ideal> ideals(const TableAlgebra& a);
/// Proper ideals with chain quotients.
std::vector<Ideal> spectrum(const TableAlgebra& a);

/// A/I by x ~ y iff d(x,y) in I. Classes are numbered by smallest member.
TableAlgebra quotient(const TableAlgebra& a, const std::vector<TableAlgebra::Element>& ideal);

/// Some ideal has the two-element quotient.
bool is_bipartite(const TableAlgebra& a);

std::vector<TableAlgebra::Element> generated_subalgebra(
    const TableAlgebra& a, const std::vector<TableAlgebra::Element>& generators);
/// Subalgebra on the given closed set, renumbered in increasing order.
TableAlgebra subalgebra(const TableAlgebra& a, const std::vector<TableAlgebra::Element>& elems);

/// All homomorphisms a -> b, each as the image vector.
std::vector<std::vector<TableAlgebra::Element>> homomorphisms(const TableAlgebra& a,
                                                              const TableAlgebra& b);
bool isomorphic(const TableAlgebra& a, const TableAlgebra& b);

/// a in ISP(gens): homomorphisms into the generators separate points. Exact
/// for a finite list of finite generators.
bool in_isp(const TableAlgebra& a, const std::vector<TableAlgebra>& gens);

/// {"version", "size", "zero", "oplus" (row-major), "neg"}
std::string algebra_to_json(const TableAlgebra& a);
TableAlgebra algebra_from_json(const std::string& text);

}  // namespace lukadmit
