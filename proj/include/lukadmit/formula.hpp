#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lukadmit {

/// Connectives of the formula language. Zero, Neg and Oplus (plus Var) form
/// the core signature; everything else is sugar that normalize() expands.
enum class Op : std::uint8_t {
  Zero,
  One,
  Var,
  Neg,
  Oplus,
  Odot,
  Imp,
  Join,
  Meet,
  Iff,
  Mult,  // n.x
  Pow,   // x^n
};

bool is_binary(Op op);
bool is_core(Op op);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);

  /// 1-based character column of the offending token.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Immutable formula tree with shared subterms. Copies are cheap.
class Formula {
 public:
  struct Node;

  static Formula zero();
  static Formula one();
  static Formula var(std::string name);

  Op op() const;
  /// Variable name; empty for non-variables.
  const std::string& name() const;
  /// Multiplier of Mult or exponent of Pow; 0 otherwise.
  std::uint32_t count() const;
  /// First operand (Neg, Mult, Pow and binaries).
  const Formula& lhs() const;
  /// Second operand of binaries.
  const Formula& rhs() const;

  std::size_t hash() const;
  const Node* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  friend Formula make_node(Op, std::string, std::uint32_t, const Formula*, const Formula*);
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Op op;
  std::uint32_t count = 0;
  std::string name;
  std::vector<Formula> args;
  std::size_t hash = 0;
};

Formula neg(Formula a);
Formula oplus(Formula a, Formula b);
Formula odot(Formula a, Formula b);
Formula imp(Formula a, Formula b);
Formula join(Formula a, Formula b);
Formula meet(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula mult(std::uint32_t n, Formula a);
Formula pow(Formula a, std::uint32_t n);

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

using Substitution = std::map<std::string, Formula>;

/// Simultaneous substitution; variables outside the map are kept.
Formula substitute(const Formula& f, const Substitution& sigma);

/// Rewrites every sugar node into {0, ~, +, variables}.
Formula normalize(const Formula& f);
bool is_normalized(const Formula& f);

/// Number of nodes of the formula tree (shared subterms counted per use).
std::size_t size(const Formula& f);
/// Leaves have depth 0.
std::size_t depth(const Formula& f);
std::set<std::string> variables(const Formula& f);

Formula parse_formula(std::string_view text);
std::string print_formula(const Formula& f);

/// Single-conclusion rule premises / conclusion.
struct Rule {
  std::vector<Formula> premises;
  Formula conclusion = Formula::zero();

  friend bool operator==(const Rule&, const Rule&) = default;
};

Rule parse_rule(std::string_view text);
std::string print_rule(const Rule& r);
std::set<std::string> variables(const Rule& r);
Rule substitute(const Rule& r, const Substitution& sigma);

}  // namespace lukadmit
