#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lukadmit/formula.hpp"

namespace lukadmit {

using Rational = boost::multiprecision::cpp_rational;

class PLError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PLPoint {
  Rational x;
  Rational y;

  bool operator==(const PLPoint&) const = default;
};

/// Continuous piecewise-linear [0,1] -> [0,1] with integer slope and
/// intercept on every piece. Stored as canonical breakpoints: collinear
/// neighbours are merged.
class PLFunc {
 public:
  /// Validates the McNaughton conditions; throws PLError.
  explicit PLFunc(std::vector<PLPoint> points);

  static PLFunc constant(const Rational& c);
  static PLFunc identity();

  const std::vector<PLPoint>& points() const { return pts_; }
  Rational operator()(const Rational& x) const;
  bool is_constant_one() const;

  bool operator==(const PLFunc&) const = default;

 private:
  struct Unchecked {};
  PLFunc(std::vector<PLPoint> points, Unchecked);
  friend struct PLBuilder;

  std::vector<PLPoint> pts_;
};

/// The function of a term in at most one variable.
PLFunc term_to_pl(const Formula& f);

/// A term in `var` whose function is exactly g.
Formula synthesize(const PLFunc& g, const std::string& var = "x");

/// clamp(m x - k) as a small term in `var`.
Formula clamp_term(std::int64_t m, std::int64_t k, const std::string& var = "x");

/// {k : g(t/k) = 1 for all t}, or everything.
struct Spectrum {
  bool all = false;
  std::set<std::int64_t> ks;

  bool operator==(const Spectrum&) const = default;
};
std::string format_spectrum(const Spectrum& s);

Spectrum valid_chains(const PLFunc& g);
/// {k : g = 1 is valid in L_k^omega}: g must be 1 on a neighbourhood of every
/// t/k inside [0,1].
Spectrum valid_lex_chains(const PLFunc& g);

/// [[xnum, xden, ynum, yden], ...]
std::string pl_to_json(const PLFunc& g);
PLFunc pl_from_json(const std::string& text);

}  // namespace lukadmit
