#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lukadmit/chain.hpp"

namespace lukadmit {

/// Thrown when a row-count or node-count guard trips.
class ResourceExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// coeffs . x + constant >= 0
struct LinearConstraint {
  std::vector<BigInt> coeffs;
  BigInt constant;

  bool operator==(const LinearConstraint&) const = default;
};

struct LinearLimits {
  std::size_t max_rows = 4000;
  std::size_t max_search_nodes = 200000;
};

/// Integer-coefficient inequality system over integer unknowns x_0..x_{n-1}.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const { return nvars_; }
  const std::vector<LinearConstraint>& rows() const { return rows_; }

  void add_ge(std::vector<BigInt> coeffs, BigInt constant);
  void add_eq(const std::vector<BigInt>& coeffs, const BigInt& constant);
  void pop() { rows_.pop_back(); }
  std::size_t size() const { return rows_.size(); }
  void truncate(std::size_t n) { rows_.resize(n); }

  bool satisfied_by(const std::vector<BigInt>& x) const;

 private:
  std::size_t nvars_;
  std::vector<LinearConstraint> rows_;
};

/// Divides a row by the gcd of its coefficients and rounds the constant down,
/// which keeps every integer solution. Returns false for a violated constant row.
bool tighten(LinearConstraint& row);

/// Fourier-Motzkin with per-row tightening. A false answer proves that no
/// integer point exists; true means the tightened rational shadow is nonempty.
bool shadow_feasible(const LinearSystem& sys, const LinearLimits& limits = {});

/// Range [lo, hi] of x_var over the tightened shadow; nullopt bounds are infinite.
struct IntegerRange {
  bool empty = false;
  std::optional<BigInt> lo, hi;
};
IntegerRange project_onto(const LinearSystem& sys, std::size_t var,
                          const LinearLimits& limits = {});

/// Bound M such that a nonempty integer hull meets the box |x_i| <= M.
BigInt small_solution_bound(const LinearSystem& sys);

/// Complete search for an integer point. nullopt: none exists. Throws
/// ResourceExceeded when the search node budget runs out.
std::optional<std::vector<BigInt>> integer_point(const LinearSystem& sys,
                                                 const LinearLimits& limits = {});

}  // namespace lukadmit
