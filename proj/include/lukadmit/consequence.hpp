#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lukadmit/chain.hpp"
#include "lukadmit/formula.hpp"
#include "lukadmit/linear.hpp"
#include "lukadmit/variety.hpp"

namespace lukadmit {

struct Equation {
  Formula lhs = Formula::zero();
  Formula rhs = Formula::one();

  bool operator==(const Equation&) const = default;
};

/// s1 = t1 & ... & sk = tk => s = t
struct Quasiequation {
  std::vector<Equation> antecedent;
  Equation consequent;

  bool operator==(const Quasiequation&) const = default;
};

/// Each premise g becomes g = 1, the conclusion f becomes f = 1.
Quasiequation to_quasiequation(const Rule& r);

/// "s = t & u = v => s = t"; "=> s = t" for an empty antecedent.
Quasiequation parse_quasiequation(std::string_view text);
std::string print_quasiequation(const Quasiequation& q);
std::set<std::string> variables(const Quasiequation& q);

enum class Verdict { Valid, Invalid, ResourceExceeded };
const char* to_string(Verdict v);

template <class Elem>
struct Outcome {
  Verdict verdict = Verdict::Valid;
  std::optional<std::map<std::string, Elem>> witness;
  /// Set when the answer came from the bounded fallback search.
  bool bounded_fallback = false;
  std::string note;

  bool valid() const { return verdict == Verdict::Valid; }
  bool invalid() const { return verdict == Verdict::Invalid; }
};

struct EngineLimits {
  /// assignments tried by exhaustive finite search
  std::uint64_t max_assignments = 4826809;  // 13^6
  std::size_t max_branches = 400000;
  LinearLimits linear{};
  /// |b| bound of the fallback enumeration
  std::int64_t fallback_bound = 8;
};

/// True iff every equation holds under the assignment.
template <class Alg>
bool holds(const Equation& e, const Assignment<Alg>& env, const Alg& alg) {
  return eval(e.lhs, env, alg) == eval(e.rhs, env, alg);
}

Outcome<std::int64_t> valid_on_finite_chain(const Quasiequation& q, std::int64_t n,
                                            const EngineLimits& limits = {});
Outcome<LexElem> valid_on_lex_chain(const Quasiequation& q, std::int64_t n, const BigInt& s,
                                    const EngineLimits& limits = {});
Outcome<ChainElement> valid_on_chain(const Quasiequation& q, const Chain& c,
                                     const EngineLimits& limits = {});

/// Assignment making every antecedent equation true, if one exists.
/// Invalid means "satisfiable" with the witness attached.
Outcome<ChainElement> antecedent_unsatisfiable(const Quasiequation& q, const Chain& c,
                                               const EngineLimits& limits = {});

/// Bounded search over lex elements with |b| <= bound. The witness, if any, has
/// the smallest max |b| among all counterexamples.
Outcome<LexElem> bounded_lex_search(const Quasiequation& q, std::int64_t n, std::int64_t s,
                                    std::int64_t bound,
                                    std::uint64_t max_assignments = 200000000);

Outcome<ProductAlgebra::Element> valid_on_product(const Quasiequation& q,
                                                  const std::vector<Chain>& factors,
                                                  const EngineLimits& limits = {});

/// Outcome over a family of chains; `algebra` names the failing member.
struct FamilyOutcome {
  Verdict verdict = Verdict::Valid;
  std::optional<Chain> algebra;
  std::optional<std::map<std::string, ChainElement>> witness;
  bool bounded_fallback = false;
  std::string note;

  bool valid() const { return verdict == Verdict::Valid; }
  bool invalid() const { return verdict == Verdict::Invalid; }
};

FamilyOutcome valid_on_all(const Quasiequation& q, const std::vector<Chain>& family,
                           const EngineLimits& limits = {});

/// L_i for i in I and L_j^omega for j in J.
std::vector<Chain> variety_generators(const ReducedPair& p);
/// L_m for m in I and L_n^1 for n in J.
std::vector<Chain> q1_generators(const ReducedPair& p);

FamilyOutcome derivable(const Rule& r, const ReducedPair& p, const EngineLimits& limits = {});
FamilyOutcome derivable_Q1(const Rule& r, const ReducedPair& p, const EngineLimits& limits = {});

}  // namespace lukadmit
