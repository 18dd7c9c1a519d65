#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lukadmit/consequence.hpp"

namespace lukadmit {

class UnifyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Unification {
  bool unifiable = false;
  /// Boolean assignment making every formula 1.
  std::optional<std::map<std::string, bool>> witness;
};

inline constexpr std::size_t max_unify_variables = 20;

/// Decided in the two-element algebra. Throws UnifyError past
/// max_unify_variables variables. The empty set is unifiable.
Unification unifiable(const std::vector<Formula>& gamma);

/// x |-> ~0 for true, x |-> 0 for false.
Substitution boolean_unifier(const std::map<std::string, bool>& witness);

bool passive(const Rule& r);

enum class Admissibility { Passive, Derivable, NotAdmissible, ResourceExceeded };
const char* to_string(Admissibility a);

struct AdmissibilityReport {
  Admissibility verdict = Admissibility::Derivable;
  /// Boolean unifier of the premises, when they have one.
  std::optional<std::map<std::string, bool>> witness;
  /// Countermodel L_1 x C for NOT_ADMISSIBLE, with C a generator of Q^1.
  std::optional<std::vector<Chain>> algebra;
  std::optional<std::map<std::string, ProductAlgebra::Element>> countermodel;
  bool bounded_fallback = false;
  std::string note;

  bool admissible() const {
    return verdict == Admissibility::Passive || verdict == Admissibility::Derivable;
  }
};

/// Passive if the premises have no unifier, else derivable if valid in Q^1,
/// else not admissible.
AdmissibilityReport admissible(const Rule& r, const ReducedPair& p,
                               const EngineLimits& limits = {});

/// L_1 x L_m for m in I and L_1 x L_n^1 for n in J.
std::vector<std::vector<Chain>> q_generators(const ReducedPair& p);

/// Validity over q_generators, with the failing product and witness.
struct OracleOutcome {
  Verdict verdict = Verdict::Valid;
  std::optional<std::vector<Chain>> algebra;
  std::optional<std::map<std::string, ProductAlgebra::Element>> witness;
  bool bounded_fallback = false;

  bool valid() const { return verdict == Verdict::Valid; }
};
OracleOutcome admissible_oracle(const Rule& r, const ReducedPair& p,
                                const EngineLimits& limits = {});

/// {"version", "verdict", "witness"?, "countermodel"?}
std::string report_to_json(const AdmissibilityReport& r);

}  // namespace lukadmit
