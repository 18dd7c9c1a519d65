#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lukadmit/formula.hpp"
#include "lukadmit/variety.hpp"

namespace lukadmit {

class RenderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct AxiomScheme {
  std::string name;
  Formula formula;
};

struct RuleScheme {
  std::string name;
  /// Rule parameter: p for DeltaQ, q for DeltaU, n for CC; 0 for MP.
  std::int64_t param = 0;
  /// I_q, DeltaU only.
  IndexSet I_q;
  Rule rule;
};

enum class CCPolicy {
  /// CC_n for n = critical_n only, also when n = 1.
  Single,
  /// CC_k for 2 <= k <= max(n, 2).
  Range,
};

struct Basis {
  ReducedPair pair;
  std::int64_t n = 0;
  std::vector<AxiomScheme> axioms;
  std::vector<RuleScheme> rules;
  CCPolicy cc_policy = CCPolicy::Single;
  /// Set when a CC_1 rule was emitted.
  bool cc_below_two = false;
};

/// Axioms L1-L4 and alpha, rules MP, DeltaQ_p, DeltaU_q and CC, in that order.
/// Metavariables are phi, psi, chi and gamma.
Basis basis(const ReducedPair& pair, CCPolicy policy = CCPolicy::Single);

/// "text" or "json". Throws RenderError on anything else.
std::string render(const Basis& b, std::string_view format);

}  // namespace lukadmit
