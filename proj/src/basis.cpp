#include "lukadmit/basis.hpp"

#include <sstream>

#include "json.hpp"
#include "lukadmit/axiom.hpp"
#include "lukadmit/version.hpp"

namespace lukadmit {

namespace {

const Formula phi = Formula::var("phi");
const Formula psi = Formula::var("psi");
const Formula chi = Formula::var("chi");

// [(~phi)^{k-1} <-> phi] or [psi <-> chi]
Formula fixpoint_premise(std::int64_t k) {
  return join(iff(pow(neg(phi), static_cast<std::uint32_t>(k - 1)), phi), iff(psi, chi));
}

RuleScheme cc_rule(std::int64_t k) {
  return {"CC_" + std::to_string(k), k, {},
          Rule{{neg(pow(join(phi, neg(phi)), static_cast<std::uint32_t>(k)))}, Formula::zero()}};
}

std::string premises_text(const Rule& r) {
  std::string out;
  for (std::size_t i = 0; i < r.premises.size(); ++i) {
    if (i) out += ", ";
    out += print_formula(r.premises[i]);
  }
  return out;
}

}  // namespace

Basis basis(const ReducedPair& pair, CCPolicy policy) {
  ReducedPair p = make_pair_checked(pair.I, pair.J);
  Basis b;
  b.pair = p;
  b.n = critical_n(p);
  b.cc_policy = policy;
  b.axioms = {
      {"L1", imp(phi, imp(psi, phi))},
      {"L2", imp(imp(phi, psi), imp(imp(psi, chi), imp(phi, chi)))},
      {"L3", imp(imp(imp(phi, psi), psi), imp(imp(psi, phi), phi))},
      {"L4", imp(imp(neg(phi), neg(psi)), imp(psi, phi))},
      {"alpha", alpha(p, "gamma")},
  };
  b.rules.push_back({"MP", 0, {}, Rule{{phi, imp(phi, psi)}, psi}});
  DivSets d = div_sets(p);
  for (auto q : d.q_primes)
    b.rules.push_back({"DeltaQ_" + std::to_string(q), q, {},
                       Rule{{fixpoint_premise(q)}, iff(psi, chi)}});
  for (auto q : d.u_primes) {
    const IndexSet& Iq = d.I_q.at(q);
    Formula a = alpha(ReducedPair{Iq, {}}, "gamma");
    b.rules.push_back({"DeltaU_" + std::to_string(q), q, Iq,
                       Rule{{fixpoint_premise(q)}, join(a, iff(psi, chi))}});
  }
  if (policy == CCPolicy::Single) {
    b.rules.push_back(cc_rule(b.n));
    b.cc_below_two = b.n < 2;
  } else {
    for (std::int64_t k = 2; k <= std::max<std::int64_t>(b.n, 2); ++k)
      b.rules.push_back(cc_rule(k));
  }
  return b;
}

std::string render(const Basis& b, std::string_view format) {
  if (format == "json") {
    using nlohmann::ordered_json;
    ordered_json j;
    j["version"] = json_schema_version;
    j["pair"] = {{"I", b.pair.I}, {"J", b.pair.J}};
    j["n"] = b.n;
    j["axioms"] = ordered_json::array();
    for (const auto& a : b.axioms)
      j["axioms"].push_back({{"name", a.name}, {"text", print_formula(a.formula)}});
    j["rules"] = ordered_json::array();
    for (const auto& r : b.rules) {
      ordered_json params = ordered_json::object();
      if (r.name.rfind("DeltaQ_", 0) == 0) params["p"] = r.param;
      if (r.name.rfind("DeltaU_", 0) == 0) {
        params["q"] = r.param;
        params["I_q"] = r.I_q;
      }
      if (r.name.rfind("CC_", 0) == 0) params["n"] = r.param;
      ordered_json prem = ordered_json::array();
      for (const auto& f : r.rule.premises) prem.push_back(print_formula(f));
      j["rules"].push_back({{"name", r.name},
                            {"params", params},
                            {"premises", prem},
                            {"conclusion", print_formula(r.rule.conclusion)}});
    }
    j["metadata"] = {{"cc_policy", b.cc_policy == CCPolicy::Single ? "single" : "range"},
                     {"cc_below_two", b.cc_below_two}};
    return j.dump(2) + "\n";
  }
  if (format == "text") {
    std::ostringstream out;
    out << "basis for " << format_pair(b.pair) << ", n = " << b.n << "\n";
    out << "axioms:\n";
    for (const auto& a : b.axioms) out << "  " << a.name << ": " << print_formula(a.formula) << "\n";
    out << "rules:\n";
    for (const auto& r : b.rules) {
      out << "  " << r.name;
      if (!r.I_q.empty()) out << " [I_q = " << format_index_set(r.I_q) << "]";
      out << ": " << premises_text(r.rule) << " / " << print_formula(r.rule.conclusion) << "\n";
    }
    if (b.cc_below_two) out << "note: CC_1 emitted for n = 1\n";
    return out.str();
  }
  throw RenderError("unknown format '" + std::string(format) + "' (expected text or json)");
}

}  // namespace lukadmit
