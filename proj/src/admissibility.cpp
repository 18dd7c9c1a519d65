#include "lukadmit/admissibility.hpp"

#include <unordered_map>

#include "json.hpp"
#include "lukadmit/version.hpp"

namespace lukadmit {

namespace {

// Kleene three-valued Boolean evaluation: 0, 1, or 2 for unknown.
class PartialEval {
 public:
  explicit PartialEval(const std::map<std::string, int>& env) : env_(env) {}

  int operator()(const Formula& f) {
    auto it = memo_.find(f.id());
    if (it != memo_.end()) return it->second;
    int v = compute(f);
    memo_.emplace(f.id(), v);
    return v;
  }

 private:
  static int lnot(int a) { return a == 2 ? 2 : 1 - a; }
  static int lor(int a, int b) {
    if (a == 1 || b == 1) return 1;
    return a == 0 && b == 0 ? 0 : 2;
  }
  static int land(int a, int b) { return lnot(lor(lnot(a), lnot(b))); }

  int compute(const Formula& f) {
    switch (f.op()) {
      case Op::Zero: return 0;
      case Op::One: return 1;
      case Op::Var: {
        auto it = env_.find(f.name());
        return it == env_.end() ? 2 : it->second;
      }
      case Op::Neg: return lnot((*this)(f.lhs()));
      case Op::Mult: return f.count() == 0 ? 0 : (*this)(f.lhs());
      case Op::Pow: return f.count() == 0 ? 1 : (*this)(f.lhs());
      default: break;
    }
    int a = (*this)(f.lhs());
    int b = (*this)(f.rhs());
    switch (f.op()) {
      case Op::Oplus:
      case Op::Join: return lor(a, b);
      case Op::Odot:
      case Op::Meet: return land(a, b);
      case Op::Imp: return lor(lnot(a), b);
      default: break;
    }
    // Iff
    if (a == 2 || b == 2) return 2;
    return a == b ? 1 : 0;
  }

  const std::map<std::string, int>& env_;
  std::unordered_map<const Formula::Node*, int> memo_;
};

// Each formula is 1 (1), 0 for some formula (0), or undecided (2).
int status(const std::vector<Formula>& gamma, const std::map<std::string, int>& env) {
  PartialEval ev(env);
  int s = 1;
  for (const auto& g : gamma) {
    int v = ev(g);
    if (v == 0) return 0;
    if (v == 2) s = 2;
  }
  return s;
}

bool search(const std::vector<Formula>& gamma, const std::vector<std::string>& vars,
            std::size_t i, std::map<std::string, int>& env) {
  int s = status(gamma, env);
  if (s == 0) return false;
  if (s == 1) return true;
  for (int v : {1, 0}) {
    env[vars[i]] = v;
    if (search(gamma, vars, i + 1, env)) return true;
  }
  env.erase(vars[i]);
  return false;
}

}  // namespace

Unification unifiable(const std::vector<Formula>& gamma) {
  std::set<std::string> vs;
  for (const auto& g : gamma) {
    auto v = variables(g);
    vs.insert(v.begin(), v.end());
  }
  if (vs.size() > max_unify_variables)
    throw UnifyError("unification guard: " + std::to_string(vs.size()) + " variables (limit " +
                     std::to_string(max_unify_variables) + ")");
  std::vector<std::string> vars(vs.begin(), vs.end());
  std::map<std::string, int> env;
  Unification u;
  if (!search(gamma, vars, 0, env)) return u;
  u.unifiable = true;
  std::map<std::string, bool> w;
  // unassigned variables are irrelevant; fix them to 0
  for (const auto& v : vars) w[v] = env.count(v) ? env.at(v) == 1 : false;
  u.witness = std::move(w);
  return u;
}

Substitution boolean_unifier(const std::map<std::string, bool>& witness) {
  Substitution s;
  for (const auto& [v, b] : witness) s.emplace(v, b ? Formula::one() : Formula::zero());
  return s;
}

bool passive(const Rule& r) { return !unifiable(r.premises).unifiable; }

const char* to_string(Admissibility a) {
  switch (a) {
    case Admissibility::Passive: return "PASSIVE";
    case Admissibility::Derivable: return "DERIVABLE";
    case Admissibility::NotAdmissible: return "NOT_ADMISSIBLE";
    case Admissibility::ResourceExceeded: return "RESOURCE_EXCEEDED";
  }
  return "?";
}

AdmissibilityReport admissible(const Rule& r, const ReducedPair& p, const EngineLimits& limits) {
  AdmissibilityReport out;
  Unification u = unifiable(r.premises);
  if (!u.unifiable) {
    out.verdict = Admissibility::Passive;
    return out;
  }
  out.witness = u.witness;
  FamilyOutcome d = derivable_Q1(r, p, limits);
  out.bounded_fallback = d.bounded_fallback;
  out.note = d.note;
  if (d.valid()) {
    out.verdict = Admissibility::Derivable;
    return out;
  }
  if (!d.invalid()) {
    out.verdict = Admissibility::ResourceExceeded;
    return out;
  }
  // The Boolean unifier satisfies the premises in L_1 and the chain witness
  // refutes the rule in C, so the pair refutes it in L_1 x C.
  out.verdict = Admissibility::NotAdmissible;
  std::vector<Chain> factors{FiniteChain(1), *d.algebra};
  std::map<std::string, ProductAlgebra::Element> cm;
  for (const auto& v : variables(r)) {
    auto it = d.witness->find(v);
    ChainElement c = it != d.witness->end() ? it->second : zero(*d.algebra);
    auto b = u.witness->find(v);
    std::int64_t bit = b != u.witness->end() && b->second ? 1 : 0;
    cm[v] = {bit, c};
  }
  ProductAlgebra alg(factors);
  Quasiequation q = to_quasiequation(r);
  for (const auto& e : q.antecedent)
    if (!holds(e, cm, alg)) throw std::logic_error("admissible: countermodel misses a premise");
  if (holds(q.consequent, cm, alg))
    throw std::logic_error("admissible: countermodel satisfies the conclusion");
  out.algebra = std::move(factors);
  out.countermodel = std::move(cm);
  return out;
}

std::vector<std::vector<Chain>> q_generators(const ReducedPair& p) {
  std::vector<std::vector<Chain>> out;
  for (auto m : p.I) out.push_back({FiniteChain(1), FiniteChain(m)});
  for (auto n : p.J) out.push_back({FiniteChain(1), LexChain(n, 1)});
  return out;
}

OracleOutcome admissible_oracle(const Rule& r, const ReducedPair& p, const EngineLimits& limits) {
  OracleOutcome out;
  Quasiequation q = to_quasiequation(r);
  for (const auto& factors : q_generators(p)) {
    auto o = valid_on_product(q, factors, limits);
    out.bounded_fallback = out.bounded_fallback || o.bounded_fallback;
    if (o.invalid()) {
      out.verdict = Verdict::Invalid;
      out.algebra = factors;
      out.witness = std::move(o.witness);
      return out;
    }
    if (!o.valid()) out.verdict = Verdict::ResourceExceeded;
  }
  return out;
}

std::string report_to_json(const AdmissibilityReport& r) {
  nlohmann::ordered_json j;
  j["version"] = json_schema_version;
  j["verdict"] = to_string(r.verdict);
  if (r.witness) {
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    for (const auto& [v, b] : *r.witness) w[v] = b ? 1 : 0;
    j["witness"] = w;
  }
  if (r.countermodel) {
    std::string name;
    for (const auto& c : *r.algebra) name += (name.empty() ? "" : " x ") + format_chain(c);
    ProductAlgebra alg(*r.algebra);
    nlohmann::ordered_json a = nlohmann::ordered_json::object();
    for (const auto& [v, e] : *r.countermodel) a[v] = format_element(e, alg);
    j["countermodel"] = {{"algebra", name}, {"assignment", a}};
  }
  if (r.bounded_fallback) j["bounded_fallback"] = true;
  if (!r.note.empty()) j["note"] = r.note;
  return j.dump();
}

}  // namespace lukadmit
