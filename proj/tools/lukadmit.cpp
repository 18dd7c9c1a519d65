// Command-line front end: bases, admissibility checks, derivability, alpha
// terms, evaluation, unification and McNaughton round trips.

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "lukadmit/admissibility.hpp"
#include "lukadmit/axiom.hpp"
#include "lukadmit/basis.hpp"
#include "lukadmit/mcnaughton.hpp"
#include "lukadmit/version.hpp"

using namespace lukadmit;
using nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_error = 2;

struct PairFlags {
  std::string I, J;
  bool strict = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--I", I, "finite chain indices, comma separated");
    cmd->add_option("--J", J, "lex chain indices, comma separated");
    cmd->add_flag("--strict", strict, "reject a pair that is not reduced");
  }

  ReducedPair resolve() const {
    IndexSet i = parse_index_set(I), j = parse_index_set(J);
    if (strict) return make_pair_checked(i, j);
    ReducedPair p = reduce(i, j);
    if (p.I != i || p.J != j)
      std::cerr << "warning: pair " << format_pair({i, j}) << " reduced to " << format_pair(p)
                << "\n";
    return p;
  }
};

std::vector<std::string> read_rules(const std::string& rule, const std::string& path) {
  std::vector<std::string> out;
  if (!rule.empty()) out.push_back(rule);
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
      auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      out.push_back(line.substr(b));
    }
  }
  if (out.empty()) throw std::runtime_error("no rule given (use --rule or --rules-file)");
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string describe(const std::map<std::string, ChainElement>& w, const Chain& c) {
  std::string out;
  for (const auto& [v, x] : w) out += (out.empty() ? "" : ", ") + v + " = " + format_element(x, c);
  return out;
}

// Runs f(i) for i < n on `jobs` threads; results land in slot i.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F f) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) f(i);
    });
  for (auto& t : pool) t.join();
}

int cmd_basis(const PairFlags& pf, const std::string& format, bool cc_range) {
  Basis b = basis(pf.resolve(), cc_range ? CCPolicy::Range : CCPolicy::Single);
  if (b.cc_below_two) std::cerr << "warning: n = 1, CC_1 emitted (see --cc-range)\n";
  std::cout << render(b, format);
  return exit_ok;
}

int cmd_check(const PairFlags& pf, const std::vector<std::string>& texts, bool json,
              unsigned jobs) {
  ReducedPair p = pf.resolve();
  std::vector<Rule> rules;
  for (const auto& t : texts) rules.push_back(parse_rule(t));
  std::vector<AdmissibilityReport> reports(rules.size());
  std::vector<std::string> errors(rules.size());
  parallel_for(rules.size(), jobs, [&](std::size_t i) {
    try {
      reports[i] = admissible(rules[i], p);
    } catch (const std::exception& e) {
      errors[i] = e.what();
      reports[i].verdict = Admissibility::ResourceExceeded;
    }
  });
  int code = exit_ok;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const auto& r = reports[i];
    if (!errors[i].empty()) std::cerr << "error: " << print_rule(rules[i]) << ": " << errors[i] << "\n";
    if (r.verdict == Admissibility::ResourceExceeded) code = exit_error;
    if (r.verdict == Admissibility::NotAdmissible && code == exit_ok) code = exit_negative;
    if (json) {
      auto j = ordered_json::parse(report_to_json(r));
      j["rule"] = print_rule(rules[i]);
      std::cout << j.dump() << "\n";
      continue;
    }
    std::cout << to_string(r.verdict) << "  " << print_rule(rules[i]);
    if (r.countermodel) {
      ProductAlgebra alg(*r.algebra);
      std::cout << "  countermodel in " << format_chain((*r.algebra)[0]) << " x "
                << format_chain((*r.algebra)[1]) << ":";
      for (const auto& [v, x] : *r.countermodel) std::cout << " " << v << " = " << format_element(x, alg);
    }
    std::cout << "\n";
  }
  return code;
}

int cmd_derivable(const PairFlags& pf, const std::vector<std::string>& texts, bool q1, bool json) {
  ReducedPair p = pf.resolve();
  int code = exit_ok;
  for (const auto& t : texts) {
    Rule r = parse_rule(t);
    FamilyOutcome o = q1 ? derivable_Q1(r, p) : derivable(r, p);
    if (o.verdict == Verdict::ResourceExceeded) code = exit_error;
    else if (o.invalid() && code == exit_ok) code = exit_negative;
    if (json) {
      ordered_json j;
      j["version"] = json_schema_version;
      j["rule"] = print_rule(r);
      j["verdict"] = o.valid() ? "DERIVABLE" : o.invalid() ? "NOT_DERIVABLE" : "RESOURCE_EXCEEDED";
      if (o.invalid()) {
        ordered_json a = ordered_json::object();
        for (const auto& [v, x] : *o.witness) a[v] = format_element(x, *o.algebra);
        j["countermodel"] = {{"algebra", format_chain(*o.algebra)}, {"assignment", a}};
      }
      if (o.bounded_fallback) j["bounded_fallback"] = true;
      std::cout << j.dump() << "\n";
      continue;
    }
    if (o.valid()) std::cout << "DERIVABLE  " << print_rule(r) << "\n";
    else if (o.invalid())
      std::cout << "NOT_DERIVABLE  " << print_rule(r) << "  countermodel in "
                << format_chain(*o.algebra) << ": " << describe(*o.witness, *o.algebra) << "\n";
    else
      std::cout << "RESOURCE_EXCEEDED  " << print_rule(r) << "  " << o.note << "\n";
  }
  return code;
}

int cmd_alpha(const PairFlags& pf, bool pl_json, const std::string& var) {
  Formula a = alpha(pf.resolve(), var);
  if (pl_json)
    std::cout << pl_to_json(term_to_pl(a)) << "\n";
  else
    std::cout << print_formula(a) << "\n";
  return exit_ok;
}

int cmd_eval(const std::string& algebra, const std::string& formula,
             const std::vector<std::string>& assigns) {
  Chain c = parse_chain(algebra);
  Formula f = parse_formula(formula);
  std::map<std::string, ChainElement> env;
  for (const auto& a : assigns) {
    auto eq = a.find('=');
    if (eq == std::string::npos) throw std::runtime_error("assignment '" + a + "' lacks '='");
    env.emplace(a.substr(0, eq), parse_element(a.substr(eq + 1), c));
  }
  for (const auto& v : variables(f))
    if (!env.count(v)) throw std::runtime_error("variable " + v + " is not assigned");
  std::cout << format_element(eval(f, env, c), c) << "\n";
  return exit_ok;
}

int cmd_unify(const std::string& text, bool json) {
  std::vector<Formula> gamma;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ';');)
    if (part.find_first_not_of(" \t") != std::string::npos) gamma.push_back(parse_formula(part));
  Unification u = unifiable(gamma);
  if (json) {
    ordered_json j;
    j["version"] = json_schema_version;
    j["unifiable"] = u.unifiable;
    if (u.witness) {
      ordered_json w = ordered_json::object();
      for (const auto& [v, b] : *u.witness) w[v] = b ? 1 : 0;
      j["witness"] = w;
    }
    std::cout << j.dump() << "\n";
  } else if (u.unifiable) {
    std::cout << "unifiable";
    for (const auto& [v, b] : *u.witness) std::cout << " " << v << "=" << (b ? 1 : 0);
    std::cout << "\n";
  } else {
    std::cout << "not unifiable\n";
  }
  return u.unifiable ? exit_ok : exit_negative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Admissible rules of Lukasiewicz logics L_{I,J}"};
  app.set_version_flag("--version", tool_version);
  app.require_subcommand(1);

  PairFlags pf;
  std::string format = "text", rule, rules_file, algebra, formula, formulas, var = "x", pl_path;
  std::vector<std::string> assigns;
  bool cc_range = false, json = false, pl_json = false;
  unsigned jobs = 1;

  auto* basis_cmd = app.add_subcommand("basis", "emit the basis of admissible rules");
  pf.add_to(basis_cmd);
  basis_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  basis_cmd->add_flag("--cc-range", cc_range, "emit CC_k for 2 <= k <= max(n, 2)");

  auto* check_cmd = app.add_subcommand("check", "admissibility verdicts");
  pf.add_to(check_cmd);
  check_cmd->add_option("--rule", rule);
  check_cmd->add_option("--rules-file", rules_file);
  check_cmd->add_flag("--json", json);
  check_cmd->add_option("--jobs", jobs)->check(CLI::Range(1u, 256u));

  auto* der_cmd = app.add_subcommand("derivable", "derivability in L_{I,J}");
  auto* derq_cmd = app.add_subcommand("derivable-q1", "validity in the quasivariety Q^1");
  for (auto* c : {der_cmd, derq_cmd}) {
    pf.add_to(c);
    c->add_option("--rule", rule);
    c->add_option("--rules-file", rules_file);
    c->add_flag("--json", json);
  }

  auto* alpha_cmd = app.add_subcommand("alpha", "one-variable axiom of the variety");
  pf.add_to(alpha_cmd);
  alpha_cmd->add_flag("--pl-json", pl_json, "print the McNaughton function instead");
  alpha_cmd->add_option("--var", var);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula on a chain");
  eval_cmd->add_option("--algebra", algebra, "L(n) or Lex(n,s)")->required();
  eval_cmd->add_option("--formula", formula)->required();
  eval_cmd->add_option("--assign", assigns, "p=value, repeatable");

  auto* unify_cmd = app.add_subcommand("unify", "unifiability of a set of formulas");
  unify_cmd->add_option("--formulas", formulas, "formulas separated by ';'")->required();
  unify_cmd->add_flag("--json", json);

  auto* synth_cmd = app.add_subcommand("synth", "term for a McNaughton function");
  synth_cmd->add_option("--pl", pl_path, "PL function JSON file")->required();
  synth_cmd->add_option("--var", var);

  auto* pl_cmd = app.add_subcommand("pl", "McNaughton function of a one-variable term");
  pl_cmd->add_option("--term", formula)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_error;
  }

  try {
    if (*basis_cmd) return cmd_basis(pf, format, cc_range);
    if (*check_cmd) return cmd_check(pf, read_rules(rule, rules_file), json, jobs);
    if (*der_cmd) return cmd_derivable(pf, read_rules(rule, rules_file), false, json);
    if (*derq_cmd) return cmd_derivable(pf, read_rules(rule, rules_file), true, json);
    if (*alpha_cmd) return cmd_alpha(pf, pl_json, var);
    if (*eval_cmd) return cmd_eval(algebra, formula, assigns);
    if (*unify_cmd) return cmd_unify(formulas, json);
    if (*synth_cmd) {
      std::cout << print_formula(synthesize(pl_from_json(slurp(pl_path)), var)) << "\n";
      return exit_ok;
    }
    if (*pl_cmd) {
      std::cout << pl_to_json(term_to_pl(parse_formula(formula))) << "\n";
      return exit_ok;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}
