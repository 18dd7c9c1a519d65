// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "lukadmit/admissibility.hpp"
#include "lukadmit/algebra.hpp"
#include "lukadmit/axiom.hpp"
#include "lukadmit/basis.hpp"
#include "support/bipq_suite.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace lukadmit;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  expect(in.good(), "missing " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::vector<ReducedPair> four_pairs{{{4}, {3}}, {{1}, {}}, {{}, {2}}, {{6}, {5}}};

std::size_t rule_size(const Rule& r) {
  std::size_t n = size(r.conclusion);
  for (const auto& p : r.premises) n += size(p);
  return n;
}

// ≤ 3 variables, total size ≤ 12
Rule random_rule(testing::FormulaGen& gen) {
  std::uniform_int_distribution<int> np(0, 2);
  for (;;) {
    Rule r;
    for (int i = np(gen.rng()); i > 0; --i) r.premises.push_back(gen.any(6));
    r.conclusion = gen.any(8);
    if (rule_size(r) <= 12) return r;
  }
}

std::string c1() {
  struct Want {
    std::string file;
    std::vector<std::string> rules;
    std::int64_t n;
  };
  const std::vector<Want> want{
      {"basis_4_3.json", {"MP", "DeltaQ_3", "DeltaU_2", "CC_4"}, 4},
      {"basis_1_.json", {"MP", "CC_1"}, 1},
      {"basis__2.json", {"MP", "DeltaQ_2", "CC_3"}, 3},
      {"basis_6_5.json", {"MP", "DeltaQ_5", "DeltaU_2", "DeltaU_3", "CC_6"}, 6},
  };
  for (std::size_t i = 0; i < 4; ++i) {
    Basis b = basis(four_pairs[i]);
    std::vector<std::string> names;
    for (const auto& r : b.rules) names.push_back(r.name);
    expect(names == want[i].rules, "scheme list of " + format_pair(four_pairs[i]));
    expect(b.n == want[i].n && b.n == critical_n(four_pairs[i]), "n of " + format_pair(four_pairs[i]));
    for (const auto& r : b.rules)
      if (r.name.rfind("DeltaU_", 0) == 0) {
        IndexSet Iq;
        for (auto m : four_pairs[i].I)
          if (m % r.param == 0) Iq.insert(m);
        expect(r.I_q == Iq, r.name + " I_q");
        expect(r.rule.conclusion.lhs() == alpha({Iq, {}}, "gamma"), r.name + " alpha");
      }
    std::string got = render(b, "json");
    expect(got == slurp(std::string(LUKADMIT_TEST_DATA_DIR) + "/" + want[i].file),
           want[i].file + " differs");
  }
  return "4 pairs byte-identical";
}

std::string c2() {
  auto pairs = reduced_pairs_up_to(4);
  testing::FormulaGen gen(2024, {"p", "q", "r"}, 3);
  std::size_t cases = 0, adm = 0;
  for (int i = 0; i < 200; ++i) {
    Rule r = random_rule(gen);
    bool pas = passive(r);
    for (const auto& p : pairs) {
      auto o = admissible_oracle(r, p);
      auto q1 = derivable_Q1(r, p);
      expect(o.verdict != Verdict::ResourceExceeded && q1.verdict != Verdict::ResourceExceeded,
             "resource guard on " + print_rule(r));
      expect(o.valid() == (pas || q1.valid()),
             "discrepancy on " + print_rule(r) + " for " + format_pair(p));
      ++cases;
      adm += o.valid();
    }
  }
  return std::to_string(cases) + " rule/pair cases, " + std::to_string(adm) +
         " admissible, 0 discrepancies";
}

std::string c3() {
  std::size_t checks = 0;
  for (const auto& p : four_pairs) {
    const auto n = static_cast<std::uint32_t>(critical_n(p));
    for (std::uint32_t m = 1; m <= 8; ++m) {
      Formula np = Formula::var("p");
      Rule r{{neg(pow(np, m))}, neg(pow(np, n))};
      auto a = admissible(r, p);
      expect(derivable(r, p).valid(), print_rule(r) + " not derivable in " + format_pair(p));
      expect(a.verdict != Admissibility::NotAdmissible, print_rule(r) + " not admissible");
      ++checks;
      for (std::int64_t i = 1; i <= n; ++i) {
        FiniteChain c(i);
        for (std::int64_t x = 0; x <= i; ++x)
          if (c.pow(x, m) == 0) expect(c.pow(x, n) == 0, "core fails in L_" + std::to_string(i));
      }
      for (std::int64_t j = 1; j + 1 <= n; ++j) {
        LexChain c(j, 0);
        for (std::int64_t x = 0; x <= j; ++x)
          for (int b = -50; b <= 50; ++b) {
            LexElem e{x, BigInt(b)};
            if (!c.contains(e)) continue;
            if (c.pow(e, m) == c.zero())
              expect(c.pow(e, n) == c.zero(), "core fails in Lex(" + std::to_string(j) + ",0)");
          }
      }
    }
  }
  return std::to_string(checks) + " instances derivable, semantic core exhaustive";
}

std::string c4() {
  testing::FormulaGen gen(4242, {"p", "q", "r"});
  for (std::uint32_t k = 1; k <= 8; ++k) {
    Formula phi = Formula::var("phi");
    Rule cc{{neg(pow(join(phi, neg(phi)), k))}, Formula::zero()};
    for (int i = 0; i < 20; ++i) {
      Rule inst = substitute(cc, {{"phi", gen.any(8)}});
      expect(!unifiable(inst.premises).unifiable, "unifiable CC instance " + print_rule(inst));
      expect(admissible(inst, {{4}, {3}}).verdict == Admissibility::Passive, "CC not passive");
    }
  }
  auto pairs = reduced_pairs_up_to(4);
  std::size_t checked = 0;
  for (int i = 0; checked < 200 && i < 5000; ++i) {
    Rule r = random_rule(gen);
    auto u = unifiable(r.premises);
    if (!u.unifiable) continue;
    Assignment<FiniteChain> env;
    for (const auto& v : variables(r)) env[v] = u.witness->count(v) && u.witness->at(v) ? 1 : 0;
    if (eval(r.conclusion, env, FiniteChain(1)) == 1) continue;
    const ReducedPair& p = pairs[checked % pairs.size()];
    auto a = admissible(r, p);
    auto o = admissible_oracle(r, p);
    expect(a.verdict == Admissibility::NotAdmissible || a.verdict == Admissibility::Derivable,
           "verdict for " + print_rule(r));
    expect((a.verdict == Admissibility::Derivable) == o.valid(), "oracle disagrees on " + print_rule(r));
    ++checked;
  }
  expect(checked == 200, "too few unifiable rules with Boolean failure");
  return "160 CC instances passive, 200 Boolean-failing rules consistent";
}

std::string c5() {
  auto pairs = reduced_pairs_up_to(4);
  for (const auto& p : pairs) {
    Formula t = alpha(p);
    expect(verify_axiomatizes(t, p), "verify " + format_pair(p));
    Quasiequation q{{}, {t, Formula::one()}};
    for (std::int64_t k = 1; k <= 8; ++k) {
      auto o = valid_on_finite_chain(q, k);
      expect(o.verdict != Verdict::ResourceExceeded, "resource on L_k");
      expect(o.valid() == contains_chain(p, k), format_pair(p) + " on L_" + std::to_string(k));
    }
    for (std::int64_t k = 1; k <= 4; ++k) {
      auto o = valid_on_lex_chain(q, k, 0);
      expect(o.verdict != Verdict::ResourceExceeded, "resource on Lex");
      expect(o.valid() == contains_lex_chain(p, k), format_pair(p) + " on Lex_" + std::to_string(k));
    }
  }
  return std::to_string(pairs.size()) + " pairs";
}

std::string c6() {
  std::vector<PLFunc> corpus;
  for (const auto& p : reduced_pairs_up_to(4)) corpus.push_back(design_target(p));
  for (const auto& p : four_pairs) corpus.push_back(design_target(p));
  corpus.push_back(PLFunc::constant(0));
  corpus.push_back(PLFunc::constant(1));
  corpus.push_back(PLFunc::identity());
  corpus.push_back(PLFunc({{0, 0}, {Rational(1, 3), 1}, {Rational(2, 3), 1}, {1, 0}}));
  corpus.push_back(PLFunc({{0, 1}, {Rational(1, 4), 0}, {Rational(3, 5), 0}, {Rational(4, 5), 1}, {1, 1}}));
  testing::FormulaGen gen(66, {"x"});
  for (int i = 0; i < 5; ++i) corpus.push_back(term_to_pl(gen.sized(10 + i)));
  for (std::size_t i = 0; i < corpus.size(); ++i)
    expect(term_to_pl(synthesize(corpus[i])) == corpus[i], "round trip " + std::to_string(i));
  expect(corpus.size() >= 30, "corpus too small");
  return std::to_string(corpus.size()) + " functions";
}

std::string c7() {
  constexpr std::int64_t B = 16;
  // bounded search is monotone in B; the smallest-radius witness settles
  // every B in 1..16 at once
  LexChain chains[] = {LexChain(1, 0), LexChain(2, 0), LexChain(2, 1), LexChain(3, 1)};
  testing::FormulaGen gen(77, {"x", "y", "z"});
  std::size_t invalid = 0, bounded_hits = 0;
  for (int i = 0; i < 500; ++i) {
    Quasiequation q = testing::random_quasi(gen, i % 2 ? 7 : 10, 2);
    const LexChain& c = chains[i % 4];
    std::string tag = print_quasiequation(q) + " on " + format_chain(c);
    auto sym = valid_on_lex_chain(q, c.n(), c.s());
    expect(sym.verdict != Verdict::ResourceExceeded, "resource guard on " + tag);
    auto s = static_cast<std::int64_t>(c.s());
    auto brute = bounded_lex_search(q, c.n(), s, B);
    expect(brute.verdict != Verdict::ResourceExceeded, "bounded search guard on " + tag);
    if (brute.invalid()) {
      ++bounded_hits;
      expect(sym.invalid(), "bounded counterexample but symbolic valid: " + tag);
    }
    if (sym.invalid()) {
      ++invalid;
      bool ante = true;
      for (const auto& e : q.antecedent) ante = ante && holds(e, *sym.witness, c);
      for (const auto& [v, x] : *sym.witness) expect(c.contains(x), "witness outside chain: " + tag);
      expect(ante && !holds(q.consequent, *sym.witness, c), "witness not genuine: " + tag);
    }
  }
  return "500 quasiequations, " + std::to_string(invalid) + " invalid with genuine witnesses, " +
         std::to_string(bounded_hits) + " found by bounded search";
}

std::string c8() {
  auto suite = testing::bipq_suite();
  expect(suite.size() >= 20, "suite too small");
  for (const auto& c : suite) {
    expect(c.algebra.size() <= TableAlgebra::max_size, c.name + " too large");
    expect(in_isp(c.algebra, testing::q1_tables(c.I)), c.name + " outside Q^1");
    expect(is_bipartite(c.algebra) == c.bipartite, c.name + " bipartite");
    expect(in_isp(c.algebra, testing::q_tables(c.I)) == c.bipartite, c.name + " Q membership");
  }
  return std::to_string(suite.size()) + " algebras";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"1 basis golden outputs", c1},
      {"2 almost structural completeness", c2},
      {"3 negated powers ~p^m / ~p^n", c3},
      {"4 passive CC instances", c4},
      {"5 alpha verification", c5},
      {"6 McNaughton round trip", c6},
      {"7 lex decider integrity", c7},
      {"8 bipartite membership", c8},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << name << ": " << detail << " ("
              << std::fixed << std::setprecision(1) << secs << " s)" << std::endl;
    all = all && ok;
  }
  return all ? 0 : 1;
}
