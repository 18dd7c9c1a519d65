#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"
#include "lukadmit/chain.hpp"
#include "support/generators.hpp"

using namespace lukadmit;
using Rational = boost::multiprecision::cpp_rational;

namespace {

Formula v(const char* name) { return Formula::var(name); }

// Reference semantics on [0,1] ∩ Q, computed from the core connectives only.
Rational eval_rational(const Formula& f, const std::map<std::string, Rational>& env) {
  switch (f.op()) {
    case Op::Zero:
      return 0;
    case Op::Var:
      return env.at(f.name());
    case Op::Neg:
      return 1 - eval_rational(f.lhs(), env);
    case Op::Oplus: {
      Rational s = eval_rational(f.lhs(), env) + eval_rational(f.rhs(), env);
      return s > 1 ? Rational(1) : s;
    }
    default:
      throw std::logic_error("reference evaluator expects normalized formulas");
  }
}

std::vector<LexElem> lex_sample(const LexChain& c, int bound) {
  std::vector<LexElem> out;
  for (std::int64_t a = 0; a <= c.n(); ++a)
    for (int b = -bound; b <= bound; ++b) {
      LexElem e{a, BigInt(b)};
      if (c.contains(e)) out.push_back(e);
    }
  return out;
}

template <class Alg, class Elems>
void check_mv_axioms(const Alg& A, const Elems& xs) {
  for (const auto& x : xs) {
    REQUIRE(A.neg(A.neg(x)) == x);
    REQUIRE(A.oplus(x, A.zero()) == x);
    REQUIRE(A.oplus(x, A.neg(A.zero())) == A.neg(A.zero()));
    for (const auto& y : xs) {
      REQUIRE(A.oplus(x, y) == A.oplus(y, x));
      // MV6
      REQUIRE(A.oplus(A.neg(A.oplus(A.neg(x), y)), y) ==
              A.oplus(A.neg(A.oplus(A.neg(y), x)), x));
      // natural order: x <= y iff x -> y = 1
      REQUIRE((A.oplus(A.neg(x), y) == A.top()) == (x <= y));
      for (const auto& z : xs) REQUIRE(A.oplus(A.oplus(x, y), z) == A.oplus(x, A.oplus(y, z)));
    }
  }
}

}  // namespace

TEST_CASE("eval: worked values") {
  FiniteChain l2(2);
  CHECK(eval(oplus(neg(v("p")), v("p")), {{"p", 1}}, l2) == 2);
  CHECK(eval(odot(v("p"), v("p")), {{"p", 1}}, l2) == 0);

  LexChain chang(1, 0);
  CHECK(eval(odot(v("x"), v("x")), {{"x", LexElem{0, 1}}}, chang) == LexElem{0, 0});

  LexChain l31(3, 1);
  CHECK(eval(neg(v("x")), {{"x", LexElem{1, 5}}}, l31) == LexElem{2, -4});
}

TEST_CASE("eval: p.p in L2 matches the rational oracle 1/2 * 1/2 = 0") {
  Rational half(1, 2);
  Formula f = normalize(odot(v("p"), v("p")));
  CHECK(eval_rational(f, {{"p", half}}) == 0);
}

TEST_CASE("eval: errors") {
  FiniteChain l2(2);
  CHECK_THROWS_AS(eval(v("p"), {}, l2), EvalError);
  CHECK_THROWS_AS(eval(v("p"), {{"p", 3}}, l2), EvalError);
  LexChain chang(1, 0);
  CHECK_THROWS_AS(eval(v("p"), {{"p", LexElem{0, -1}}}, chang), EvalError);
  CHECK_THROWS_AS(eval(v("p"), {{"p", LexElem{1, 1}}}, chang), EvalError);
  CHECK_THROWS(FiniteChain(0));
  CHECK_THROWS(LexChain(1, -1));
}

TEST_CASE("finite chains agree with the rational reference semantics") {
  testing::FormulaGen gen(99, {"p", "q"});
  for (int i = 0; i < 300; ++i) {
    Formula f = gen.any(10);
    Formula nf = normalize(f);
    for (std::int64_t n : {1, 2, 3, 5}) {
      FiniteChain c(n);
      for (std::int64_t a = 0; a <= n; ++a)
        for (std::int64_t b = 0; b <= n; ++b) {
          std::int64_t got = eval(f, {{"p", a}, {"q", b}}, c);
          Rational ref = eval_rational(nf, {{"p", Rational(a, n)}, {"q", Rational(b, n)}});
          REQUIRE(Rational(got, n) == ref);
        }
    }
  }
}

TEST_CASE("lex chains: sugar agrees with its core expansion") {
  testing::FormulaGen gen(7, {"p", "q"});
  for (int i = 0; i < 150; ++i) {
    Formula f = gen.any(9);
    Formula nf = normalize(f);
    for (auto c : {LexChain(1, 0), LexChain(2, 1), LexChain(3, 1)}) {
      auto xs = lex_sample(c, 3);
      for (std::size_t a = 0; a < xs.size(); a += 2)
        for (std::size_t b = 0; b < xs.size(); b += 3) {
          Assignment<LexChain> env{{"p", xs[a]}, {"q", xs[b]}};
          REQUIRE(eval(f, env, c) == eval(nf, env, c));
        }
    }
  }
}

TEST_CASE("MV1-MV6, involution and natural order") {
  for (std::int64_t n = 1; n <= 6; ++n) {
    FiniteChain c(n);
    std::vector<std::int64_t> xs;
    for (std::int64_t k = 0; k <= n; ++k) xs.push_back(k);
    check_mv_axioms(c, xs);
  }
  for (auto c : {LexChain(1, 0), LexChain(2, 0), LexChain(2, 1), LexChain(3, 1), LexChain(1, 1)}) {
    auto xs = lex_sample(c, 4);
    check_mv_axioms(c, xs);
  }
}

TEST_CASE("MV axioms on a wider lex sample (pairs only)") {
  for (auto c : {LexChain(1, 0), LexChain(3, 1)}) {
    auto xs = lex_sample(c, 50);
    for (std::size_t i = 0; i < xs.size(); i += 7)
      for (std::size_t j = 0; j < xs.size(); j += 5) {
        const auto &x = xs[i], &y = xs[j];
        REQUIRE(c.oplus(x, y) == c.oplus(y, x));
        REQUIRE(c.oplus(c.neg(c.oplus(c.neg(x), y)), y) ==
                c.oplus(c.neg(c.oplus(c.neg(y), x)), x));
        REQUIRE((c.oplus(c.neg(x), y) == c.top()) == (x <= y));
      }
  }
}

TEST_CASE("nx and x^n follow their recursive definitions") {
  FiniteChain c(5);
  for (std::int64_t x = 0; x <= 5; ++x) {
    CHECK(c.mult(0, x) == 0);
    CHECK(c.pow(x, 0) == 5);
    for (std::uint32_t k = 0; k < 8; ++k) {
      CHECK(c.mult(k + 1, x) == c.oplus(x, c.mult(k, x)));
      CHECK(c.pow(x, k + 1) == c.odot(x, c.pow(x, k)));
    }
  }
  LexChain l(3, 1);
  for (const auto& x : lex_sample(l, 6))
    for (std::uint32_t k = 0; k < 8; ++k) {
      CHECK(l.mult(k + 1, x) == l.oplus(x, l.mult(k, x)));
      CHECK(l.pow(x, k + 1) == l.odot(x, l.pow(x, k)));
    }
}

TEST_CASE("coradical membership") {
  FiniteChain l2(2);
  CHECK_FALSE(coradical_member(std::int64_t{1}, l2));
  CHECK(l2.pow(1, 2) == 0);
  CHECK(coradical_member(std::int64_t{2}, l2));

  LexChain chang(1, 0);
  LexElem x{1, -1};
  CHECK(coradical_member(x, chang));
  for (std::uint32_t k = 1; k <= 100; ++k) {
    REQUIRE(chang.pow(x, k) == LexElem{1, -static_cast<int>(k)});
    REQUIRE(chang.pow(x, k) != chang.zero());
  }
  CHECK(coradical_member(chang.top(), chang));
  CHECK(coradical_member(LexChain(3, 1).top(), LexChain(3, 1)));
}

TEST_CASE("coradical agrees with iterated powers and with the radical of the negation") {
  auto check_chain = [](const Chain& ch, const std::vector<ChainElement>& xs) {
    auto rad = radical_ideal(ch);
    const auto n = std::visit([](const auto& c) { return c.n(); }, ch);
    for (const auto& x : xs) {
      bool powers_nonzero = true;
      ChainElement p = x;
      for (std::int64_t k = 1; k <= n + 2; ++k) {
        p = eval(pow(v("x"), static_cast<std::uint32_t>(k)), {{"x", x}}, ch);
        if (p == zero(ch)) powers_nonzero = false;
      }
      ChainElement nx = eval(neg(v("x")), {{"x", x}}, ch);
      REQUIRE(coradical_member(x, ch) == powers_nonzero);
      REQUIRE(coradical_member(x, ch) == (rad(nx) || x == top(ch)));
    }
  };
  for (std::int64_t n = 1; n <= 6; ++n) {
    std::vector<ChainElement> xs;
    for (std::int64_t k = 0; k <= n; ++k) xs.push_back(k);
    check_chain(FiniteChain(n), xs);
  }
  for (auto c : {LexChain(1, 0), LexChain(2, 0), LexChain(3, 1), LexChain(4, 2)}) {
    std::vector<ChainElement> xs;
    for (const auto& e : lex_sample(c, 10)) xs.push_back(e);
    check_chain(c, xs);
  }
}

TEST_CASE("radical ideal is the unique maximal ideal") {
  auto check_ideal = [](const Chain& ch, const std::vector<ChainElement>& xs) {
    auto rad = radical_ideal(ch);
    const auto n = std::visit([](const auto& c) { return c.n(); }, ch);
    REQUIRE(rad(zero(ch)));
    for (const auto& x : xs) {
      for (const auto& y : xs) {
        ChainElement s = eval(oplus(v("x"), v("y")), {{"x", x}, {"y", y}}, ch);
        ChainElement le = eval(imp(v("x"), v("y")), {{"x", x}, {"y", y}}, ch);
        if (rad(x) && rad(y)) REQUIRE(rad(s));
        if (rad(y) && le == top(ch)) REQUIRE(rad(x));
      }
      // anything outside generates the whole algebra: (n+1).x = 1
      if (!rad(x))
        REQUIRE(eval(mult(static_cast<std::uint32_t>(n + 1), v("x")), {{"x", x}}, ch) == top(ch));
    }
  };
  std::vector<ChainElement> l2{std::int64_t{0}, std::int64_t{1}, std::int64_t{2}};
  check_ideal(FiniteChain(2), l2);
  auto rad2 = radical_ideal(FiniteChain(2));
  CHECK(rad2(std::int64_t{0}));
  CHECK_FALSE(rad2(std::int64_t{1}));

  for (auto c : {LexChain(1, 0), LexChain(3, 1)}) {
    std::vector<ChainElement> xs;
    for (const auto& e : lex_sample(c, 20)) xs.push_back(e);
    check_ideal(c, xs);
    auto rad = radical_ideal(c);
    CHECK(rad(LexElem{0, 20}));
    CHECK_FALSE(rad(LexElem{1, -20}));
  }
}

TEST_CASE("a^m = 0 implies a^n = 0 for the critical n of ({4},{3})") {
  const std::uint32_t n = 4;
  for (std::int64_t i = 1; i <= n; ++i) {
    FiniteChain c(i);
    for (std::int64_t a = 0; a <= i; ++a)
      for (std::uint32_t m = 1; m <= 8; ++m)
        if (c.pow(a, m) == 0) REQUIRE(c.pow(a, n) == 0);
  }
  for (std::int64_t j = 1; j <= n - 1; ++j) {
    LexChain c(j, 0);
    for (const auto& a : lex_sample(c, 50))
      for (std::uint32_t m = 1; m <= 8; ++m)
        if (c.pow(a, m) == c.zero()) REQUIRE(c.pow(a, n) == c.zero());
  }
}

TEST_CASE("products are componentwise") {
  ProductAlgebra p({FiniteChain(1), FiniteChain(2), LexChain(1, 1)});
  ProductAlgebra::Element x{std::int64_t{1}, std::int64_t{1}, LexElem{0, 3}};
  auto r = eval(oplus(v("x"), v("x")), {{"x", x}}, p);
  CHECK(r == ProductAlgebra::Element{std::int64_t{1}, std::int64_t{2}, LexElem{0, 6}});
  CHECK(p.top() == ProductAlgebra::Element{std::int64_t{1}, std::int64_t{2}, LexElem{1, 1}});
  CHECK(format_element(x, p) == "<1/1, 1/2, (0,3)@Lex(1,1)>");
}

TEST_CASE("element and algebra text") {
  Chain l3 = parse_chain("L(3)");
  CHECK(std::get<FiniteChain>(l3).n() == 3);
  Chain lex = parse_chain("Lex(3, 1)");
  CHECK(format_chain(lex) == "Lex(3,1)");
  CHECK(parse_element("2/3", l3) == ChainElement{std::int64_t{2}});
  CHECK(parse_element("2", l3) == ChainElement{std::int64_t{2}});
  CHECK(parse_element("(1,5)@Lex(3,1)", lex) == ChainElement{LexElem{1, 5}});
  CHECK(parse_element("(2,-4)", lex) == ChainElement{LexElem{2, -4}});
  CHECK(format_element(LexElem{2, -4}, lex) == "(2,-4)@Lex(3,1)");
  CHECK(format_element(std::int64_t{1}, l3) == "1/3");
  CHECK_THROWS(parse_element("4/3", l3));
  CHECK_THROWS(parse_element("1/2", l3));
  CHECK_THROWS(parse_element("(3,2)", lex));
  CHECK_THROWS(parse_element("(1,1)@Lex(3,0)", lex));
  CHECK_THROWS(parse_chain("M(3)"));
}
