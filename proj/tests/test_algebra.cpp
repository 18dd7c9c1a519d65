#include <random>

#include "doctest.h"
#include "lukadmit/algebra.hpp"
#include "lukadmit/chain.hpp"
#include "support/bipq_suite.hpp"

using namespace lukadmit;
using E = TableAlgebra::Element;

namespace {

// Ideals straight from the definition, over all subsets.
struct BruteIdeal {
  std::vector<E> members;
  bool prime, maximal;
};

bool ideal_by_definition(const TableAlgebra& a, const std::vector<bool>& in) {
  if (!in[a.zero()]) return false;
  const auto N = static_cast<E>(a.size());
  for (E x = 0; x < N; ++x)
    for (E y = 0; y < N; ++y) {
      if (in[x] && in[y] && !in[a.oplus(x, y)]) return false;
      // y <= x iff y * ~x = 0
      if (in[x] && a.odot(y, a.neg(x)) == a.zero() && !in[y]) return false;
    }
  return true;
}

std::vector<BruteIdeal> brute_ideals(const TableAlgebra& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<bool>> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<bool> in(n);
    for (std::size_t i = 0; i < n; ++i) in[i] = mask >> i & 1u;
    if (ideal_by_definition(a, in)) found.push_back(in);
  }
  std::vector<BruteIdeal> out;
  const auto N = static_cast<E>(n);
  for (const auto& in : found) {
    BruteIdeal b;
    for (E x = 0; x < N; ++x)
      if (in[x]) b.members.push_back(x);
    bool proper = b.members.size() < n;
    // prime: x * ~y or y * ~x in I for all x, y
    b.prime = proper;
    for (E x = 0; x < N && b.prime; ++x)
      for (E y = 0; y < N && b.prime; ++y)
        b.prime = in[a.odot(x, a.neg(y))] || in[a.odot(y, a.neg(x))];
    // maximal: no proper ideal strictly above
    b.maximal = proper;
    for (const auto& other : found) {
      std::size_t cnt = 0;
      bool sup = true;
      for (std::size_t i = 0; i < n; ++i) {
        cnt += other[i];
        sup = sup && (!in[i] || other[i]);
      }
      if (sup && cnt < n && cnt > b.members.size()) b.maximal = false;
    }
    out.push_back(std::move(b));
  }
  return out;
}

bool is_hom(const TableAlgebra& a, const TableAlgebra& b, const std::vector<E>& h) {
  const auto N = static_cast<E>(a.size());
  if (h[a.zero()] != b.zero()) return false;
  for (E x = 0; x < N; ++x) {
    if (h[a.neg(x)] != b.neg(h[x])) return false;
    for (E y = 0; y < N; ++y)
      if (h[a.oplus(x, y)] != b.oplus(h[x], h[y])) return false;
  }
  return true;
}

std::size_t brute_hom_count(const TableAlgebra& a, const TableAlgebra& b) {
  std::vector<E> h(a.size(), 0);
  std::size_t count = 0;
  const auto M = static_cast<E>(b.size());
  for (;;) {
    if (is_hom(a, b, h)) ++count;
    std::size_t i = 0;
    while (i < h.size() && ++h[i] == M) h[i++] = 0;
    if (i == h.size()) return count;
  }
}

std::vector<TableAlgebra> small_algebras() {
  std::vector<TableAlgebra> out;
  for (std::int64_t n = 1; n <= 6; ++n) out.push_back(TableAlgebra::chain(n));
  for (auto ns : std::vector<std::vector<std::int64_t>>{
           {1, 1}, {1, 2}, {2, 2}, {1, 3}, {1, 1, 1}, {2, 3}, {1, 1, 2}})
    out.push_back(TableAlgebra::product(ns));
  return out;
}

}  // namespace

TEST_CASE("table algebras: construction and validation") {
  TableAlgebra l2 = TableAlgebra::chain(2);
  CHECK(l2.size() == 3);
  CHECK(l2.oplus(1, 1) == 2);
  CHECK(l2.neg(0) == 2);
  CHECK(l2.is_chain());
  CHECK_FALSE(TableAlgebra::product({1, 1}).is_chain());
  // tables agree with the chain engine
  FiniteChain c(5);
  TableAlgebra t = TableAlgebra::chain(5);
  for (E x = 0; x <= 5; ++x)
    for (E y = 0; y <= 5; ++y) {
      CHECK(t.join(x, y) == c.join(x, y));
      CHECK(t.iff(x, y) == c.iff(x, y));
      CHECK(t.pow(x, 3) == c.pow(x, 3));
    }
  CHECK(eval(parse_formula("x^2 + 2.y"), {{"x", 2}, {"y", 1}}, t) == c.oplus(c.pow(2, 2), 2));
  std::vector<E> table{0, 1, 2, 1, 2, 2, 2, 2, 2};
  CHECK_NOTHROW(TableAlgebra(3, table, {2, 1, 0}, 0));
  // max instead of truncated sum: a Kleene algebra, not MV
  table[1 * 3 + 1] = 1;
  CHECK_THROWS_AS(TableAlgebra(3, table, {2, 1, 0}, 0), AlgebraError);
  CHECK_THROWS_AS(TableAlgebra(3, {0, 1, 2, 1, 2, 2, 2, 2, 2}, {1, 2, 0}, 0), AlgebraError);
  CHECK_THROWS_AS(TableAlgebra::product({4, 4, 4}), AlgebraError);
  CHECK(algebra_from_json(algebra_to_json(l2)) == l2);
  CHECK(algebra_to_json(TableAlgebra::chain(1)) ==
        R"({"version":1,"size":2,"zero":0,"oplus":[0,1,1,1],"neg":[1,0]})");
  CHECK_THROWS_AS(algebra_from_json(R"({"size":2})"), AlgebraError);
}

TEST_CASE("ideals: worked cases") {
  auto i2 = ideals(TableAlgebra::chain(2));
  REQUIRE(i2.size() == 2);
  CHECK(i2[0].members == std::vector<E>{0});
  CHECK(i2[0].prime);
  CHECK(i2[0].maximal);
  CHECK(i2[1].members.size() == 3);
  CHECK_FALSE(i2[1].prime);

  auto i11 = ideals(TableAlgebra::product({1, 1}));
  CHECK(i11.size() == 4);
  CHECK(std::count_if(i11.begin(), i11.end(), [](const Ideal& i) { return i.maximal; }) == 2);

  auto s1 = spectrum(TableAlgebra::chain(1));
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].members == std::vector<E>{0});
  CHECK(ideals(TableAlgebra::chain(1)).size() == 2);
}

TEST_CASE("ideals agree with subset enumeration") {
  for (const auto& a : small_algebras()) {
    auto fast = ideals(a);
    auto brute = brute_ideals(a);
    REQUIRE(fast.size() == brute.size());
    for (const auto& b : brute) {
      auto it = std::find_if(fast.begin(), fast.end(),
                             [&](const Ideal& i) { return i.members == b.members; });
      REQUIRE(it != fast.end());
      CHECK(it->prime == b.prime);
      CHECK(it->maximal == b.maximal);
      CHECK(is_ideal(a, b.members));
    }
  }
  CHECK_FALSE(is_ideal(TableAlgebra::chain(2), {0, 2}));
  CHECK_FALSE(is_ideal(TableAlgebra::chain(2), {1}));
}

TEST_CASE("quotients") {
  TableAlgebra l2 = TableAlgebra::chain(2);
  CHECK(quotient(l2, {0, 1, 2}).size() == 1);
  CHECK(quotient(l2, {0}) == l2);
  // (L1 x L2) / ({0} x L2): elements (0, k) are indices 0..2
  TableAlgebra p = TableAlgebra::product({1, 2});
  TableAlgebra q = quotient(p, {0, 1, 2});
  CHECK(isomorphic(q, TableAlgebra::chain(1)));
  CHECK_THROWS_AS(quotient(l2, {0, 2}), AlgebraError);
  // every quotient of every small algebra passes the MV checks on construction
  for (const auto& a : small_algebras())
    for (const auto& i : ideals(a)) CHECK_NOTHROW(quotient(a, i.members));
}

TEST_CASE("bipartite: worked cases") {
  CHECK(is_bipartite(TableAlgebra::product({1, 3})));
  CHECK_FALSE(is_bipartite(TableAlgebra::chain(3)));
  CHECK(is_bipartite(TableAlgebra::chain(1)));
  CHECK_FALSE(is_bipartite(quotient(TableAlgebra::chain(2), {0, 1, 2})));
}

TEST_CASE("homomorphisms agree with brute force") {
  auto algs = small_algebras();
  for (const auto& a : algs)
    for (const auto& b : algs) {
      if (std::pow(double(b.size()), double(a.size())) > 3e5) continue;
      auto hs = homomorphisms(a, b);
      for (const auto& h : hs) REQUIRE(is_hom(a, b, h));
      REQUIRE(hs.size() == brute_hom_count(a, b));
    }
  CHECK(isomorphic(TableAlgebra::product({1, 2}), TableAlgebra::product({2, 1})));
  CHECK_FALSE(isomorphic(TableAlgebra::product({1, 2}), TableAlgebra::chain(5)));
}

TEST_CASE("subalgebras") {
  TableAlgebra l4 = TableAlgebra::chain(4);
  CHECK(generated_subalgebra(l4, {2}) == std::vector<E>{0, 2, 4});
  CHECK(isomorphic(subalgebra(l4, {0, 2, 4}), TableAlgebra::chain(2)));
  CHECK(generated_subalgebra(l4, {1}).size() == 5);
  CHECK_THROWS_AS(subalgebra(l4, {0, 1, 4}), AlgebraError);
  CHECK(in_isp(TableAlgebra::chain(2), {TableAlgebra::chain(4)}));
  CHECK_FALSE(in_isp(TableAlgebra::chain(3), {TableAlgebra::chain(4)}));
  CHECK(in_isp(TableAlgebra::product({2, 1}), {TableAlgebra::chain(2)}));
}

TEST_CASE("bipartite algebras of Q^1 are exactly the members of Q") {
  auto suite = testing::bipq_suite();
  CHECK(suite.size() >= 20);
  for (const auto& c : suite) {
    INFO(c.name);
    REQUIRE(c.algebra.size() <= TableAlgebra::max_size);
    REQUIRE(c.algebra.size() > 1);
    REQUIRE(in_isp(c.algebra, testing::q1_tables(c.I)));
    CHECK(is_bipartite(c.algebra) == c.bipartite);
    CHECK(in_isp(c.algebra, testing::q_tables(c.I)) == c.bipartite);
  }
}

TEST_CASE("property: random subalgebras of products of chains") {
  std::mt19937_64 rng(97);
  int bip = 0, nonbip = 0;
  for (int i = 0; i < 60; ++i) {
    std::vector<std::int64_t> ns{1 + std::int64_t(rng() % 3), 1 + std::int64_t(rng() % 3)};
    if (i % 3 == 0) ns.push_back(1 + std::int64_t(rng() % 2));
    TableAlgebra p = TableAlgebra::product(ns);
    std::vector<E> gens{E(rng() % p.size()), E(rng() % p.size())};
    TableAlgebra a = subalgebra(p, generated_subalgebra(p, gens));
    if (a.size() == 1) continue;
    IndexSet I(ns.begin(), ns.end());
    INFO(algebra_to_json(a));
    REQUIRE(in_isp(a, testing::q1_tables(I)));
    bool b = is_bipartite(a);
    (b ? bip : nonbip)++;
    REQUIRE(b == in_isp(a, testing::q_tables(I)));
    for (const auto& id : ideals(a)) {
      auto q = quotient(a, id.members);
      REQUIRE(q.size() * id.members.size() == a.size());
    }
  }
  CHECK(bip > 5);
  CHECK(nonbip > 5);
}
