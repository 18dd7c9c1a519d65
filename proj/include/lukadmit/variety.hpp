#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lukadmit {

using IndexSet = std::set<std::int64_t>;

/// (I, J) indexing the variety generated by L_i (i in I) and L_j^omega (j in J).
struct ReducedPair {
  IndexSet I;
  IndexSet J;

  bool operator==(const ReducedPair&) const = default;
  auto operator<=>(const ReducedPair&) const = default;
};

class PairError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_reduced(const IndexSet& I, const IndexSet& J);

/// Drops every i in I dividing another element of I or J, and every j in J
/// dividing another element of J. Throws PairError when both sets are empty
/// or contain a non-positive index.
ReducedPair reduce(const IndexSet& I, const IndexSet& J);

/// Validates that (I, J) is already reduced.
ReducedPair make_pair_checked(const IndexSet& I, const IndexSet& J);

/// L_k belongs to the variety.
bool contains_chain(const ReducedPair& p, std::int64_t k);
/// L_k^omega belongs to the variety.
bool contains_lex_chain(const ReducedPair& p, std::int64_t k);
bool leq(const ReducedPair& a, const ReducedPair& b);

/// max{max I, max J + 1}, with max of the empty set taken as 0.
std::int64_t critical_n(const ReducedPair& p);

IndexSet divisors(std::int64_t n);
IndexSet divisors(const IndexSet& s);
bool is_prime(std::int64_t n);
IndexSet primes_in(const IndexSet& s);
std::int64_t lcm_of(const ReducedPair& p);

struct DivSets {
  IndexSet div_I, div_J;
  /// primes of Div(J) \ Div(I)
  IndexSet q_primes;
  /// primes of Div(I)
  IndexSet u_primes;
  /// I_q = {n in I : q | n} for q in u_primes
  std::map<std::int64_t, IndexSet> I_q;
};
DivSets div_sets(const ReducedPair& p);

/// "4,6" -> {4, 6}; empty text -> {}.
IndexSet parse_index_set(std::string_view text);
std::string format_index_set(const IndexSet& s);
std::string format_pair(const ReducedPair& p);

/// All reduced pairs with every index at most m.
std::vector<ReducedPair> reduced_pairs_up_to(std::int64_t m);

}  // namespace lukadmit
