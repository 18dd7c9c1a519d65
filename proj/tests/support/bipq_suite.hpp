#pragma once

#include <string>
#include <vector>

#include "lukadmit/algebra.hpp"
#include "lukadmit/variety.hpp"

namespace lukadmit::testing {

/// A finite algebra known to lie in Q^1_{I,empty}, with its bipartiteness
/// worked out by hand from its decomposition into chains.
struct BipCase {
  std::string name;
  IndexSet I;
  TableAlgebra algebra;
  bool bipartite;
};

inline std::vector<TableAlgebra> q1_tables(const IndexSet& I) {
  std::vector<TableAlgebra> out;
  for (auto m : I) out.push_back(TableAlgebra::chain(m));
  return out;
}

inline std::vector<TableAlgebra> q_tables(const IndexSet& I) {
  std::vector<TableAlgebra> out;
  for (auto m : I) out.push_back(TableAlgebra::product({1, m}));
  return out;
}

inline std::vector<BipCase> bipq_suite() {
  using T = TableAlgebra;
  auto gen = [](const T& a, std::vector<T::Element> g) {
    return subalgebra(a, generated_subalgebra(a, g));
  };
  const T l2l2 = T::product({2, 2});
  const T l4l2 = T::product({4, 2});
  return {
      {"L1", {1}, T::chain(1), true},
      {"L1xL1xL1", {1}, T::product({1, 1, 1}), true},
      {"L1xL2", {2}, T::product({1, 2}), true},
      {"L2", {2}, T::chain(2), false},
      {"L1 in L1xL2", {2}, T::chain(1), true},
      {"L2xL2", {2}, l2l2, false},
      {"L1xL1", {2}, T::product({1, 1}), true},
      {"L1xL2xL2", {2}, T::product({1, 2, 2}), true},
      {"<(1,0)> in L2xL2", {2}, gen(l2l2, {3}), true},
      {"L4", {4}, T::chain(4), false},
      {"L1xL4", {4}, T::product({1, 4}), true},
      {"L2xL4", {4}, T::product({2, 4}), false},
      {"L1xL2 in L1xL4", {4}, T::product({1, 2}), true},
      {"L2 in L4", {4}, T::chain(2), false},
      {"<(1,1)> in L4xL2", {4}, gen(l4l2, {4}), false},
      {"L1xL3", {3}, T::product({1, 3}), true},
      {"L3xL3", {3}, T::product({3, 3}), false},
      {"L2xL3", {2, 3}, T::product({2, 3}), false},
      {"L1xL2xL3", {2, 3}, T::product({1, 2, 3}), true},
      {"L6", {6}, T::chain(6), false},
      {"L1xL6", {6}, T::product({1, 6}), true},
      {"L1xL2xL3 in (L1xL6)^2", {6}, T::product({1, 2, 3}), true},
  };
}

}  // namespace lukadmit::testing
