#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lukadmit/formula.hpp"

namespace lukadmit {

struct DagNode {
  Op op;
  std::uint32_t count = 0;
  std::int32_t lhs = -1;
  std::int32_t rhs = -1;
  std::int32_t var = -1;
};

/// Hash-consed, topologically ordered node list shared by several formulas.
/// Structurally equal subterms map to one node, so evaluation cost is linear
/// in the number of distinct subterms.
class TermDag {
 public:
  TermDag() = default;
  explicit TermDag(std::vector<std::string> variable_order);

  std::int32_t add(const Formula& f);

  const std::vector<DagNode>& nodes() const { return nodes_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::int32_t variable_index(const std::string& name) const;

 private:
  struct Key {
    Op op;
    std::uint32_t count;
    std::int32_t lhs, rhs, var;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  std::int32_t intern(const DagNode& n);
  std::int32_t add_rec(const Formula& f);

  std::vector<DagNode> nodes_;
  std::vector<std::string> vars_;
  std::unordered_map<std::string, std::int32_t> var_ids_;
  std::unordered_map<Key, std::int32_t, KeyHash> index_;
  std::unordered_map<const Formula::Node*, std::int32_t> seen_;
  std::vector<Formula> keep_alive_;
};

/// Evaluates every node of the DAG into `v`, reusing its storage. `Alg`
/// provides zero/top/neg/oplus/odot/imp/join/meet/iff/mult/pow on `Alg::Element`.
template <class Alg>
void evaluate_into(const TermDag& dag, const Alg& alg, std::span<const typename Alg::Element> vars,
                   std::vector<typename Alg::Element>& v) {
  v.clear();
  v.reserve(dag.nodes().size());
  for (const DagNode& n : dag.nodes()) {
    switch (n.op) {
      case Op::Zero: v.push_back(alg.zero()); break;
      case Op::One: v.push_back(alg.top()); break;
      case Op::Var: v.push_back(vars[static_cast<std::size_t>(n.var)]); break;
      case Op::Neg: v.push_back(alg.neg(v[n.lhs])); break;
      case Op::Oplus: v.push_back(alg.oplus(v[n.lhs], v[n.rhs])); break;
      case Op::Odot: v.push_back(alg.odot(v[n.lhs], v[n.rhs])); break;
      case Op::Imp: v.push_back(alg.imp(v[n.lhs], v[n.rhs])); break;
      case Op::Join: v.push_back(alg.join(v[n.lhs], v[n.rhs])); break;
      case Op::Meet: v.push_back(alg.meet(v[n.lhs], v[n.rhs])); break;
      case Op::Iff: v.push_back(alg.iff(v[n.lhs], v[n.rhs])); break;
      case Op::Mult: v.push_back(alg.mult(n.count, v[n.lhs])); break;
      case Op::Pow: v.push_back(alg.pow(v[n.lhs], n.count)); break;
    }
  }
}

template <class Alg>
std::vector<typename Alg::Element> evaluate(const TermDag& dag, const Alg& alg,
                                            std::span<const typename Alg::Element> vars) {
  std::vector<typename Alg::Element> v;
  evaluate_into(dag, alg, vars, v);
  return v;
}

}  // namespace lukadmit
