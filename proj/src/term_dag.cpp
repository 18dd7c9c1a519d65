#include "lukadmit/term_dag.hpp"

#include <stdexcept>

namespace lukadmit {

TermDag::TermDag(std::vector<std::string> variable_order) {
  for (auto& name : variable_order) {
    if (var_ids_.count(name)) continue;
    var_ids_.emplace(name, static_cast<std::int32_t>(vars_.size()));
    vars_.push_back(std::move(name));
  }
}

std::size_t TermDag::KeyHash::operator()(const Key& k) const {
  std::size_t h = static_cast<std::size_t>(k.op);
  for (std::size_t v : {static_cast<std::size_t>(k.count), static_cast<std::size_t>(k.lhs),
                        static_cast<std::size_t>(k.rhs), static_cast<std::size_t>(k.var)})
    h = h * 1000003u ^ v;
  return h;
}

std::int32_t TermDag::intern(const DagNode& n) {
  Key key{n.op, n.count, n.lhs, n.rhs, n.var};
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  auto id = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back(n);
  index_.emplace(key, id);
  return id;
}

std::int32_t TermDag::variable_index(const std::string& name) const {
  auto it = var_ids_.find(name);
  return it == var_ids_.end() ? -1 : it->second;
}

std::int32_t TermDag::add(const Formula& f) {
  // Node addresses key the memo, so the formula must outlive the DAG.
  keep_alive_.push_back(f);
  return add_rec(f);
}

std::int32_t TermDag::add_rec(const Formula& f) {
  if (auto it = seen_.find(f.id()); it != seen_.end()) return it->second;
  DagNode n{f.op()};
  switch (f.op()) {
    case Op::Zero:
    case Op::One:
      break;
    case Op::Var: {
      auto [it, fresh] = var_ids_.emplace(f.name(), static_cast<std::int32_t>(vars_.size()));
      if (fresh) vars_.push_back(f.name());
      n.var = it->second;
      break;
    }
    case Op::Neg:
      n.lhs = add_rec(f.lhs());
      break;
    case Op::Mult:
    case Op::Pow:
      n.count = f.count();
      n.lhs = add_rec(f.lhs());
      break;
    default:
      n.lhs = add_rec(f.lhs());
      n.rhs = add_rec(f.rhs());
      break;
  }
  std::int32_t id = intern(n);
  seen_.emplace(f.id(), id);
  return id;
}

}  // namespace lukadmit
