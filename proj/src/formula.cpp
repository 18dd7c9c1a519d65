#include "lukadmit/formula.hpp"

#include <functional>
#include <unordered_map>

namespace lukadmit {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

bool is_binary(Op op) {
  switch (op) {
    case Op::Oplus:
    case Op::Odot:
    case Op::Imp:
    case Op::Join:
    case Op::Meet:
    case Op::Iff:
      return true;
    default:
      return false;
  }
}

bool is_core(Op op) {
  return op == Op::Zero || op == Op::Var || op == Op::Neg || op == Op::Oplus;
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error("parse error at column " + std::to_string(position) + ": " + what),
      position_(position) {}

Formula make_node(Op op, std::string name, std::uint32_t count, const Formula* a,
                  const Formula* b) {
  auto node = std::make_shared<Formula::Node>();
  node->op = op;
  node->count = count;
  node->name = std::move(name);
  std::size_t h = mix(static_cast<std::size_t>(op), count);
  if (!node->name.empty()) h = mix(h, std::hash<std::string>{}(node->name));
  if (a) {
    node->args.push_back(*a);
    h = mix(h, a->hash());
  }
  if (b) {
    node->args.push_back(*b);
    h = mix(h, b->hash());
  }
  node->hash = h;
  return Formula(std::move(node));
}

Formula Formula::zero() {
  static const Formula z = make_node(Op::Zero, {}, 0, nullptr, nullptr);
  return z;
}

Formula Formula::one() {
  static const Formula o = make_node(Op::One, {}, 0, nullptr, nullptr);
  return o;
}

Formula Formula::var(std::string name) {
  if (name.empty()) throw std::invalid_argument("variable name must not be empty");
  return make_node(Op::Var, std::move(name), 0, nullptr, nullptr);
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
std::uint32_t Formula::count() const { return node_->count; }

const Formula& Formula::lhs() const {
  if (node_->args.empty()) throw std::logic_error("formula has no operands");
  return node_->args[0];
}

const Formula& Formula::rhs() const {
  if (node_->args.size() < 2) throw std::logic_error("formula is not binary");
  return node_->args[1];
}

std::size_t Formula::hash() const { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.op != y.op || x.count != y.count || x.name != y.name ||
      x.args.size() != y.args.size())
    return false;
  for (std::size_t i = 0; i < x.args.size(); ++i)
    if (!(x.args[i] == y.args[i])) return false;
  return true;
}

Formula neg(Formula a) { return make_node(Op::Neg, {}, 0, &a, nullptr); }
Formula oplus(Formula a, Formula b) { return make_node(Op::Oplus, {}, 0, &a, &b); }
Formula odot(Formula a, Formula b) { return make_node(Op::Odot, {}, 0, &a, &b); }
Formula imp(Formula a, Formula b) { return make_node(Op::Imp, {}, 0, &a, &b); }
Formula join(Formula a, Formula b) { return make_node(Op::Join, {}, 0, &a, &b); }
Formula meet(Formula a, Formula b) { return make_node(Op::Meet, {}, 0, &a, &b); }
Formula iff(Formula a, Formula b) { return make_node(Op::Iff, {}, 0, &a, &b); }
Formula mult(std::uint32_t n, Formula a) { return make_node(Op::Mult, {}, n, &a, nullptr); }
Formula pow(Formula a, std::uint32_t n) { return make_node(Op::Pow, {}, n, &a, nullptr); }

namespace {

// Rebuilds a node with new operands, reusing the original when nothing changed.
Formula rebuild(const Formula& f, std::vector<Formula> args) {
  bool same = true;
  for (std::size_t i = 0; i < args.size(); ++i)
    if (args[i].id() != (i == 0 ? f.lhs() : f.rhs()).id()) same = false;
  if (same) return f;
  switch (f.op()) {
    case Op::Neg:
      return neg(args[0]);
    case Op::Mult:
      return mult(f.count(), args[0]);
    case Op::Pow:
      return pow(args[0], f.count());
    default:
      return make_node(f.op(), {}, 0, &args[0], &args[1]);
  }
}

using Memo = std::unordered_map<const Formula::Node*, Formula>;

template <class Leaf>
Formula map_tree(const Formula& f, Memo& memo, const Leaf& leaf) {
  if (auto it = memo.find(f.id()); it != memo.end()) return it->second;
  Formula out = f;
  if (f.op() == Op::Var) {
    out = leaf(f);
  } else if (f.op() != Op::Zero && f.op() != Op::One) {
    std::vector<Formula> args;
    args.push_back(map_tree(f.lhs(), memo, leaf));
    if (is_binary(f.op())) args.push_back(map_tree(f.rhs(), memo, leaf));
    out = rebuild(f, std::move(args));
  }
  memo.emplace(f.id(), out);
  return out;
}

}  // namespace

Formula substitute(const Formula& f, const Substitution& sigma) {
  Memo memo;
  return map_tree(f, memo, [&](const Formula& v) {
    auto it = sigma.find(v.name());
    return it == sigma.end() ? v : it->second;
  });
}

namespace {

Formula core_one() { return neg(Formula::zero()); }
Formula core_odot(const Formula& a, const Formula& b) {
  return neg(oplus(neg(a), neg(b)));
}
Formula core_join(const Formula& a, const Formula& b) {
  return oplus(neg(oplus(neg(a), b)), b);
}
Formula core_imp(const Formula& a, const Formula& b) { return oplus(neg(a), b); }
Formula core_meet(const Formula& a, const Formula& b) {
  return neg(core_join(neg(a), neg(b)));
}

Formula normalize_rec(const Formula& f, Memo& memo) {
  if (auto it = memo.find(f.id()); it != memo.end()) return it->second;
  Formula out = f;
  switch (f.op()) {
    case Op::Zero:
    case Op::Var:
      break;
    case Op::One:
      out = core_one();
      break;
    case Op::Neg:
      out = rebuild(f, {normalize_rec(f.lhs(), memo)});
      break;
    case Op::Oplus:
      out = rebuild(f, {normalize_rec(f.lhs(), memo), normalize_rec(f.rhs(), memo)});
      break;
    case Op::Odot:
      out = core_odot(normalize_rec(f.lhs(), memo), normalize_rec(f.rhs(), memo));
      break;
    case Op::Imp:
      out = core_imp(normalize_rec(f.lhs(), memo), normalize_rec(f.rhs(), memo));
      break;
    case Op::Join:
      out = core_join(normalize_rec(f.lhs(), memo), normalize_rec(f.rhs(), memo));
      break;
    case Op::Meet:
      out = core_meet(normalize_rec(f.lhs(), memo), normalize_rec(f.rhs(), memo));
      break;
    case Op::Iff: {
      Formula a = normalize_rec(f.lhs(), memo);
      Formula b = normalize_rec(f.rhs(), memo);
      out = core_meet(core_imp(a, b), core_imp(b, a));
      break;
    }
    case Op::Mult: {
      // 0x = 0, (n+1)x = x + nx
      Formula a = normalize_rec(f.lhs(), memo);
      out = Formula::zero();
      for (std::uint32_t i = 0; i < f.count(); ++i) out = oplus(a, out);
      break;
    }
    case Op::Pow: {
      // x^0 = 1, x^(n+1) = x * x^n
      Formula a = normalize_rec(f.lhs(), memo);
      out = core_one();
      for (std::uint32_t i = 0; i < f.count(); ++i) out = core_odot(a, out);
      break;
    }
  }
  memo.emplace(f.id(), out);
  return out;
}

}  // namespace

Formula normalize(const Formula& f) {
  Memo memo;
  return normalize_rec(f, memo);
}

bool is_normalized(const Formula& f) {
  std::unordered_map<const Formula::Node*, bool> seen;
  std::function<bool(const Formula&)> rec = [&](const Formula& g) {
    if (auto it = seen.find(g.id()); it != seen.end()) return it->second;
    bool ok = is_core(g.op());
    if (ok && g.op() == Op::Neg) ok = rec(g.lhs());
    if (ok && g.op() == Op::Oplus) ok = rec(g.lhs()) && rec(g.rhs());
    seen.emplace(g.id(), ok);
    return ok;
  };
  return rec(f);
}

std::size_t size(const Formula& f) {
  std::unordered_map<const Formula::Node*, std::size_t> memo;
  std::function<std::size_t(const Formula&)> rec = [&](const Formula& g) -> std::size_t {
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
    std::size_t s = 1;
    if (g.op() == Op::Neg || g.op() == Op::Mult || g.op() == Op::Pow) s += rec(g.lhs());
    if (is_binary(g.op())) s += rec(g.lhs()) + rec(g.rhs());
    memo.emplace(g.id(), s);
    return s;
  };
  return rec(f);
}

std::size_t depth(const Formula& f) {
  std::unordered_map<const Formula::Node*, std::size_t> memo;
  std::function<std::size_t(const Formula&)> rec = [&](const Formula& g) -> std::size_t {
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
    std::size_t d = 0;
    if (g.op() == Op::Neg || g.op() == Op::Mult || g.op() == Op::Pow) d = 1 + rec(g.lhs());
    if (is_binary(g.op())) d = 1 + std::max(rec(g.lhs()), rec(g.rhs()));
    memo.emplace(g.id(), d);
    return d;
  };
  return rec(f);
}

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  std::unordered_map<const Formula::Node*, bool> seen;
  std::function<void(const Formula&)> rec = [&](const Formula& g) {
    if (!seen.emplace(g.id(), true).second) return;
    if (g.op() == Op::Var) out.insert(g.name());
    if (g.op() == Op::Neg || g.op() == Op::Mult || g.op() == Op::Pow) rec(g.lhs());
    if (is_binary(g.op())) {
      rec(g.lhs());
      rec(g.rhs());
    }
  };
  rec(f);
  return out;
}

std::set<std::string> variables(const Rule& r) {
  std::set<std::string> out = variables(r.conclusion);
  for (const auto& p : r.premises) {
    auto vs = variables(p);
    out.insert(vs.begin(), vs.end());
  }
  return out;
}

Rule substitute(const Rule& r, const Substitution& sigma) {
  Rule out;
  for (const auto& p : r.premises) out.premises.push_back(substitute(p, sigma));
  out.conclusion = substitute(r.conclusion, sigma);
  return out;
}

}  // namespace lukadmit
