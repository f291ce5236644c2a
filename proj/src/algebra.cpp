#include "subauct/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "subauct/detail/valuation_impl.hpp"
#include "subauct/hierarchy.hpp"

namespace subauct {

namespace {

void check_same_universe(const Valuation& a, const Valuation& b,
                         const char* op) {
  if (a.universe_size() != b.universe_size())
    throw UniverseMismatch(std::string(op) + ": operands over universes " +
                           std::to_string(a.universe_size()) + " and " +
                           std::to_string(b.universe_size()));
}

/// Compiled bid expression: delegates to the OR/XOR node tree but keeps the
/// expression itself (for OXS recognition) and the `expression` kind tag.
class ExpressionImpl : public detail::ValuationImpl {
 public:
  ExpressionImpl(BidExpression expr,
                 std::shared_ptr<const detail::ValuationImpl> compiled)
      : ValuationImpl(compiled->m(), ValuationKind::expression),
        expr_(std::move(expr)),
        compiled_(std::move(compiled)) {}
  Rational eval(std::uint32_t mask) const override {
    return compiled_->eval(mask);
  }
  const BidExpression& expr() const { return expr_; }
  const std::shared_ptr<const detail::ValuationImpl>& compiled() const {
    return compiled_;
  }

 private:
  BidExpression expr_;
  std::shared_ptr<const detail::ValuationImpl> compiled_;
};

std::shared_ptr<const detail::ValuationImpl> compile_node(
    const BidExpression& e, int m) {
  if (e.is_leaf())
    return make_singleton(m, e.item(), e.price()).impl();
  std::shared_ptr<const detail::ValuationImpl> acc;
  for (const BidExpression& child : e.children()) {
    auto c = compile_node(child, m);
    if (!acc) {
      acc = std::move(c);
    } else if (e.op() == BidExpression::Op::or_op) {
      acc = std::make_shared<detail::OrImpl>(std::move(acc), std::move(c));
    } else {
      acc = std::make_shared<detail::XorImpl>(std::move(acc), std::move(c));
    }
  }
  return acc;
}

}  // namespace

Valuation xor_combine(const Valuation& v1, const Valuation& v2) {
  check_same_universe(v1, v2, "xor");
  return Valuation(std::make_shared<detail::XorImpl>(v1.impl(), v2.impl()));
}

Valuation or_combine(const Valuation& v1, const Valuation& v2) {
  check_same_universe(v1, v2, "or");
  return Valuation(std::make_shared<detail::OrImpl>(v1.impl(), v2.impl()));
}

ItemSet or_witness(const Valuation& or_valuation, const ItemSet& s) {
  if (s.universe_size() != or_valuation.universe_size())
    throw UniverseMismatch("or_witness: universe mismatch");
  const detail::ValuationImpl* impl = or_valuation.impl().get();
  if (auto* e = dynamic_cast<const ExpressionImpl*>(impl))
    impl = e->compiled().get();
  auto* node = dynamic_cast<const detail::OrImpl*>(impl);
  if (!node) throw SubauctError("or_witness: not an OR-combined valuation");
  return ItemSet(s.universe_size(), node->eval_with_witness(s.bits()).second);
}

Valuation or_all(const std::vector<Valuation>& vs, int m) {
  if (vs.empty()) return make_zero(m);
  Valuation acc = vs[0];
  for (size_t i = 1; i < vs.size(); ++i) acc = or_combine(acc, vs[i]);
  return acc;
}

Valuation xor_all(const std::vector<Valuation>& vs) {
  if (vs.empty()) throw DimensionMismatch("xor_all: no operands");
  Valuation acc = vs[0];
  for (size_t i = 1; i < vs.size(); ++i) acc = xor_combine(acc, vs[i]);
  return acc;
}

// ---- BidExpression ----

BidExpression BidExpression::leaf(int item, Rational price) {
  if (item < 0) throw UniverseMismatch("expression leaf: negative item");
  if (price < 0)
    throw NegativeValue("expression leaf: negative price " + to_string(price));
  BidExpression e;
  e.op_ = Op::leaf;
  e.item_ = item;
  e.price_ = std::move(price);
  return e;
}

BidExpression BidExpression::or_node(std::vector<BidExpression> children) {
  if (children.size() < 2)
    throw DimensionMismatch("OR node needs at least two children");
  BidExpression e;
  e.op_ = Op::or_op;
  e.children_ = std::move(children);
  return e;
}

BidExpression BidExpression::xor_node(std::vector<BidExpression> children) {
  if (children.size() < 2)
    throw DimensionMismatch("XOR node needs at least two children");
  BidExpression e;
  e.op_ = Op::xor_op;
  e.children_ = std::move(children);
  return e;
}

Valuation to_valuation(const BidExpression& e, int m) {
  return Valuation(std::make_shared<ExpressionImpl>(e, compile_node(e, m)));
}

Rational eval_expression(const BidExpression& e, const ItemSet& s) {
  return to_valuation(e, s.universe_size()).value(s);
}

// ---- XosExpression ----

XosExpression::XosExpression(int m_, std::vector<std::vector<Rational>> clauses_)
    : m(m_), clauses(std::move(clauses_)) {
  if (clauses.empty()) throw DimensionMismatch("XOS expression with no clauses");
  for (const auto& clause : clauses) {
    if (clause.size() != static_cast<size_t>(m))
      throw DimensionMismatch("XOS clause of length " +
                              std::to_string(clause.size()) + ", expected " +
                              std::to_string(m));
    for (const Rational& q : clause)
      if (q < 0) throw NegativeValue("negative clause price " + to_string(q));
  }
}

Rational XosExpression::eval(const ItemSet& s) const {
  if (s.universe_size() != m)
    throw UniverseMismatch("XOS eval: universe mismatch");
  Rational best(0);
  bool first = true;
  for (const auto& clause : clauses) {
    Rational total(0);
    std::uint32_t mask = s.bits();
    while (mask) {
      int i = std::countr_zero(mask);
      total += clause[static_cast<size_t>(i)];
      mask &= mask - 1;
    }
    if (first || total > best) {
      best = std::move(total);
      first = false;
    }
  }
  return best;
}

Valuation XosExpression::to_valuation() const {
  auto clause_expr = [&](const std::vector<Rational>& clause) {
    std::vector<BidExpression> leaves;
    for (int i = 0; i < m; ++i)
      if (clause[static_cast<size_t>(i)] > 0)
        leaves.push_back(
            BidExpression::leaf(i, clause[static_cast<size_t>(i)]));
    if (leaves.empty()) return BidExpression::leaf(0, Rational(0));
    if (leaves.size() == 1) return leaves[0];
    return BidExpression::or_node(std::move(leaves));
  };
  std::vector<BidExpression> parts;
  parts.reserve(clauses.size());
  for (const auto& clause : clauses) parts.push_back(clause_expr(clause));
  BidExpression root = parts.size() == 1
                           ? parts[0]
                           : BidExpression::xor_node(std::move(parts));
  return subauct::to_valuation(root, m);
}

Rational eval_xos(const XosExpression& e, const ItemSet& s) {
  return e.eval(s);
}

XosExpression sm_to_xos(const Valuation& v) {
  const int m = v.universe_size();
  if (m > 8)
    throw UniverseTooLarge("sm_to_xos: m! clauses infeasible beyond m = 8");
  if (auto check = is_submodular(v); !check.holds)
    throw NotSubmodular("sm_to_xos: input is not submodular (" +
                        check.witness->describe() + ")");
  const std::vector<Rational>& t = v.table();
  std::vector<int> perm(static_cast<size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Rational>> clauses;
  do {
    std::vector<Rational> clause(static_cast<size_t>(m), Rational(0));
    std::uint32_t prefix = 0;
    for (int j = 0; j < m; ++j) {
      int item = perm[static_cast<size_t>(j)];
      std::uint32_t next = prefix | (1u << item);
      clause[static_cast<size_t>(item)] = t[next] - t[prefix];
      prefix = next;
    }
    clauses.push_back(std::move(clause));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return XosExpression(m, std::move(clauses));
}

XosExpression dedup_clauses(const XosExpression& e) {
  std::vector<std::vector<Rational>> kept;
  for (const auto& clause : e.clauses)
    if (std::find(kept.begin(), kept.end(), clause) == kept.end())
      kept.push_back(clause);
  return XosExpression(e.m, std::move(kept));
}

// ---- OXS recognition ----

namespace {

bool flatten_xor_leaves(const BidExpression& e,
                        std::vector<std::pair<int, Rational>>& out) {
  if (e.is_leaf()) {
    out.emplace_back(e.item(), e.price());
    return true;
  }
  if (e.op() != BidExpression::Op::xor_op) return false;
  for (const BidExpression& c : e.children())
    if (!flatten_xor_leaves(c, out)) return false;
  return true;
}

bool collect_or_clauses(const BidExpression& e, OxsClauses& out) {
  if (e.op() == BidExpression::Op::or_op) {
    for (const BidExpression& c : e.children())
      if (!collect_or_clauses(c, out)) return false;
    return true;
  }
  std::vector<std::pair<int, Rational>> clause;
  if (!flatten_xor_leaves(e, clause)) return false;
  out.push_back(std::move(clause));
  return true;
}

std::optional<OxsClauses> as_oxs_impl(const detail::ValuationImpl* impl);

std::optional<OxsClauses> combine_or(const detail::OrImpl* node) {
  auto left = as_oxs_impl(node->left().get());
  if (!left) return std::nullopt;
  auto right = as_oxs_impl(node->right().get());
  if (!right) return std::nullopt;
  left->insert(left->end(), right->begin(), right->end());
  return left;
}

std::optional<OxsClauses> as_oxs_impl(const detail::ValuationImpl* impl) {
  using detail::AdditiveImpl;
  using detail::SingletonImpl;
  using detail::UnitDemandImpl;
  switch (impl->kind()) {
    case ValuationKind::singleton: {
      auto* s = static_cast<const SingletonImpl*>(impl);
      return OxsClauses{{{s->item(), s->price()}}};
    }
    case ValuationKind::additive: {
      auto* a = static_cast<const AdditiveImpl*>(impl);
      OxsClauses clauses;
      for (int i = 0; i < impl->m(); ++i)
        if (a->prices()[static_cast<size_t>(i)] > 0)
          clauses.push_back({{i, a->prices()[static_cast<size_t>(i)]}});
      return clauses;
    }
    case ValuationKind::unit_demand: {
      auto* u = static_cast<const UnitDemandImpl*>(impl);
      std::vector<std::pair<int, Rational>> clause;
      for (int i = 0; i < impl->m(); ++i)
        if (u->prices()[static_cast<size_t>(i)] > 0)
          clause.emplace_back(i, u->prices()[static_cast<size_t>(i)]);
      if (clause.empty()) return OxsClauses{};
      return OxsClauses{std::move(clause)};
    }
    case ValuationKind::expression: {
      auto* e = static_cast<const ExpressionImpl*>(impl);
      OxsClauses clauses;
      if (!collect_or_clauses(e->expr(), clauses)) return std::nullopt;
      return clauses;
    }
    case ValuationKind::or_combined:
      return combine_or(static_cast<const detail::OrImpl*>(impl));
    case ValuationKind::xor_combined: {
      // XOR of two single-clause forms is again a single clause
      auto* x = static_cast<const detail::XorImpl*>(impl);
      auto left = as_oxs_impl(x->left().get());
      auto right = as_oxs_impl(x->right().get());
      if (!left || !right) return std::nullopt;
      if (left->size() > 1 || right->size() > 1) return std::nullopt;
      std::vector<std::pair<int, Rational>> clause;
      if (!left->empty()) clause = (*left)[0];
      if (!right->empty())
        clause.insert(clause.end(), (*right)[0].begin(), (*right)[0].end());
      return OxsClauses{std::move(clause)};
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<OxsClauses> as_oxs(const Valuation& v) {
  return as_oxs_impl(v.impl().get());
}

}  // namespace subauct
