#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "subauct/valuation.hpp"

namespace subauct {

/// XOR of two valuations: pointwise max. The bidder picks the better of two
/// incompatible personalities.
Valuation xor_combine(const Valuation& v1, const Valuation& v2);

/// OR of two valuations: best split of the queried set between the two.
/// Evaluation enumerates 2^|S| splits; the winning split is memoized and
/// retrievable through or_witness().
Valuation or_combine(const Valuation& v1, const Valuation& v2);

/// For a valuation produced by or_combine: the part of `s` handed to the
/// left operand in the optimal split (smallest encoding among ties).
ItemSet or_witness(const Valuation& or_valuation, const ItemSet& s);

/// Folds. or_all of an empty list is the zero valuation over m items;
/// xor_all requires at least one operand.
Valuation or_all(const std::vector<Valuation>& vs, int m);
Valuation xor_all(const std::vector<Valuation>& vs);

/// Finite OR/XOR tree over singleton bids (item, price >= 0). Internal
/// nodes have at least two children; child order is preserved.
class BidExpression {
 public:
  enum class Op { leaf, or_op, xor_op };

  static BidExpression leaf(int item, Rational price);
  static BidExpression or_node(std::vector<BidExpression> children);
  static BidExpression xor_node(std::vector<BidExpression> children);

  Op op() const { return op_; }
  bool is_leaf() const { return op_ == Op::leaf; }
  int item() const { return item_; }
  const Rational& price() const { return price_; }
  const std::vector<BidExpression>& children() const { return children_; }

 private:
  BidExpression() = default;
  Op op_ = Op::leaf;
  int item_ = -1;
  Rational price_;
  std::vector<BidExpression> children_;
};

/// Compiles an expression over a universe of m items into a valuation
/// (kind = expression). Leaf items must lie in [0, m).
Valuation to_valuation(const BidExpression& e, int m);

/// Recursive OR/XOR semantics applied directly to the expression.
Rational eval_expression(const BidExpression& e, const ItemSet& s);

/// XOR of additive clauses: v(S) = max over clauses of the clause's sum
/// over S. Every clause has length m, entries >= 0, and there is at least
/// one clause.
struct XosExpression {
  int m;
  std::vector<std::vector<Rational>> clauses;

  XosExpression(int m_, std::vector<std::vector<Rational>> clauses_);
  Rational eval(const ItemSet& s) const;
  Valuation to_valuation() const;
};

Rational eval_xos(const XosExpression& e, const ItemSet& s);

/// The permutation construction: one clause per permutation pi, pricing
/// item pi(j) at v(pi(j) | {pi(1..j-1)}). Exactly m! clauses, equal to v on
/// every subset. Requires a submodular input and m <= 8.
XosExpression sm_to_xos(const Valuation& v);

/// Optional post-pass: drops duplicate clauses (evaluation unchanged).
XosExpression dedup_clauses(const XosExpression& e);

/// OR-of-XOR-of-singletons view: one entry per XOR clause, each a list of
/// (item, price) bids. Recognizes expression trees in OXS shape as well as
/// the trivially-OXS kinds (singleton, additive, unit_demand, zero).
using OxsClauses = std::vector<std::vector<std::pair<int, Rational>>>;
std::optional<OxsClauses> as_oxs(const Valuation& v);

}  // namespace subauct
