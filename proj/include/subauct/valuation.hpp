#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subauct/errors.hpp"
#include "subauct/itemset.hpp"
#include "subauct/rational.hpp"

namespace subauct {

enum class ValuationKind {
  table,
  singleton,
  additive,
  unit_demand,
  budgeted_additive,
  symmetric,
  coverage,
  expression,
  // derived forms (not buildable from an instance file directly)
  or_combined,
  xor_combined,
  marginal,
};

std::string kind_name(ValuationKind k);

namespace detail {
class ValuationImpl;
}

/// Per-item prices, all >= 0, one per item of the universe.
class PriceVector {
 public:
  explicit PriceVector(std::vector<Rational> prices);
  static PriceVector zero(int m);

  int size() const { return static_cast<int>(p_.size()); }
  const Rational& operator[](int i) const { return p_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& prices() const { return p_; }

  /// Sum of prices over the members of `mask`.
  Rational total(std::uint32_t mask) const;

 private:
  std::vector<Rational> p_;
};

/// An immutable monotone set function v with v(empty) = 0, over a universe
/// of m items. Values are exact rationals >= 0. Construction validates
/// normalization and monotonicity (exhaustively for tables, by construction
/// for the parametric kinds). Evaluation is pure; instances can be shared
/// and evaluated concurrently.
class Valuation {
 public:
  int universe_size() const;
  ValuationKind kind() const;

  Rational value(const ItemSet& s) const;
  /// Fast path; `mask` must fit the universe.
  Rational value(std::uint32_t mask) const;

  /// Dense table of all 2^m values, cached after the first call.
  /// Requires m within the enumeration cap.
  const std::vector<Rational>& table() const;

  /// Internal handle, shared by the operator modules.
  const std::shared_ptr<const detail::ValuationImpl>& impl() const {
    return impl_;
  }
  explicit Valuation(std::shared_ptr<const detail::ValuationImpl> impl)
      : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<const detail::ValuationImpl> impl_;
};

// ---- constructors (the `build_valuation` surface) ----

/// Full 2^m table, indexed by characteristic encoding. Checks v(empty)=0
/// and monotonicity over all (set, set minus one item) pairs.
Valuation make_table(int m, std::vector<Rational> values);

/// Singleton bid e_x^p: p for every set containing x, else 0.
Valuation make_singleton(int m, int item, Rational price);

/// Additive: v(S) = sum of per-item prices.
Valuation make_additive(std::vector<Rational> prices);

/// Unit demand: v(S) = max price in S.
Valuation make_unit_demand(std::vector<Rational> prices);

/// Additive with budget limit: v(S) = min(budget, sum of prices).
Valuation make_budgeted_additive(std::vector<Rational> prices, Rational budget);

/// Symmetric: v(S) depends on |S| only, described by the marginal sequence
/// p_1..p_m (all >= 0); v(S) = p_1 + ... + p_|S|.
Valuation make_symmetric(std::vector<Rational> marginals);

/// Measure-based: item i covers region `regions[i]` of a base set whose
/// elements carry weights; v(S) = total weight of the union of the regions.
/// Base set size is weights.size() (at most 63).
Valuation make_coverage(int m, std::vector<std::vector<int>> regions,
                        std::vector<Rational> weights);

/// The all-zero valuation (identity element of OR).
Valuation make_zero(int m);

// ---- core operations ----

/// Marginal valuation v(. | given) over the residual universe X - given,
/// re-indexed to 0..m-|given|-1. The index mapping is available through
/// residual_item_map().
Valuation marginal(const Valuation& v, const ItemSet& given);

/// For a marginal valuation: residual index -> item index in the source
/// universe. Identity mapping for every other kind.
std::vector<int> residual_item_map(const Valuation& v);

/// v(S) - sum of prices over S. May be negative.
Rational surplus(const Valuation& v, const ItemSet& s, const PriceVector& p);

/// All surplus-maximizing sets at the given prices, in ascending
/// characteristic encoding. Never empty (the empty set is a candidate).
std::vector<ItemSet> demand_set(const Valuation& v, const PriceVector& p);

/// Single best set: max surplus, ties to smaller cardinality, then to
/// smaller encoding. (The reporting rule used by the ascending auction.)
ItemSet preferred_set(const Valuation& v, const PriceVector& p);

/// True when v1 and v2 agree on every subset (2^m enumeration).
bool evaluates_equal(const Valuation& v1, const Valuation& v2);

}  // namespace subauct
