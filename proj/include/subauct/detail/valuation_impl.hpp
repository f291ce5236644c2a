#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "subauct/valuation.hpp"

namespace subauct::detail {

/// Base of all valuation representations. eval() must be pure; the dense
/// table cache is filled once under a lock and is append-only afterwards.
class ValuationImpl {
 public:
  ValuationImpl(int m, ValuationKind kind) : m_(m), kind_(kind) {}
  virtual ~ValuationImpl() = default;

  int m() const { return m_; }
  ValuationKind kind() const { return kind_; }

  virtual Rational eval(std::uint32_t mask) const = 0;

  const std::vector<Rational>& table() const;

 protected:
  /// Default: evaluate every mask. Kinds with a cheaper sweep override.
  virtual void fill_table(std::vector<Rational>& out) const;

 private:
  int m_;
  ValuationKind kind_;
  mutable std::mutex table_mutex_;
  mutable std::vector<Rational> table_cache_;
};

class TableImpl : public ValuationImpl {
 public:
  TableImpl(int m, std::vector<Rational> values, ValuationKind kind)
      : ValuationImpl(m, kind), values_(std::move(values)) {}
  Rational eval(std::uint32_t mask) const override { return values_[mask]; }

 protected:
  void fill_table(std::vector<Rational>& out) const override { out = values_; }

 private:
  std::vector<Rational> values_;
};

class SingletonImpl : public ValuationImpl {
 public:
  SingletonImpl(int m, int item, Rational price)
      : ValuationImpl(m, ValuationKind::singleton),
        item_(item),
        price_(std::move(price)) {}
  Rational eval(std::uint32_t mask) const override {
    return (mask >> item_) & 1u ? price_ : Rational(0);
  }
  int item() const { return item_; }
  const Rational& price() const { return price_; }

 private:
  int item_;
  Rational price_;
};

class AdditiveImpl : public ValuationImpl {
 public:
  AdditiveImpl(std::vector<Rational> prices, ValuationKind kind)
      : ValuationImpl(static_cast<int>(prices.size()), kind),
        prices_(std::move(prices)) {}
  Rational eval(std::uint32_t mask) const override;
  const std::vector<Rational>& prices() const { return prices_; }

 protected:
  void fill_table(std::vector<Rational>& out) const override;

 private:
  std::vector<Rational> prices_;
};

class UnitDemandImpl : public ValuationImpl {
 public:
  explicit UnitDemandImpl(std::vector<Rational> prices)
      : ValuationImpl(static_cast<int>(prices.size()),
                      ValuationKind::unit_demand),
        prices_(std::move(prices)) {}
  Rational eval(std::uint32_t mask) const override;
  const std::vector<Rational>& prices() const { return prices_; }

 private:
  std::vector<Rational> prices_;
};

class BudgetedAdditiveImpl : public ValuationImpl {
 public:
  BudgetedAdditiveImpl(std::vector<Rational> prices, Rational budget)
      : ValuationImpl(static_cast<int>(prices.size()),
                      ValuationKind::budgeted_additive),
        prices_(std::move(prices)),
        budget_(std::move(budget)) {}
  Rational eval(std::uint32_t mask) const override;
  const std::vector<Rational>& prices() const { return prices_; }
  const Rational& budget() const { return budget_; }

 protected:
  void fill_table(std::vector<Rational>& out) const override;

 private:
  std::vector<Rational> prices_;
  Rational budget_;
};

class SymmetricImpl : public ValuationImpl {
 public:
  explicit SymmetricImpl(std::vector<Rational> marginals);
  Rational eval(std::uint32_t mask) const override {
    return cumulative_[static_cast<size_t>(std::popcount(mask))];
  }
  const std::vector<Rational>& marginals() const { return marginals_; }

 private:
  std::vector<Rational> marginals_;
  std::vector<Rational> cumulative_;  // cumulative_[k] = p_1 + ... + p_k
};

class CoverageImpl : public ValuationImpl {
 public:
  CoverageImpl(int m, std::vector<std::uint64_t> region_masks,
               std::vector<Rational> weights,
               std::vector<std::vector<int>> regions)
      : ValuationImpl(m, ValuationKind::coverage),
        region_masks_(std::move(region_masks)),
        weights_(std::move(weights)),
        regions_(std::move(regions)) {}
  Rational eval(std::uint32_t mask) const override;
  const std::vector<std::vector<int>>& regions() const { return regions_; }
  const std::vector<Rational>& weights() const { return weights_; }

 private:
  std::vector<std::uint64_t> region_masks_;
  std::vector<Rational> weights_;
  std::vector<std::vector<int>> regions_;
};

class MarginalImpl : public ValuationImpl {
 public:
  MarginalImpl(std::shared_ptr<const ValuationImpl> base, std::uint32_t given);
  Rational eval(std::uint32_t mask) const override;
  const std::vector<int>& item_map() const { return item_map_; }

 private:
  std::shared_ptr<const ValuationImpl> base_;
  std::uint32_t given_;
  Rational base_at_given_;
  std::vector<int> item_map_;  // residual index -> base index
};

/// OR of two valuations: optimal split of the queried set between the two
/// children. Evaluation enumerates 2^|S| splits; results and the winning
/// split are memoized (append-only, lock-protected).
class OrImpl : public ValuationImpl {
 public:
  OrImpl(std::shared_ptr<const ValuationImpl> left,
         std::shared_ptr<const ValuationImpl> right)
      : ValuationImpl(left->m(), ValuationKind::or_combined),
        left_(std::move(left)),
        right_(std::move(right)) {}
  Rational eval(std::uint32_t mask) const override {
    return eval_with_witness(mask).first;
  }
  /// (value, part of `mask` given to the left child)
  std::pair<Rational, std::uint32_t> eval_with_witness(
      std::uint32_t mask) const;
  const std::shared_ptr<const ValuationImpl>& left() const { return left_; }
  const std::shared_ptr<const ValuationImpl>& right() const { return right_; }

 private:
  std::shared_ptr<const ValuationImpl> left_;
  std::shared_ptr<const ValuationImpl> right_;
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<std::uint32_t, std::pair<Rational, std::uint32_t>>
      memo_;
};

class XorImpl : public ValuationImpl {
 public:
  XorImpl(std::shared_ptr<const ValuationImpl> left,
          std::shared_ptr<const ValuationImpl> right)
      : ValuationImpl(left->m(), ValuationKind::xor_combined),
        left_(std::move(left)),
        right_(std::move(right)) {}
  Rational eval(std::uint32_t mask) const override;
  const std::shared_ptr<const ValuationImpl>& left() const { return left_; }
  const std::shared_ptr<const ValuationImpl>& right() const { return right_; }

 private:
  std::shared_ptr<const ValuationImpl> left_;
  std::shared_ptr<const ValuationImpl> right_;
};

}  // namespace subauct::detail
