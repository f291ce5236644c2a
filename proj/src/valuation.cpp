#include "subauct/valuation.hpp"

#include <algorithm>
#include <cstdlib>

#include "subauct/detail/valuation_impl.hpp"

namespace subauct {

int max_universe() {
  static const int cap = [] {
    int m = 20;
    if (const char* env = std::getenv("SUBAUCT_MAX_UNIVERSE")) {
      char* end = nullptr;
      long parsed = std::strtol(env, &end, 10);
      if (end != env && *end == '\0')
        m = static_cast<int>(std::clamp<long>(parsed, 1, kUniverseHardCap));
    }
    return m;
  }();
  return cap;
}

void require_enumerable(int m, const char* op) {
  if (m > max_universe())
    throw UniverseTooLarge(std::string(op) + ": universe of size " +
                           std::to_string(m) + " exceeds enumeration cap " +
                           std::to_string(max_universe()));
}

std::string kind_name(ValuationKind k) {
  switch (k) {
    case ValuationKind::table: return "table";
    case ValuationKind::singleton: return "singleton";
    case ValuationKind::additive: return "additive";
    case ValuationKind::unit_demand: return "unit_demand";
    case ValuationKind::budgeted_additive: return "budgeted_additive";
    case ValuationKind::symmetric: return "symmetric";
    case ValuationKind::coverage: return "coverage";
    case ValuationKind::expression: return "expression";
    case ValuationKind::or_combined: return "or_combined";
    case ValuationKind::xor_combined: return "xor_combined";
    case ValuationKind::marginal: return "marginal";
  }
  return "?";
}

Rational parse_rational(const std::string& text) {
  Rational q;
  try {
    q = Rational(text);
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: '" + text + "'");
  }
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pow2(int k) {
  Rational q(1);
  if (k >= 0)
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(k));
  else
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-k));
  return q;
}

namespace detail {

const std::vector<Rational>& ValuationImpl::table() const {
  std::lock_guard<std::mutex> lock(table_mutex_);
  if (table_cache_.empty()) {
    require_enumerable(m_, "dense table");
    fill_table(table_cache_);
  }
  return table_cache_;
}

void ValuationImpl::fill_table(std::vector<Rational>& out) const {
  const std::uint32_t n = 1u << m_;
  out.resize(n);
  for (std::uint32_t mask = 0; mask < n; ++mask) out[mask] = eval(mask);
}

Rational AdditiveImpl::eval(std::uint32_t mask) const {
  Rational total(0);
  while (mask) {
    int i = std::countr_zero(mask);
    total += prices_[static_cast<size_t>(i)];
    mask &= mask - 1;
  }
  return total;
}

void AdditiveImpl::fill_table(std::vector<Rational>& out) const {
  const std::uint32_t n = 1u << m();
  out.resize(n);
  out[0] = 0;
  for (std::uint32_t mask = 1; mask < n; ++mask) {
    int low = std::countr_zero(mask);
    out[mask] = out[mask & (mask - 1)] + prices_[static_cast<size_t>(low)];
  }
}

Rational UnitDemandImpl::eval(std::uint32_t mask) const {
  Rational best(0);
  while (mask) {
    int i = std::countr_zero(mask);
    const Rational& p = prices_[static_cast<size_t>(i)];
    if (p > best) best = p;
    mask &= mask - 1;
  }
  return best;
}

Rational BudgetedAdditiveImpl::eval(std::uint32_t mask) const {
  Rational total(0);
  while (mask) {
    int i = std::countr_zero(mask);
    total += prices_[static_cast<size_t>(i)];
    if (total >= budget_) return budget_;
    mask &= mask - 1;
  }
  return total;
}

void BudgetedAdditiveImpl::fill_table(std::vector<Rational>& out) const {
  const std::uint32_t n = 1u << m();
  std::vector<Rational> sums(n);
  sums[0] = 0;
  out.resize(n);
  out[0] = 0;
  for (std::uint32_t mask = 1; mask < n; ++mask) {
    int low = std::countr_zero(mask);
    sums[mask] = sums[mask & (mask - 1)] + prices_[static_cast<size_t>(low)];
    out[mask] = std::min(sums[mask], budget_);
  }
}

SymmetricImpl::SymmetricImpl(std::vector<Rational> marginals)
    : ValuationImpl(static_cast<int>(marginals.size()),
                    ValuationKind::symmetric),
      marginals_(std::move(marginals)) {
  cumulative_.resize(marginals_.size() + 1);
  cumulative_[0] = 0;
  for (size_t i = 0; i < marginals_.size(); ++i)
    cumulative_[i + 1] = cumulative_[i] + marginals_[i];
}

Rational CoverageImpl::eval(std::uint32_t mask) const {
  std::uint64_t covered = 0;
  while (mask) {
    int i = std::countr_zero(mask);
    covered |= region_masks_[static_cast<size_t>(i)];
    mask &= mask - 1;
  }
  Rational total(0);
  while (covered) {
    int g = std::countr_zero(covered);
    total += weights_[static_cast<size_t>(g)];
    covered &= covered - 1;
  }
  return total;
}

MarginalImpl::MarginalImpl(std::shared_ptr<const ValuationImpl> base,
                           std::uint32_t given)
    : ValuationImpl(base->m() - std::popcount(given), ValuationKind::marginal),
      base_(std::move(base)),
      given_(given),
      base_at_given_(base_->eval(given)) {
  for (int i = 0; i < base_->m(); ++i)
    if (!((given_ >> i) & 1u)) item_map_.push_back(i);
}

Rational MarginalImpl::eval(std::uint32_t mask) const {
  std::uint32_t lifted = given_;
  std::uint32_t rest = mask;
  while (rest) {
    int i = std::countr_zero(rest);
    lifted |= 1u << item_map_[static_cast<size_t>(i)];
    rest &= rest - 1;
  }
  return base_->eval(lifted) - base_at_given_;
}

std::pair<Rational, std::uint32_t> OrImpl::eval_with_witness(
    std::uint32_t mask) const {
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
  }
  // best split of `mask`: left child takes sub, right takes the rest
  Rational best = left_->eval(mask);  // sub = mask
  std::uint32_t best_sub = mask;
  std::uint32_t sub = mask;
  while (sub) {
    sub = (sub - 1) & mask;
    Rational v = left_->eval(sub) + right_->eval(mask & ~sub);
    if (v > best || (v == best && sub < best_sub)) {
      best = v;
      best_sub = sub;
    }
    if (sub == 0) break;
  }
  std::lock_guard<std::mutex> lock(memo_mutex_);
  return memo_.emplace(mask, std::make_pair(best, best_sub)).first->second;
}

Rational XorImpl::eval(std::uint32_t mask) const {
  return std::max(left_->eval(mask), right_->eval(mask));
}

}  // namespace detail

// ---- PriceVector ----

PriceVector::PriceVector(std::vector<Rational> prices) : p_(std::move(prices)) {
  if (p_.empty()) throw DimensionMismatch("empty price vector");
  for (const Rational& q : p_)
    if (q < 0) throw NegativeValue("negative price " + to_string(q));
}

PriceVector PriceVector::zero(int m) {
  return PriceVector(std::vector<Rational>(static_cast<size_t>(m), Rational(0)));
}

Rational PriceVector::total(std::uint32_t mask) const {
  Rational t(0);
  while (mask) {
    int i = std::countr_zero(mask);
    t += p_[static_cast<size_t>(i)];
    mask &= mask - 1;
  }
  return t;
}

// ---- Valuation ----

int Valuation::universe_size() const { return impl_->m(); }
ValuationKind Valuation::kind() const { return impl_->kind(); }

Rational Valuation::value(const ItemSet& s) const {
  if (s.universe_size() != impl_->m())
    throw UniverseMismatch("set over universe of size " +
                           std::to_string(s.universe_size()) +
                           ", valuation over " + std::to_string(impl_->m()));
  return impl_->eval(s.bits());
}

Rational Valuation::value(std::uint32_t mask) const {
  return impl_->eval(mask);
}

const std::vector<Rational>& Valuation::table() const { return impl_->table(); }

// ---- constructors ----

namespace {

void check_nonnegative(const std::vector<Rational>& qs, const char* what) {
  for (const Rational& q : qs)
    if (q < 0)
      throw NegativeValue(std::string("negative ") + what + ": " +
                          to_string(q));
}

void check_universe_size(int m, size_t param_count, const char* kind) {
  if (m < 1 || m > kUniverseHardCap)
    throw UniverseTooLarge(std::string(kind) + ": universe size " +
                           std::to_string(m) + " out of range");
  if (param_count != static_cast<size_t>(m))
    throw DimensionMismatch(std::string(kind) + ": expected " +
                            std::to_string(m) + " entries, got " +
                            std::to_string(param_count));
}

}  // namespace

Valuation make_table(int m, std::vector<Rational> values) {
  if (m < 1 || m > kUniverseHardCap)
    throw UniverseTooLarge("table: universe size " + std::to_string(m) +
                           " out of range");
  require_enumerable(m, "table construction");
  const std::uint32_t n = 1u << m;
  if (values.size() != n)
    throw DimensionMismatch("table: expected " + std::to_string(n) +
                            " values, got " + std::to_string(values.size()));
  if (values[0] != 0)
    throw NormalizationViolation("v(empty) = " + to_string(values[0]) +
                                 ", expected 0");
  // checking each set against its one-item-removed subsets suffices
  for (std::uint32_t mask = 1; mask < n; ++mask) {
    std::uint32_t rest = mask;
    while (rest) {
      std::uint32_t low = rest & (~rest + 1u);
      if (values[mask] < values[mask ^ low])
        throw MonotonicityViolation(
            "v(" + ItemSet(m, mask ^ low).to_string() + ") = " +
            to_string(values[mask ^ low]) + " > v(" +
            ItemSet(m, mask).to_string() + ") = " + to_string(values[mask]));
      rest ^= low;
    }
  }
  return Valuation(std::make_shared<detail::TableImpl>(m, std::move(values),
                                                       ValuationKind::table));
}

Valuation make_singleton(int m, int item, Rational price) {
  if (m < 1 || m > kUniverseHardCap)
    throw UniverseTooLarge("singleton: universe size out of range");
  if (item < 0 || item >= m)
    throw UniverseMismatch("singleton: item " + std::to_string(item) +
                           " outside universe of size " + std::to_string(m));
  if (price < 0) throw NegativeValue("negative price " + to_string(price));
  return Valuation(
      std::make_shared<detail::SingletonImpl>(m, item, std::move(price)));
}

Valuation make_additive(std::vector<Rational> prices) {
  check_universe_size(static_cast<int>(prices.size()), prices.size(),
                      "additive");
  check_nonnegative(prices, "price");
  return Valuation(std::make_shared<detail::AdditiveImpl>(
      std::move(prices), ValuationKind::additive));
}

Valuation make_unit_demand(std::vector<Rational> prices) {
  check_universe_size(static_cast<int>(prices.size()), prices.size(),
                      "unit_demand");
  check_nonnegative(prices, "price");
  return Valuation(std::make_shared<detail::UnitDemandImpl>(std::move(prices)));
}

Valuation make_budgeted_additive(std::vector<Rational> prices,
                                 Rational budget) {
  check_universe_size(static_cast<int>(prices.size()), prices.size(),
                      "budgeted_additive");
  check_nonnegative(prices, "price");
  if (budget < 0) throw NegativeValue("negative budget " + to_string(budget));
  return Valuation(std::make_shared<detail::BudgetedAdditiveImpl>(
      std::move(prices), std::move(budget)));
}

Valuation make_symmetric(std::vector<Rational> marginals) {
  check_universe_size(static_cast<int>(marginals.size()), marginals.size(),
                      "symmetric");
  check_nonnegative(marginals, "marginal value");
  return Valuation(std::make_shared<detail::SymmetricImpl>(std::move(marginals)));
}

Valuation make_coverage(int m, std::vector<std::vector<int>> regions,
                        std::vector<Rational> weights) {
  check_universe_size(m, regions.size(), "coverage");
  if (weights.size() > 63)
    throw UniverseTooLarge("coverage: base set larger than 63 elements");
  check_nonnegative(weights, "weight");
  std::vector<std::uint64_t> masks(regions.size(), 0);
  for (size_t i = 0; i < regions.size(); ++i) {
    for (int g : regions[i]) {
      if (g < 0 || static_cast<size_t>(g) >= weights.size())
        throw DimensionMismatch("coverage: region element " +
                                std::to_string(g) + " outside base set");
      masks[i] |= std::uint64_t(1) << g;
    }
  }
  return Valuation(std::make_shared<detail::CoverageImpl>(
      m, std::move(masks), std::move(weights), std::move(regions)));
}

Valuation make_zero(int m) {
  return Valuation(std::make_shared<detail::AdditiveImpl>(
      std::vector<Rational>(static_cast<size_t>(m), Rational(0)),
      ValuationKind::additive));
}

// ---- operations ----

Valuation marginal(const Valuation& v, const ItemSet& given) {
  if (given.universe_size() != v.universe_size())
    throw UniverseMismatch("marginal: set universe mismatch");
  if (given.bits() == 0) return v;
  if (given.size() == v.universe_size())
    throw UniverseTooSmall("marginal: no items left after conditioning");
  return Valuation(
      std::make_shared<detail::MarginalImpl>(v.impl(), given.bits()));
}

std::vector<int> residual_item_map(const Valuation& v) {
  if (auto* m = dynamic_cast<const detail::MarginalImpl*>(v.impl().get()))
    return m->item_map();
  std::vector<int> identity(static_cast<size_t>(v.universe_size()));
  for (size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
  return identity;
}

Rational surplus(const Valuation& v, const ItemSet& s, const PriceVector& p) {
  if (p.size() != v.universe_size())
    throw UniverseMismatch("surplus: price vector of length " +
                           std::to_string(p.size()) + " for universe " +
                           std::to_string(v.universe_size()));
  return v.value(s) - p.total(s.bits());
}

std::vector<ItemSet> demand_set(const Valuation& v, const PriceVector& p) {
  const int m = v.universe_size();
  if (p.size() != m) throw UniverseMismatch("demand_set: price length mismatch");
  require_enumerable(m, "demand_set");
  const std::vector<Rational>& t = v.table();
  const std::uint32_t n = 1u << m;
  Rational best(0);  // empty set
  std::vector<std::uint32_t> arg{0};
  for (std::uint32_t mask = 1; mask < n; ++mask) {
    Rational s = t[mask] - p.total(mask);
    if (s > best) {
      best = s;
      arg.clear();
      arg.push_back(mask);
    } else if (s == best) {
      arg.push_back(mask);
    }
  }
  std::vector<ItemSet> out;
  out.reserve(arg.size());
  for (std::uint32_t mask : arg) out.emplace_back(m, mask);
  return out;
}

ItemSet preferred_set(const Valuation& v, const PriceVector& p) {
  const int m = v.universe_size();
  if (p.size() != m)
    throw UniverseMismatch("preferred_set: price length mismatch");
  require_enumerable(m, "preferred_set");
  const std::vector<Rational>& t = v.table();
  const std::uint32_t n = 1u << m;
  Rational best(0);
  std::uint32_t arg = 0;
  int arg_size = 0;
  for (std::uint32_t mask = 1; mask < n; ++mask) {
    Rational s = t[mask] - p.total(mask);
    int size = std::popcount(mask);
    if (s > best || (s == best && size < arg_size)) {
      best = std::move(s);
      arg = mask;
      arg_size = size;
    }
  }
  return ItemSet(m, arg);
}

bool evaluates_equal(const Valuation& v1, const Valuation& v2) {
  if (v1.universe_size() != v2.universe_size()) return false;
  require_enumerable(v1.universe_size(), "evaluates_equal");
  const std::uint32_t n = 1u << v1.universe_size();
  for (std::uint32_t mask = 0; mask < n; ++mask)
    if (v1.value(mask) != v2.value(mask)) return false;
  return true;
}

}  // namespace subauct
