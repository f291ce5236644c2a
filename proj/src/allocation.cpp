#include "subauct/allocation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "subauct/algebra.hpp"
#include "subauct/lp.hpp"
#include "subauct/matching.hpp"

namespace subauct {

Allocation::Allocation(int m, std::vector<ItemSet> bundles_)
    : bundles(std::move(bundles_)) {
  if (bundles.empty()) throw DimensionMismatch("allocation with no bidders");
  std::uint32_t seen = 0;
  for (const ItemSet& b : bundles) {
    if (b.universe_size() != m)
      throw UniverseMismatch("allocation bundle over wrong universe");
    if (seen & b.bits())
      throw DimensionMismatch("allocation bundles overlap");
    seen |= b.bits();
  }
  if (seen != ItemSet::full(m).bits())
    throw DimensionMismatch("allocation does not cover all items");
}

AuctionInstance::AuctionInstance(int m_, std::vector<Valuation> bidders_)
    : m(m_), bidders(std::move(bidders_)) {
  if (bidders.empty()) throw DimensionMismatch("instance with no bidders");
  for (const Valuation& v : bidders)
    if (v.universe_size() != m)
      throw UniverseMismatch("bidder valuation over universe of size " +
                             std::to_string(v.universe_size()) +
                             ", instance has " + std::to_string(m));
}

Rational allocation_value(const AuctionInstance& inst, const Allocation& a) {
  if (a.n() != inst.n())
    throw DimensionMismatch("allocation bidder count mismatch");
  Rational total(0);
  for (int j = 0; j < inst.n(); ++j)
    total += inst.bidders[static_cast<size_t>(j)].value(a.bundles[static_cast<size_t>(j)]);
  return total;
}

namespace {

std::uint64_t assignment_count(int n, int items, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (int i = 0; i < items; ++i) {
    count *= static_cast<std::uint64_t>(n);
    if (count > cap) return cap + 1;
  }
  return count;
}

struct Enumerator {
  const std::vector<const std::vector<Rational>*>& tables;
  const std::vector<int>& items;
  std::vector<std::uint32_t> masks;
  Rational best;
  std::vector<std::uint32_t> best_masks;
  bool found = false;

  void run(size_t depth) {
    if (depth == items.size()) {
      Rational val = (*tables[0])[masks[0]];
      for (size_t j = 1; j < masks.size(); ++j) val += (*tables[j])[masks[j]];
      if (!found || val > best) {
        best = std::move(val);
        best_masks = masks;
        found = true;
      }
      return;
    }
    const std::uint32_t bit = 1u << items[depth];
    for (size_t j = 0; j < masks.size(); ++j) {
      masks[j] |= bit;
      run(depth + 1);
      masks[j] ^= bit;
    }
  }
};

void require_assignments(const AuctionInstance& inst, int items,
                         std::uint64_t cap, const char* op) {
  if (assignment_count(inst.n(), items, cap) > cap)
    throw InstanceTooLarge(std::string(op) + ": " + std::to_string(inst.n()) +
                           "^" + std::to_string(items) +
                           " assignments exceed cap " + std::to_string(cap));
}

std::vector<const std::vector<Rational>*> bidder_tables(
    const AuctionInstance& inst) {
  std::vector<const std::vector<Rational>*> tables;
  tables.reserve(static_cast<size_t>(inst.n()));
  for (const Valuation& v : inst.bidders) tables.push_back(&v.table());
  return tables;
}

}  // namespace

OptimalResult optimal_allocate(const AuctionInstance& inst,
                               std::uint64_t assignment_cap) {
  require_assignments(inst, inst.m, assignment_cap, "optimal_allocate");
  auto tables = bidder_tables(inst);
  std::vector<int> items(static_cast<size_t>(inst.m));
  std::iota(items.begin(), items.end(), 0);
  Enumerator e{tables, items, std::vector<std::uint32_t>(
                                  static_cast<size_t>(inst.n()), 0),
               Rational(0), {}, false};
  e.run(0);
  std::vector<ItemSet> bundles;
  bundles.reserve(e.best_masks.size());
  for (std::uint32_t mask : e.best_masks) bundles.emplace_back(inst.m, mask);
  return {Allocation(inst.m, std::move(bundles)), std::move(e.best)};
}

Rational optimal_welfare_on(const AuctionInstance& inst, std::uint32_t items,
                            std::uint64_t assignment_cap) {
  std::vector<int> active;
  for (int i = 0; i < inst.m; ++i)
    if ((items >> i) & 1u) active.push_back(i);
  require_assignments(inst, static_cast<int>(active.size()), assignment_cap,
                      "optimal_welfare_on");
  auto tables = bidder_tables(inst);
  Enumerator e{tables, active, std::vector<std::uint32_t>(
                                   static_cast<size_t>(inst.n()), 0),
               Rational(0), {}, false};
  e.run(0);
  return e.best;
}

Allocation greedy_allocate(const AuctionInstance& inst,
                           const std::vector<int>* order) {
  std::vector<int> sequence;
  if (order) {
    sequence = *order;
    std::vector<bool> seen(static_cast<size_t>(inst.m), false);
    if (static_cast<int>(sequence.size()) != inst.m)
      throw DimensionMismatch("greedy order must list every item once");
    for (int i : sequence) {
      if (i < 0 || i >= inst.m || seen[static_cast<size_t>(i)])
        throw DimensionMismatch("greedy order must be a permutation");
      seen[static_cast<size_t>(i)] = true;
    }
  } else {
    sequence.resize(static_cast<size_t>(inst.m));
    std::iota(sequence.begin(), sequence.end(), 0);
  }
  std::vector<std::uint32_t> masks(static_cast<size_t>(inst.n()), 0);
  for (int item : sequence) {
    const std::uint32_t bit = 1u << item;
    int best_j = 0;
    Rational best_gain;
    for (int j = 0; j < inst.n(); ++j) {
      const Valuation& v = inst.bidders[static_cast<size_t>(j)];
      Rational gain = v.value(masks[static_cast<size_t>(j)] | bit) -
                      v.value(masks[static_cast<size_t>(j)]);
      if (j == 0 || gain > best_gain) {
        best_gain = std::move(gain);
        best_j = j;
      }
    }
    masks[static_cast<size_t>(best_j)] |= bit;
  }
  std::vector<ItemSet> bundles;
  bundles.reserve(masks.size());
  for (std::uint32_t mask : masks) bundles.emplace_back(inst.m, mask);
  return Allocation(inst.m, std::move(bundles));
}

int greedy_next_item(const AuctionInstance& inst,
                     const std::vector<ItemSet>& bundles,
                     std::uint32_t unallocated) {
  if (!unallocated)
    throw DimensionMismatch("greedy_next_item: no unallocated items");
  if (static_cast<int>(bundles.size()) != inst.n())
    throw DimensionMismatch("greedy_next_item: bundle count mismatch");
  int best_item = -1;
  Rational best_gap(0);
  for (int x = 0; x < inst.m; ++x) {
    if (!((unallocated >> x) & 1u)) continue;
    const std::uint32_t bit = 1u << x;
    // best and second-best marginal over bidders; with one bidder the gap
    // is the marginal itself
    Rational first(0), second(0);
    bool have_first = false, have_second = false;
    for (int j = 0; j < inst.n(); ++j) {
      const Valuation& v = inst.bidders[static_cast<size_t>(j)];
      const std::uint32_t mask = bundles[static_cast<size_t>(j)].bits();
      Rational gain = v.value(mask | bit) - v.value(mask);
      if (!have_first || gain > first) {
        if (have_first) {
          second = first;
          have_second = true;
        }
        first = std::move(gain);
        have_first = true;
      } else if (!have_second || gain > second) {
        second = std::move(gain);
        have_second = true;
      }
    }
    Rational gap = have_second ? first - second : first;
    if (best_item < 0 || gap > best_gap) {
      best_gap = std::move(gap);
      best_item = x;
    }
  }
  return best_item;
}

Allocation greedy_allocate_heuristic(const AuctionInstance& inst) {
  std::vector<ItemSet> bundles(static_cast<size_t>(inst.n()),
                               ItemSet::empty(inst.m));
  std::uint32_t unallocated = ItemSet::full(inst.m).bits();
  while (unallocated) {
    int item = greedy_next_item(inst, bundles, unallocated);
    const std::uint32_t bit = 1u << item;
    int best_j = 0;
    Rational best_gain;
    for (int j = 0; j < inst.n(); ++j) {
      const Valuation& v = inst.bidders[static_cast<size_t>(j)];
      const std::uint32_t mask = bundles[static_cast<size_t>(j)].bits();
      Rational gain = v.value(mask | bit) - v.value(mask);
      if (j == 0 || gain > best_gain) {
        best_gain = std::move(gain);
        best_j = j;
      }
    }
    bundles[static_cast<size_t>(best_j)] =
        ItemSet(inst.m, bundles[static_cast<size_t>(best_j)].bits() | bit);
    unallocated ^= bit;
  }
  return Allocation(inst.m, std::move(bundles));
}

KelsoCrawfordResult kelso_crawford(const AuctionInstance& inst,
                                   const Rational& epsilon) {
  if (epsilon <= 0)
    throw SubauctError("kelso_crawford: epsilon must be positive");
  require_enumerable(inst.m, "kelso_crawford");
  // round cap: ceil(max_i v_i(X) / epsilon) * m + 1
  Rational max_val(0);
  const std::uint32_t full = ItemSet::full(inst.m).bits();
  for (const Valuation& v : inst.bidders)
    max_val = std::max(max_val, v.value(full));
  Rational q = max_val / epsilon;
  mpz_class cap_z;
  mpz_cdiv_q(cap_z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  const long round_cap = cap_z.get_si() * inst.m + 1;

  std::vector<Rational> prices(static_cast<size_t>(inst.m), Rational(0));
  std::vector<std::uint32_t> demands(static_cast<size_t>(inst.n()), 0);
  std::vector<std::vector<Rational>> history;
  int rounds = 0;
  for (;;) {
    PriceVector pv{prices};
    for (int j = 0; j < inst.n(); ++j)
      demands[static_cast<size_t>(j)] =
          preferred_set(inst.bidders[static_cast<size_t>(j)], pv).bits();
    std::uint32_t contested = 0, seen = 0;
    for (std::uint32_t d : demands) {
      contested |= seen & d;
      seen |= d;
    }
    if (!contested) break;
    for (int i = 0; i < inst.m; ++i)
      if ((contested >> i) & 1u) prices[static_cast<size_t>(i)] += epsilon;
    history.push_back(prices);
    if (++rounds > round_cap)
      throw NonTermination("kelso_crawford: round cap " +
                           std::to_string(round_cap) +
                           " exceeded (epsilon too small?)");
  }

  std::vector<std::uint32_t> masks(demands.begin(), demands.end());
  std::uint32_t taken = 0;
  for (std::uint32_t d : demands) taken |= d;
  for (int x = 0; x < inst.m; ++x) {
    if ((taken >> x) & 1u) continue;
    const std::uint32_t bit = 1u << x;
    int best_j = 0;
    Rational best_gain;
    for (int j = 0; j < inst.n(); ++j) {
      const Valuation& v = inst.bidders[static_cast<size_t>(j)];
      Rational gain = v.value(masks[static_cast<size_t>(j)] | bit) -
                      v.value(masks[static_cast<size_t>(j)]);
      if (j == 0 || gain > best_gain) {
        best_gain = std::move(gain);
        best_j = j;
      }
    }
    masks[static_cast<size_t>(best_j)] |= bit;
  }
  std::vector<ItemSet> bundles;
  bundles.reserve(masks.size());
  for (std::uint32_t mask : masks) bundles.emplace_back(inst.m, mask);
  Allocation alloc(inst.m, std::move(bundles));
  Rational welfare = allocation_value(inst, alloc);
  return {PriceVector{prices}, std::move(alloc), std::move(welfare), rounds,
          std::move(history)};
}

OptimalResult oxs_matching_allocate(const AuctionInstance& inst) {
  // one matching row per XOR clause, over all bidders
  std::vector<int> row_bidder;
  std::vector<std::vector<Rational>> weights;
  for (int j = 0; j < inst.n(); ++j) {
    auto clauses = as_oxs(inst.bidders[static_cast<size_t>(j)]);
    if (!clauses)
      throw NotOxsExpression("oxs_matching_allocate: bidder " +
                             std::to_string(j) +
                             " is not an OR-of-XOR-of-singletons");
    for (const auto& clause : *clauses) {
      std::vector<Rational> row(static_cast<size_t>(inst.m), Rational(0));
      for (const auto& [item, price] : clause) {
        if (item >= inst.m)
          throw UniverseMismatch("oxs clause item outside universe");
        row[static_cast<size_t>(item)] =
            std::max(row[static_cast<size_t>(item)], price);
      }
      row_bidder.push_back(j);
      weights.push_back(std::move(row));
    }
  }
  MatchingResult matching = max_weight_matching(weights, inst.m);
  std::vector<std::uint32_t> masks(static_cast<size_t>(inst.n()), 0);
  for (size_t r = 0; r < weights.size(); ++r) {
    int item = matching.match_of_left[r];
    if (item >= 0)
      masks[static_cast<size_t>(row_bidder[r])] |= 1u << item;
  }
  std::uint32_t taken = 0;
  for (std::uint32_t mask : masks) taken |= mask;
  for (int x = 0; x < inst.m; ++x) {
    if ((taken >> x) & 1u) continue;
    const std::uint32_t bit = 1u << x;
    int best_j = 0;
    Rational best_gain;
    for (int j = 0; j < inst.n(); ++j) {
      const Valuation& v = inst.bidders[static_cast<size_t>(j)];
      Rational gain = v.value(masks[static_cast<size_t>(j)] | bit) -
                      v.value(masks[static_cast<size_t>(j)]);
      if (j == 0 || gain > best_gain) {
        best_gain = std::move(gain);
        best_j = j;
      }
    }
    masks[static_cast<size_t>(best_j)] |= bit;
  }
  std::vector<ItemSet> bundles;
  bundles.reserve(masks.size());
  for (std::uint32_t mask : masks) bundles.emplace_back(inst.m, mask);
  Allocation alloc(inst.m, std::move(bundles));
  Rational value = allocation_value(inst, alloc);
  if (value != matching.weight)
    throw std::logic_error(
        "oxs_matching_allocate: bundle value disagrees with matching weight");
  return {std::move(alloc), std::move(value)};
}

Check<WalrasianViolation> verify_walrasian(const AuctionInstance& inst,
                                           const WalrasianCertificate& cert) {
  if (cert.prices.size() != inst.m)
    throw DimensionMismatch("verify_walrasian: price vector length mismatch");
  if (cert.allocation.n() != inst.n())
    throw DimensionMismatch("verify_walrasian: allocation bidder mismatch");
  require_enumerable(inst.m, "verify_walrasian");
  const std::uint32_t n_sets = 1u << inst.m;
  for (int j = 0; j < inst.n(); ++j) {
    const Valuation& v = inst.bidders[static_cast<size_t>(j)];
    const std::vector<Rational>& t = v.table();
    const std::uint32_t bundle = cert.allocation.bundles[static_cast<size_t>(j)].bits();
    const Rational own = t[bundle] - cert.prices.total(bundle);
    for (std::uint32_t s = 0; s < n_sets; ++s) {
      if (t[s] - cert.prices.total(s) > own)
        return {false, WalrasianViolation{j, ItemSet(inst.m, s)}};
    }
  }
  return {true, std::nullopt};
}

std::optional<WalrasianCertificate> exists_walrasian(
    const AuctionInstance& inst, std::uint64_t assignment_cap) {
  require_enumerable(inst.m, "exists_walrasian");
  OptimalResult opt = optimal_allocate(inst, assignment_cap);
  auto tables = bidder_tables(inst);

  // collect every optimal assignment, in lexicographic order
  std::vector<std::vector<std::uint32_t>> optima;
  std::vector<std::uint32_t> masks(static_cast<size_t>(inst.n()), 0);
  auto rec = [&](auto&& self, int item) -> void {
    if (item == inst.m) {
      Rational val = (*tables[0])[masks[0]];
      for (size_t j = 1; j < masks.size(); ++j) val += (*tables[j])[masks[j]];
      if (val == opt.value) optima.push_back(masks);
      return;
    }
    const std::uint32_t bit = 1u << item;
    for (size_t j = 0; j < masks.size(); ++j) {
      masks[j] |= bit;
      self(self, item + 1);
      masks[j] ^= bit;
    }
  };
  rec(rec, 0);

  const std::uint32_t n_sets = 1u << inst.m;
  for (const auto& assignment : optima) {
    lp::Feasibility prob;
    prob.num_vars = inst.m;
    prob.nonneg.assign(static_cast<size_t>(inst.m), true);
    for (int j = 0; j < inst.n(); ++j) {
      const std::uint32_t bundle = assignment[static_cast<size_t>(j)];
      for (std::uint32_t s = 0; s < n_sets; ++s) {
        if (s == bundle) continue;
        // p(S) - p(bundle) >= v_j(S) - v_j(bundle)
        std::vector<Rational> coeff(static_cast<size_t>(inst.m), Rational(0));
        for (int i = 0; i < inst.m; ++i) {
          int c = static_cast<int>((s >> i) & 1u) -
                  static_cast<int>((bundle >> i) & 1u);
          if (c) coeff[static_cast<size_t>(i)] = c;
        }
        prob.constraints.push_back(
            {std::move(coeff), lp::Rel::ge,
             (*tables[static_cast<size_t>(j)])[s] -
                 (*tables[static_cast<size_t>(j)])[bundle]});
      }
    }
    if (auto prices = lp::find_feasible(prob)) {
      std::vector<ItemSet> bundles;
      for (std::uint32_t mask : assignment) bundles.emplace_back(inst.m, mask);
      WalrasianCertificate cert{PriceVector(std::move(*prices)),
                                Allocation(inst.m, std::move(bundles))};
      return cert;
    }
  }
  return std::nullopt;
}

AuctionInstance knapsack_instance(const std::vector<long>& a, long t) {
  if (a.empty()) throw DimensionMismatch("knapsack: empty weight vector");
  long f = 0;
  for (long ai : a) {
    if (ai <= 0) throw NegativeValue("knapsack: weights must be positive");
    f += ai;
  }
  if (t <= 0 || t > f)
    throw SubauctError("knapsack: target must satisfy 0 < t <= sum(a)");
  std::vector<Rational> p1, p2;
  p1.reserve(a.size());
  p2.reserve(a.size());
  for (long ai : a) {
    p1.emplace_back(ai);
    p2.emplace_back(2 * ai);
  }
  return AuctionInstance(
      static_cast<int>(a.size()),
      {make_additive(std::move(p1)),
       make_budgeted_additive(std::move(p2), Rational(2 * t))});
}

}  // namespace subauct
