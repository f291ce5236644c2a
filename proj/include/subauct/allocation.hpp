#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "subauct/hierarchy.hpp"
#include "subauct/valuation.hpp"

namespace subauct {

/// Ordered partition of all m items into one (possibly empty) bundle per
/// bidder. Construction checks disjointness and full coverage.
struct Allocation {
  std::vector<ItemSet> bundles;

  Allocation(int m, std::vector<ItemSet> bundles_);
  int n() const { return static_cast<int>(bundles.size()); }
};

struct AuctionInstance {
  int m = 0;
  std::vector<Valuation> bidders;

  AuctionInstance(int m_, std::vector<Valuation> bidders_);
  int n() const { return static_cast<int>(bidders.size()); }
};

Rational allocation_value(const AuctionInstance& inst, const Allocation& a);

inline constexpr std::uint64_t kDefaultAssignmentCap = 10'000'000;

struct OptimalResult {
  Allocation allocation;
  Rational value;
};

/// Brute force over all n^m assignments; ties resolved to the
/// lexicographically smallest assignment vector (item 0's bidder first).
/// The welfare oracle everything else is measured against.
OptimalResult optimal_allocate(const AuctionInstance& inst,
                               std::uint64_t assignment_cap = kDefaultAssignmentCap);

/// Optimal welfare over a restricted item set (items outside `items` are
/// withheld). Same enumeration and cap discipline as optimal_allocate.
Rational optimal_welfare_on(const AuctionInstance& inst, std::uint32_t items,
                            std::uint64_t assignment_cap = kDefaultAssignmentCap);

/// Items assigned one at a time (default: ascending index) to the bidder
/// with the highest marginal value, ties to the lowest bidder index.
/// On all-submodular instances the result is a 2-approximation.
Allocation greedy_allocate(const AuctionInstance& inst,
                           const std::vector<int>* order = nullptr);

/// Next item for the largest-gap heuristic: maximizes (best marginal -
/// second-best marginal) over unallocated items, ties to the lowest item
/// index. `bundles` holds the partial allocation so far.
int greedy_next_item(const AuctionInstance& inst,
                     const std::vector<ItemSet>& bundles,
                     std::uint32_t unallocated);

/// Greedy with the largest-gap item order.
Allocation greedy_allocate_heuristic(const AuctionInstance& inst);

struct KelsoCrawfordResult {
  PriceVector prices;
  Allocation allocation;
  Rational welfare;
  int rounds = 0;
  /// Price vector after each round (for monotonicity audits).
  std::vector<std::vector<Rational>> price_history;
};

/// Ascending-price procedure: every round each bidder reports one preferred
/// set (ties: smallest cardinality, then smallest encoding); every item
/// demanded by two or more bidders goes up by epsilon. Stops when every
/// item is demanded by at most one bidder; items demanded by exactly one
/// bidder go to that bidder, and each leftover item goes to the bidder with
/// the highest marginal value for it (ties to the lowest index).
KelsoCrawfordResult kelso_crawford(const AuctionInstance& inst,
                                   const Rational& epsilon);

/// For instances whose bidders are all OR-of-XOR-of-singletons: optimal
/// allocation through a maximum-weight matching between XOR clauses and
/// items. Throws NotOxsExpression otherwise.
OptimalResult oxs_matching_allocate(const AuctionInstance& inst);

struct WalrasianCertificate {
  PriceVector prices;
  Allocation allocation;
};

struct WalrasianViolation {
  int bidder;
  ItemSet better;  // a set with strictly higher surplus than the bundle
};

/// Valid iff every bidder's bundle is surplus-maximal at the prices.
Check<WalrasianViolation> verify_walrasian(const AuctionInstance& inst,
                                           const WalrasianCertificate& cert);

/// Searches every optimal allocation for supporting prices (exact
/// feasibility system). Returns the first supportable one, else nullopt.
std::optional<WalrasianCertificate> exists_walrasian(
    const AuctionInstance& inst,
    std::uint64_t assignment_cap = kDefaultAssignmentCap);

/// Two-bidder reduction from subset-sum: bidder 0 additive with prices a_i,
/// bidder 1 additive with prices 2 a_i and budget 2t. The optimum is
/// exactly sum(a) + t iff some subset of a sums to t.
AuctionInstance knapsack_instance(const std::vector<long>& a, long t);

}  // namespace subauct
