#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subauct/allocation.hpp"

namespace subauct {

struct VcgOutcome {
  Allocation allocation;
  Rational value;  // welfare of the allocation
  std::vector<Rational> payments;
  /// Per bidder: (u(X), u(X - S_i)) where u is the OR of all other bidders.
  std::vector<std::pair<Rational, Rational>> opponent_values;
};

/// Optimal allocation plus externality payments u(X) - u(X - S_i). The
/// payment is computed from the OR-combination of the other bidders and
/// cross-checked against the optimal-welfare route.
VcgOutcome vcg(const AuctionInstance& inst,
               std::uint64_t assignment_cap = kDefaultAssignmentCap);

struct FalseNameReport {
  Rational honest_payment;
  std::vector<Rational> split_payments;
  Rational total_split;
  bool profitable = false;  // total_split < honest_payment, same goods value
  bool others_combined_submodular = false;
  /// combined value of the union of split bundles vs. the honest bundle
  bool bundles_equivalent = false;
  VcgOutcome honest_outcome;
  VcgOutcome split_outcome;
};

/// Compares one VCG run where the manipulator bids the OR of `split`
/// against one where the split parts bid as separate identities.
FalseNameReport false_name_analysis(const std::vector<Valuation>& others,
                                    const std::vector<Valuation>& split);

struct AgentsSubstitutesReport {
  bool holds = false;
  Rational grand;              // optimal welfare, all agents
  Rational without_coalition;  // optimal welfare without the coalition
  std::vector<Rational> singleton_drops;  // v(T) - v(T - {k}) per member
  Rational lhs;                           // grand - without_coalition
  Rational rhs;                           // sum of singleton drops
};

/// "Agents are substitutes" inequality for one coalition:
/// v(T) - v(T-S) >= sum_{k in S} (v(T) - v(T-{k})).
AgentsSubstitutesReport agents_substitutes_check(
    const AuctionInstance& inst, const std::vector<int>& coalition,
    std::uint64_t assignment_cap = kDefaultAssignmentCap);

struct TruthfulnessFixtureReport {
  Allocation first_run;   // versus the high-pair personality
  Allocation second_run;  // versus the higher-joint personality
  std::vector<int> first_order, second_order;
  Rational keep_first, deviate_first;    // 18 - p >= 10 - q
  Rational keep_second, deviate_second;  // 10 - q >= 19 - p
  bool system_infeasible = false;
  std::vector<std::string> inequalities;
};

/// Two-item, two-bidder fixture showing that no payment scheme makes the
/// greedy allocation (most expensive item first) truthful: the two runs
/// force 18 - p >= 10 - q and 10 - q >= 19 - p, which cannot both hold.
TruthfulnessFixtureReport greedy_truthfulness_fixture();

}  // namespace subauct
