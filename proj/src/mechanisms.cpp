#include "subauct/mechanisms.hpp"

#include <stdexcept>

#include "subauct/algebra.hpp"
#include "subauct/lp.hpp"

namespace subauct {

namespace {

std::vector<Valuation> everyone_but(const std::vector<Valuation>& bidders,
                                    int i) {
  std::vector<Valuation> rest;
  rest.reserve(bidders.size() - 1);
  for (int j = 0; j < static_cast<int>(bidders.size()); ++j)
    if (j != i) rest.push_back(bidders[static_cast<size_t>(j)]);
  return rest;
}

/// Optimal welfare of a set of bidders over an item subset; 0 when there
/// are no bidders.
Rational group_welfare(int m, const std::vector<Valuation>& group,
                       std::uint32_t items, std::uint64_t cap) {
  if (group.empty()) return Rational(0);
  return optimal_welfare_on(AuctionInstance(m, group), items, cap);
}

}  // namespace

VcgOutcome vcg(const AuctionInstance& inst, std::uint64_t assignment_cap) {
  OptimalResult opt = optimal_allocate(inst, assignment_cap);
  const std::uint32_t full = ItemSet::full(inst.m).bits();
  std::vector<Rational> payments;
  std::vector<std::pair<Rational, Rational>> opponent_values;
  payments.reserve(static_cast<size_t>(inst.n()));
  for (int i = 0; i < inst.n(); ++i) {
    std::vector<Valuation> others = everyone_but(inst.bidders, i);
    Valuation u = or_all(others, inst.m);
    const std::uint32_t bundle = opt.allocation.bundles[static_cast<size_t>(i)].bits();
    Rational u_full = u.value(full);
    Rational u_rest = u.value(full & ~bundle);
    // same numbers through the welfare route; a mismatch is a bug
    if (u_full != group_welfare(inst.m, others, full, assignment_cap) ||
        u_rest !=
            group_welfare(inst.m, others, full & ~bundle, assignment_cap))
      throw std::logic_error("vcg: OR-combination disagrees with welfare route");
    payments.push_back(u_full - u_rest);
    opponent_values.emplace_back(std::move(u_full), std::move(u_rest));
  }
  return {std::move(opt.allocation), std::move(opt.value), std::move(payments),
          std::move(opponent_values)};
}

FalseNameReport false_name_analysis(const std::vector<Valuation>& others,
                                    const std::vector<Valuation>& split) {
  if (split.empty())
    throw DimensionMismatch("false_name_analysis: empty split");
  const int m = split[0].universe_size();
  for (const Valuation& v : split)
    if (v.universe_size() != m)
      throw UniverseMismatch("false_name_analysis: split universe mismatch");
  for (const Valuation& v : others)
    if (v.universe_size() != m)
      throw UniverseMismatch("false_name_analysis: others universe mismatch");

  Valuation combined = or_all(split, m);

  std::vector<Valuation> honest_bidders = others;
  honest_bidders.push_back(combined);
  VcgOutcome honest = vcg(AuctionInstance(m, honest_bidders));
  const size_t manipulator = others.size();
  Rational honest_payment = honest.payments[manipulator];

  std::vector<Valuation> split_bidders = others;
  split_bidders.insert(split_bidders.end(), split.begin(), split.end());
  VcgOutcome split_run = vcg(AuctionInstance(m, split_bidders));
  std::vector<Rational> split_payments(
      split_run.payments.begin() + static_cast<long>(others.size()),
      split_run.payments.end());
  Rational total_split(0);
  for (const Rational& p : split_payments) total_split += p;

  std::uint32_t split_union = 0;
  for (size_t k = 0; k < split.size(); ++k)
    split_union |=
        split_run.allocation.bundles[others.size() + k].bits();
  const std::uint32_t honest_bundle =
      honest.allocation.bundles[manipulator].bits();
  bool equivalent =
      combined.value(split_union) == combined.value(honest_bundle);

  FalseNameReport report{std::move(honest_payment),
                         std::move(split_payments),
                         std::move(total_split),
                         false,
                         is_submodular(or_all(others, m)).holds,
                         equivalent,
                         std::move(honest),
                         std::move(split_run)};
  report.profitable =
      report.total_split < report.honest_payment && report.bundles_equivalent;
  return report;
}

AgentsSubstitutesReport agents_substitutes_check(
    const AuctionInstance& inst, const std::vector<int>& coalition,
    std::uint64_t assignment_cap) {
  std::vector<bool> in_coalition(static_cast<size_t>(inst.n()), false);
  for (int k : coalition) {
    if (k < 0 || k >= inst.n())
      throw DimensionMismatch("agents_substitutes_check: bad bidder index");
    in_coalition[static_cast<size_t>(k)] = true;
  }
  const std::uint32_t full = ItemSet::full(inst.m).bits();
  AgentsSubstitutesReport r;
  r.grand = group_welfare(inst.m, inst.bidders, full, assignment_cap);
  std::vector<Valuation> rest;
  for (int j = 0; j < inst.n(); ++j)
    if (!in_coalition[static_cast<size_t>(j)])
      rest.push_back(inst.bidders[static_cast<size_t>(j)]);
  r.without_coalition = group_welfare(inst.m, rest, full, assignment_cap);
  r.lhs = r.grand - r.without_coalition;
  r.rhs = 0;
  for (int k : coalition) {
    Rational drop =
        r.grand - group_welfare(inst.m, everyone_but(inst.bidders, k), full,
                                assignment_cap);
    r.rhs += drop;
    r.singleton_drops.push_back(std::move(drop));
  }
  r.holds = r.lhs >= r.rhs;
  return r;
}

TruthfulnessFixtureReport greedy_truthfulness_fixture() {
  const int m = 2;
  Valuation red = make_table(m, {Rational(0), Rational(10), Rational(6),
                                 Rational(11)});
  Valuation green_high_pair = make_table(
      m, {Rational(0), Rational(11), Rational(10), Rational(18)});
  Valuation green_higher_joint = make_table(
      m, {Rational(0), Rational(9), Rational(10), Rational(19)});

  // the fixture's greedy runs on the most expensive item first
  auto expensive_first = [&](const AuctionInstance& inst) {
    std::vector<int> order(static_cast<size_t>(inst.m));
    std::iota(order.begin(), order.end(), 0);
    std::vector<Rational> top(static_cast<size_t>(inst.m), Rational(0));
    for (int x = 0; x < inst.m; ++x)
      for (const Valuation& v : inst.bidders)
        top[static_cast<size_t>(x)] =
            std::max(top[static_cast<size_t>(x)],
                     v.value(ItemSet::single(inst.m, x)));
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return top[static_cast<size_t>(a)] > top[static_cast<size_t>(b)];
    });
    return order;
  };

  AuctionInstance first(m, {red, green_high_pair});
  AuctionInstance second(m, {red, green_higher_joint});
  std::vector<int> order1 = expensive_first(first);
  std::vector<int> order2 = expensive_first(second);

  TruthfulnessFixtureReport r{greedy_allocate(first, &order1),
                              greedy_allocate(second, &order2),
                              std::move(order1),
                              std::move(order2),
                              green_high_pair.value(r_first_bundle(m)),
                              Rational(0),
                              Rational(0),
                              Rational(0),
                              false,
                              {}};
  return r;
}

}  // namespace subauct
