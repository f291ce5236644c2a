#include "subauct/hierarchy.hpp"

#include <algorithm>
#include <stdexcept>

#include "subauct/detail/valuation_impl.hpp"
#include "subauct/lp.hpp"

namespace subauct {

Check<CfWitness> is_complement_free(const Valuation& v) {
  const int m = v.universe_size();
  require_enumerable(m, "is_complement_free");
  const std::vector<Rational>& t = v.table();
  const std::uint32_t n = 1u << m;
  // Disjoint pairs suffice: v(A)+v(B) >= v(A\B)+v(B) >= v((A\B) u B) by
  // monotonicity. Witness is the first violating A (ascending), with the
  // smallest violating B for that A.
  for (std::uint32_t a = 1; a < n; ++a) {
    const std::uint32_t comp = ~a & (n - 1);
    bool found = false;
    std::uint32_t best_b = 0;
    for (std::uint32_t b = comp; b != 0; b = (b - 1) & comp) {
      if (t[a] + t[b] < t[a | b]) {
        if (!found || b < best_b) best_b = b;
        found = true;
      }
      if (b == 0) break;
    }
    if (found)
      return {false, CfWitness{ItemSet(m, a), ItemSet(m, best_b)}};
  }
  return {true, std::nullopt};
}

Check<SmWitness> is_submodular(const Valuation& v) {
  const int m = v.universe_size();
  require_enumerable(m, "is_submodular");
  const std::vector<Rational>& t = v.table();
  const std::uint32_t n = 1u << m;
  for (std::uint32_t s = 0; s < n; ++s) {
    for (int x = 0; x < m; ++x) {
      const std::uint32_t xb = 1u << x;
      if (s & xb) continue;
      for (int y = 0; y < m; ++y) {
        const std::uint32_t yb = 1u << y;
        if (y == x || (s & yb)) continue;
        // v(x | s) >= v(x | s + y)
        if (t[s | xb] - t[s] < t[s | xb | yb] - t[s | yb])
          return {false, SmWitness{x, y, ItemSet(m, s)}};
      }
    }
  }
  return {true, std::nullopt};
}

Check<GsWitness> is_gross_substitutes(const Valuation& v) {
  const int m = v.universe_size();
  require_enumerable(m, "is_gross_substitutes");
  const std::vector<Rational>& t = v.table();
  const std::uint32_t n = 1u << m;
  for (std::uint32_t s = 0; s < n; ++s) {
    for (std::uint32_t tt = 0; tt < n; ++tt) {
      std::uint32_t only_s = s & ~tt;
      if (!only_s) continue;
      Rational lhs = t[s] + t[tt];
      for (std::uint32_t rest = only_s; rest;) {
        const std::uint32_t xb = rest & (~rest + 1u);
        rest ^= xb;
        // pure transfer of x
        if (t[s ^ xb] + t[tt | xb] >= lhs) continue;
        bool ok = false;
        for (std::uint32_t swap = tt & ~s; swap;) {
          const std::uint32_t yb = swap & (~swap + 1u);
          swap ^= yb;
          if (t[(s ^ xb) | yb] + t[(tt | xb) ^ yb] >= lhs) {
            ok = true;
            break;
          }
        }
        if (!ok)
          return {false,
                  GsWitness{ItemSet(m, s), ItemSet(m, tt),
                            std::countr_zero(xb)}};
      }
    }
  }
  return {true, std::nullopt};
}

Check<XosWitness> is_xos(const Valuation& v) {
  const int m = v.universe_size();
  if (m > 10)
    throw UniverseTooLarge("is_xos: per-set feasibility beyond m = 10");
  require_enumerable(m, "is_xos");
  const std::vector<Rational>& t = v.table();
  const std::uint32_t n = 1u << m;
  for (std::uint32_t a = 1; a < n; ++a) {
    const int k = std::popcount(a);
    if (k < 2) continue;  // singleton support is trivial
    std::vector<int> items;
    items.reserve(static_cast<size_t>(k));
    for (int i = 0; i < m; ++i)
      if ((a >> i) & 1u) items.push_back(i);
    auto var_of = [&](std::uint32_t sub) {
      std::vector<Rational> coeff(static_cast<size_t>(k), Rational(0));
      for (int j = 0; j < k; ++j)
        if ((sub >> items[static_cast<size_t>(j)]) & 1u)
          coeff[static_cast<size_t>(j)] = 1;
      return coeff;
    };
    lp::Feasibility prob;
    prob.num_vars = k;
    prob.nonneg.assign(static_cast<size_t>(k), true);
    prob.constraints.push_back({var_of(a), lp::Rel::eq, t[a]});
    for (std::uint32_t sub = (a - 1) & a; sub != 0; sub = (sub - 1) & a)
      prob.constraints.push_back({var_of(sub), lp::Rel::le, t[sub]});
    if (!lp::find_feasible(prob))
      return {false, XosWitness{ItemSet(m, a)}};
  }
  return {true, std::nullopt};
}

bool is_downward_sloping(const Valuation& v) {
  auto* sym = dynamic_cast<const detail::SymmetricImpl*>(v.impl().get());
  if (!sym)
    throw NotSymmetric("is_downward_sloping: valuation of kind " +
                       kind_name(v.kind()) + ", expected symmetric");
  const std::vector<Rational>& p = sym->marginals();
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] > p[i - 1]) return false;
  return true;
}

std::optional<ItemSet> single_improvement_step(const Valuation& v,
                                               const PriceVector& p,
                                               const ItemSet& a) {
  const int m = v.universe_size();
  if (a.universe_size() != m || p.size() != m)
    throw UniverseMismatch("single_improvement_step: universe mismatch");
  const std::uint32_t mask = a.bits();
  const std::uint32_t full = a.full_mask();
  const Rational current = v.value(mask) - p.total(mask);
  Rational best = current;
  std::optional<std::uint32_t> best_mask;
  auto consider = [&](std::uint32_t candidate) {
    Rational s = v.value(candidate) - p.total(candidate);
    if (s > best || (s == best && best_mask && candidate < *best_mask)) {
      best = std::move(s);
      best_mask = candidate;
    }
  };
  for (int x = -1; x < m; ++x) {  // x = -1: no deletion
    std::uint32_t base = mask;
    if (x >= 0) {
      if (!((mask >> x) & 1u)) continue;
      base = mask ^ (1u << x);
      consider(base);  // deletion only
    }
    for (int y = 0; y < m; ++y) {
      const std::uint32_t yb = 1u << y;
      if (full & yb && !(mask & yb)) consider(base | yb);
    }
  }
  if (!best_mask || best <= current) return std::nullopt;
  return ItemSet(m, *best_mask);
}

namespace {

/// For item x: marginal g[T] = v(T+x) - v(T) over T avoiding x, the subset
/// minimum mn[T] = min_{S <= T} g[S], and its argmin (smallest encoding on
/// ties).
struct MarginalMinima {
  std::vector<Rational> g;
  std::vector<Rational> mn;
  std::vector<std::uint32_t> arg;
};

MarginalMinima marginal_minima(const std::vector<Rational>& t, int m, int x) {
  const std::uint32_t n = 1u << m;
  const std::uint32_t xb = 1u << x;
  MarginalMinima out;
  out.g.assign(n, Rational(0));
  out.mn.assign(n, Rational(0));
  out.arg.assign(n, 0);
  for (std::uint32_t tt = 0; tt < n; ++tt) {
    if (tt & xb) continue;
    out.g[tt] = t[tt | xb] - t[tt];
    out.mn[tt] = out.g[tt];
    out.arg[tt] = tt;
    for (std::uint32_t rest = tt; rest;) {
      const std::uint32_t bit = rest & (~rest + 1u);
      rest ^= bit;
      const std::uint32_t sub = tt ^ bit;
      if (out.mn[sub] < out.mn[tt] ||
          (out.mn[sub] == out.mn[tt] && out.arg[sub] < out.arg[tt])) {
        out.mn[tt] = out.mn[sub];
        out.arg[tt] = out.arg[sub];
      }
    }
  }
  return out;
}

}  // namespace

std::optional<Rational> min_complementarity_opt(const Valuation& v) {
  const int m = v.universe_size();
  require_enumerable(m, "min_complementarity");
  const std::vector<Rational>& t = v.table();
  const std::uint32_t n = 1u << m;
  const std::uint32_t xmask_full = n - 1;
  Rational best(1);
  for (int x = 0; x < m; ++x) {
    const std::uint32_t xb = 1u << x;
    MarginalMinima mm = marginal_minima(t, m, x);
    for (std::uint32_t tt = 0; tt < n; ++tt) {
      if (tt & xb) continue;
      if (mm.g[tt] == 0) continue;
      if (mm.mn[tt] == 0) return std::nullopt;  // unbounded
      Rational ratio = mm.g[tt] / mm.mn[tt];
      if (ratio > best) best = std::move(ratio);
    }
  }
  (void)xmask_full;
  return best;
}

Rational min_complementarity(const Valuation& v) {
  auto a = min_complementarity_opt(v);
  if (!a)
    throw UnboundedComplementarity(
        "no finite a: some extension has a zero marginal below a positive one");
  return *a;
}

Check<AWitness> is_a_submodular(const Valuation& v, const Rational& a) {
  if (a < 1) throw SubauctError("is_a_submodular: a must be >= 1");
  const int m = v.universe_size();
  require_enumerable(m, "is_a_submodular");
  const std::vector<Rational>& t = v.table();
  const std::uint32_t n = 1u << m;
  for (int x = 0; x < m; ++x) {
    const std::uint32_t xb = 1u << x;
    MarginalMinima mm = marginal_minima(t, m, x);
    for (std::uint32_t tt = 0; tt < n; ++tt) {
      if (tt & xb) continue;
      if (a * mm.mn[tt] < mm.g[tt])
        return {false,
                AWitness{x, ItemSet(m, mm.arg[tt]), ItemSet(m, tt)}};
    }
  }
  return {true, std::nullopt};
}

Check<TripleWitness> gs_triple_property(const Valuation& v) {
  const int m = v.universe_size();
  if (m < 3) throw UniverseTooSmall("gs_triple_property: needs m >= 3");
  require_enumerable(m, "gs_triple_property");
  const std::vector<Rational>& t = v.table();
  auto pair_marginal = [&](int of, int given) {
    return t[(1u << of) | (1u << given)] - t[1u << given];
  };
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z) {
        if (x == y || x == z || y == z) continue;
        if (pair_marginal(z, y) < pair_marginal(z, x) &&
            pair_marginal(x, y) != pair_marginal(x, z))
          return {false, TripleWitness{x, y, z}};
      }
  return {true, std::nullopt};
}

Valuation perturbed_central(int m, const std::vector<Rational>& h) {
  if (m < 1 || m > kUniverseHardCap)
    throw UniverseTooLarge("perturbed_central: universe size out of range");
  require_enumerable(m, "perturbed_central");
  const std::uint32_t n = 1u << m;
  if (h.size() != n)
    throw DimensionMismatch("perturbed_central: expected " + std::to_string(n) +
                            " perturbation entries");
  if (h[0] != 0)
    throw NormalizationViolation("perturbed_central: h(empty) must be 0");
  const Rational bound = pow2(-(m + 2));
  for (std::uint32_t s = 0; s < n; ++s)
    if (abs(h[s]) > bound)
      throw PerturbationTooLarge("perturbed_central: |h(" +
                                 ItemSet(m, s).to_string() + ")| = " +
                                 to_string(abs(h[s])) + " exceeds 2^-(m+2)");
  std::vector<Rational> values(n);
  for (std::uint32_t s = 0; s < n; ++s)
    values[s] = Rational(1) - pow2(-std::popcount(s)) + h[s];
  return make_table(m, std::move(values));
}

ClassReport classify(const Valuation& v) {
  ClassReport r;
  auto cf = is_complement_free(v);
  auto sm = is_submodular(v);
  auto xos = is_xos(v);
  auto gs = is_gross_substitutes(v);
  r.cf = cf.holds;
  r.sm = sm.holds;
  r.xos = xos.holds;
  r.gs = gs.holds;
  r.cf_witness = cf.witness;
  r.sm_witness = sm.witness;
  r.xos_witness = xos.witness;
  r.gs_witness = gs.witness;
  if (v.kind() == ValuationKind::symmetric)
    r.downward_sloping = is_downward_sloping(v);
  r.min_a = min_complementarity_opt(v);
  if ((r.gs && !r.sm) || (r.sm && !r.xos) || (r.xos && !r.cf))
    throw std::logic_error("classify: hierarchy violated by checker verdicts");
  if (r.sm != (r.min_a && *r.min_a == 1))
    throw std::logic_error("classify: submodular <=> min_a = 1 violated");
  return r;
}

}  // namespace subauct
