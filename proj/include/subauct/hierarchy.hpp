#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subauct/valuation.hpp"

namespace subauct {

/// Outcome of a class-membership check: on failure, `witness` carries the
/// first violation in canonical enumeration order.
template <class W>
struct Check {
  bool holds = true;
  std::optional<W> witness;
  explicit operator bool() const { return holds; }
};

struct CfWitness {
  ItemSet a, b;  // disjoint, with v(a) + v(b) < v(a|b)
  std::string describe() const {
    return "v" + a.to_string() + " + v" + b.to_string() + " < v(union)";
  }
};

struct SmWitness {
  int x, y;
  ItemSet s;  // v(x|s) < v(x|s+y)
  std::string describe() const {
    return "v(" + std::to_string(x) + "|" + s.to_string() + ") < v(" +
           std::to_string(x) + "|" + s.to_string() + "+{" + std::to_string(y) +
           "})";
  }
};

struct GsWitness {
  ItemSet s, t;
  int x;  // exchange condition fails for x in s-t
  std::string describe() const {
    return "exchange fails at S=" + s.to_string() + " T=" + t.to_string() +
           " x=" + std::to_string(x);
  }
};

struct XosWitness {
  ItemSet a;  // no nonnegative supporting prices on a
  std::string describe() const {
    return "no supporting prices for " + a.to_string();
  }
};

struct AWitness {
  int x;
  ItemSet s, t;  // a * v(x|s) < v(x|t), s subset of t
  std::string describe() const {
    return "a*v(" + std::to_string(x) + "|" + s.to_string() + ") < v(" +
           std::to_string(x) + "|" + t.to_string() + ")";
  }
};

struct TripleWitness {
  int x, y, z;
  std::string describe() const {
    return "triple (" + std::to_string(x) + "," + std::to_string(y) + "," +
           std::to_string(z) + ")";
  }
};

/// v(A) + v(B) >= v(A u B) for all A, B. Checked over disjoint pairs, which
/// suffices under monotonicity.
Check<CfWitness> is_complement_free(const Valuation& v);

/// Decreasing marginal utilities: v(x|S) >= v(x|S+{y}) for all x, y, S.
Check<SmWitness> is_submodular(const Valuation& v);

/// Gross substitutes through the discrete exchange condition
/// (M-natural-concavity; Fujishige-Yang): for all S, T and x in S-T,
///   v(S) + v(T) <= max(v(S-x) + v(T+x), max_{y in T-S} v(S-x+y) + v(T+x-y)).
/// The price-based definition quantifies over all real price vectors and is
/// not finitely checkable; this equivalent form is.
Check<GsWitness> is_gross_substitutes(const Valuation& v);

/// Fractional-subadditivity test: for every set A, feasibility of
/// nonnegative prices x_i (i in A) with sum = v(A) and sum over S <= v(S)
/// for all S within A. Exact rational feasibility; m <= 10.
Check<XosWitness> is_xos(const Valuation& v);

/// Symmetric kind only: marginal sequence non-increasing.
bool is_downward_sloping(const Valuation& v);

/// A surplus-improving set differing from `a` by at most one deletion and
/// one insertion; the best such neighbor (ties to smaller encoding), or
/// nullopt when no neighbor improves.
std::optional<ItemSet> single_improvement_step(const Valuation& v,
                                               const PriceVector& p,
                                               const ItemSet& a);

/// Least a >= 1 with a * v(x|S) >= v(x|T) for all x and S subset T.
/// Throws UnboundedComplementarity when v(x|S) = 0 < v(x|T) somewhere.
Rational min_complementarity(const Valuation& v);

/// Like min_complementarity but reporting unboundedness as nullopt.
std::optional<Rational> min_complementarity_opt(const Valuation& v);

Check<AWitness> is_a_submodular(const Valuation& v, const Rational& a);

/// Necessary condition for gross substitutes (m >= 3): for pairwise
/// distinct x, y, z, v(z|y) < v(z|x) implies v(x|y) = v(x|z).
Check<TripleWitness> gs_triple_property(const Valuation& v);

/// v(S) = 1 - 2^-|S| + h(S), where h is indexed by characteristic encoding,
/// h(empty) = 0 and |h(S)| <= 2^-(m+2). Always submodular.
Valuation perturbed_central(int m, const std::vector<Rational>& h);

/// All verdicts for one valuation. classify() throws std::logic_error if
/// the verdicts ever contradict GS => SM => XOS => CF (checker bug).
struct ClassReport {
  bool cf = false, sm = false, xos = false, gs = false;
  std::optional<bool> downward_sloping;    // symmetric kind only
  std::optional<Rational> min_a;           // nullopt = unbounded
  std::optional<CfWitness> cf_witness;
  std::optional<SmWitness> sm_witness;
  std::optional<XosWitness> xos_witness;
  std::optional<GsWitness> gs_witness;
};

ClassReport classify(const Valuation& v);

}  // namespace subauct
