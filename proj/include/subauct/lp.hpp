#pragma once

#include <optional>
#include <vector>

#include "subauct/rational.hpp"

namespace subauct::lp {

enum class Rel { le, ge, eq };

struct Constraint {
  std::vector<Rational> coeff;  // one per variable
  Rel rel;
  Rational rhs;
};

struct Feasibility {
  int num_vars = 0;
  std::vector<bool> nonneg;  // per variable; false = free
  std::vector<Constraint> constraints;
};

/// Exact phase-1 simplex (Bland's rule, dense rational tableau). Returns a
/// feasible point or nullopt. Free variables are handled by splitting.
std::optional<std::vector<Rational>> find_feasible(const Feasibility& prob);

}  // namespace subauct::lp
