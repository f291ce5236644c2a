#pragma once

#include <vector>

#include "subauct/rational.hpp"

namespace subauct {

struct MatchingResult {
  std::vector<int> match_of_left;  // right index, or -1 (unmatched)
  Rational weight;
};

/// Maximum-weight bipartite matching over exact rational weights
/// (weights >= 0; left nodes may stay unmatched). Hungarian algorithm with
/// potentials on a square extension of the weight matrix.
MatchingResult max_weight_matching(
    const std::vector<std::vector<Rational>>& weights, int n_right);

}  // namespace subauct
