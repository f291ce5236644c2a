#include "subauct/matching.hpp"

#include <stdexcept>

namespace subauct {

// Jonker-Volgenant style row-by-row assignment (the classic O(n^3)
// potentials formulation), run on cost = -weight with one dummy column per
// left node so that leaving a node unmatched costs 0.
MatchingResult max_weight_matching(
    const std::vector<std::vector<Rational>>& weights, int n_right) {
  const int n = static_cast<int>(weights.size());
  if (n == 0) return {{}, Rational(0)};
  const int cols = n_right + n;  // dummy column j >= n_right = unmatched
  Rational span(1);
  for (const auto& row : weights) {
    if (static_cast<int>(row.size()) != n_right)
      throw std::invalid_argument("max_weight_matching: ragged weight matrix");
    for (const Rational& w : row) span += abs(w);
  }
  const Rational inf = span * (n + cols + 2);
  auto cost = [&](int i, int j) -> Rational {
    return j < n_right ? -weights[static_cast<size_t>(i)][static_cast<size_t>(j)]
                       : Rational(0);
  };

  // 1-based with column 0 as scratch, following the standard formulation
  std::vector<Rational> u(static_cast<size_t>(n) + 1, Rational(0));
  std::vector<Rational> v(static_cast<size_t>(cols) + 1, Rational(0));
  std::vector<int> p(static_cast<size_t>(cols) + 1, 0);
  std::vector<int> way(static_cast<size_t>(cols) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<Rational> minv(static_cast<size_t>(cols) + 1, inf);
    std::vector<bool> used(static_cast<size_t>(cols) + 1, false);
    do {
      used[static_cast<size_t>(j0)] = true;
      int i0 = p[static_cast<size_t>(j0)];
      int j1 = -1;
      Rational delta = inf;
      for (int j = 1; j <= cols; ++j) {
        if (used[static_cast<size_t>(j)]) continue;
        Rational cur = cost(i0 - 1, j - 1) - u[static_cast<size_t>(i0)] -
                       v[static_cast<size_t>(j)];
        if (cur < minv[static_cast<size_t>(j)]) {
          minv[static_cast<size_t>(j)] = cur;
          way[static_cast<size_t>(j)] = j0;
        }
        if (minv[static_cast<size_t>(j)] < delta) {
          delta = minv[static_cast<size_t>(j)];
          j1 = j;
        }
      }
      if (j1 < 0)
        throw std::logic_error("max_weight_matching: no augmenting column");
      for (int j = 0; j <= cols; ++j) {
        if (used[static_cast<size_t>(j)]) {
          u[static_cast<size_t>(p[static_cast<size_t>(j)])] += delta;
          v[static_cast<size_t>(j)] -= delta;
        } else {
          minv[static_cast<size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[static_cast<size_t>(j0)] != 0);
    do {
      int j1 = way[static_cast<size_t>(j0)];
      p[static_cast<size_t>(j0)] = p[static_cast<size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }

  MatchingResult out;
  out.match_of_left.assign(static_cast<size_t>(n), -1);
  out.weight = 0;
  for (int j = 1; j <= cols; ++j) {
    int i = p[static_cast<size_t>(j)];
    if (i == 0 || j > n_right) continue;
    out.match_of_left[static_cast<size_t>(i - 1)] = j - 1;
    out.weight += weights[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
  }
  return out;
}

}  // namespace subauct
