#include "subauct/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace subauct::lp {

namespace {

// Dense tableau rows[r] = coefficients over all columns, rhs[r] >= 0.
// Phase 1 minimizes the sum of one artificial variable per row.
struct Tableau {
  int cols = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<int> basis;  // basis[r] = column basic in row r
};

}  // namespace

std::optional<std::vector<Rational>> find_feasible(const Feasibility& prob) {
  const int n = prob.num_vars;
  if (static_cast<int>(prob.nonneg.size()) != n)
    throw std::invalid_argument("find_feasible: nonneg flags size mismatch");

  // column layout: for each var, one column (nonneg) or two (free: plus,
  // minus); then one slack per inequality; then one artificial per row.
  std::vector<int> col_of_var(static_cast<size_t>(n));
  int structural = 0;
  for (int j = 0; j < n; ++j) {
    col_of_var[static_cast<size_t>(j)] = structural;
    structural += prob.nonneg[static_cast<size_t>(j)] ? 1 : 2;
  }
  int slack_count = 0;
  for (const Constraint& c : prob.constraints)
    if (c.rel != Rel::eq) ++slack_count;

  const int r_count = static_cast<int>(prob.constraints.size());
  Tableau t;
  t.cols = structural + slack_count + r_count;
  t.rows.assign(static_cast<size_t>(r_count),
                std::vector<Rational>(static_cast<size_t>(t.cols), Rational(0)));
  t.rhs.assign(static_cast<size_t>(r_count), Rational(0));
  t.basis.assign(static_cast<size_t>(r_count), -1);

  int slack_next = structural;
  for (int r = 0; r < r_count; ++r) {
    const Constraint& c = prob.constraints[static_cast<size_t>(r)];
    if (static_cast<int>(c.coeff.size()) != n)
      throw std::invalid_argument("find_feasible: constraint width mismatch");
    auto& row = t.rows[static_cast<size_t>(r)];
    for (int j = 0; j < n; ++j) {
      const Rational& a = c.coeff[static_cast<size_t>(j)];
      int col = col_of_var[static_cast<size_t>(j)];
      row[static_cast<size_t>(col)] = a;
      if (!prob.nonneg[static_cast<size_t>(j)])
        row[static_cast<size_t>(col + 1)] = -a;
    }
    if (c.rel == Rel::le)
      row[static_cast<size_t>(slack_next++)] = 1;
    else if (c.rel == Rel::ge)
      row[static_cast<size_t>(slack_next++)] = -1;
    t.rhs[static_cast<size_t>(r)] = c.rhs;
    if (t.rhs[static_cast<size_t>(r)] < 0) {
      for (auto& x : row) x = -x;
      t.rhs[static_cast<size_t>(r)] = -t.rhs[static_cast<size_t>(r)];
    }
    int art = structural + slack_count + r;
    row[static_cast<size_t>(art)] = 1;
    t.basis[static_cast<size_t>(r)] = art;
  }

  // reduced-cost row for min(sum of artificials): z[j] = -sum of rows with
  // artificial basis; objective value = -sum rhs. Stored negated so that
  // entering columns are those with z[j] < 0.
  std::vector<Rational> z(static_cast<size_t>(t.cols), Rational(0));
  Rational obj(0);
  for (int r = 0; r < r_count; ++r) {
    for (int j = 0; j < structural + slack_count; ++j)
      z[static_cast<size_t>(j)] -= t.rows[static_cast<size_t>(r)][static_cast<size_t>(j)];
    obj += t.rhs[static_cast<size_t>(r)];
  }

  // artificials never re-enter the basis once out
  const int enterable = structural + slack_count;
  for (;;) {
    // Bland: smallest-index column with negative reduced cost
    int enter = -1;
    for (int j = 0; j < enterable; ++j)
      if (z[static_cast<size_t>(j)] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    // ratio test, ties to smallest basis variable (Bland)
    int leave = -1;
    Rational best_ratio(0);
    for (int r = 0; r < r_count; ++r) {
      const Rational& a = t.rows[static_cast<size_t>(r)][static_cast<size_t>(enter)];
      if (a <= 0) continue;
      Rational ratio = t.rhs[static_cast<size_t>(r)] / a;
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio &&
           t.basis[static_cast<size_t>(r)] < t.basis[static_cast<size_t>(leave)])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0)
      // phase-1 objective is bounded below by 0, so this cannot happen
      throw std::logic_error("find_feasible: unbounded phase-1 pivot");
    // pivot on (leave, enter)
    auto& prow = t.rows[static_cast<size_t>(leave)];
    Rational piv = prow[static_cast<size_t>(enter)];
    for (auto& x : prow) x /= piv;
    t.rhs[static_cast<size_t>(leave)] /= piv;
    for (int r = 0; r < r_count; ++r) {
      if (r == leave) continue;
      auto& row = t.rows[static_cast<size_t>(r)];
      Rational f = row[static_cast<size_t>(enter)];
      if (f == 0) continue;
      for (int j = 0; j < t.cols; ++j)
        row[static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
      t.rhs[static_cast<size_t>(r)] -= f * t.rhs[static_cast<size_t>(leave)];
    }
    Rational fz = z[static_cast<size_t>(enter)];
    if (fz != 0) {
      for (int j = 0; j < t.cols; ++j)
        z[static_cast<size_t>(j)] -= fz * prow[static_cast<size_t>(j)];
      obj += fz * t.rhs[static_cast<size_t>(leave)];
    }
    t.basis[static_cast<size_t>(leave)] = enter;
  }

  if (obj != 0) return std::nullopt;  // infeasible

  std::vector<Rational> cols_value(static_cast<size_t>(t.cols), Rational(0));
  for (int r = 0; r < r_count; ++r)
    cols_value[static_cast<size_t>(t.basis[static_cast<size_t>(r)])] =
        t.rhs[static_cast<size_t>(r)];
  std::vector<Rational> x(static_cast<size_t>(n), Rational(0));
  for (int j = 0; j < n; ++j) {
    int col = col_of_var[static_cast<size_t>(j)];
    x[static_cast<size_t>(j)] = cols_value[static_cast<size_t>(col)];
    if (!prob.nonneg[static_cast<size_t>(j)])
      x[static_cast<size_t>(j)] -= cols_value[static_cast<size_t>(col + 1)];
  }

  // exactness makes verification cheap; a wrong answer here is a bug
  for (const Constraint& c : prob.constraints) {
    Rational lhs(0);
    for (int j = 0; j < n; ++j)
      lhs += c.coeff[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
    bool ok = c.rel == Rel::le   ? lhs <= c.rhs
              : c.rel == Rel::ge ? lhs >= c.rhs
                                 : lhs == c.rhs;
    if (!ok) throw std::logic_error("find_feasible: solution check failed");
  }
  return x;
}

}  // namespace subauct::lp
