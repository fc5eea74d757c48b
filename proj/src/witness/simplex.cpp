#include "fpcomm/witness/simplex.hpp"

#include <optional>

#include "fpcomm/errors.hpp"

namespace fpcomm::witness {

LinearProgram::LinearProgram(std::size_t num_vars) : num_vars_(num_vars), objective_(num_vars) {}

void LinearProgram::set_objective(std::vector<Rational> c) {
  if (c.size() != num_vars_) throw DimensionMismatch("objective length differs from variable count");
  objective_ = std::move(c);
}

void LinearProgram::add_constraint(std::vector<Rational> coeffs, Sense sense, Rational rhs) {
  if (coeffs.size() != num_vars_) throw DimensionMismatch("constraint length differs from variable count");
  rows_.push_back(Row{std::move(coeffs), sense, std::move(rhs)});
}

namespace {

// Tableau with the rhs in the last column and reduced costs kept in `cost`.
struct Tableau {
  std::size_t m = 0;
  std::size_t cols = 0;  // structural + slack + artificial
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> cost;  // reduced costs, last entry = -objective value
  std::vector<std::size_t> basis;
  std::size_t pivots = 0;

  void pivot(std::size_t row, std::size_t col) {
    const Rational piv = a[row][col];
    for (Rational& v : a[row]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational factor = a[i][col];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (a[row][j] != 0) a[i][j] -= factor * a[row][j];
      }
    }
    if (cost[col] != 0) {
      const Rational factor = cost[col];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (a[row][j] != 0) cost[j] -= factor * a[row][j];
      }
    }
    basis[row] = col;
    ++pivots;
  }

  // Loads objective c (length cols) and prices out the basis.
  void set_cost(const std::vector<Rational>& c) {
    cost.assign(cols + 1, Rational(0));
    for (std::size_t j = 0; j < cols; ++j) cost[j] = c[j];
    for (std::size_t i = 0; i < m; ++i) {
      const Rational cb = c[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= cb * a[i][j];
    }
  }

  // Bland's rule over columns [0, allowed). Returns false when unbounded.
  bool run(std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (cost[j] < 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (a[i][*enter] <= 0) continue;
        const Rational ratio = a[i][cols] / a[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }
};

}  // namespace

LpSolution LinearProgram::minimize() const {
  const std::size_t m = rows_.size();
  std::size_t slacks = 0;
  for (const Row& r : rows_) slacks += r.sense == Sense::Equal ? 0 : 1;
  const std::size_t artificial_start = num_vars_ + slacks;

  Tableau t;
  t.m = m;
  t.cols = artificial_start + m;
  t.a.assign(m, std::vector<Rational>(t.cols + 1, Rational(0)));
  t.basis.resize(m);
  std::size_t slack = num_vars_;
  for (std::size_t i = 0; i < m; ++i) {
    const Row& r = rows_[i];
    const bool flip = r.rhs < 0;
    const Rational sign = flip ? -1 : 1;
    for (std::size_t j = 0; j < num_vars_; ++j) t.a[i][j] = sign * r.coeffs[j];
    if (r.sense != Sense::Equal) t.a[i][slack++] = sign * (r.sense == Sense::LessEqual ? 1 : -1);
    t.a[i][artificial_start + i] = 1;
    t.a[i][t.cols] = sign * r.rhs;
    t.basis[i] = artificial_start + i;
  }

  std::vector<Rational> phase1(t.cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[artificial_start + i] = 1;
  t.set_cost(phase1);
  t.run(t.cols);

  LpSolution sol;
  if (-t.cost[t.cols] != 0) {
    sol.status = LpStatus::Infeasible;
    sol.pivots = t.pivots;
    return sol;
  }
  // Drive zero-level artificials out of the basis where possible; rows that
  // vanish on every real column are redundant and stay untouched.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < artificial_start) continue;
    for (std::size_t j = 0; j < artificial_start; ++j) {
      if (t.a[i][j] != 0) {
        t.pivot(i, j);
        break;
      }
    }
  }

  std::vector<Rational> phase2(t.cols, Rational(0));
  for (std::size_t j = 0; j < num_vars_; ++j) phase2[j] = objective_[j];
  t.set_cost(phase2);
  const bool bounded = t.run(artificial_start);
  sol.pivots = t.pivots;
  if (!bounded) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }
  sol.status = LpStatus::Optimal;
  sol.value = -t.cost[t.cols];
  sol.x.assign(num_vars_, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < num_vars_) sol.x[t.basis[i]] = t.a[i][t.cols];
  }
  return sol;
}

}  // namespace fpcomm::witness
