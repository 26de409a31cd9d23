#include "nodalstab/lp.hpp"

#include <optional>

#include "nodalstab/error.hpp"

namespace nodalstab::lp {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

void pivot(Matrix& t, std::size_t row, std::size_t col) {
  const Rational p = t[row][col];
  for (auto& v : t[row]) v /= p;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i == row || t[i][col].is_zero()) continue;
    const Rational f = t[i][col];
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      if (!t[row][j].is_zero()) t[i][j] -= f * t[row][j];
    }
  }
}

enum class RunResult { Optimal, Unbounded };

// Minimises cost over the tableau with Bland's rule. Columns >= allowed_cols never enter.
RunResult run_simplex(Matrix& t, std::vector<std::size_t>& basis, const std::vector<Rational>& cost,
                      std::size_t allowed_cols) {
  const std::size_t m = t.size();
  if (m == 0) return RunResult::Optimal;
  const std::size_t rhs = t[0].size() - 1;
  std::vector<bool> in_basis(rhs, false);
  for (auto b : basis) in_basis[b] = true;

  while (true) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < allowed_cols && !entering; ++j) {
      if (in_basis[j]) continue;
      Rational d = cost[j];
      for (std::size_t i = 0; i < m; ++i) {
        if (!t[i][j].is_zero() && !cost[basis[i]].is_zero()) d -= cost[basis[i]] * t[i][j];
      }
      if (d.sign() < 0) entering = j;
    }
    if (!entering) return RunResult::Optimal;

    const std::size_t col = *entering;
    std::optional<std::size_t> leave;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][col].sign() <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][col];
      if (!leave || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    if (!leave) return RunResult::Unbounded;

    in_basis[basis[*leave]] = false;
    in_basis[col] = true;
    basis[*leave] = col;
    pivot(t, *leave, col);
  }
}

}  // namespace

Problem::Problem(std::size_t num_vars)
    : num_vars_(num_vars), free_(num_vars, false), objective_(num_vars) {}

void Problem::set_free(std::size_t var) {
  if (var >= num_vars_) throw Error(ErrorCode::InvalidArgument, "lp: variable index out of range");
  free_[var] = true;
}

void Problem::add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
  if (coeffs.size() != num_vars_) throw Error(ErrorCode::InvalidArgument, "lp: constraint width mismatch");
  rows_.push_back(Row{std::move(coeffs), rel, std::move(rhs)});
}

void Problem::set_objective(std::vector<Rational> coeffs) {
  if (coeffs.size() != num_vars_) throw Error(ErrorCode::InvalidArgument, "lp: objective width mismatch");
  objective_ = std::move(coeffs);
}

Solution Problem::maximize() const {
  Problem negated = *this;
  for (auto& c : negated.objective_) c = -c;
  Solution s = negated.minimize();
  s.value = -s.value;
  return s;
}

Solution Problem::minimize() const {
  // Column layout: structural (free variables split in two), slacks, artificials, rhs.
  std::vector<std::size_t> pos_col(num_vars_);
  std::vector<std::optional<std::size_t>> neg_col(num_vars_);
  std::size_t ncols = 0;
  for (std::size_t v = 0; v < num_vars_; ++v) {
    pos_col[v] = ncols++;
    if (free_[v]) neg_col[v] = ncols++;
  }
  std::vector<std::optional<std::size_t>> slack_col(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].rel != Relation::Equal) slack_col[r] = ncols++;
  }
  const std::size_t first_artificial = ncols;
  const std::size_t m = rows_.size();
  ncols += m;
  const std::size_t rhs = ncols;

  Matrix t(m, std::vector<Rational>(ncols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    const Row& row = rows_[r];
    for (std::size_t v = 0; v < num_vars_; ++v) {
      t[r][pos_col[v]] = row.coeffs[v];
      if (neg_col[v]) t[r][*neg_col[v]] = -row.coeffs[v];
    }
    if (slack_col[r]) t[r][*slack_col[r]] = row.rel == Relation::LessEq ? 1 : -1;
    t[r][rhs] = row.rhs;
    if (row.rhs.sign() < 0) {
      for (auto& v : t[r]) v = -v;
    }
    t[r][first_artificial + r] = 1;
    basis[r] = first_artificial + r;
  }

  std::vector<Rational> phase1_cost(ncols);
  for (std::size_t j = first_artificial; j < ncols; ++j) phase1_cost[j] = 1;
  run_simplex(t, basis, phase1_cost, ncols);

  Rational infeasibility;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= first_artificial) infeasibility += t[i][rhs];
  }
  Solution sol;
  if (infeasibility.sign() > 0) {
    sol.status = Status::Infeasible;
    return sol;
  }

  // Drive zero-valued artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.size();) {
    if (basis[i] < first_artificial) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < first_artificial && !col; ++j) {
      if (!t[i][j].is_zero()) col = j;
    }
    if (col) {
      basis[i] = *col;
      pivot(t, i, *col);
      ++i;
    } else {
      t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  std::vector<Rational> cost(ncols);
  for (std::size_t v = 0; v < num_vars_; ++v) {
    cost[pos_col[v]] = objective_[v];
    if (neg_col[v]) cost[*neg_col[v]] = -objective_[v];
  }
  if (run_simplex(t, basis, cost, first_artificial) == RunResult::Unbounded) {
    sol.status = Status::Unbounded;
    return sol;
  }

  std::vector<Rational> column_value(ncols);
  for (std::size_t i = 0; i < t.size(); ++i) column_value[basis[i]] = t[i][rhs];
  sol.status = Status::Optimal;
  sol.x.assign(num_vars_, Rational(0));
  for (std::size_t v = 0; v < num_vars_; ++v) {
    sol.x[v] = column_value[pos_col[v]];
    if (neg_col[v]) sol.x[v] -= column_value[*neg_col[v]];
    sol.value += objective_[v] * sol.x[v];
  }
  return sol;
}

}  // namespace nodalstab::lp
