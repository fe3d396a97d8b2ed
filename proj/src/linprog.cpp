#include "glmp/linprog.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace glmp {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "Optimal";
    case LpStatus::Infeasible: return "Infeasible";
    case LpStatus::Unbounded: return "Unbounded";
  }
  return "?";
}

namespace {

// Dense tableau over the slack-augmented standard form. Free variables are
// split into positive and negative parts; explicit bounds become rows.
struct Tableau {
  int rows = 0;
  int cols = 0;          // structural + slack + artificial
  int art_begin = 0;     // first artificial column
  std::vector<std::vector<double>> T;  // rows x (cols + 1), last col = rhs
  std::vector<double> obj;             // reduced costs, obj[cols] = -value
  std::vector<int> basis;              // basic column per row

  void pivot(int r, int c) {
    const double p = T[r][c];
    for (int j = 0; j <= cols; ++j) T[r][j] /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || T[i][c] == 0.0) continue;
      const double f = T[i][c];
      for (int j = 0; j <= cols; ++j) T[i][j] -= f * T[r][j];
      T[i][c] = 0.0;
    }
    if (obj[c] != 0.0) {
      const double f = obj[c];
      for (int j = 0; j <= cols; ++j) obj[j] -= f * T[r][j];
      obj[c] = 0.0;
    }
    basis[r] = c;
  }
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem, const LpTolerances& tol) {
  const int n = static_cast<int>(problem.g.size());
  const int m = static_cast<int>(problem.A.size());
  for (const auto& row : problem.A)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("lp: A row length != |g|");
  if (static_cast<int>(problem.b.size()) != m)
    throw std::invalid_argument("lp: |b| != row count");
  if (problem.lower && problem.upper)
    for (int i = 0; i < n; ++i)
      if ((*problem.lower)[i] > (*problem.upper)[i])
        throw std::invalid_argument("lp: lower > upper for variable " + std::to_string(i));

  // Collect all rows a^T x <= beta, bounds included.
  std::vector<Vec> rows_a;
  Vec rows_b;
  for (int i = 0; i < m; ++i) {
    rows_a.push_back(problem.A[i]);
    rows_b.push_back(problem.b[i]);
  }
  for (int i = 0; i < n; ++i) {
    if (problem.lower) {
      Vec a(n, 0.0);
      a[i] = -1.0;
      rows_a.push_back(a);
      rows_b.push_back(-(*problem.lower)[i]);
    }
    if (problem.upper) {
      Vec a(n, 0.0);
      a[i] = 1.0;
      rows_a.push_back(a);
      rows_b.push_back((*problem.upper)[i]);
    }
  }
  const int R = static_cast<int>(rows_a.size());
  const int ns = 2 * n;  // split columns: 2i = x_i^+, 2i+1 = x_i^-

  std::vector<int> art_of_row(R, -1);
  int n_art = 0;
  for (int r = 0; r < R; ++r)
    if (rows_b[r] < 0.0) art_of_row[r] = n_art++;

  Tableau tab;
  tab.rows = R;
  tab.art_begin = ns + R;
  tab.cols = ns + R + n_art;
  tab.T.assign(R, std::vector<double>(tab.cols + 1, 0.0));
  tab.basis.assign(R, -1);
  for (int r = 0; r < R; ++r) {
    const double sgn = rows_b[r] < 0.0 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) {
      tab.T[r][2 * i] = sgn * rows_a[r][i];
      tab.T[r][2 * i + 1] = -sgn * rows_a[r][i];
    }
    tab.T[r][ns + r] = sgn;  // slack
    tab.T[r][tab.cols] = sgn * rows_b[r];
    if (art_of_row[r] >= 0) {
      tab.T[r][tab.art_begin + art_of_row[r]] = 1.0;
      tab.basis[r] = tab.art_begin + art_of_row[r];
    } else {
      tab.basis[r] = ns + r;
    }
  }

  const long long pivot_cap = 50LL * (tab.rows + tab.cols);
  const long long degenerate_cap = 3LL * (tab.rows + tab.cols);
  long long pivots = 0;
  long long degenerate_pivots = 0;

  // In phase 2 artificial columns are frozen out of pricing.
  const auto run_phase = [&](bool phase1) -> LpStatus {
    const int priced_cols = phase1 ? tab.cols : tab.art_begin;
    while (true) {
      int enter = -1;
      if (degenerate_pivots <= degenerate_cap) {
        double best = -tol.optimality;
        for (int j = 0; j < priced_cols; ++j)
          if (tab.obj[j] < best) { best = tab.obj[j]; enter = j; }
      } else {
        for (int j = 0; j < priced_cols; ++j)
          if (tab.obj[j] < -tol.optimality) { enter = j; break; }
      }
      if (enter < 0) return LpStatus::Optimal;

      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int r = 0; r < tab.rows; ++r) {
        if (tab.T[r][enter] <= tol.feasibility) continue;
        const double ratio = tab.T[r][tab.cols] / tab.T[r][enter];
        if (ratio < best_ratio - 1e-12 ||
            (ratio < best_ratio + 1e-12 &&
             (leave < 0 || tab.basis[r] < tab.basis[leave])))
          { best_ratio = ratio; leave = r; }
      }
      if (leave < 0) return LpStatus::Unbounded;
      if (best_ratio < tol.feasibility) ++degenerate_pivots;
      if (++pivots > pivot_cap)
        throw std::runtime_error("lp stalled: pivot cap " + std::to_string(pivot_cap) +
                                 " reached");
      tab.pivot(leave, enter);
    }
  };

  LpSolution sol;

  if (n_art > 0) {
    // Phase 1: minimize the artificial sum.
    tab.obj.assign(tab.cols + 1, 0.0);
    for (int j = tab.art_begin; j < tab.cols; ++j) tab.obj[j] = 1.0;
    for (int r = 0; r < tab.rows; ++r)
      if (tab.basis[r] >= tab.art_begin)
        for (int j = 0; j <= tab.cols; ++j) tab.obj[j] -= tab.T[r][j];
    run_phase(true);  // phase 1 is bounded below by 0, Unbounded impossible
    const double phase1_value = -tab.obj[tab.cols];
    if (phase1_value > tol.phase1_residual) {
      sol.status = LpStatus::Infeasible;
      sol.iterations = static_cast<int>(pivots);
      return sol;
    }
    // Drive remaining artificials out of the basis; rows with no eligible
    // column are redundant and stay put.
    for (int r = 0; r < tab.rows; ++r) {
      if (tab.basis[r] < tab.art_begin) continue;
      for (int j = 0; j < tab.art_begin; ++j) {
        if (std::fabs(tab.T[r][j]) > 1e-9) {
          if (++pivots > pivot_cap)
            throw std::runtime_error("lp stalled: pivot cap reached while "
                                     "removing artificials");
          tab.pivot(r, j);
          break;
        }
      }
    }
  }

  // Phase 2 with the real costs on the split columns.
  tab.obj.assign(tab.cols + 1, 0.0);
  for (int i = 0; i < n; ++i) {
    tab.obj[2 * i] = problem.g[i];
    tab.obj[2 * i + 1] = -problem.g[i];
  }
  for (int r = 0; r < tab.rows; ++r) {
    const int bcol = tab.basis[r];
    if (bcol < tab.art_begin && tab.obj[bcol] != 0.0) {
      const double f = tab.obj[bcol];
      for (int j = 0; j <= tab.cols; ++j) tab.obj[j] -= f * tab.T[r][j];
      tab.obj[bcol] = 0.0;
    }
  }
  const LpStatus status = run_phase(false);
  sol.iterations = static_cast<int>(pivots);
  if (status == LpStatus::Unbounded) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.x.assign(n, 0.0);
  for (int r = 0; r < tab.rows; ++r) {
    const int bcol = tab.basis[r];
    if (bcol >= ns) continue;
    const double v = tab.T[r][tab.cols];
    if (bcol % 2 == 0) sol.x[bcol / 2] += v;
    else sol.x[bcol / 2] -= v;
  }
  sol.value = 0.0;
  for (int i = 0; i < n; ++i) sol.value += problem.g[i] * sol.x[i];
  return sol;
}

}  // namespace glmp
