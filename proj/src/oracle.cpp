#include "glmp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "glmp/bb.hpp"

namespace glmp {

namespace {

// All compositions of `total` into `parts` nonnegative integers.
void compositions(int total, int parts, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int k = 0; k <= total; ++k) {
    prefix.push_back(k);
    compositions(total - k, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

bool solve_square(std::vector<Vec> mat, Vec rhs, Vec& out) {
  const int n = static_cast<int>(mat.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(mat[r][col]) > std::fabs(mat[piv][col])) piv = r;
    if (std::fabs(mat[piv][col]) < 1e-10) return false;
    std::swap(mat[col], mat[piv]);
    std::swap(rhs[col], rhs[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = mat[r][col] / mat[col][col];
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) mat[r][c] -= f * mat[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  out.resize(n);
  for (int r = 0; r < n; ++r) out[r] = rhs[r] / mat[r][r];
  return true;
}

}  // namespace

double grid_error_bound(const BoundsBox& bounds, const Vec& alphas_plus,
                        int resolution) {
  const SimplexNode s0 = initial_simplex(bounds);
  const Edge edge = longest_edge(s0);
  double lipschitz = 0.0;
  for (int j = 0; j < bounds.p_bar(); ++j)
    lipschitz += alphas_plus[j] / bounds.t_lower[j];
  return lipschitz * edge.length / resolution;
}

std::pair<double, ParamPoint> grid_min_psi(const GlmpInstance& instance,
                                           const BoundsBox& bounds, int resolution) {
  const IndexPartition partition = partition_terms(instance);
  const int pb = partition.p_bar();
  if (pb > 3) throw std::invalid_argument("grid_min_psi: p_bar > 3 is intractable");
  if (pb == 0) throw std::invalid_argument("grid_min_psi: p_bar = 0");
  if (resolution < 1) throw std::invalid_argument("grid_min_psi: resolution must be >= 1");

  const SimplexNode s0 = initial_simplex(bounds);
  std::vector<std::vector<int>> weights;
  std::vector<int> prefix;
  compositions(resolution, pb + 1, prefix, weights);

  const auto point_of = [&](const std::vector<int>& w) {
    ParamPoint t(pb, 0.0);
    for (int i = 0; i <= pb; ++i)
      for (int j = 0; j < pb; ++j)
        t[j] += (static_cast<double>(w[i]) / resolution) * s0.vertices[i]->t[j];
    return t;
  };

  // Grid cells are independent; evaluate in chunks and min-reduce. The
  // reduction result does not depend on the thread count.
  const int n_threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<double> chunk_min(n_threads, std::numeric_limits<double>::infinity());
  std::vector<size_t> chunk_arg(n_threads, 0);
  std::vector<std::thread> pool;
  for (int tix = 0; tix < n_threads; ++tix) {
    pool.emplace_back([&, tix] {
      for (size_t i = tix; i < weights.size(); i += n_threads) {
        const ParamPoint t = point_of(weights[i]);
        const PsiBracket bracket = eval_psi(instance, partition, t, 1e-8);
        if (bracket.upper < chunk_min[tix]) {
          chunk_min[tix] = bracket.upper;
          chunk_arg[tix] = i;
        }
      }
    });
  }
  for (auto& th : pool) th.join();

  int best = 0;
  for (int tix = 1; tix < n_threads; ++tix)
    if (chunk_min[tix] < chunk_min[best]) best = tix;
  return {chunk_min[best], point_of(weights[chunk_arg[best]])};
}

std::vector<Vec> enumerate_vertices(const GlmpInstance& instance) {
  check_dimensions(instance);
  const int n = instance.n;
  const int m = instance.m;
  if (m < n) return {};
  std::vector<Vec> vertices;

  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    std::vector<Vec> mat(n, Vec(n));
    Vec rhs(n);
    for (int r = 0; r < n; ++r) {
      mat[r] = instance.A[pick[r]];
      rhs[r] = instance.b[pick[r]];
    }
    Vec x;
    if (solve_square(std::move(mat), std::move(rhs), x)) {
      bool feasible = true;
      for (int r = 0; r < m && feasible; ++r) {
        double lhs = 0.0;
        for (int i = 0; i < n; ++i) lhs += instance.A[r][i] * x[i];
        if (lhs > instance.b[r] + 1e-8) feasible = false;
      }
      if (feasible) {
        bool duplicate = false;
        for (const auto& v : vertices) {
          double dist = 0.0;
          for (int i = 0; i < n; ++i) dist += std::fabs(v[i] - x[i]);
          if (dist < 1e-8) { duplicate = true; break; }
        }
        if (!duplicate) vertices.push_back(std::move(x));
      }
    }
    // Next n-combination of row indices.
    int pos = n - 1;
    while (pos >= 0 && pick[pos] == m - n + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int r = pos + 1; r < n; ++r) pick[r] = pick[r - 1] + 1;
  }
  return vertices;
}

std::pair<double, Vec> vertex_min_h(const GlmpInstance& instance) {
  for (const Term& term : instance.terms)
    if (term.alpha <= 0.0)
      throw std::invalid_argument(
          "vertex_min_h: valid only for all-positive exponents (ln h concave)");
  if (instance.n + instance.m > 24)
    throw std::invalid_argument("vertex_min_h: instance too large for enumeration");

  const std::vector<Vec> vertices = enumerate_vertices(instance);
  if (vertices.empty()) throw std::runtime_error("vertex_min_h: no feasible vertex found");

  double best = std::numeric_limits<double>::infinity();
  Vec arg;
  for (const Vec& v : vertices) {
    const double h = objective_h(instance, v);
    if (h < best) {
      best = h;
      arg = v;
    }
  }
  return {best, arg};
}

}  // namespace glmp
