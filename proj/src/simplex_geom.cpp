#include "glmp/simplex_geom.hpp"

#include <cmath>
#include <stdexcept>

namespace glmp {

namespace {

// Gaussian elimination with partial pivoting on an augmented square system.
// Returns false when the matrix is numerically singular.
bool gauss_solve(std::vector<Vec>& aug, Vec& out) {
  const int n = static_cast<int>(aug.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(aug[r][col]) > std::fabs(aug[piv][col])) piv = r;
    if (std::fabs(aug[piv][col]) < 1e-13) return false;
    std::swap(aug[col], aug[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = aug[r][col] / aug[col][col];
      if (f == 0.0) continue;
      for (int c = col; c <= n; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  out.resize(n);
  for (int r = 0; r < n; ++r) out[r] = aug[r][n] / aug[r][r];
  return true;
}

// Determinant via LU with partial pivoting.
double determinant(std::vector<Vec> mat) {
  const int n = static_cast<int>(mat.size());
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(mat[r][col]) > std::fabs(mat[piv][col])) piv = r;
    if (mat[piv][col] == 0.0) return 0.0;
    if (piv != col) {
      std::swap(mat[col], mat[piv]);
      det = -det;
    }
    det *= mat[col][col];
    for (int r = col + 1; r < n; ++r) {
      const double f = mat[r][col] / mat[col][col];
      for (int c = col; c < n; ++c) mat[r][c] -= f * mat[col][c];
    }
  }
  return det;
}

}  // namespace

double edge_length(const ParamPoint& a, const ParamPoint& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

SimplexNode initial_simplex(const BoundsBox& bounds) {
  const int pb = bounds.p_bar();
  if (pb == 0)
    throw std::invalid_argument("initial_simplex: p_bar = 0 (convex shortcut applies)");
  if (static_cast<int>(bounds.t_upper.size()) != pb)
    throw std::invalid_argument("initial_simplex: bound dimensions differ");
  for (int j = 0; j < pb; ++j)
    if (!(0.0 < bounds.t_lower[j] && bounds.t_lower[j] <= bounds.t_upper[j]))
      throw std::invalid_argument("initial_simplex: needs 0 < t_lower <= t_upper");

  SimplexNode node;
  node.id = 0;
  node.depth = 0;
  auto base = std::make_shared<SimplexVertex>();
  base->t = bounds.t_lower;
  node.vertices.push_back(base);
  for (int j = 0; j < pb; ++j) {
    auto v = std::make_shared<SimplexVertex>();
    v->t = bounds.t_lower;
    v->t[j] += pb * (bounds.t_upper[j] - bounds.t_lower[j]);
    node.vertices.push_back(v);
  }
  return node;
}

Edge longest_edge(const SimplexNode& node) {
  const int nv = static_cast<int>(node.vertices.size());
  if (nv < 2) throw std::invalid_argument("longest_edge: needs at least 2 vertices");
  Edge best{0, 1, edge_length(node.vertices[0]->t, node.vertices[1]->t)};
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) {
      const double len = edge_length(node.vertices[i]->t, node.vertices[j]->t);
      if (len > best.length) best = Edge{i, j, len};
    }
  return best;
}

std::pair<SimplexNode, SimplexNode> bisect(const SimplexNode& node,
                                           long long id1, long long id2) {
  const Edge edge = longest_edge(node);
  if (edge.length <= 0.0)
    throw std::invalid_argument("bisect: zero-length longest edge");

  auto midpoint = std::make_shared<SimplexVertex>();
  midpoint->t.resize(node.vertices[edge.i]->t.size());
  for (size_t c = 0; c < midpoint->t.size(); ++c)
    midpoint->t[c] = 0.5 * (node.vertices[edge.i]->t[c] + node.vertices[edge.j]->t[c]);

  SimplexNode child1, child2;
  child1.id = id1;
  child2.id = id2;
  child1.depth = child2.depth = node.depth + 1;
  child1.parent_id = child2.parent_id = node.id;
  child1.vertices = node.vertices;
  child2.vertices = node.vertices;
  child1.vertices[edge.j] = midpoint;
  child2.vertices[edge.i] = midpoint;
  child1.lb = child2.lb = node.lb;
  return {std::move(child1), std::move(child2)};
}

Vec barycentric(const SimplexNode& node, const ParamPoint& t) {
  const int nv = static_cast<int>(node.vertices.size());
  const int pb = nv - 1;
  if (static_cast<int>(t.size()) != pb)
    throw std::invalid_argument("barycentric: |t| != p_bar");
  std::vector<Vec> aug(nv, Vec(nv + 1, 0.0));
  for (int r = 0; r < pb; ++r) {
    for (int i = 0; i < nv; ++i) aug[r][i] = node.vertices[i]->t[r];
    aug[r][nv] = t[r];
  }
  for (int i = 0; i < nv; ++i) aug[pb][i] = 1.0;
  aug[pb][nv] = 1.0;
  Vec w;
  if (!gauss_solve(aug, w))
    throw std::runtime_error("barycentric: degenerate simplex (singular system)");
  return w;
}

double volume(const SimplexNode& node) {
  const int nv = static_cast<int>(node.vertices.size());
  const int pb = nv - 1;
  // Bordered squared-distance (Cayley-Menger) matrix.
  std::vector<Vec> cm(nv + 1, Vec(nv + 1, 0.0));
  for (int i = 1; i <= nv; ++i) {
    cm[0][i] = 1.0;
    cm[i][0] = 1.0;
  }
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      const double d = edge_length(node.vertices[i]->t, node.vertices[j]->t);
      cm[i + 1][j + 1] = d * d;
    }
  double factorial = 1.0;
  for (int k = 2; k <= pb; ++k) factorial *= k;
  const double sign = (pb + 1) % 2 == 0 ? 1.0 : -1.0;
  const double v2 = sign / (std::pow(2.0, pb) * factorial * factorial) * determinant(cm);
  if (v2 < -1e-12)
    throw std::runtime_error("volume: Cayley-Menger determinant gave squared volume " +
                             std::to_string(v2));
  return v2 <= 0.0 ? 0.0 : std::sqrt(v2);
}

}  // namespace glmp
