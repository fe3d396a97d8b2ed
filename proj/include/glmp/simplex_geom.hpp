#ifndef GLMP_SIMPLEX_GEOM_HPP
#define GLMP_SIMPLEX_GEOM_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "glmp/subsolve.hpp"

namespace glmp {

/// Branching box in outer space: 0 < t_lower <= t_upper componentwise.
struct BoundsBox {
  Vec t_lower;
  Vec t_upper;
  int p_bar() const { return static_cast<int>(t_lower.size()); }
};

/// A simplex vertex with its cached psi bracket. Shared (by pointer)
/// between a node and its children so each bisection costs exactly one new
/// psi evaluation.
struct SimplexVertex {
  ParamPoint t;
  std::optional<PsiBracket> psi;
};

using VertexPtr = std::shared_ptr<const SimplexVertex>;

/// Immutable after construction; children reuse p_bar of the parent's
/// vertex objects bit-exactly.
struct SimplexNode {
  long long id = 0;
  int depth = 0;
  std::optional<long long> parent_id;
  std::vector<VertexPtr> vertices;  // exactly p_bar + 1
  double lb = 0.0;

  int p_bar() const { return static_cast<int>(vertices.size()) - 1; }
};

struct Edge {
  int i = 0;  // vertex indices, i < j
  int j = 0;
  double length = 0.0;
};

/// S0: v^1 = t_lower, v^{j+1} = t_lower + p_bar (t_upper_j - t_lower_j) e_j.
/// Covers the whole box [t_lower, t_upper]. Rejects p_bar = 0.
SimplexNode initial_simplex(const BoundsBox& bounds);

/// Longest edge by Euclidean length; ties broken by lexicographically
/// smallest (i, j).
Edge longest_edge(const SimplexNode& node);

/// Bisects at the midpoint of the longest edge. First child replaces
/// vertex j, second replaces vertex i; all other vertex objects are shared
/// with the parent. Throws on a zero-length longest edge. The midpoint
/// vertex (psi not yet evaluated) is shared between the two children.
std::pair<SimplexNode, SimplexNode> bisect(const SimplexNode& node,
                                           long long id1, long long id2);

/// Barycentric coordinates of t: solves [V; 1^T] w = [t; 1]. Throws on a
/// degenerate (singular) simplex. t is inside iff all coordinates >= -1e-10.
Vec barycentric(const SimplexNode& node, const ParamPoint& t);

/// Simplex volume via the Cayley-Menger determinant. Flat simplices give 0
/// (tiny negative determinants in [-1e-12, 0] are clamped); a determinant
/// below -1e-12 throws.
double volume(const SimplexNode& node);

double edge_length(const ParamPoint& a, const ParamPoint& b);

}  // namespace glmp

#endif
