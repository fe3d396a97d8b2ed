#ifndef GLMP_ORACLE_HPP
#define GLMP_ORACLE_HPP

#include <utility>

#include "glmp/simplex_geom.hpp"

namespace glmp {

/// Brute-force references for tests and acceptance checks. Independent of
/// the branch-and-bound path; never called by the solver.

/// Enumerates the barycentric grid of S0 (all compositions of `resolution`
/// into p_bar + 1 parts), evaluates psi's upper estimate at each point and
/// returns the minimum with its t. Rejects p_bar > 3.
std::pair<double, ParamPoint> grid_min_psi(const GlmpInstance& instance,
                                           const BoundsBox& bounds,
                                           int resolution);

/// Lipschitz certificate for the grid: max error of the resolution-grid
/// minimum, sum_j (alpha_j / t_lower_j) * d(S0) / resolution.
double grid_error_bound(const BoundsBox& bounds, const Vec& alphas_plus,
                        int resolution);

/// Enumerates basic feasible solutions of X and returns (min h, argmin).
/// Valid only when every exponent is positive (ln h concave => vertex
/// minimum); mixed exponents and infeasible instances are rejected.
std::pair<double, Vec> vertex_min_h(const GlmpInstance& instance);

/// All vertices of {x : Ax <= b} by n-subset enumeration of rows.
std::vector<Vec> enumerate_vertices(const GlmpInstance& instance);

}  // namespace glmp

#endif
