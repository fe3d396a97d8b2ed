#ifndef GLMP_SUBSOLVE_HPP
#define GLMP_SUBSOLVE_HPP

#include <vector>

#include "glmp/linprog.hpp"
#include "glmp/model.hpp"

namespace glmp {

/// Point in the outer (t) space, coordinates ordered as partition.j_plus.
using ParamPoint = Vec;

/// Certified two-sided estimate of psi(t) = min_{x in X} phi(x, t).
/// lower <= psi(t) <= upper always; upper = phi(x_arg, t) exactly as
/// computed.
struct PsiBracket {
  double lower = 0.0;
  double upper = 0.0;
  Vec x_arg;
  int subsolver_iterations = 0;
  bool tolerance_met = true;
};

/// Certified lower bound on min over a simplex of the underestimator,
/// obtained by conditional gradient over the unit simplex.
struct RelaxResult {
  double lb_value = 0.0;
  Vec w_arg;          // point on the unit simplex (p_bar + 1 coordinates)
  double fw_gap = 0.0;
  bool degenerate = false;  // simplex had two identical vertices
  bool tolerance_met = true;
};

/// ln a + 1/a - 1, nonnegative for all a > 0 (equality at a = 1).
double lemma1_slack(double a);

/// phi(x, t) = sum_{J-} alpha_j ln(base_j) +
///             sum_{J+} alpha_j (t_j base_j - ln t_j - 1).
/// t is indexed through partition.j_plus order.
double phi(const GlmpInstance& instance, const IndexPartition& partition,
           const Vec& x, const ParamPoint& t);

/// Gradient of phi with respect to x at (x, t).
Vec phi_gradient(const GlmpInstance& instance, const IndexPartition& partition,
                 const Vec& x, const ParamPoint& t);

/// Evaluates psi(t) = min_{x in X} phi(x, t). When J- is empty phi is
/// affine in x and a single LP solves it exactly (lower == upper).
/// Otherwise conditional gradient with solve_lp as the linear oracle and
/// golden-section line search; stops at Frank-Wolfe gap <= tol, or returns
/// the bracket reached at the 5000-iteration cap with tolerance_met=false.
PsiBracket eval_psi(const GlmpInstance& instance, const IndexPartition& partition,
                    const ParamPoint& t, double tol);

/// Minimizes F(w) = sum_i (psi_lowers[i] + sum_j a_j ln v^i_j) w_i
///                - sum_j a_j ln(sum_i v^i_j w_i)  over the unit simplex,
/// the Lagrangian-dual lower bounding problem for a node. psi_lowers must
/// be certified lower estimates; the returned lb_value = F(w) - gap is a
/// valid lower bound even when the tolerance is not met.
RelaxResult solve_lb(const std::vector<ParamPoint>& vertices,
                     const Vec& psi_lowers, const Vec& alphas_plus, double tol);

}  // namespace glmp

#endif
