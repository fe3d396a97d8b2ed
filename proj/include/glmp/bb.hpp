#ifndef GLMP_BB_HPP
#define GLMP_BB_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glmp/simplex_geom.hpp"

namespace glmp {

struct SolverConfig {
  double epsilon = 1e-4;  // termination tolerance, in the log (nu) domain
  long long max_iterations = 1000000;
  double time_limit = 3600.0;        // seconds
  double sub_tol = 0.0;              // 0 => epsilon / 10
  double delta_pos = 1e-9;
  long long node_limit = 1000000000;

  double effective_sub_tol() const { return sub_tol > 0.0 ? sub_tol : epsilon / 10.0; }
};

enum class SolveStatus { EpsOptimal, IterLimit, TimeLimit, NodeLimit, ConvexShortcut };

/// Worst-case iteration count; value is meaningless when overflow is set.
struct IterationBound {
  bool overflow = false;
  std::uint64_t value = 0;
};

struct TraceRecord {
  long long k = 0;
  double lb = 0.0;
  double ub = 0.0;
  double gap = 0.0;
  long long active_nodes = 0;
  double node_diameter = 0.0;   // d(S^k) of the expanded node
  double node_gap_bound = 0.0;  // sum_{J+} (alpha_j / d_kj) * d(S^k)
};

struct SolveResult {
  SolveStatus status = SolveStatus::EpsOptimal;
  ParamPoint t_star;
  Vec x_star;
  double ub = 0.0;  // best nu-domain upper bound
  double lb = 0.0;  // global lower bound
  double gap = 0.0;
  double h_value = 0.0;  // exp(ub)
  long long iterations = 0;
  long long nodes_created = 0;
  long long nodes_pruned = 0;
  long long psi_evaluations = 0;
  IterationBound theorem5_bound;
  double time_seconds = 0.0;
  std::vector<TraceRecord> trace;
};

/// t_lower_j = 1 / max_X(base_j), t_upper_j = 1 / min_X(base_j) for j in J+.
/// 2 p_bar LPs.
BoundsBox compute_t_bounds(const GlmpInstance& instance, const IndexPartition& partition);

/// The binding parameter t_j = 1 / (c_j^T x + d_j), j in J+, at which
/// phi(x, t) = nu(x). Throws std::domain_error on a nonpositive base.
ParamPoint refit_t(const GlmpInstance& instance, const IndexPartition& partition, const Vec& x);

/// floor( prod_j(t_upper_j - t_lower_j) / sqrt(p_bar + 1)
///        * (sqrt(2) p_bar sum_j alpha_j / t_lower_j / epsilon)^p_bar ),
/// the worst-case iteration count; overflow above 2^63.
IterationBound theorem5_bound(const BoundsBox& bounds, const Vec& alphas_plus, double epsilon);

const char* to_string(SolveStatus status);

/// The branch-and-bound driver: best-first selection, longest-edge
/// bisection, one psi evaluation per iteration (at the new midpoint
/// vertex), incumbent polishing via refit_t, pruning at UB - LB(child) <=
/// epsilon. All-negative-exponent instances short-circuit to a single
/// convex solve (status ConvexShortcut).
/// Throws std::invalid_argument when the instance fails validation.
SolveResult solve(const GlmpInstance& instance, const SolverConfig& config);

}  // namespace glmp

#endif
