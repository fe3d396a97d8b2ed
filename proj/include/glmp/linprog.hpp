#ifndef GLMP_LINPROG_HPP
#define GLMP_LINPROG_HPP

#include <optional>
#include <vector>

#include "glmp/model.hpp"

namespace glmp {

/// min g^T x  s.t.  A x <= b,  lower <= x <= upper (bounds optional).
struct LpProblem {
  Vec g;
  Mat A;
  Vec b;
  std::optional<Vec> lower;
  std::optional<Vec> upper;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Vec x;  // valid iff Optimal
  double value = 0.0;
  int iterations = 0;
};

/// Tolerances shared by both simplex phases. bb tightens these uniformly
/// through solve_lp's second argument when needed.
struct LpTolerances {
  double feasibility = 1e-9;
  double optimality = 1e-9;
  double phase1_residual = 1e-7;  // phase-1 optimum above this => Infeasible
};

/// Two-phase primal simplex on the slack-augmented standard form. Dense
/// tableau, Dantzig pricing with a switch to Bland's rule after 3(m+n)
/// degenerate pivots. Pivot selection is deterministic (lowest index among
/// ties), so identical inputs give bit-identical solutions.
/// Throws std::runtime_error("lp stalled...") at the 50(m+n) pivot cap.
LpSolution solve_lp(const LpProblem& problem, const LpTolerances& tol = {});

const char* to_string(LpStatus status);

}  // namespace glmp

#endif
