#include "glmp/subsolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace glmp {

namespace {

constexpr int kPsiIterationCap = 5000;
constexpr int kLbIterationCap = 2000;
constexpr int kLineSearchIterations = 30;

// Golden-section minimization of a smooth convex 1-D function on [0, 1].
template <typename F>
double golden_section(F&& f) {
  const double inv_phi = 0.6180339887498949;
  double a = 0.0, b = 1.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < kLineSearchIterations; ++it) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  // Endpoints matter: the minimizer is often exactly gamma = 1.
  double best = 0.5 * (a + b), fbest = f(best);
  if (f(0.0) < fbest) { best = 0.0; fbest = f(0.0); }
  if (f(1.0) < fbest) { best = 1.0; }
  return best;
}

}  // namespace

double lemma1_slack(double a) {
  if (a <= 0.0)
    throw std::domain_error("lemma1_slack requires a > 0, got " + std::to_string(a));
  return std::log(a) + 1.0 / a - 1.0;
}

double phi(const GlmpInstance& instance, const IndexPartition& partition,
           const Vec& x, const ParamPoint& t) {
  if (static_cast<int>(t.size()) != partition.p_bar())
    throw std::invalid_argument("phi: |t| != p_bar");
  double value = 0.0;
  for (int j : partition.j_minus) {
    const double base = term_base(instance, j, x);
    if (base <= 0.0)
      throw std::domain_error("phi: nonpositive base in term " + std::to_string(j));
    value += instance.terms[j].alpha * std::log(base);
  }
  for (int k = 0; k < partition.p_bar(); ++k) {
    const int j = partition.j_plus[k];
    const double tk = t[k];
    if (tk <= 0.0)
      throw std::domain_error("phi: nonpositive t coordinate " + std::to_string(k));
    const double base = term_base(instance, j, x);
    value += instance.terms[j].alpha * (tk * base - std::log(tk) - 1.0);
  }
  return value;
}

Vec phi_gradient(const GlmpInstance& instance, const IndexPartition& partition,
                 const Vec& x, const ParamPoint& t) {
  Vec grad(instance.n, 0.0);
  for (int j : partition.j_minus) {
    const double base = term_base(instance, j, x);
    if (base <= 0.0)
      throw std::domain_error("phi_gradient: nonpositive base in term " + std::to_string(j));
    const double w = instance.terms[j].alpha / base;
    for (int i = 0; i < instance.n; ++i) grad[i] += w * instance.terms[j].c[i];
  }
  for (int k = 0; k < partition.p_bar(); ++k) {
    const int j = partition.j_plus[k];
    const double w = instance.terms[j].alpha * t[k];
    for (int i = 0; i < instance.n; ++i) grad[i] += w * instance.terms[j].c[i];
  }
  return grad;
}

PsiBracket eval_psi(const GlmpInstance& instance, const IndexPartition& partition,
                    const ParamPoint& t, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("eval_psi: tol must be positive");

  // Affine part of phi(., t) as an LP objective; the constant collects the
  // J+ offsets.
  Vec g(instance.n, 0.0);
  double constant = 0.0;
  for (int k = 0; k < partition.p_bar(); ++k) {
    const int j = partition.j_plus[k];
    const double a = instance.terms[j].alpha;
    const double tk = t[k];
    if (tk <= 0.0)
      throw std::domain_error("eval_psi: nonpositive t coordinate " + std::to_string(k));
    for (int i = 0; i < instance.n; ++i) g[i] += a * tk * instance.terms[j].c[i];
    constant += a * (tk * instance.terms[j].d - std::log(tk) - 1.0);
  }

  LpProblem lp;
  lp.g = g;
  lp.A = instance.A;
  lp.b = instance.b;
  LpSolution lin = solve_lp(lp);
  if (lin.status != LpStatus::Optimal)
    throw std::runtime_error(std::string("eval_psi: linear oracle returned ") +
                             to_string(lin.status));

  PsiBracket bracket;
  if (partition.j_minus.empty()) {
    // phi is affine in x: the LP is exact.
    bracket.lower = bracket.upper = lin.value + constant;
    bracket.x_arg = lin.x;
    bracket.subsolver_iterations = 0;
    return bracket;
  }

  // Conditional gradient over X; the affine-part minimizer is the start.
  Vec x = lin.x;
  double upper = phi(instance, partition, x, t);
  Vec x_best = x;
  double lower = -std::numeric_limits<double>::infinity();
  bracket.tolerance_met = false;
  int it = 0;
  for (; it < kPsiIterationCap; ++it) {
    const Vec grad = phi_gradient(instance, partition, x, t);
    lp.g = grad;
    lin = solve_lp(lp);
    if (lin.status != LpStatus::Optimal)
      throw std::runtime_error(std::string("eval_psi: linear oracle returned ") +
                               to_string(lin.status));
    const Vec& v = lin.x;
    double gap = 0.0;
    for (int i = 0; i < instance.n; ++i) gap += grad[i] * (x[i] - v[i]);
    const double f_here = phi(instance, partition, x, t);
    if (f_here < upper) { upper = f_here; x_best = x; }
    lower = std::max(lower, f_here - gap);
    if (upper - lower <= tol) {
      bracket.tolerance_met = true;
      break;
    }
    const double gamma = golden_section([&](double s) {
      Vec y(instance.n);
      for (int i = 0; i < instance.n; ++i) y[i] = x[i] + s * (v[i] - x[i]);
      return phi(instance, partition, y, t);
    });
    for (int i = 0; i < instance.n; ++i) x[i] += gamma * (v[i] - x[i]);
  }
  bracket.upper = upper;
  bracket.lower = std::min(lower, upper);
  bracket.x_arg = x_best;
  bracket.subsolver_iterations = it;
  return bracket;
}

RelaxResult solve_lb(const std::vector<ParamPoint>& vertices, const Vec& psi_lowers,
                     const Vec& alphas_plus, double tol) {
  const int nv = static_cast<int>(vertices.size());
  const int pb = static_cast<int>(alphas_plus.size());
  if (nv != pb + 1)
    throw std::invalid_argument("solve_lb: need p_bar + 1 vertices");
  if (static_cast<int>(psi_lowers.size()) != nv)
    throw std::invalid_argument("solve_lb: |psi_lowers| != vertex count");
  for (const auto& v : vertices) {
    if (static_cast<int>(v.size()) != pb)
      throw std::invalid_argument("solve_lb: vertex dimension != p_bar");
    for (double c : v)
      if (c <= 0.0) throw std::invalid_argument("solve_lb: vertices must be positive");
  }

  RelaxResult result;
  for (int i = 0; i < nv && !result.degenerate; ++i)
    for (int k = i + 1; k < nv; ++k)
      if (vertices[i] == vertices[k]) { result.degenerate = true; break; }

  // Linear coefficients a_i = psi_lower(v^i) + sum_j alpha_j ln v^i_j.
  Vec coeff(nv, 0.0);
  for (int i = 0; i < nv; ++i) {
    coeff[i] = psi_lowers[i];
    for (int j = 0; j < pb; ++j) coeff[i] += alphas_plus[j] * std::log(vertices[i][j]);
  }

  const auto F = [&](const Vec& w) {
    double val = 0.0;
    for (int i = 0; i < nv; ++i) val += coeff[i] * w[i];
    for (int j = 0; j < pb; ++j) {
      double tj = 0.0;
      for (int i = 0; i < nv; ++i) tj += vertices[i][j] * w[i];
      val -= alphas_plus[j] * std::log(tj);
    }
    return val;
  };

  // Best certificate seen: the iterate maximizing F(w) - gap, which keeps
  // lb_value = F(w_arg) - fw_gap a valid lower bound on min F.
  Vec w(nv, 1.0 / nv);  // barycenter start
  double best_lb = -std::numeric_limits<double>::infinity();
  Vec w_best = w;
  double gap_at_best = 0.0;
  result.tolerance_met = false;
  for (int it = 0; it < kLbIterationCap; ++it) {
    // Gradient of F at w.
    Vec tau(pb, 0.0);
    for (int j = 0; j < pb; ++j)
      for (int i = 0; i < nv; ++i) tau[j] += vertices[i][j] * w[i];
    Vec grad = coeff;
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < pb; ++j) grad[i] -= alphas_plus[j] * vertices[i][j] / tau[j];

    // Linear oracle over the unit simplex: lowest-gradient coordinate.
    int kmin = 0;
    for (int i = 1; i < nv; ++i)
      if (grad[i] < grad[kmin]) kmin = i;
    double gap = -grad[kmin];
    for (int i = 0; i < nv; ++i) gap += grad[i] * w[i];
    gap = std::max(gap, 0.0);

    const double f_here = F(w);
    if (f_here - gap > best_lb) {
      best_lb = f_here - gap;
      w_best = w;
      gap_at_best = gap;
    }
    if (gap <= tol) {
      result.tolerance_met = true;
      break;
    }
    const double gamma = golden_section([&](double s) {
      Vec y(nv);
      for (int i = 0; i < nv; ++i) y[i] = w[i] * (1.0 - s);
      y[kmin] += s;
      return F(y);
    });
    for (int i = 0; i < nv; ++i) w[i] *= 1.0 - gamma;
    w[kmin] += gamma;
    // Renormalize against drift.
    double sum = 0.0;
    for (double wi : w) sum += wi;
    for (double& wi : w) wi /= sum;
  }
  result.w_arg = w_best;
  result.fw_gap = gap_at_best;
  result.lb_value = best_lb;
  return result;
}

}  // namespace glmp
