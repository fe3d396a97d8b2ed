#include "glmp/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "glmp/linprog.hpp"

namespace glmp {

void check_dimensions(const GlmpInstance& instance) {
  if (instance.terms.empty())
    throw std::invalid_argument("instance '" + instance.name + "': needs at least one term");
  if (static_cast<int>(instance.A.size()) != instance.m)
    throw std::invalid_argument("instance '" + instance.name + "': A has " +
                                std::to_string(instance.A.size()) + " rows, m = " +
                                std::to_string(instance.m));
  for (const auto& row : instance.A)
    if (static_cast<int>(row.size()) != instance.n)
      throw std::invalid_argument("instance '" + instance.name + "': A row length != n");
  if (static_cast<int>(instance.b.size()) != instance.m)
    throw std::invalid_argument("instance '" + instance.name + "': |b| != m");
  for (size_t j = 0; j < instance.terms.size(); ++j)
    if (static_cast<int>(instance.terms[j].c.size()) != instance.n)
      throw std::invalid_argument("instance '" + instance.name + "': term " +
                                  std::to_string(j) + " has |c| != n");
}

IndexPartition partition_terms(const GlmpInstance& instance) {
  check_dimensions(instance);
  IndexPartition part;
  for (int j = 0; j < instance.p(); ++j) {
    const double a = instance.terms[j].alpha;
    if (a == 0.0)
      throw std::invalid_argument("term " + std::to_string(j) + " has zero exponent");
    (a > 0.0 ? part.j_plus : part.j_minus).push_back(j);
  }
  return part;
}

double term_base(const GlmpInstance& instance, int j, const Vec& x) {
  const Term& term = instance.terms[j];
  double base = term.d;
  for (int i = 0; i < instance.n; ++i) base += term.c[i] * x[i];
  return base;
}

double objective_nu(const GlmpInstance& instance, const Vec& x) {
  double nu = 0.0;
  for (int j = 0; j < instance.p(); ++j) {
    const double base = term_base(instance, j, x);
    if (base <= 0.0)
      throw std::domain_error("nonpositive base " + std::to_string(base) +
                              " in term " + std::to_string(j));
    nu += instance.terms[j].alpha * std::log(base);
  }
  return nu;
}

double objective_h(const GlmpInstance& instance, const Vec& x) {
  // Direct product only when it cannot overflow; otherwise exp(nu).
  if (instance.p() <= 4) {
    double h = 1.0;
    bool safe = true;
    for (int j = 0; j < instance.p() && safe; ++j) {
      const double base = term_base(instance, j, x);
      if (base <= 0.0)
        throw std::domain_error("nonpositive base " + std::to_string(base) +
                                " in term " + std::to_string(j));
      if (base < 1e-8 || base > 1e8) safe = false;
      else h *= std::pow(base, instance.terms[j].alpha);
    }
    if (safe) return h;
  }
  return std::exp(objective_nu(instance, x));
}

ValidationReport validate(const GlmpInstance& instance, double delta_pos) {
  check_dimensions(instance);
  ValidationReport report;
  report.feasible = true;
  report.bounded = true;

  // Nonemptiness and boundedness, coordinate-wise: 2n LPs.
  for (int i = 0; i < instance.n && report.feasible; ++i) {
    for (int sign : {+1, -1}) {
      LpProblem lp;
      lp.g.assign(instance.n, 0.0);
      lp.g[i] = sign;
      lp.A = instance.A;
      lp.b = instance.b;
      const LpSolution sol = solve_lp(lp);
      if (sol.status == LpStatus::Infeasible) {
        report.feasible = false;
        report.violations.push_back("feasible region is empty");
        break;
      }
      if (sol.status == LpStatus::Unbounded) {
        report.bounded = false;
        report.violations.push_back("feasible region is unbounded in coordinate " +
                                    std::to_string(i) +
                                    (sign > 0 ? " (below)" : " (above)"));
      }
    }
  }
  if (!report.feasible) return report;

  // Positivity with margin: 2p LPs, min and max of every base.
  report.term_minimums.assign(instance.p(), 0.0);
  report.term_maximums.assign(instance.p(), 0.0);
  for (int j = 0; j < instance.p(); ++j) {
    for (int sign : {+1, -1}) {
      LpProblem lp;
      lp.g = instance.terms[j].c;
      if (sign < 0)
        for (double& g : lp.g) g = -g;
      lp.A = instance.A;
      lp.b = instance.b;
      const LpSolution sol = solve_lp(lp);
      if (sol.status == LpStatus::Unbounded) {
        report.bounded = false;
        report.violations.push_back("term " + std::to_string(j) +
                                    " base is unbounded over X");
        continue;
      }
      const double extremum = sign > 0 ? sol.value + instance.terms[j].d
                                       : -sol.value + instance.terms[j].d;
      if (sign > 0) {
        report.term_minimums[j] = extremum;
        if (extremum < delta_pos)
          report.violations.push_back(
              "term " + std::to_string(j) + " minimum base " +
              std::to_string(extremum) + " below positivity margin " +
              std::to_string(delta_pos));
      } else {
        report.term_maximums[j] = extremum;
      }
    }
  }
  return report;
}

}  // namespace glmp
