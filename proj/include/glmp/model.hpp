#ifndef GLMP_MODEL_HPP
#define GLMP_MODEL_HPP

#include <string>
#include <vector>

namespace glmp {

using Vec = std::vector<double>;
using Mat = std::vector<std::vector<double>>;

/// One factor of the objective product: (c^T x + d)^alpha, alpha != 0.
struct Term {
  Vec c;
  double d = 0.0;
  double alpha = 0.0;
};

/// Problem data for  min prod_j (c_j^T x + d_j)^alpha_j  s.t. A x <= b.
/// All affine bases must be strictly positive over the feasible region;
/// see validate().
struct GlmpInstance {
  std::string name;
  int n = 0;  // variables
  int m = 0;  // constraint rows
  Mat A;      // m x n
  Vec b;      // m
  std::vector<Term> terms;

  int p() const { return static_cast<int>(terms.size()); }
};

/// Sign partition of the exponent vector. Indices are 0-based positions
/// into GlmpInstance::terms and keep the original term order (terms are
/// not renumbered).
struct IndexPartition {
  std::vector<int> j_plus;   // alpha > 0
  std::vector<int> j_minus;  // alpha < 0
  int p_bar() const { return static_cast<int>(j_plus.size()); }
};

struct ValidationReport {
  bool feasible = false;
  bool bounded = false;
  Vec term_minimums;  // min_{x in X} c_j^T x + d_j
  Vec term_maximums;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Splits term indices by exponent sign. Throws std::invalid_argument on a
/// zero exponent or inconsistent dimensions.
IndexPartition partition_terms(const GlmpInstance& instance);

/// Certifies the standing assumptions: X nonempty and bounded (2n LPs,
/// coordinate-wise), and every affine base >= delta_pos over X (2p LPs).
/// LP infeasibility/unboundedness land in the report, never throw.
ValidationReport validate(const GlmpInstance& instance, double delta_pos = 1e-9);

/// h(x) = prod_j (c_j^T x + d_j)^alpha_j. Throws std::domain_error naming
/// the offending term when a base is nonpositive.
double objective_h(const GlmpInstance& instance, const Vec& x);

/// nu(x) = sum_j alpha_j ln(c_j^T x + d_j) = ln h(x).
double objective_nu(const GlmpInstance& instance, const Vec& x);

/// c_j^T x + d_j for term j.
double term_base(const GlmpInstance& instance, int j, const Vec& x);

void check_dimensions(const GlmpInstance& instance);

}  // namespace glmp

#endif
