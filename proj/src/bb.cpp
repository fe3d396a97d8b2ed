#include "glmp/bb.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace glmp {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::EpsOptimal: return "EpsOptimal";
    case SolveStatus::IterLimit: return "IterLimit";
    case SolveStatus::TimeLimit: return "TimeLimit";
    case SolveStatus::NodeLimit: return "NodeLimit";
    case SolveStatus::ConvexShortcut: return "ConvexShortcut";
  }
  return "?";
}

BoundsBox compute_t_bounds(const GlmpInstance& instance, const IndexPartition& partition) {
  const int pb = partition.p_bar();
  if (pb == 0) throw std::invalid_argument("compute_t_bounds: p_bar = 0");
  BoundsBox bounds;
  bounds.t_lower.resize(pb);
  bounds.t_upper.resize(pb);
  for (int k = 0; k < pb; ++k) {
    const Term& term = instance.terms[partition.j_plus[k]];
    for (int sign : {+1, -1}) {
      LpProblem lp;
      lp.g = term.c;
      if (sign > 0)  // maximize the base: minimize -c^T x
        for (double& g : lp.g) g = -g;
      lp.A = instance.A;
      lp.b = instance.b;
      const LpSolution sol = solve_lp(lp);
      if (sol.status != LpStatus::Optimal)
        throw std::runtime_error(std::string("compute_t_bounds: LP returned ") +
                                 to_string(sol.status));
      const double extremum = (sign > 0 ? -sol.value : sol.value) + term.d;
      if (extremum <= 0.0)
        throw std::runtime_error("compute_t_bounds: nonpositive base extremum");
      if (sign > 0) bounds.t_lower[k] = 1.0 / extremum;
      else bounds.t_upper[k] = 1.0 / extremum;
    }
  }
  return bounds;
}

ParamPoint refit_t(const GlmpInstance& instance, const IndexPartition& partition,
                   const Vec& x) {
  ParamPoint t(partition.p_bar());
  for (int k = 0; k < partition.p_bar(); ++k) {
    const double base = term_base(instance, partition.j_plus[k], x);
    if (base <= 0.0)
      throw std::domain_error("refit_t: nonpositive base in term " +
                              std::to_string(partition.j_plus[k]));
    t[k] = 1.0 / base;
  }
  return t;
}

IterationBound theorem5_bound(const BoundsBox& bounds, const Vec& alphas_plus,
                              double epsilon) {
  const int pb = bounds.p_bar();
  IterationBound result;
  long double widths = 1.0L;
  for (int j = 0; j < pb; ++j)
    widths *= static_cast<long double>(bounds.t_upper[j]) - bounds.t_lower[j];
  if (widths <= 0.0L) return result;  // zero-volume S0

  long double lipschitz = 0.0L;
  for (int j = 0; j < pb; ++j)
    lipschitz += static_cast<long double>(alphas_plus[j]) / bounds.t_lower[j];
  const long double factor = std::sqrt(2.0L) * pb * lipschitz / epsilon;

  // Work in logs to detect overflow before computing the value.
  const long double log_value = std::log(widths) - 0.5L * std::log(1.0L + pb) +
                                pb * std::log(factor);
  if (log_value > 63.0L * std::log(2.0L)) {
    result.overflow = true;
    return result;
  }
  const long double value = widths / std::sqrt(1.0L + pb) * std::pow(factor, (long double)pb);
  // Guard against 199.999... artifacts before flooring.
  result.value = static_cast<std::uint64_t>(std::floor(value + 1e-9L));
  return result;
}

namespace {

struct HeapEntry {
  double lb;
  long long seq;  // FIFO among equal lower bounds
  std::shared_ptr<SimplexNode> node;
  bool operator>(const HeapEntry& other) const {
    if (lb != other.lb) return lb > other.lb;
    return seq > other.seq;
  }
};

using NodeHeap = std::priority_queue<HeapEntry, std::vector<HeapEntry>,
                                     std::greater<HeapEntry>>;

// sum_{J+} alpha_j / d_kj with d_kj = min over vertices of coordinate j.
double node_lipschitz(const SimplexNode& node, const Vec& alphas_plus) {
  double sum = 0.0;
  for (size_t j = 0; j < alphas_plus.size(); ++j) {
    double dkj = node.vertices[0]->t[j];
    for (const auto& v : node.vertices) dkj = std::min(dkj, v->t[j]);
    sum += alphas_plus[j] / dkj;
  }
  return sum;
}

}  // namespace

SolveResult solve(const GlmpInstance& instance, const SolverConfig& config) {
  if (config.epsilon <= 0.0) throw std::invalid_argument("solve: epsilon must be positive");
  const auto start_time = std::chrono::steady_clock::now();
  const auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time)
        .count();
  };

  const ValidationReport report = validate(instance, config.delta_pos);
  if (!report.ok()) {
    std::string msg = "instance failed validation:";
    for (const auto& v : report.violations) msg += " " + v + ";";
    throw std::invalid_argument(msg);
  }

  const IndexPartition partition = partition_terms(instance);
  const double sub_tol = config.effective_sub_tol();

  SolveResult result;

  if (partition.p_bar() == 0) {
    // All exponents negative: P itself is convex, one subsolve suffices.
    const PsiBracket bracket = eval_psi(instance, partition, {}, sub_tol);
    result.status = SolveStatus::ConvexShortcut;
    result.x_star = bracket.x_arg;
    result.ub = objective_nu(instance, bracket.x_arg);
    result.lb = bracket.lower;
    result.gap = result.ub - result.lb;
    result.h_value = std::exp(result.ub);
    result.psi_evaluations = 1;
    result.time_seconds = elapsed();
    return result;
  }

  Vec alphas_plus(partition.p_bar());
  for (int k = 0; k < partition.p_bar(); ++k)
    alphas_plus[k] = instance.terms[partition.j_plus[k]].alpha;

  // Step 0: bounds, initial simplex, psi at every vertex, LB(S0).
  const BoundsBox bounds = compute_t_bounds(instance, partition);
  result.theorem5_bound = theorem5_bound(bounds, alphas_plus, config.epsilon);

  double ub = std::numeric_limits<double>::infinity();
  double lb = -std::numeric_limits<double>::infinity();

  const auto update_incumbent = [&](const PsiBracket& bracket) {
    // Any feasible x certifies nu(x) as an upper bound; refit gives the
    // binding t (Theorem 1 equality case).
    const double nu = objective_nu(instance, bracket.x_arg);
    if (nu < ub) {
      ub = nu;
      result.x_star = bracket.x_arg;
      result.t_star = refit_t(instance, partition, bracket.x_arg);
    }
  };

  auto root = std::make_shared<SimplexNode>(initial_simplex(bounds));
  long long next_id = 1;
  for (auto& vertex : root->vertices) {
    auto filled = std::make_shared<SimplexVertex>(*vertex);
    filled->psi = eval_psi(instance, partition, filled->t, sub_tol);
    ++result.psi_evaluations;
    update_incumbent(*filled->psi);
    vertex = filled;
  }

  const auto node_lb = [&](SimplexNode& node, double parent_lb) {
    std::vector<ParamPoint> verts;
    Vec psi_lowers;
    for (const auto& v : node.vertices) {
      verts.push_back(v->t);
      psi_lowers.push_back(v->psi->lower);
    }
    const RelaxResult relax = solve_lb(verts, psi_lowers, alphas_plus, sub_tol);
    // The parent's bound also lower-bounds min psi over the child, so the
    // tighter of the two is still valid.
    node.lb = std::max(relax.lb_value, parent_lb);
  };

  node_lb(*root, -std::numeric_limits<double>::infinity());
  lb = root->lb;
  result.nodes_created = 1;

  NodeHeap heap;
  long long seq = 0;
  heap.push({root->lb, seq++, root});

  while (true) {
    if (ub - lb <= config.epsilon) {
      result.status = SolveStatus::EpsOptimal;
      break;
    }
    if (heap.empty()) {
      // Everything pruned: the incumbent is proven eps-optimal.
      lb = ub;
      result.status = SolveStatus::EpsOptimal;
      break;
    }
    if (result.iterations >= config.max_iterations) {
      result.status = SolveStatus::IterLimit;
      break;
    }
    if (elapsed() > config.time_limit) {
      result.status = SolveStatus::TimeLimit;
      break;
    }
    if (result.nodes_created >= config.node_limit) {
      result.status = SolveStatus::NodeLimit;
      break;
    }

    const HeapEntry entry = heap.top();
    heap.pop();
    const SimplexNode& node = *entry.node;
    lb = std::max(lb, node.lb);
    ++result.iterations;

    const Edge edge = longest_edge(node);
    TraceRecord rec;
    rec.k = result.iterations;
    rec.node_diameter = edge.length;
    rec.node_gap_bound = node_lipschitz(node, alphas_plus) * edge.length;

    auto [child1, child2] = bisect(node, next_id, next_id + 1);
    next_id += 2;
    result.nodes_created += 2;

    // Step 3: one psi evaluation at the midpoint, shared by both children.
    auto midpoint = std::const_pointer_cast<SimplexVertex>(child1.vertices[edge.j]);
    midpoint->psi = eval_psi(instance, partition, midpoint->t, sub_tol);
    ++result.psi_evaluations;
    update_incumbent(*midpoint->psi);

    // Step 4: child bounds from cached vertex lowers; prune closed children.
    for (SimplexNode* child : {&child1, &child2}) {
      node_lb(*child, node.lb);
      if (ub - child->lb <= config.epsilon) {
        ++result.nodes_pruned;
      } else {
        auto keep = std::make_shared<SimplexNode>(std::move(*child));
        heap.push({keep->lb, seq++, keep});
      }
    }

    // Step 5: the global lower bound is the least bound still active.
    lb = heap.empty() ? ub : std::max(lb, heap.top().lb);

    rec.lb = lb;
    rec.ub = ub;
    rec.gap = ub - lb;
    rec.active_nodes = static_cast<long long>(heap.size());
    result.trace.push_back(rec);
  }

  result.ub = ub;
  result.lb = std::min(lb, ub);
  result.gap = result.ub - result.lb;
  result.h_value = std::exp(result.ub);
  result.time_seconds = elapsed();
  return result;
}

}  // namespace glmp
