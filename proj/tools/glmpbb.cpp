// glmpbb: global solver for generalized linear multiplicative programs
// (products of powers of positive affine forms over a polytope).
//
// Tolerances live in the log domain: a solve at --eps e certifies the
// returned objective within a multiplicative factor exp(e) of the optimum.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "glmp/bb.hpp"
#include "glmp/generate.hpp"
#include "glmp/json_io.hpp"
#include "glmp/oracle.hpp"

using nlohmann::json;

namespace {

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

LogLevel log_level() {
  const char* env = std::getenv("GLMPBB_LOG");
  if (!env) return LogLevel::Error;
  const std::string v(env);
  if (v == "debug") return LogLevel::Debug;
  if (v == "info") return LogLevel::Info;
  return LogLevel::Error;
}

void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::Info) std::cerr << "[glmpbb] " << msg << "\n";
}

struct SolveFlags {
  double eps = 1e-4;
  long long max_iters = 1000000;
  double time_limit = 3600.0;
  double sub_tol = 0.0;
  std::string trace_path;
  std::string out_path;
};

void add_solve_flags(CLI::App* cmd, SolveFlags& flags) {
  cmd->add_option("--eps", flags.eps,
                  "termination tolerance in the log domain (factor exp(eps))")
      ->capture_default_str();
  cmd->add_option("--max-iters", flags.max_iters, "iteration limit")->capture_default_str();
  cmd->add_option("--time-limit", flags.time_limit, "time limit in seconds")
      ->capture_default_str();
  cmd->add_option("--sub-tol", flags.sub_tol, "subsolver tolerance (default eps/10)");
  cmd->add_option("--trace", flags.trace_path, "write per-iteration CSV trace here");
  cmd->add_option("--out", flags.out_path, "write result JSON here instead of stdout");
}

glmp::SolverConfig config_of(const SolveFlags& flags) {
  glmp::SolverConfig config;
  config.epsilon = flags.eps;
  config.max_iterations = flags.max_iters;
  config.time_limit = flags.time_limit;
  config.sub_tol = flags.sub_tol;
  return config;
}

void write_trace_csv(const glmp::SolveResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write trace file: " + path);
  out << "k,lb,ub,gap,active_nodes,node_diameter\n";
  out.precision(17);
  for (const auto& rec : result.trace)
    out << rec.k << ',' << rec.lb << ',' << rec.ub << ',' << rec.gap << ','
        << rec.active_nodes << ',' << rec.node_diameter << '\n';
}

json result_to_json(const glmp::GlmpInstance& instance, const glmp::SolveResult& result) {
  json j;
  j["schema_version"] = 1;
  j["instance"] = instance.name;
  j["status"] = glmp::to_string(result.status);
  j["h_value"] = result.h_value;
  j["nu_upper"] = result.ub;
  j["nu_lower"] = result.lb;
  j["gap"] = result.gap;
  j["x"] = result.x_star;
  j["t"] = result.t_star;
  j["iterations"] = result.iterations;
  j["nodes_created"] = result.nodes_created;
  j["nodes_pruned"] = result.nodes_pruned;
  j["psi_evaluations"] = result.psi_evaluations;
  if (result.theorem5_bound.overflow)
    j["iteration_bound"] = "overflow";
  else
    j["iteration_bound"] = result.theorem5_bound.value;
  j["time_seconds"] = result.time_seconds;
  return j;
}

int exit_code_of(glmp::SolveStatus status) {
  switch (status) {
    case glmp::SolveStatus::EpsOptimal:
    case glmp::SolveStatus::ConvexShortcut:
      return 0;
    default:
      return 2;
  }
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write output file: " + out_path);
    out << j.dump(2) << "\n";
  }
}

glmp::GenSpec spec_of(const std::string& scheme, int m, int n, int p, int pbar,
                      std::uint64_t seed) {
  glmp::GenSpec spec;
  if (scheme == "p1") spec.scheme = glmp::GenScheme::P1;
  else if (scheme == "p2") spec.scheme = glmp::GenScheme::P2;
  else if (scheme == "p3") spec.scheme = glmp::GenScheme::P3;
  else throw CLI::ValidationError("--scheme must be p1, p2 or p3");
  spec.m = m;
  spec.n = n;
  spec.p = p;
  spec.p_bar_target = pbar;
  spec.seed = seed;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global solver for generalized linear multiplicative programs"};
  app.require_subcommand(1);

  // solve
  auto* cmd_solve = app.add_subcommand("solve", "validate and solve an instance file");
  std::string solve_path;
  SolveFlags solve_flags;
  cmd_solve->add_option("instance", solve_path, "instance JSON file")->required();
  add_solve_flags(cmd_solve, solve_flags);

  // generate
  auto* cmd_generate = app.add_subcommand("generate", "write a seeded random instance");
  std::string gen_scheme = "p1", gen_out;
  int gen_m = 10, gen_n = 20, gen_p = 2, gen_pbar = 1;
  std::uint64_t gen_seed = 1;
  cmd_generate->add_option("--scheme", gen_scheme, "p1|p2|p3")->capture_default_str();
  cmd_generate->add_option("--m", gen_m, "random constraint rows")->capture_default_str();
  cmd_generate->add_option("--n", gen_n, "variables")->capture_default_str();
  cmd_generate->add_option("--p", gen_p, "terms (p2/p3)")->capture_default_str();
  cmd_generate->add_option("--pbar", gen_pbar, "positive exponents (p3)")
      ->capture_default_str();
  cmd_generate->add_option("--seed", gen_seed, "64-bit seed")->capture_default_str();
  cmd_generate->add_option("--out", gen_out, "output file (default stdout)");

  // bench
  auto* cmd_bench = app.add_subcommand(
      "bench", "generate seeded instances, solve each, emit a summary CSV");
  std::string bench_scheme = "p1", bench_out;
  int bench_m = 10, bench_n = 20, bench_p = 2, bench_pbar = 1, bench_repeats = 10;
  std::uint64_t bench_seed = 1;
  SolveFlags bench_flags;
  cmd_bench->add_option("--scheme", bench_scheme, "p1|p2|p3")->capture_default_str();
  cmd_bench->add_option("--m", bench_m, "random constraint rows")->capture_default_str();
  cmd_bench->add_option("--n", bench_n, "variables")->capture_default_str();
  cmd_bench->add_option("--p", bench_p, "terms (p2/p3)")->capture_default_str();
  cmd_bench->add_option("--pbar", bench_pbar, "positive exponents (p3)")
      ->capture_default_str();
  cmd_bench->add_option("--seed", bench_seed, "base seed; run r uses seed + r")
      ->capture_default_str();
  cmd_bench->add_option("--repeats", bench_repeats, "instance count")->capture_default_str();
  add_solve_flags(cmd_bench, bench_flags);
  cmd_bench->add_option("--csv", bench_out, "summary CSV file (default stdout)");

  // oracle
  auto* cmd_oracle = app.add_subcommand("oracle", "brute-force cross-check of an instance");
  std::string oracle_path;
  int oracle_resolution = 200;
  cmd_oracle->add_option("instance", oracle_path, "instance JSON file")->required();
  cmd_oracle->add_option("--resolution", oracle_resolution, "grid resolution")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_solve->parsed()) {
      const glmp::GlmpInstance instance = glmp::load_instance(solve_path);
      const glmp::ValidationReport report = glmp::validate(instance);
      if (!report.ok()) {
        std::cerr << "instance failed validation:\n";
        for (const auto& v : report.violations) std::cerr << "  - " << v << "\n";
        return 1;
      }
      log_info("solving '" + instance.name + "'");
      const glmp::SolveResult result = glmp::solve(instance, config_of(solve_flags));
      if (!solve_flags.trace_path.empty()) write_trace_csv(result, solve_flags.trace_path);
      emit(result_to_json(instance, result), solve_flags.out_path);
      return exit_code_of(result.status);
    }

    if (cmd_generate->parsed()) {
      const glmp::GlmpInstance instance =
          glmp::generate(spec_of(gen_scheme, gen_m, gen_n, gen_p, gen_pbar, gen_seed));
      if (gen_out.empty()) std::cout << glmp::instance_to_json_text(instance);
      else glmp::save_instance(instance, gen_out);
      return 0;
    }

    if (cmd_bench->parsed()) {
      std::ostringstream csv;
      csv << "scheme,m,n,p,seed,status,iterations,time_seconds,h_value\n";
      csv.precision(17);
      double sum_iters = 0.0, sum_time = 0.0, sum_h = 0.0;
      int solved = 0;
      for (int r = 0; r < bench_repeats; ++r) {
        const glmp::GenSpec spec = spec_of(bench_scheme, bench_m, bench_n, bench_p,
                                           bench_pbar, bench_seed + r);
        const glmp::GlmpInstance instance = glmp::generate(spec);
        const glmp::SolveResult result = glmp::solve(instance, config_of(bench_flags));
        csv << bench_scheme << ',' << bench_m << ',' << bench_n << ',' << bench_p << ','
            << spec.seed << ',' << glmp::to_string(result.status) << ','
            << result.iterations << ',' << result.time_seconds << ',' << result.h_value
            << '\n';
        sum_iters += static_cast<double>(result.iterations);
        sum_time += result.time_seconds;
        sum_h += result.h_value;
        ++solved;
      }
      csv << "avg,,,,,," << sum_iters / solved << ',' << sum_time / solved << ','
          << sum_h / solved << '\n';
      if (bench_out.empty()) std::cout << csv.str();
      else {
        std::ofstream out(bench_out);
        if (!out) throw std::runtime_error("cannot write CSV file: " + bench_out);
        out << csv.str();
      }
      return 0;
    }

    if (cmd_oracle->parsed()) {
      const glmp::GlmpInstance instance = glmp::load_instance(oracle_path);
      const glmp::IndexPartition partition = glmp::partition_terms(instance);
      json j;
      j["instance"] = instance.name;
      if (partition.j_minus.empty() && instance.n + instance.m <= 24) {
        const auto [h, x] = glmp::vertex_min_h(instance);
        j["vertex_min_h"] = h;
        j["vertex_argmin"] = x;
      }
      if (partition.p_bar() >= 1 && partition.p_bar() <= 3) {
        const glmp::BoundsBox bounds = glmp::compute_t_bounds(instance, partition);
        glmp::Vec alphas;
        for (int k : partition.j_plus) alphas.push_back(instance.terms[k].alpha);
        const auto [psi_min, t] = glmp::grid_min_psi(instance, bounds, oracle_resolution);
        j["grid_min_psi"] = psi_min;
        j["grid_argmin_t"] = t;
        j["grid_h"] = std::exp(psi_min);
        j["grid_error_bound"] = glmp::grid_error_bound(bounds, alphas, oracle_resolution);
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
