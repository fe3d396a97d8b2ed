#include "glmp/generate.hpp"

#include <stdexcept>
#include <string>

namespace glmp {

const char* to_string(GenScheme scheme) {
  switch (scheme) {
    case GenScheme::P1: return "p1";
    case GenScheme::P2: return "p2";
    case GenScheme::P3: return "p3";
  }
  return "?";
}

namespace {

GlmpInstance draw(const GenSpec& spec, SplitMix64& rng, int attempt) {
  GlmpInstance inst;
  inst.name = std::string(to_string(spec.scheme)) + "_m" + std::to_string(spec.m) +
              "_n" + std::to_string(spec.n) + "_seed" + std::to_string(spec.seed);
  if (attempt > 0) inst.name += "_redraw" + std::to_string(attempt);
  inst.n = spec.n;

  // Random rows: A_si in [-1, 1], b_s = sum_i A_si + 2 mu, mu in [0, 1).
  for (int s = 0; s < spec.m; ++s) {
    Vec row(spec.n);
    double sum = 0.0;
    for (int i = 0; i < spec.n; ++i) {
      row[i] = rng.uniform(-1.0, 1.0);
      sum += row[i];
    }
    inst.A.push_back(std::move(row));
    inst.b.push_back(sum + 2.0 * rng.uniform());
  }
  // Variable domain rows.
  for (int i = 0; i < spec.n; ++i) {
    Vec row(spec.n, 0.0);
    row[i] = -1.0;  // x_i >= 0
    inst.A.push_back(std::move(row));
    inst.b.push_back(0.0);
  }
  if (spec.scheme == GenScheme::P2) {
    for (int i = 0; i < spec.n; ++i) {
      Vec row(spec.n, 0.0);
      row[i] = 1.0;  // x_i <= 1
      inst.A.push_back(std::move(row));
      inst.b.push_back(1.0);
    }
  }
  inst.m = static_cast<int>(inst.A.size());

  const int p = spec.scheme == GenScheme::P1 ? 2 : spec.p;
  for (int j = 0; j < p; ++j) {
    Term term;
    term.c.resize(spec.n);
    for (int i = 0; i < spec.n; ++i) term.c[i] = rng.uniform();
    switch (spec.scheme) {
      case GenScheme::P1:
        term.d = 1.0;
        term.alpha = 1.0;
        break;
      case GenScheme::P2:
        term.d = 0.0;
        term.alpha = 1.0;
        break;
      case GenScheme::P3:
        term.d = rng.uniform();
        // Magnitude in (0, 1], sign chosen to hit p_bar_target exactly.
        term.alpha = 1.0 - rng.uniform();
        if (j >= spec.p_bar_target) term.alpha = -term.alpha;
        break;
    }
    inst.terms.push_back(std::move(term));
  }
  return inst;
}

}  // namespace

GlmpInstance generate(const GenSpec& spec) {
  if (spec.m < 1 || spec.n < 1) throw std::invalid_argument("generate: m, n must be >= 1");
  if (spec.scheme != GenScheme::P1 && spec.p < 1)
    throw std::invalid_argument("generate: p must be >= 1");
  if (spec.scheme == GenScheme::P3 &&
      (spec.p_bar_target < 1 || spec.p_bar_target > spec.p))
    throw std::invalid_argument("generate: p_bar_target must be in [1, p]");

  SplitMix64 rng(spec.seed);
  std::string last_violation = "no draw attempted";
  for (int attempt = 0; attempt <= spec.max_retries; ++attempt) {
    GlmpInstance inst = draw(spec, rng, attempt);
    const ValidationReport report = validate(inst);
    if (report.ok()) return inst;
    last_violation = report.violations.front();
  }
  throw std::runtime_error("generate: " + std::to_string(spec.max_retries + 1) +
                           " draws all failed validation; last violation: " +
                           last_violation);
}

}  // namespace glmp
