#include <stdexcept>
#include <algorithm>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "glmp/generate.hpp"
#include "glmp/linprog.hpp"
#include "glmp/oracle.hpp"

using namespace glmp;

TEST_CASE("single binding constraint") {
  LpProblem lp;
  lp.g = {1.0};
  lp.A = {{-1.0}};
  lp.b = {-2.0};
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.x[0] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(sol.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("symmetric facet optimum") {
  LpProblem lp;
  lp.g = {-1.0, -1.0};
  lp.A = {{1.0, 1.0}};
  lp.b = {1.0};
  lp.lower = Vec{0.0, 0.0};
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(sol.x[0] + sol.x[1] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("empty region reported infeasible") {
  LpProblem lp;
  lp.g = {1.0};
  lp.A = {{1.0}};
  lp.b = {-1.0};
  lp.lower = Vec{0.0};
  CHECK(solve_lp(lp).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded ray detected") {
  LpProblem lp;
  lp.g = {-1.0};
  lp.A = {{-1.0}};
  lp.b = {0.0};
  CHECK(solve_lp(lp).status == LpStatus::Unbounded);
}

TEST_CASE("optimal solution satisfies constraints and value identity") {
  LpProblem lp;
  lp.g = {2.0, -3.0, 1.0};
  lp.A = {{1.0, 2.0, 1.0}, {-1.0, 1.0, 2.0}, {3.0, -1.0, 0.0}};
  lp.b = {4.0, 2.0, 6.0};
  lp.lower = Vec{0.0, 0.0, 0.0};
  lp.upper = Vec{5.0, 5.0, 5.0};
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  for (size_t r = 0; r < lp.A.size(); ++r) {
    double lhs = 0.0;
    for (int i = 0; i < 3; ++i) lhs += lp.A[r][i] * sol.x[i];
    CHECK(lhs <= lp.b[r] + 1e-8 * (1.0 + std::fabs(lp.b[r])));
  }
  double g_dot_x = 0.0;
  for (int i = 0; i < 3; ++i) g_dot_x += lp.g[i] * sol.x[i];
  CHECK(sol.value == doctest::Approx(g_dot_x).epsilon(1e-10));
}

TEST_CASE("matches vertex-enumeration oracle on random bounded LPs") {
  // 200 seeded random LPs with m, n <= 8; brute force over basic solutions.
  SplitMix64 rng(42);
  int checked = 0;
  while (checked < 200) {
    const int n = 2 + static_cast<int>(rng.next() % 4);      // 2..5
    const int m_rand = n + static_cast<int>(rng.next() % 4); // keep it bounded-ish
    GlmpInstance region;  // reuse the A,b container for the oracle
    region.n = n;
    for (int r = 0; r < m_rand; ++r) {
      Vec row(n);
      double sum = 0.0;
      for (int i = 0; i < n; ++i) {
        row[i] = rng.uniform(-1.0, 1.0);
        sum += row[i];
      }
      region.A.push_back(row);
      region.b.push_back(sum + rng.uniform());
    }
    for (int i = 0; i < n; ++i) {
      Vec lo(n, 0.0), hi(n, 0.0);
      lo[i] = -1.0;
      hi[i] = 1.0;
      region.A.push_back(lo);
      region.b.push_back(1.0);  // x_i >= -1
      region.A.push_back(hi);
      region.b.push_back(1.0);  // x_i <= 1
    }
    region.m = static_cast<int>(region.A.size());
    region.terms = {{Vec(n, 0.0), 1.0, 1.0}};

    Vec g(n);
    for (int i = 0; i < n; ++i) g[i] = rng.uniform(-1.0, 1.0);

    const auto vertices = enumerate_vertices(region);
    if (vertices.empty()) continue;
    double oracle = std::numeric_limits<double>::infinity();
    for (const Vec& v : vertices) {
      double val = 0.0;
      for (int i = 0; i < n; ++i) val += g[i] * v[i];
      oracle = std::min(oracle, val);
    }

    LpProblem lp;
    lp.g = g;
    lp.A = region.A;
    lp.b = region.b;
    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(std::fabs(sol.value - oracle) < 1e-7);
    ++checked;
  }
}

TEST_CASE("deterministic: identical inputs give bit-identical solutions") {
  LpProblem lp;
  lp.g = {1.0, -2.0, 0.5, -0.25};
  lp.A = {{1.0, 1.0, 1.0, 1.0}, {-1.0, 2.0, 0.0, 1.0}, {0.5, -0.5, 1.0, -1.0}};
  lp.b = {10.0, 4.0, 3.0};
  lp.lower = Vec{0.0, 0.0, 0.0, 0.0};
  const LpSolution a = solve_lp(lp);
  const LpSolution b = solve_lp(lp);
  REQUIRE(a.status == LpStatus::Optimal);
  for (int i = 0; i < 4; ++i) CHECK(a.x[i] == b.x[i]);
  CHECK(a.value == b.value);
}
