#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "glmp/generate.hpp"
#include "glmp/simplex_geom.hpp"

using namespace glmp;

namespace {

SimplexNode node_of(std::vector<ParamPoint> points) {
  SimplexNode node;
  for (auto& p : points) {
    auto v = std::make_shared<SimplexVertex>();
    v->t = std::move(p);
    node.vertices.push_back(std::move(v));
  }
  return node;
}

}  // namespace

TEST_CASE("initial simplex formulas") {
  SUBCASE("1-D segment") {
    const SimplexNode s = initial_simplex({{1.0}, {2.0}});
    CHECK(s.vertices[0]->t == ParamPoint{1.0});
    CHECK(s.vertices[1]->t == ParamPoint{2.0});
  }
  SUBCASE("2-D blowup covers the box") {
    const SimplexNode s = initial_simplex({{0.5, 0.5}, {1.0, 1.0}});
    CHECK(s.vertices[0]->t == ParamPoint{0.5, 0.5});
    CHECK(s.vertices[1]->t == ParamPoint{1.5, 0.5});
    CHECK(s.vertices[2]->t == ParamPoint{0.5, 1.5});
    for (const ParamPoint corner :
         {ParamPoint{0.5, 0.5}, ParamPoint{1.0, 0.5}, ParamPoint{0.5, 1.0},
          ParamPoint{1.0, 1.0}}) {
      const Vec w = barycentric(s, corner);
      for (double wi : w) CHECK(wi >= -1e-10);
    }
  }
  SUBCASE("flat axis accepted") {
    const SimplexNode s = initial_simplex({{1.0, 2.0}, {1.0, 3.0}});
    CHECK(s.vertices[1]->t == ParamPoint{1.0, 2.0});  // zero-width axis
  }
  SUBCASE("p_bar = 0 rejected") {
    CHECK_THROWS_AS(initial_simplex({{}, {}}), std::invalid_argument);
  }
}

TEST_CASE("every box corner is covered for p_bar up to 10") {
  for (int pb = 1; pb <= 10; ++pb) {
    BoundsBox bounds;
    SplitMix64 rng(100 + pb);
    for (int j = 0; j < pb; ++j) {
      const double lo = rng.uniform(0.1, 1.0);
      bounds.t_lower.push_back(lo);
      bounds.t_upper.push_back(lo + rng.uniform(0.0, 2.0));
    }
    const SimplexNode s0 = initial_simplex(bounds);
    for (unsigned mask = 0; mask < (1u << pb); ++mask) {
      ParamPoint corner(pb);
      for (int j = 0; j < pb; ++j)
        corner[j] = (mask >> j) & 1 ? bounds.t_upper[j] : bounds.t_lower[j];
      const Vec w = barycentric(s0, corner);
      for (double wi : w) CHECK(wi >= -1e-10);
    }
  }
}

TEST_CASE("longest edge with tie-breaking") {
  const SimplexNode tri = node_of({{0.0, 0.0}, {2.0, 0.0}, {0.0, 2.0}});
  const Edge e = longest_edge(tri);
  CHECK(e.i == 1);
  CHECK(e.j == 2);
  CHECK(e.length == doctest::Approx(2.0 * std::sqrt(2.0)));

  const SimplexNode flat = node_of({{1.0}, {1.0}});
  const Edge tie = longest_edge(flat);
  CHECK(tie.i == 0);
  CHECK(tie.j == 1);
  CHECK(tie.length == 0.0);

  const Edge seg = longest_edge(node_of({{1.0}, {2.0}}));
  CHECK(seg.length == doctest::Approx(1.0));
}

TEST_CASE("bisect splits the segment at the midpoint") {
  const SimplexNode seg = node_of({{1.0}, {2.0}});
  const auto [c1, c2] = bisect(seg, 1, 2);
  CHECK(c1.vertices[0]->t == ParamPoint{1.0});
  CHECK(c1.vertices[1]->t == ParamPoint{1.5});
  CHECK(c2.vertices[0]->t == ParamPoint{1.5});
  CHECK(c2.vertices[1]->t == ParamPoint{2.0});
}

TEST_CASE("bisect shares vertex objects and the midpoint") {
  const SimplexNode tri = node_of({{0.0, 0.0}, {2.0, 0.0}, {0.0, 2.0}});
  const auto [c1, c2] = bisect(tri, 1, 2);
  // longest edge is (1,2): child 1 replaces vertex 2, child 2 replaces vertex 1
  CHECK(c1.vertices[2]->t == ParamPoint{1.0, 1.0});
  CHECK(c2.vertices[1]->t == ParamPoint{1.0, 1.0});
  CHECK(c1.vertices[0].get() == tri.vertices[0].get());
  CHECK(c1.vertices[1].get() == tri.vertices[1].get());
  CHECK(c2.vertices[0].get() == tri.vertices[0].get());
  CHECK(c2.vertices[2].get() == tri.vertices[2].get());
  CHECK(c1.vertices[2].get() == c2.vertices[1].get());  // shared midpoint
  // each child contains the midpoint
  for (const auto* child : {&c1, &c2}) {
    const Vec w = barycentric(*child, {1.0, 1.0});
    for (double wi : w) CHECK(wi >= -1e-10);
  }
  CHECK_THROWS_AS(bisect(node_of({{1.0}, {1.0}}), 1, 2), std::invalid_argument);
}

TEST_CASE("barycentric coordinates at vertices and barycenter") {
  const SimplexNode tri = node_of({{0.0, 0.0}, {2.0, 0.0}, {0.0, 2.0}});
  for (int i = 0; i < 3; ++i) {
    const Vec w = barycentric(tri, tri.vertices[i]->t);
    for (int k = 0; k < 3; ++k)
      CHECK(w[k] == doctest::Approx(k == i ? 1.0 : 0.0).epsilon(1e-10));
  }
  const Vec w = barycentric(tri, {2.0 / 3.0, 2.0 / 3.0});
  for (int k = 0; k < 3; ++k) CHECK(w[k] == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(barycentric(node_of({{1.0, 1.0}, {1.0, 1.0}, {2.0, 2.0}}), {1.0, 1.0}),
                  std::runtime_error);
}

TEST_CASE("volume of textbook simplices") {
  CHECK(volume(node_of({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}})) == doctest::Approx(0.5));
  const double side = 1.0;
  CHECK(volume(node_of({{0.0, 0.0}, {side, 0.0}, {side / 2, side * std::sqrt(3.0) / 2}})) ==
        doctest::Approx(std::sqrt(3.0) / 4.0));
  CHECK(volume(node_of({{0.0, 0.0}, {1.0, 1.0}, {2.0, 2.0}})) == doctest::Approx(0.0));
}

TEST_CASE("initial simplex volume matches the closed form") {
  SplitMix64 rng(77);
  for (int pb = 1; pb <= 6; ++pb) {
    BoundsBox bounds;
    double widths = 1.0;
    for (int j = 0; j < pb; ++j) {
      const double lo = rng.uniform(0.2, 1.0);
      const double width = rng.uniform(0.1, 1.0);
      bounds.t_lower.push_back(lo);
      bounds.t_upper.push_back(lo + width);
      widths *= width;
    }
    double factorial = 1.0;
    for (int k = 2; k <= pb; ++k) factorial *= k;
    const double expected = std::pow(pb, pb) * widths / factorial;
    const double got = volume(initial_simplex(bounds));
    CHECK(std::fabs(got - expected) <= 1e-9 * (1.0 + expected));
  }
}

TEST_CASE("volume additivity under bisection, 1000 random simplices") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const int pb = 1 + static_cast<int>(rng.next() % 5);
    std::vector<ParamPoint> pts(pb + 1, ParamPoint(pb));
    for (auto& p : pts)
      for (int j = 0; j < pb; ++j) p[j] = rng.uniform(0.1, 2.0);
    const SimplexNode s = node_of(pts);
    if (longest_edge(s).length == 0.0) continue;
    const double parent = volume(s);
    const auto [c1, c2] = bisect(s, 1, 2);
    CHECK(std::fabs(parent - volume(c1) - volume(c2)) <= 1e-9 * (1.0 + parent));
  }
}

TEST_CASE("bisection chains shrink the diameter") {
  SplitMix64 rng(123);
  for (int pb = 1; pb <= 3; ++pb) {
    BoundsBox bounds;
    for (int j = 0; j < pb; ++j) {
      bounds.t_lower.push_back(0.5);
      bounds.t_upper.push_back(1.5);
    }
    SimplexNode node = initial_simplex(bounds);
    double diameter = longest_edge(node).length;
    int since_decrease = 0;
    for (int step = 0; step < 20 * pb; ++step) {
      auto [c1, c2] = bisect(node, 2 * step + 1, 2 * step + 2);
      node = rng.next() % 2 == 0 ? std::move(c1) : std::move(c2);
      const double d = longest_edge(node).length;
      CHECK(d <= diameter + 1e-12);  // non-increasing along any branch
      if (d < diameter - 1e-12) {
        diameter = d;
        since_decrease = 0;
      } else {
        ++since_decrease;
      }
      CHECK(since_decrease <= pb * (pb + 1) / 2);
    }
  }
}
