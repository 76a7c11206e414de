#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lagrangia/hypergraph.hpp"
#include "lagrangia/lagrangian.hpp"
#include "lagrangia/rng.hpp"
#include "lagrangia/simplex_ascent.hpp"

using namespace lagrangia;

namespace {

Hypergraph single(int r) {
  Edge e;
  for (int v = 1; v <= r; ++v) e.push_back(v);
  return Hypergraph(r, r, {e});
}

// Plain sum of products, no compensation.
double naive(const Hypergraph& f, const std::vector<double>& p) {
  double s = 0.0;
  for (const auto& e : f.edges()) {
    double t = 1.0;
    for (Vertex v : e) t *= p[v - 1];
    s += t;
  }
  return s;
}

std::vector<double> random_point(Rng& rng, int n) {
  std::vector<double> p(n);
  rng.dirichlet(p);
  return p;
}

Hypergraph random_graph(Rng& rng, int n, int r, double density) {
  std::vector<Edge> edges;
  for (Mask m = 1; m < (Mask{1} << n); ++m)
    if (popcount(m) == r && rng.uniform() < density) edges.push_back(from_mask(m));
  return Hypergraph(r, n, edges);
}

}  // namespace

TEST_CASE("evaluation") {
  CHECK(evaluate(complete(5, 3), std::vector<double>(5, 0.2)) == doctest::Approx(0.08).epsilon(1e-15));
  std::vector<double> spike(5, 0.0);
  spike[0] = 1.0;
  CHECK(evaluate(complete(5, 3), spike) == 0.0);
  CHECK(evaluate(Hypergraph(3, 5, {{1, 2, 3}}), std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3, 0, 0}) ==
        doctest::Approx(1.0 / 27));
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const auto f = random_graph(rng, 7, 3, 0.5);
    const auto p = random_point(rng, 7);
    CHECK(evaluate(f, p) == doctest::Approx(naive(f, p)).epsilon(1e-13));
  }
}

TEST_CASE("gradient: closed forms, finite differences and Euler's identity") {
  const auto g1 = gradient(single(3), std::vector<double>(3, 1.0 / 3));
  for (double g : g1) CHECK(g == doctest::Approx(1.0 / 9));
  const auto g2 = gradient(complete(4, 3), std::vector<double>(4, 0.25));
  for (double g : g2) CHECK(g == doctest::Approx(0.1875));
  const auto g3 = gradient(Hypergraph(3, 4, {{1, 2, 3}}), std::vector<double>(4, 0.25));
  CHECK(g3[3] == 0.0);
  Rng rng(2);
  for (int t = 0; t < 30; ++t) {
    const int r = 2 + static_cast<int>(rng.below(3));
    const auto f = random_graph(rng, 7, r, 0.5);
    const auto p = random_point(rng, 7);
    const auto g = gradient(f, p);
    double euler = 0.0;
    for (int v = 0; v < 7; ++v) {
      auto hi = p, lo = p;
      const double h = 1e-6;
      hi[v] += h;
      lo[v] -= h;
      CHECK(g[v] == doctest::Approx((naive(f, hi) - naive(f, lo)) / (2 * h)).epsilon(1e-6));
      euler += p[v] * g[v];
    }
    CHECK(euler == doctest::Approx(r * evaluate(f, p)).epsilon(1e-12));
  }
}

TEST_CASE("polynomial view agrees with direct evaluation") {
  Rng rng(4);
  const auto f = random_graph(rng, 6, 3, 0.5);
  const auto poly = lagrangian_polynomial(f);
  const auto p = random_point(rng, 6);
  CHECK(poly.value(p) == doctest::Approx(evaluate(f, p)));
}

TEST_CASE("cliques: exact formula and ascent") {
  CHECK(clique_lagrangian(5, 3) == Rational(2, 25));
  CHECK(clique_lagrangian(7, 4) == parse_rational("35/2401"));
  for (int r = 2; r <= 6; ++r) CHECK(clique_lagrangian(r, r) == 1 / pow(Rational(r), r));
  for (int t = 3; t <= 8; ++t)
    for (int r = 2; r <= std::min(t, 4); ++r) {
      const Rational oracle = Rational(binomial(t, r)) / pow(Rational(t), r);
      CHECK(clique_lagrangian(t, r) == oracle);
    }
  LagrangianConfig cfg;
  const auto k5 = maximize(complete(5, 3), cfg);
  CHECK(std::abs(k5.value - 0.08) < 1e-9);
  CHECK(k5.converged);
  CHECK(k5.method == LagrangianMethod::ascent);
  const auto k74 = maximize(complete(7, 4), cfg);
  CHECK(std::abs(k74.value - 35.0 / 2401) < 1e-7);
}

TEST_CASE("matchings and single edges") {
  const auto m = maximize(matching2(3));
  CHECK(std::abs(m.value - 1.0 / 27) < 1e-9);
  CHECK(m.support.size() == 3);
  const auto orb = orbit_exact(matching2(3), {{1, 2, 3}, {4, 5, 6}});
  CHECK(std::abs(orb.value - 1.0 / 27) < 1e-12);
  for (int r = 2; r <= 5; ++r) {
    const auto o = orbit_exact(matching2(r), consecutive_orbits(2 * r, std::vector<int>{r, r}));
    CHECK(std::abs(o.value - std::pow(1.0 / r, r)) < 1e-12);
  }
}

TEST_CASE("empty graph") {
  const auto res = maximize(Hypergraph(3, 4, {}));
  CHECK(res.value == 0.0);
  REQUIRE(res.point.size() == 4);
  CHECK(res.point[0] == doctest::Approx(0.25));
}

TEST_CASE("orbit-exact on symmetric families") {
  const auto k = orbit_exact(complete(6, 3), consecutive_orbits(6, std::vector<int>{6}));
  REQUIRE(k.exact_value);
  CHECK(*k.exact_value == Rational(binomial(6, 3)) / 216);
  CHECK(k.method == LagrangianMethod::orbit_exact);
  // principal star on 40 vertices: x(1-x)^3 (39*38*37/6) / 39^3 at x = 1/4
  const double star_oracle = 27.0 / 256 * (39.0 * 38 * 37 / 6) / (39.0 * 39 * 39);
  const auto ps = orbit_exact(principal_star(40, 4), consecutive_orbits(40, std::vector<int>{1, 39}));
  REQUIRE(ps.certified_lower);
  REQUIRE(ps.certified_upper);
  CHECK(*ps.certified_lower <= star_oracle + 1e-15);
  CHECK(*ps.certified_upper >= star_oracle - 1e-15);
  CHECK(std::abs(ps.value - star_oracle) < 1e-12);
  CHECK(ps.value >= 0.0162);
  CHECK(ps.value <= 27.0 / 64 / 24);
  // approaches (1/r!)(1 - 1/r)^(r-1) as n grows
  const auto far = orbit_exact(principal_star(60, 3), consecutive_orbits(60, std::vector<int>{1, 59}));
  CHECK(far.value < 4.0 / 9 / 6);
  CHECK(far.value > 4.0 / 9 / 6 * 0.95);
  // ascent agrees with the certified value
  LagrangianConfig cfg;
  cfg.restarts = 20;
  CHECK(std::abs(maximize(principal_star(12, 3), cfg).value -
                 orbit_exact(principal_star(12, 3), consecutive_orbits(12, std::vector<int>{1, 11})).value) < 1e-9);
  CHECK_THROWS(orbit_exact(star(2, 4, 3), consecutive_orbits(6, std::vector<int>{1, 5})).value);
}

TEST_CASE("three orbits") {
  // star S[{1},{2,3}] u edges inside B: orbits {1}, {2,3}, {4,5}
  const auto f = star(2, 4, 3);
  const auto res = orbit_exact(f, consecutive_orbits(6, std::vector<int>{2, 4}));
  LagrangianConfig cfg;
  cfg.restarts = 50;
  CHECK(std::abs(res.value - maximize(f, cfg).value) < 1e-9);
}

TEST_CASE("seeded runs are reproducible") {
  Rng rng(8);
  const auto f = random_graph(rng, 8, 3, 0.4);
  LagrangianConfig cfg;
  cfg.restarts = 30;
  cfg.seed = 99;
  const auto a = maximize(f, cfg), b = maximize(f, cfg);
  CHECK(a.value == b.value);
  CHECK(a.point == b.point);
}

TEST_CASE("simplex projection") {
  std::vector<double> p{0.5, 2.0, -1.0};
  project_to_simplex(p);
  double s = 0.0;
  for (double v : p) {
    CHECK(v >= 0.0);
    s += v;
  }
  CHECK(s == doctest::Approx(1.0));
  CHECK(p[1] == doctest::Approx(1.0).epsilon(1e-12));
}
