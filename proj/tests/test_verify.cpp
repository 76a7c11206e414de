#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lagrangia/families.hpp"
#include "lagrangia/verify.hpp"

using namespace lagrangia;
namespace v = lagrangia::verify;

TEST_CASE("constants") {
  const auto k4 = v::constants(4);
  CHECK(k4.L == Rational(27, 64));
  CHECK(k4.c_r == Rational(1, 32000));
  CHECK(v::constants(3).L == Rational(4, 9));
  for (int r = 2; r <= 12; ++r) {
    const auto k = v::constants(r);
    CHECK(k.L == pow(Rational(r - 1, r), r - 1));
    CHECK(k.d == r * k.e);
    CHECK(k.e * factorial(r) == k.L);
  }
  const auto [lo, hi] = v::inverse_e_bracket();
  CHECK(lo <= hi);
  CHECK(hi - lo < Rational(1, BigInt("1000000000000000")));
  CHECK(std::abs(lo.get_d() - std::exp(-1.0)) < 1e-15);
}

TEST_CASE("two heavy elements") {
  CHECK(v::two_heavy_bound(4) == Rational(27, 64) * Rational(17, 18));
  CHECK(v::two_heavy_bound(4).get_d() == doctest::Approx(0.3984375));
  // objective against its definition
  for (double x : {0.1, 0.3, 0.5})
    for (double y : {0.05, 0.1}) {
      const int r = 5;
      const double z = 1 - x - y;
      CHECK(v::two_heavy_objective(r, x, y) ==
            doctest::Approx(r * (r - 1) * x * y * std::pow(z, r - 2) + r * y * std::pow(z, r - 1)));
    }
  // grid max against a coarse independent scan
  for (int r = 4; r <= 6; ++r) {
    double scan = 0.0;
    for (int i = 0; i <= 400; ++i)
      for (int j = 0; j <= i && i + j <= 400; ++j) scan = std::max(scan, v::two_heavy_objective(r, i / 400.0, j / 400.0));
    const auto m = v::two_heavy_max(r);
    CHECK(m.value >= scan - 1e-12);
    CHECK(m.x >= m.y);
    CHECK(m.x + m.y <= 1.0 + 1e-15);
  }
  for (int r = 4; r <= 10; ++r) CHECK(v::two_heavy_check(r).passed());
  const auto r3 = v::two_heavy_check(3);
  CHECK(r3.numeric_ok);
  CHECK_FALSE(r3.chain_ok);  // the bound equals L_3 there
}

TEST_CASE("uniform tail probabilities") {
  // sum_i C(r,i) s!/(s-i)! over (s+1)^r
  auto oracle = [](int r, int s) -> Rational {
    Rational sum = 0;
    for (int i = 0; i <= r; ++i) sum += Rational(binomial(r, i) * falling_factorial(s, i));
    return sum / pow(Rational(s + 1), r);
  };
  CHECK(v::uniform_tail_probability(5, 9) == parse_rational("36046/100000"));
  for (int r = 2; r <= 7; ++r)
    for (int s = 1; s <= 12; ++s) {
      CHECK(v::uniform_tail_probability(r, s) == oracle(r, s));
      CHECK(v::uniform_tail_probability(r, s) <= 1);
    }
  const auto table = v::uniform_tail_table();
  CHECK(table.size() == 11);
  for (const auto& row : table) {
    CHECK(row.r >= 5);
    CHECK(row.r <= 6);
    CHECK(row.s >= row.r);
    CHECK(row.s <= 2 * row.r - 1);
    CHECK(row.ok);
    CHECK(row.bound == v::constants(row.r).L - Rational(1, 25));
  }
}

TEST_CASE("large-r tail") {
  const Rational f7 = Rational(1, 7) + pow(Rational(11, 14), 7);
  CHECK(v::large_r_tail(7) == f7);
  CHECK(v::large_r_tail(8) < v::large_r_tail(7));
  CHECK(f7 < Rational(1, 3));
  CHECK(v::large_r_check().passed());
}

TEST_CASE("quartic bound") {
  const auto q = v::quartic_check();
  CHECK(q.passed());
  CHECK(q.lower > Rational(2, 5));
  CHECK(q.upper < Rational(41, 100));
  CHECK(std::abs(q.argmax - (5 - std::sqrt(3.0)) / 22) <= 1e-9);
  CHECK(q.endpoint_value == Rational(3, 32));
  auto f = [](double x) { return 72 * x * x * std::pow(1 - 4 * x, 2) + 96 * x * x * x * (1 - 4 * x) + 24 * std::pow(x, 4); };
  double grid = 0.0;
  for (int i = 0; i <= 1000000; ++i) grid = std::max(grid, f(0.25 * i / 1e6));
  CHECK(grid <= q.upper.get_d() + 1e-15);
  CHECK(grid >= q.lower.get_d() - 1e-9);
}

TEST_CASE("tail chain") {
  const auto t = v::tail_chain_check(400, 3);
  CHECK(t.lhs == Rational(143, 36) * Rational(27, 256));
  CHECK(t.rhs == Rational(27, 64) * Rational(143, 144));
  CHECK(t.equal);
  CHECK(t.passed());
  CHECK(v::tail_first_inequality(5, Rational(1, 2), Rational(1, 10)));
}

TEST_CASE("principal maximum") {
  for (int r = 2; r <= 10; ++r) {
    const auto p = v::principal_check(r, 20000);
    CHECK(p.value_at_root == v::constants(r).L);
    CHECK(p.passed());
  }
}

TEST_CASE("sweep bound uses the same constant") {
  SweepConfig cfg;
  cfg.enumeration.r = 4;
  cfg.enumeration.max_ground = 2;
  const auto sum = nonprincipal_gap_sweep(cfg);
  const auto k = v::constants(4);
  CHECK(sum.bound == k.L - k.c_r);
}
