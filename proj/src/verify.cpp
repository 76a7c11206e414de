#include "lagrangia/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lagrangia/polynomial.hpp"
#include "lagrangia/rng.hpp"
#include "lagrangia/wiss.hpp"

namespace lagrangia::verify {

ExtremalConstants constants(int r) {
  if (r < 2) throw std::invalid_argument("constants need r >= 2");
  ExtremalConstants k;
  k.r = r;
  k.L = pow(Rational(r - 1, r), r - 1);
  k.e = k.L / Rational(factorial(r));
  k.d = k.L / Rational(factorial(r - 1));
  k.c = Rational(1, 500);
  k.c_r = k.c / Rational(pow(Rational(2), 2 * r - 2));
  return k;
}

std::pair<Rational, Rational> inverse_e_bracket(int terms) {
  if (terms < 2) throw std::invalid_argument("need at least two terms");
  // partial sums of sum (-1)^k / k!; those ending on a negative term lie below 1/e
  Rational sum = 0, prev = 0;
  for (int k = 0; k < terms; ++k) {
    prev = sum;
    Rational t = Rational(1) / Rational(factorial(k));
    sum += (k % 2 ? -t : t);
  }
  return sum < prev ? std::pair{sum, prev} : std::pair{prev, sum};
}

// --- two heavy elements ----------------------------------------------------

double two_heavy_objective(int r, double x, double y) {
  const double z = 1.0 - x - y;
  return r * (r - 1.0) * x * y * std::pow(z, r - 2) + r * y * std::pow(z, r - 1);
}

SlicedMax two_heavy_max(int r, int grid, int zoom_rounds) {
  SlicedMax best{-1.0, 0.0, 0.0};
  auto consider = [&](double x, double y) {
    x = std::clamp(x, 0.0, 1.0);
    y = std::clamp(y, 0.0, std::min(x, 1.0 - x));
    const double v = two_heavy_objective(r, x, y);
    if (v > best.value) best = {v, x, y};
  };
  // x = i/grid, y = j/grid over the slice: about grid^2/4 points
  for (int i = 0; i <= grid; ++i)
    for (int j = 0; j <= std::min(i, grid - i); ++j) consider(static_cast<double>(i) / grid, static_cast<double>(j) / grid);
  double h = 2.0 / grid;
  for (int round = 0; round < zoom_rounds; ++round) {
    const double cx = best.x, cy = best.y;
    for (int a = -10; a <= 10; ++a)
      for (int b = -10; b <= 10; ++b) consider(cx + a * h / 10, cy + b * h / 10);
    h *= 0.5;
  }
  return best;
}

Rational two_heavy_bound(int r) {
  if (r < 3) throw std::invalid_argument("two_heavy_bound needs r >= 3");
  const Rational L = constants(r).L;
  return L * (pow(Rational(r - 2, r - 1), r - 2) + Rational(1, 2));
}

TwoHeavyReport two_heavy_check(int r, int grid) {
  TwoHeavyReport rep;
  rep.r = r;
  const auto k = constants(r);
  rep.numeric = two_heavy_max(r, grid);
  rep.bound = two_heavy_bound(r);
  rep.chain_target = k.L - k.L / 18;
  rep.numeric_ok = rep.numeric.value <= rep.bound.get_d() + 1e-9;
  rep.chain_ok = rep.bound <= rep.chain_target;
  rep.constant_ok = k.L / 18 >= k.c;
  return rep;
}

// --- uniform tail -------------------------------------------------------------

Rational uniform_tail_probability(int r, int s) {
  if (r < 0 || s < 1) throw std::invalid_argument("need r >= 0 and s >= 1");
  BigInt sum = 0;
  for (int i = 0; i <= r; ++i) sum += binomial(r, i) * falling_factorial(s, i);
  return Rational(sum) / pow(Rational(s + 1), r);
}

std::vector<TailRow> uniform_tail_table() {
  std::vector<TailRow> rows;
  for (int r : {5, 6}) {
    const Rational bound = constants(r).L - Rational(1, 25);
    for (int s = r; s <= 2 * r - 1; ++s) {
      TailRow row{r, s, uniform_tail_probability(r, s), bound, false};
      row.ok = row.value <= row.bound;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

bool small_s_bound(int r, int s) { return s + 1 < r && Rational(1, s + 1) <= Rational(1, 3); }

Rational large_r_tail(int r) {
  if (r < 1) throw std::invalid_argument("need r >= 1");
  return Rational(1, r) + pow(Rational(3 * r + 1, 4 * r), r);
}

LargeRReport large_r_check(int r_max) {
  LargeRReport rep;
  rep.r_max = r_max;
  rep.f7 = large_r_tail(7);
  rep.f7_ok = rep.f7 < Rational(1, 3);
  rep.decreasing_ok = true;
  for (int r = 7; r < r_max; ++r)
    if (!(large_r_tail(r + 1) < large_r_tail(r))) rep.decreasing_ok = false;
  rep.inverse_e_lower = inverse_e_bracket().first;
  rep.constant_ok = rep.inverse_e_lower - Rational(1, 3) >= constants(2).c;
  return rep;
}

// --- four elements ------------------------------------------------------------

QuarticReport quartic_check() {
  QuarticReport rep;
  const RationalPoly x = RationalPoly::x();
  const RationalPoly one_minus_4x = RationalPoly::constant(1) - Rational(4) * x;
  const RationalPoly q = Rational(72) * (pow(x, 2) * pow(one_minus_4x, 2)) +
                         Rational(96) * (pow(x, 3) * one_minus_4x) + Rational(24) * pow(x, 4);
  const Rational quarter(1, 4);
  const auto cm = certified_max(q, 0, quarter, Rational(1, BigInt("1000000000000000")));
  rep.lower = cm.lower;
  rep.upper = cm.upper;
  rep.argmax = cm.argmax.get_d();
  rep.closed_form_argmax = (5.0 - std::sqrt(3.0)) / 22.0;
  rep.derivative_at_closed_form = q.derivative().eval(rep.closed_form_argmax);
  rep.endpoint_value = q(quarter);
  rep.range_ok = cm.lower > Rational(2, 5) && cm.upper < Rational(41, 100);
  rep.argmax_ok = std::abs(rep.argmax - rep.closed_form_argmax) <= 1e-9;
  rep.stationary_ok = std::abs(rep.derivative_at_closed_form) <= 1e-12;
  rep.margin_ok = Rational(41, 100) <= constants(4).L - Rational(1, 100);
  return rep;
}

bool tail_first_inequality(int s, const Rational& x, const Rational& y) {
  const Rational lhs = 12 * Rational(s - 1) * x * y * y * (1 - x - y);
  const Rational rhs = Rational(falling_factorial(s - 1, 4)) * pow(y, 4);
  return lhs >= rhs;
}

bool tail_second_inequality(int s, const Rational& x, const Rational& y) {
  const Rational a = 1 - x - Rational(s - 1) * y;
  const Rational b = Rational(s - 1) * y;
  const Rational first = 4 * x * pow(a, 3) + 4 * Rational(s - 1) * x * pow(y, 3);
  const Rational middle = Rational(4) / Rational((s - 1) * (s - 1)) * x * (pow(a, 3) + pow(b, 3));
  const Rational last = Rational(2, 9) * x * pow((1 - x) / 2, 3);
  return first >= middle && middle >= last;
}

TailChainReport tail_chain_check(int samples, std::uint64_t seed) {
  TailChainReport rep;
  const auto k = constants(4);
  rep.lhs = (Rational(4) - Rational(1, 36)) * Rational(27, 256);  // max x(1-x)^3 = 27/256 at x = 1/4
  rep.rhs = k.L - k.L / 144;
  rep.equal = rep.lhs == rep.rhs;
  rep.constant_ok = k.L / 144 >= k.c;
  rep.samples = samples;
  Rng rng(stream_seed(seed, 0x7a11));
  for (int n = 0; n < samples; ++n) {
    const int s = 3 + static_cast<int>(rng.below(5));
    // y in [0, 1/s], x in [y, 1 - (s-1) y]: x >= y and 1 - x - y >= (s-2) y
    const Rational y = Rational(static_cast<long>(rng.below(1001)), 1000 * s);
    const Rational u(static_cast<long>(rng.below(1001)), 1000);
    const Rational x = y + u * (1 - s * y);
    if (!tail_first_inequality(s, x, y)) ++rep.failures_first;
    if (!tail_second_inequality(s, x, y)) ++rep.failures_second;
  }
  return rep;
}

// --- principal systems ----------------------------------------------------------

PrincipalReport principal_check(int r, int grid) {
  PrincipalReport rep;
  rep.r = r;
  const Rational L = constants(r).L;
  const RationalPoly x = RationalPoly::x();
  const RationalPoly p = Rational(r) * (x * pow(RationalPoly::constant(1) - x, r - 1));
  const Rational root(1, r);
  rep.value_at_root = p(root);
  rep.root_ok = p.derivative()(root) == 0 && rep.value_at_root == L;
  const auto cm = certified_max(p, 0, 1, Rational(1, BigInt("1000000000000000")));
  rep.bracket_ok = cm.lower <= L && L <= cm.upper && cm.upper - L <= Rational(1, BigInt("1000000000000"));
  const auto dist = ProbDist::from_rationals({root});
  rep.weight_ok = weight_edge_exact(Mask{1}, r, dist) == L;
  rep.grid_max = 0.0;
  for (int i = 0; i <= grid; ++i) rep.grid_max = std::max(rep.grid_max, p.eval(static_cast<double>(i) / grid));
  rep.grid_ok = rep.grid_max <= L.get_d() + 1e-15;
  return rep;
}

}  // namespace lagrangia::verify
