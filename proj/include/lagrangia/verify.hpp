#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lagrangia/rational.hpp"

namespace lagrangia::verify {

/// Exact extremal constants for uniformity r.
struct ExtremalConstants {
  int r = 0;
  Rational L;    // (1 - 1/r)^(r-1)
  Rational e;    // L / r!
  Rational d;    // L / (r-1)!
  Rational c;    // 1/500
  Rational c_r;  // c * 2^(2-2r)
};

ExtremalConstants constants(int r);

/// Certified rational bracket for 1/e from alternating partial sums.
std::pair<Rational, Rational> inverse_e_bracket(int terms = 20);

// --- two heavy elements ---------------------------------------------------

/// max of r(r-1) x y (1-x-y)^(r-2) + r y (1-x-y)^(r-1) on {x >= y >= 0, x + y <= 1}.
struct SlicedMax {
  double value = 0.0;
  double x = 0.0, y = 0.0;
};
double two_heavy_objective(int r, double x, double y);
SlicedMax two_heavy_max(int r, int grid = 2000, int zoom_rounds = 40);

/// L ((r-2)/(r-1))^(r-2) + L/2.
Rational two_heavy_bound(int r);

struct TwoHeavyReport {
  int r = 0;
  SlicedMax numeric;
  Rational bound;
  Rational chain_target;  // L - L/18
  bool numeric_ok = false;   // numeric max <= bound + 1e-9
  bool chain_ok = false;     // bound <= L - L/18, exactly
  bool constant_ok = false;  // L/18 >= c, exactly
  bool passed() const { return numeric_ok && chain_ok && constant_ok; }
};
TwoHeavyReport two_heavy_check(int r, int grid = 2000);

// --- uniform tail -----------------------------------------------------------

/// (s+1)^(-r) * sum_{i=0}^{r} C(r,i) s!/(s-i)!.
Rational uniform_tail_probability(int r, int s);

struct TailRow {
  int r = 0, s = 0;
  Rational value;
  Rational bound;  // L_r - 1/25
  bool ok = false;
};
/// Rows for r in {5, 6}, s in [r, 2r-1].
std::vector<TailRow> uniform_tail_table();

/// 1/(s+1) <= 1/3, the small-s branch (s + 1 < r).
bool small_s_bound(int r, int s);

/// 1/r + ((3r+1)/(4r))^r, exactly.
Rational large_r_tail(int r);

struct LargeRReport {
  Rational f7;
  bool f7_ok = false;          // f(7) < 1/3
  bool decreasing_ok = false;  // f(r+1) < f(r) for r in [7, r_max)
  int r_max = 50;
  Rational inverse_e_lower;
  bool constant_ok = false;  // 1/e - 1/3 >= c
  bool passed() const { return f7_ok && decreasing_ok && constant_ok; }
};
LargeRReport large_r_check(int r_max = 50);

// --- four elements -----------------------------------------------------------

struct QuarticReport {
  Rational lower, upper;  // certified bracket of the maximum on [0, 1/4]
  double argmax = 0.0;
  double closed_form_argmax = 0.0;  // (5 - sqrt 3)/22
  double derivative_at_closed_form = 0.0;
  Rational endpoint_value;  // at x = 1/4
  bool range_ok = false;     // 0.40 < max < 0.41
  bool argmax_ok = false;    // |argmax - closed form| <= 1e-9
  bool stationary_ok = false;
  bool margin_ok = false;    // 0.41 <= L_4 - 0.01
  bool passed() const { return range_ok && argmax_ok && stationary_ok && margin_ok; }
};
/// 72x^2(1-4x)^2 + 96x^3(1-4x) + 24x^4 on [0, 1/4].
QuarticReport quartic_check();

struct TailChainReport {
  Rational lhs;       // (4 - 1/36) * max x(1-x)^3
  Rational rhs;       // L_4 - L_4/144
  bool equal = false;
  bool constant_ok = false;  // L_4/144 >= c_4
  int samples = 0;
  int failures_first = 0;   // 12(s-1) x y^2 (1-x-y) >= (s-1)_4 y^4
  int failures_second = 0;  // the two-step cubic bound
  bool passed() const { return lhs <= rhs && constant_ok && failures_first == 0 && failures_second == 0; }
};
TailChainReport tail_chain_check(int samples = 1000, std::uint64_t seed = 1);

/// The exact inequalities of the sampled chain, for a single point.
bool tail_first_inequality(int s, const Rational& x, const Rational& y);
bool tail_second_inequality(int s, const Rational& x, const Rational& y);

// --- principal systems -------------------------------------------------------

struct PrincipalReport {
  int r = 0;
  Rational value_at_root;   // r x (1-x)^(r-1) at x = 1/r
  bool root_ok = false;     // derivative vanishes at 1/r and value equals L_r
  bool bracket_ok = false;  // certified maximum on [0,1] brackets L_r
  bool weight_ok = false;   // weight of {{1}} at p(1) = 1/r equals L_r
  double grid_max = 0.0;
  bool grid_ok = false;
  bool passed() const { return root_ok && bracket_ok && weight_ok && grid_ok; }
};
PrincipalReport principal_check(int r, int grid = 100000);

}  // namespace lagrangia::verify
