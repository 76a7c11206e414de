#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lagrangia/hypergraph.hpp"
#include "lagrangia/rational.hpp"
#include "lagrangia/simplex_ascent.hpp"

namespace lagrangia {

/// Weights on vertices 1..n stored at index v-1; non-negative, summing to 1.
using SimplexPoint = std::vector<double>;

enum class LagrangianMethod { ascent, orbit_exact };

std::string_view to_string(LagrangianMethod m);

struct LagrangianConfig {
  int restarts = 200;
  std::uint64_t seed = 1;
  int max_iters = 5000;
  double tol = 1e-13;
  double support_tol = 1e-8;
  /// Cap on the structured starts grown greedily from edges into pair-covering subgraphs.
  int structured_starts = 32;
};

struct LagrangianResult {
  double value = 0.0;
  SimplexPoint point;
  std::vector<Vertex> support;
  int restarts_used = 0;
  bool converged = false;
  double lower_bound = 0.0;
  LagrangianMethod method = LagrangianMethod::ascent;
  double kkt_residual = 0.0;
  /// Orbit-exact only: the symmetric-slice maximum lies in [certified_lower, certified_upper].
  std::optional<double> certified_lower;
  std::optional<double> certified_upper;
  /// Orbit-exact with a single orbit: the exact value.
  std::optional<Rational> exact_value;
};

/// sum over edges of prod p(v), Kahan-compensated.
double evaluate(const Hypergraph& f, std::span<const double> p);

/// Component v-1 is the link polynomial of v at p.
std::vector<double> gradient(const Hypergraph& f, std::span<const double> p);

/// The edge polynomial as a simplex objective over n variables.
SimplexPolynomial lagrangian_polynomial(const Hypergraph& f);

/// Multistart multiplicative ascent; result.value is a valid lower bound on lambda(F).
LagrangianResult maximize(const Hypergraph& f, const LagrangianConfig& cfg = {});

/// C(t, r) / t^r.
Rational clique_lagrangian(int t, int r);

/// Splits [n] into consecutive blocks of the given sizes.
std::vector<std::vector<Vertex>> consecutive_orbits(int n, std::span<const int> sizes);

/// Every vertex of an orbit sees the same number of edges of each orbit type.
bool is_orbit_partition(const Hypergraph& f, const std::vector<std::vector<Vertex>>& orbits);

/// Maximum over points constant on each orbit (at most 3 orbits), certified to
/// width 1e-12. This is exact for lambda whenever the optimum may be taken symmetric
/// and is always a lower bound.
LagrangianResult orbit_exact(const Hypergraph& f, const std::vector<std::vector<Vertex>>& orbits,
                             double support_tol = 1e-8);

}  // namespace lagrangia
