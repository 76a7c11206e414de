#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lagrangia {

/// One term coeff * prod x[var]^power.
struct Monomial {
  double coeff = 1.0;
  std::vector<std::pair<int, int>> factors;  // (variable, power), power >= 1
};

/// Homogeneous polynomial with non-negative coefficients; the class of
/// objectives for which the multiplicative (Baum-Eagon) update is monotone on
/// the probability simplex.
class SimplexPolynomial {
 public:
  SimplexPolynomial(int dim, int degree, std::vector<Monomial> terms);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::vector<Monomial>& terms() const { return terms_; }

  double value(std::span<const double> x) const;
  /// Returns the value; writes the gradient into g.
  double value_and_gradient(std::span<const double> x, std::span<double> g) const;

 private:
  int dim_;
  int degree_;
  std::vector<Monomial> terms_;
};

/// Either the polynomial itself, or the polynomial composed with the
/// order-cone parametrisation p_i = sum_{k >= i, k < ordered} u_k / k, which maps
/// the simplex in u onto {p_1 >= ... >= p_ordered, rest free}.
class SimplexObjective {
 public:
  explicit SimplexObjective(const SimplexPolynomial& poly, int ordered_prefix = 0);

  int dim() const { return poly_.dim(); }
  int degree() const { return poly_.degree(); }
  double value_and_gradient(std::span<const double> u, std::span<double> g) const;
  double value(std::span<const double> u) const;
  /// u-space point -> polynomial variables.
  std::vector<double> to_variables(std::span<const double> u) const;
  /// Inverse map for a point already satisfying the order constraint.
  std::vector<double> from_variables(std::span<const double> p) const;

 private:
  const SimplexPolynomial& poly_;
  int ordered_;
  mutable std::vector<double> p_, gp_;
};

struct AscentConfig {
  int restarts = 200;
  std::uint64_t seed = 1;
  int max_iters = 5000;
  double tol = 1e-13;
  int polish_iters = 300;
  double kkt_tol = 1e-7;
};

struct AscentResult {
  double value = 0.0;
  std::vector<double> point;  // in the objective's own (u) coordinates
  bool converged = false;
  double kkt_residual = 0.0;
  int starts_used = 0;
};

/// Projects onto {x >= 0, sum x = 1}.
void project_to_simplex(std::span<double> x);

/// KKT residual of a simplex-constrained maximisation at x with gradient g.
double kkt_residual(std::span<const double> x, std::span<const double> g);

/// Runs the given starts followed by cfg.restarts Dirichlet(1) starts drawn
/// from the stream seeded by cfg.seed; each start is refined by multiplicative
/// updates then a projected-gradient polish. Ties keep the earlier start.
AscentResult maximize_on_simplex(const SimplexObjective& obj, const std::vector<std::vector<double>>& starts,
                                 const AscentConfig& cfg);

/// A single local ascent from x (in place); returns the value reached.
double local_ascent(const SimplexObjective& obj, std::vector<double>& x, const AscentConfig& cfg);

}  // namespace lagrangia
