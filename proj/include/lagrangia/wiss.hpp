#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagrangia/hypergraph.hpp"
#include "lagrangia/rational.hpp"
#include "lagrangia/rng.hpp"

namespace lagrangia {

/// Probability weights on [s] u {inf}, non-increasing on [s]. Always carries
/// doubles; carries exact rationals too when built from rationals.
class ProbDist {
 public:
  /// p_inf = 1 - sum(p); fails if p increases anywhere or p_inf < -1e-12.
  static ProbDist from_doubles(std::vector<double> p);
  static ProbDist from_rationals(std::vector<Rational> p);
  /// As from_doubles but without the ordering check.
  static ProbDist unordered(std::vector<double> p);

  int s() const { return static_cast<int>(p_.size()); }
  double at(int i) const { return p_[i - 1]; }  // 1-based
  double inf() const { return p_inf_; }
  const std::vector<double>& weights() const { return p_; }

  bool exact() const { return exact_; }
  const Rational& exact_at(int i) const;
  const Rational& exact_inf() const;

  /// The drop-last distribution: p(s) is moved onto p_inf.
  ProbDist without_last() const;

 private:
  std::vector<double> p_;
  double p_inf_ = 1.0;
  bool exact_ = false;
  std::vector<Rational> q_;
  Rational q_inf_;
};

/// A weighted intersecting set system (G, s, p).
struct Wiss {
  SetSystem g;
  int r;
  ProbDist p;

  /// Validates: g intersecting over [p.s()], edges non-empty and of size <= r.
  Wiss(SetSystem g, int r, ProbDist p);
  int s() const { return g.s(); }
};

struct WeightReport {
  double total = 0.0;
  std::vector<std::pair<Mask, double>> per_edge;
  bool rational_mode = false;
  std::optional<Rational> exact_total;
  std::vector<Rational> exact_per_edge;
};

/// r!/(r-|e|)! * p_inf^(r-|e|) * prod_{i in e} p(i).
double weight_edge(Mask e, int r, const ProbDist& p);
Rational weight_edge_exact(Mask e, int r, const ProbDist& p);

/// Sum of edge weights of any (<= r)-system, exact when p is exact.
WeightReport weight_of(const SetSystem& g, int r, const ProbDist& p);
WeightReport weight_system(const Wiss& w);

/// r independent draws from p; element 0 stands for inf.
std::vector<int> sample_multiset(int r, const ProbDist& p, Rng& rng);
std::vector<int> sample_multiset(int r, const ProbDist& p, std::uint64_t seed);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
};

/// Fraction of samples whose restriction to [s] is repeat-free and equal to an edge.
/// Samples are drawn in fixed-size chunks, each from its own stream of `seed`.
MonteCarloEstimate monte_carlo_weight(const Wiss& w, std::uint64_t samples, std::uint64_t seed);

/// The shift R_ij applied to every edge, 1 <= i < j <= s.
SetSystem compress(const SetSystem& g, int i, int j);
bool is_left_compressed(const SetSystem& g);

/// Traces {e n S}, S relabelled to 1..|S| in increasing order.
SetSystem restrict(const Hypergraph& f, std::span<const Vertex> S);
/// All r-subsets of [n] whose trace on [s] lies in gd; n >= s + r, empty trace rejected.
Hypergraph reconstruct(const SetSystem& gd, int r, int n);

class NotIntersectingAfterDeletion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// G - s on [s-1] with p(s) moved onto p_inf.
Wiss drop_last(const Wiss& w);

struct ContributionCheck {
  Rational lhs;  // weight of e - {s} under the drop-last distribution
  Rational rhs;  // twice the weight of e
  bool holds = false;
  bool precondition_met = false;  // s in e and p_inf >= p(s) > 0
};

/// e must contain s = p.s(); p must be exact.
ContributionCheck contribution_check(Mask e, int r, const ProbDist& p);

struct Case1Split {
  SetSystem g0, h1, h2;
};

/// Separates the pairs of edges meeting exactly in {s}; H1 receives the
/// colex-smaller edge of each pair. Throws if an edge has two such partners or a
/// pair fails to cover [s].
Case1Split case1_split(const Wiss& w);

struct WeightOptConfig {
  int restarts = 500;
  std::uint64_t seed = 1;
  int max_iters = 5000;
  /// Restrict to p(1) >= ... >= p(s); otherwise the maximum over all relabellings.
  bool ordered = true;
};

struct WeightOptimum {
  std::vector<double> p;  // weights on [s], index i-1
  double p_inf = 0.0;
  double value = 0.0;
  bool converged = false;
  int starts_used = 0;
};

/// Multistart ascent of w_p(G) over p; the value is a lower bound on the supremum.
WeightOptimum optimize_weight(const SetSystem& g, int r, const WeightOptConfig& cfg = {});

/// sum over edges of the sum of their elements: the tie-break comparator quantity.
long index_sum(const SetSystem& g);

// text format: "r s m", then the s weights, then m edge lines in colex order
std::string to_text(const Wiss& w);
Wiss parse_wiss(const std::string& text);

}  // namespace lagrangia
