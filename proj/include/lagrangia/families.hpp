#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lagrangia/canonical.hpp"
#include "lagrangia/hypergraph.hpp"
#include "lagrangia/rational.hpp"
#include "lagrangia/wiss.hpp"

namespace lagrangia {

struct EnumConfig {
  int r = 3;
  int max_ground = 0;  // 0 means 2r - 1
  int min_ground = 1;
  bool maximal_only = true;
  bool left_compressed_only = false;
  /// Only r-sets are candidates (r-graphs rather than (<= r)-graphs).
  bool uniform = false;
  std::uint64_t node_budget = 100'000'000;

  int ground() const { return max_ground > 0 ? max_ground : 2 * r - 1; }
};

struct EnumeratedSystem {
  SetSystem g;
  CanonicalKey key;
};

struct EnumResult {
  /// Sorted by (s, key); one representative per isomorphism class and ground size.
  std::vector<EnumeratedSystem> systems;
  bool complete = true;  // false when the node budget ran out
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;  // labelled families reached before dedup
};

/// Intersecting families on [s] using every element of [s], for min_ground <= s <= max_ground.
/// Maximal means no candidate set can be added while staying intersecting.
EnumResult enumerate_intersecting(const EnumConfig& cfg);

struct SweepConfig {
  EnumConfig enumeration;
  int weight_restarts = 60;
  /// Restarts for the Lagrangian of the reconstructed r-graph; negative skips that route.
  int lambda_restarts = 4;
  std::uint64_t seed = 1;
};

struct SweepRecord {
  CanonicalKey key;
  SetSystem g{0, 0, {}};
  int s = 0;
  bool principal = false;
  double value = 0.0;          // the larger of the two routes
  double weight_value = 0.0;   // sup_p w_p(G), free labelling
  double lambda_value = 0.0;   // r! lambda(reconstruct(G, s + 2r)), or 0 when skipped
  std::vector<double> witness_p;
  double witness_inf = 0.0;
  double gap = 0.0;  // L_r - value
};

struct SweepSummary {
  int r = 0;
  std::vector<SweepRecord> records;
  bool complete = true;
  Rational bound;  // L_r - c_r
  std::optional<std::size_t> best_nonprincipal;
  std::optional<std::size_t> best_principal;
  std::optional<std::size_t> best_overall;
  bool bound_holds = true;      // every non-principal value <= L_r - c_r (meaningful for r >= 4)
  bool principal_holds = true;  // every principal value <= L_r + 1e-9
  bool routes_consistent = true;  // lambda route never exceeds the weight route by more than 1e-9
};

/// Per-class weight and Lagrangian audit over the enumerated intersecting classes.
/// `progress`, if given, sees each record as it is produced.
SweepSummary nonprincipal_gap_sweep(const SweepConfig& cfg,
                                    const std::function<void(const SweepRecord&)>& progress = {});

struct FranklParams {
  int r = 0, t = 1, i = 0;
};

/// All subsets of [t + 2i] with size in [t + i, min(r, t + 2i)].
SetSystem frankl_family(const FranklParams& params);

/// All r-subsets of [n] whose trace on [t + 2i] lies in the Frankl family.
Hypergraph g_family(const FranklParams& params, int n);

struct FrontierRow {
  int i = 0;
  SetSystem family{0, 0, {}};
  double value = 0.0;
  std::vector<double> p;
  double p_inf = 0.0;
};

struct Frontier {
  int r = 0, t = 0;
  std::vector<FrontierRow> rows;
  std::size_t best = 0;  // row index of the largest value
};

/// Best weights found (lower bounds) for F(r, t, i), i in [0, r - t].
Frontier conjecture_frontier(int r, int t, const WeightOptConfig& cfg = {});

}  // namespace lagrangia
