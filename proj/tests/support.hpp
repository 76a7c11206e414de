#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "lagrangia/hypergraph.hpp"
#include "lagrangia/rational.hpp"
#include "lagrangia/rng.hpp"
#include "lagrangia/wiss.hpp"

namespace lagrangia::testing {

/// Greedy random intersecting family of non-empty (<= r)-subsets of [s].
inline SetSystem random_intersecting(Rng& rng, int r, int s, int attempts = 40) {
  std::vector<Mask> chosen;
  for (int t = 0; t < attempts; ++t) {
    Mask m = 0;
    const int k = 1 + static_cast<int>(rng.below(std::min(r, s)));
    while (popcount(m) < k) m |= Mask{1} << rng.below(s);
    if (std::find(chosen.begin(), chosen.end(), m) != chosen.end()) continue;
    if (std::all_of(chosen.begin(), chosen.end(), [&](Mask x) { return (x & m) != 0; })) chosen.push_back(m);
  }
  return SetSystem(s, r, chosen);
}

/// Rational distribution on [s] u {inf}, non-increasing on [s], every weight positive.
/// With inf_largest, p_inf >= p(1).
inline ProbDist random_rational_dist(Rng& rng, int s, bool inf_largest = false) {
  std::vector<long> w(s + 1);
  for (auto& x : w) x = 1 + static_cast<long>(rng.below(50));
  std::sort(w.begin(), w.end(), std::greater<>());
  long total = 0;
  for (long x : w) total += x;
  std::vector<Rational> p;
  // inf_largest takes the top weight for p_inf; otherwise p_inf is the smallest
  const int first = inf_largest ? 1 : 0;
  for (int i = 0; i < s; ++i) p.emplace_back(w[first + i], total);
  for (auto& q : p) q.canonicalize();
  return ProbDist::from_rationals(p);
}

/// Greedy random intersecting r-graph on [n].
inline Hypergraph random_intersecting_graph(Rng& rng, int n, int r, int attempts = 60) {
  std::vector<Edge> edges;
  std::vector<Mask> masks;
  for (int t = 0; t < attempts; ++t) {
    Mask m = 0;
    while (popcount(m) < r) m |= Mask{1} << rng.below(n);
    if (std::find(masks.begin(), masks.end(), m) != masks.end()) continue;
    if (std::all_of(masks.begin(), masks.end(), [&](Mask x) { return (x & m) != 0; })) {
      masks.push_back(m);
      edges.push_back(from_mask(m));
    }
  }
  return Hypergraph(r, n, edges);
}

/// Each r-subset of [n] kept with probability `density`.
inline Hypergraph random_graph(Rng& rng, int n, int r, double density) {
  std::vector<Edge> edges;
  for (Mask m = 1; m <= ground_mask(n); ++m)
    if (popcount(m) == r && rng.uniform() < density) edges.push_back(from_mask(m));
  return Hypergraph(r, n, edges);
}

/// sum over every sequence in ([s] u {inf})^r whose [s]-part is repeat-free and equals e.
inline Rational brute_edge_weight(Mask e, int r, const ProbDist& p) {
  const int s = p.s();
  std::vector<int> seq(r, 0);  // 0 stands for inf
  Rational total = 0;
  while (true) {
    Mask seen = 0;
    bool ok = true;
    Rational prob = 1;
    for (int x : seq) {
      if (x == 0) {
        prob *= p.exact_inf();
        continue;
      }
      const Mask bit = Mask{1} << (x - 1);
      if (seen & bit) ok = false;
      seen |= bit;
      prob *= p.exact_at(x);
    }
    if (ok && seen == e) total += prob;
    int k = 0;
    while (k < r && seq[k] == s) seq[k++] = 0;
    if (k == r) return total;
    ++seq[k];
  }
}

}  // namespace lagrangia::testing
