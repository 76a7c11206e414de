#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "lagrangia/canonical.hpp"
#include "lagrangia/families.hpp"
#include "lagrangia/hypergraph.hpp"
#include "lagrangia/verify.hpp"

using namespace lagrangia;

namespace {

// Every subfamily of the candidate sets, filtered by definition.
std::set<std::pair<int, CanonicalKey>> brute_classes(int r, int max_ground, bool maximal, bool uniform) {
  std::set<std::pair<int, CanonicalKey>> out;
  for (int s = 1; s <= max_ground; ++s) {
    std::vector<Mask> cand;
    for (Mask m = 1; m <= ground_mask(s); ++m)
      if (popcount(m) <= r && (!uniform || popcount(m) == r)) cand.push_back(m);
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << cand.size()); ++pick) {
      std::vector<Mask> g;
      Mask support = 0;
      for (std::size_t k = 0; k < cand.size(); ++k)
        if (pick >> k & 1) {
          g.push_back(cand[k]);
          support |= cand[k];
        }
      if (support != ground_mask(s)) continue;
      bool inter = true;
      for (Mask a : g)
        for (Mask b : g) inter = inter && (a & b);
      if (!inter) continue;
      if (maximal) {
        bool extendable = false;
        for (Mask c : cand) {
          if (std::find(g.begin(), g.end(), c) != g.end()) continue;
          bool meets = true;
          for (Mask a : g) meets = meets && (a & c);
          extendable = extendable || meets;
        }
        if (extendable) continue;
      }
      out.insert({s, canonical_key(SetSystem(s, r, g))});
    }
  }
  return out;
}

std::set<std::pair<int, CanonicalKey>> enumerated(const EnumConfig& cfg) {
  std::set<std::pair<int, CanonicalKey>> out;
  const auto res = enumerate_intersecting(cfg);
  CHECK(res.complete);
  for (const auto& e : res.systems) {
    CHECK(is_intersecting(e.g));
    CHECK(e.g.support() == ground_mask(e.g.s()));
    CHECK(out.insert({e.g.s(), e.key}).second);
  }
  return out;
}

}  // namespace

TEST_CASE("graphs: the triangle and the edge") {
  EnumConfig cfg;
  cfg.r = 2;
  cfg.max_ground = 3;
  cfg.uniform = true;
  const auto res = enumerate_intersecting(cfg);
  CHECK(res.systems.size() == 2);
  cfg.max_ground = 5;
  CHECK(enumerate_intersecting(cfg).systems.size() == 4);
}

TEST_CASE("enumeration agrees with exhaustive filtering") {
  for (int r = 1; r <= 3; ++r)
    for (bool maximal : {true, false})
      for (bool uniform : {true, false}) {
        const int ground = 4;
        EnumConfig cfg;
        cfg.r = r;
        cfg.max_ground = ground;
        cfg.maximal_only = maximal;
        cfg.uniform = uniform;
        CAPTURE(r);
        CAPTURE(maximal);
        CAPTURE(uniform);
        CHECK(enumerated(cfg) == brute_classes(r, ground, maximal, uniform));
      }
}

TEST_CASE("class counts for r = 3 up to five elements") {
  EnumConfig cfg;
  cfg.r = 3;
  const auto res = enumerate_intersecting(cfg);
  std::vector<int> per(6, 0);
  for (const auto& e : res.systems) ++per[e.g.s()];
  CHECK(per == std::vector<int>{0, 1, 1, 2, 3, 6});
}

TEST_CASE("compressed filter and budgets") {
  EnumConfig cfg;
  cfg.r = 3;
  cfg.left_compressed_only = true;
  for (const auto& e : enumerate_intersecting(cfg).systems) CHECK(is_left_compressed(e.g));
  cfg.left_compressed_only = false;
  cfg.node_budget = 10;
  CHECK_FALSE(enumerate_intersecting(cfg).complete);
  cfg.max_ground = 14;
  CHECK_THROWS(enumerate_intersecting(cfg));
}

TEST_CASE("r = 3 sweep is won by K_5") {
  SweepConfig cfg;
  cfg.enumeration.r = 3;
  const auto sum = nonprincipal_gap_sweep(cfg);
  REQUIRE(sum.best_overall);
  const auto& best = sum.records[*sum.best_overall];
  CHECK_FALSE(best.principal);
  CHECK(best.value == doctest::Approx(0.48).epsilon(1e-9));
  CHECK(is_isomorphic(best.g, restrict(complete(5, 3), std::vector<Vertex>{1, 2, 3, 4, 5})));
  CHECK(sum.principal_holds);
  CHECK(sum.routes_consistent);
  CHECK_FALSE(sum.bound_holds);  // 0.48 > L_3
  REQUIRE(sum.best_principal);
  CHECK(sum.records[*sum.best_principal].value == doctest::Approx(4.0 / 9).epsilon(1e-9));
}

TEST_CASE("sweeps are deterministic") {
  SweepConfig cfg;
  cfg.enumeration.r = 3;
  cfg.enumeration.max_ground = 4;
  const auto a = nonprincipal_gap_sweep(cfg), b = nonprincipal_gap_sweep(cfg);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].key == b.records[i].key);
    CHECK(a.records[i].value == b.records[i].value);
    CHECK(a.records[i].witness_p == b.records[i].witness_p);
  }
}

TEST_CASE("complete-intersection families") {
  const auto f0 = frankl_family({4, 1, 0});
  CHECK(f0.edges() == std::vector<Mask>{1});
  CHECK(g_family({4, 1, 0}, 9) == principal_star(9, 4));
  const auto f = frankl_family({3, 1, 2});
  CHECK(f.s() == 5);
  CHECK(f.size() == 10);
  CHECK(g_family({3, 1, 2}, 7).size() == 10);
  for (int r = 2; r <= 5; ++r)
    for (int t = 1; t <= r; ++t)
      for (int i = 0; i <= r - t; ++i) CHECK(is_t_intersecting(frankl_family({r, t, i}), t));
  // traces of G(r, t, i, n) on [t + 2i] are exactly the family
  const auto g = g_family({4, 2, 1}, 9);
  std::vector<Vertex> head{1, 2, 3, 4};
  CHECK(restrict(g, head) == frankl_family({4, 2, 1}));
}

TEST_CASE("frontier") {
  WeightOptConfig cfg;
  cfg.restarts = 60;
  const auto fr = conjecture_frontier(3, 1, cfg);
  REQUIRE(fr.rows.size() == 3);
  CHECK(fr.rows[fr.best].i == 2);
  CHECK(fr.rows[fr.best].value == doctest::Approx(0.48).epsilon(1e-9));
  CHECK(fr.rows[0].value == doctest::Approx(4.0 / 9).epsilon(1e-9));
  const auto full = conjecture_frontier(4, 4, cfg);
  REQUIRE(full.rows.size() == 1);
  CHECK(full.rows[0].value == doctest::Approx(24.0 / 256).epsilon(1e-9));
  CHECK_THROWS(conjecture_frontier(9, 1, cfg));
}
