#include "lagrangia/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "lagrangia/lagrangian.hpp"
#include "lagrangia/rng.hpp"
#include "lagrangia/verify.hpp"

namespace lagrangia {

namespace {

// Backtracking over candidate sets of [s] in (size, colex) order. Each candidate is
// decided in (1) or out (0); forced consequences are propagated through a trail.
class FamilySearch {
 public:
  FamilySearch(int s, const EnumConfig& cfg, std::uint64_t budget) : s_(s), cfg_(cfg), budget_(budget) {
    const int lo = cfg.uniform ? cfg.r : 1;
    const int hi = std::min(cfg.r, s);
    index_.assign(std::size_t{1} << s, -1);
    for (int k = lo; k <= hi; ++k)
      for (Mask m = 1; m < (Mask{1} << s); ++m)
        if (popcount(m) == k) {
          index_[m] = static_cast<int>(cand_.size());
          cand_.push_back(m);
        }
    const std::size_t c = cand_.size();
    disjoint_.resize(c);
    supers_.resize(c);
    subs_.resize(c);
    comp_.assign(c, -1);
    const Mask ground = ground_mask(s);
    for (std::size_t i = 0; i < c; ++i) {
      const Mask a = cand_[i];
      for (std::size_t j = 0; j < c; ++j)
        if (!(a & cand_[j])) disjoint_[i].push_back(static_cast<int>(j));
      for (int v = 0; v < s; ++v) {
        const Mask bit = Mask{1} << v;
        if (a & bit) {
          if (index_[a & ~bit] >= 0) subs_[i].push_back(index_[a & ~bit]);
        } else if (index_[a | bit] >= 0) {
          supers_[i].push_back(index_[a | bit]);
        }
      }
      comp_[i] = index_[ground & ~a];
    }
    state_.assign(c, -1);
  }

  template <class Leaf>
  void run(Leaf&& leaf) {
    descend(0, leaf);
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool up_closed() const { return cfg_.maximal_only && !cfg_.uniform; }

  bool assign(int i, int v) {
    if (state_[i] == v) return true;
    if (state_[i] != -1) return false;
    state_[i] = static_cast<signed char>(v);
    trail_.push_back(i);
    if (v == 1) {
      for (int j : disjoint_[i])
        if (!assign(j, 0)) return false;
      if (up_closed())
        for (int j : supers_[i])
          if (!assign(j, 1)) return false;
    } else if (up_closed()) {
      for (int j : subs_[i])
        if (!assign(j, 0)) return false;
      // a maximal family excludes A only through a member inside the complement
      if (comp_[i] >= 0 && !assign(comp_[i], 1)) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      state_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  template <class Leaf>
  void descend(std::size_t pos, Leaf& leaf) {
    while (pos < cand_.size() && state_[pos] != -1) ++pos;
    if (pos == cand_.size()) {
      finish(leaf);
      return;
    }
    for (int v : {1, 0}) {
      if (exhausted_) return;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return;
      }
      const std::size_t mark = trail_.size();
      if (assign(static_cast<int>(pos), v)) descend(pos + 1, leaf);
      undo(mark);
    }
  }

  template <class Leaf>
  void finish(Leaf& leaf) {
    std::vector<Mask> in;
    Mask support = 0;
    for (std::size_t i = 0; i < cand_.size(); ++i)
      if (state_[i] == 1) {
        in.push_back(cand_[i]);
        support |= cand_[i];
      }
    if (support != ground_mask(s_)) return;
    if (cfg_.maximal_only) {
      for (std::size_t i = 0; i < cand_.size(); ++i) {
        if (state_[i] == 1) continue;
        const bool blocked = std::any_of(in.begin(), in.end(), [&](Mask b) { return !(b & cand_[i]); });
        if (!blocked) return;
      }
    }
    leaf(std::move(in));
  }

  int s_;
  const EnumConfig& cfg_;
  std::uint64_t budget_;
  std::vector<Mask> cand_;
  std::vector<int> index_;
  std::vector<std::vector<int>> disjoint_, supers_, subs_;
  std::vector<int> comp_;
  std::vector<signed char> state_;
  std::vector<int> trail_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

EnumResult enumerate_intersecting(const EnumConfig& cfg) {
  const int ground = cfg.ground();
  if (cfg.r < 1) throw std::invalid_argument("r must be positive");
  if (ground > 13) throw std::invalid_argument("ground sets above 13 elements are not enumerated");
  EnumResult res;
  for (int s = std::max(1, cfg.min_ground); s <= ground; ++s) {
    if (cfg.uniform && s < cfg.r) continue;
    std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
    std::vector<EnumeratedSystem> found;
    FamilySearch search(s, cfg, cfg.node_budget - std::min(cfg.node_budget, res.nodes));
    search.run([&](std::vector<Mask> edges) {
      ++res.leaves;
      SetSystem g(s, cfg.r, std::move(edges));
      if (cfg.left_compressed_only && !is_left_compressed(g)) return;
      auto key = canonical_key(g);
      if (!seen.insert(key).second) return;
      found.push_back({std::move(g), std::move(key)});
    });
    res.nodes += search.nodes();
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
    for (auto& f : found) res.systems.push_back(std::move(f));
    if (search.exhausted()) {
      res.complete = false;
      break;
    }
  }
  return res;
}

SweepSummary nonprincipal_gap_sweep(const SweepConfig& cfg, const std::function<void(const SweepRecord&)>& progress) {
  const int r = cfg.enumeration.r;
  if (r < 2) throw std::invalid_argument("sweep needs r >= 2");
  const auto k = verify::constants(r);
  SweepSummary sum;
  sum.r = r;
  sum.bound = k.L - k.c_r;
  const auto families = enumerate_intersecting(cfg.enumeration);
  sum.complete = families.complete;
  const double L = k.L.get_d();
  const double rfact = factorial(r).get_d();
  for (std::size_t idx = 0; idx < families.systems.size(); ++idx) {
    const auto& fam = families.systems[idx];
    SweepRecord rec;
    rec.key = fam.key;
    rec.g = fam.g;
    rec.s = fam.g.s();
    rec.principal = is_principal(fam.g).has_value();
    WeightOptConfig wcfg;
    wcfg.restarts = cfg.weight_restarts;
    wcfg.seed = stream_seed(cfg.seed, idx, 1);
    wcfg.ordered = false;
    const auto opt = optimize_weight(fam.g, r, wcfg);
    rec.weight_value = opt.value;
    rec.witness_p = opt.p;
    rec.witness_inf = opt.p_inf;
    if (cfg.lambda_restarts >= 0) {
      const auto h = reconstruct(fam.g, r, rec.s + 2 * r);
      LagrangianConfig lcfg;
      lcfg.restarts = cfg.lambda_restarts;
      lcfg.seed = stream_seed(cfg.seed, idx, 2);
      lcfg.structured_starts = 8;
      rec.lambda_value = rfact * maximize(h, lcfg).value;
      if (rec.lambda_value > rec.weight_value + 1e-9) sum.routes_consistent = false;
    }
    rec.value = std::max(rec.weight_value, rec.lambda_value);
    rec.gap = L - rec.value;
    if (rec.principal) {
      if (rec.value > L + 1e-9) sum.principal_holds = false;
    } else if (from_double(rec.value) > sum.bound) {
      sum.bound_holds = false;
    }
    const double val = rec.value;
    const bool principal = rec.principal;
    auto better = [&](const std::optional<std::size_t>& cur) { return !cur || val > sum.records[*cur].value; };
    const std::size_t at = sum.records.size();
    const bool best_all = better(sum.best_overall);
    auto& slot = principal ? sum.best_principal : sum.best_nonprincipal;
    const bool best_kind = better(slot);
    if (progress) progress(rec);
    sum.records.push_back(std::move(rec));
    if (best_all) sum.best_overall = at;
    if (best_kind) slot = at;
  }
  return sum;
}

SetSystem frankl_family(const FranklParams& p) {
  if (p.t < 1 || p.i < 0 || p.r < p.t + p.i) throw std::invalid_argument("need t >= 1, i >= 0, r >= t + i");
  const int s = p.t + 2 * p.i;
  if (s > kMaxMaskGround) throw std::invalid_argument("ground set too large");
  const int lo = p.t + p.i, hi = std::min(p.r, s);
  std::vector<Mask> edges;
  for (Mask m = 1; m <= ground_mask(s); ++m) {
    const int k = popcount(m);
    if (k >= lo && k <= hi) edges.push_back(m);
    if (m == ground_mask(s)) break;
  }
  return SetSystem(s, p.r, std::move(edges));
}

Hypergraph g_family(const FranklParams& p, int n) {
  const SetSystem f = frankl_family(p);
  const int s = f.s();
  if (n < s) throw std::invalid_argument("g_family needs n >= t + 2i");
  std::vector<Edge> edges;
  for (Mask t : f.edges()) {
    const int need = p.r - popcount(t);
    if (need > n - s) continue;
    const Edge base = from_mask(t);
    std::vector<Vertex> pick(need);
    for (int a = 0; a < need; ++a) pick[a] = s + 1 + a;
    while (true) {
      Edge e(base);
      e.insert(e.end(), pick.begin(), pick.end());
      edges.push_back(std::move(e));
      int a = need - 1;
      while (a >= 0 && pick[a] == n - (need - 1 - a)) --a;
      if (a < 0) break;
      ++pick[a];
      for (int b = a + 1; b < need; ++b) pick[b] = pick[b - 1] + 1;
    }
  }
  return Hypergraph(p.r, n, std::move(edges));
}

Frontier conjecture_frontier(int r, int t, const WeightOptConfig& cfg) {
  if (t < 1 || r < t) throw std::invalid_argument("need r >= t >= 1");
  if (r > 8) throw std::invalid_argument("frontier limited to r <= 8");
  Frontier out;
  out.r = r;
  out.t = t;
  for (int i = 0; i <= r - t; ++i) {
    FrontierRow row;
    row.i = i;
    row.family = frankl_family({r, t, i});
    if (!is_t_intersecting(row.family, t)) throw std::logic_error("Frankl family is not t-intersecting");
    WeightOptConfig c = cfg;
    c.seed = stream_seed(cfg.seed, static_cast<std::uint64_t>(i), 3);
    const auto opt = optimize_weight(row.family, r, c);
    row.value = opt.value;
    row.p = opt.p;
    row.p_inf = opt.p_inf;
    if (row.value > (out.rows.empty() ? -1.0 : out.rows[out.best].value)) out.best = out.rows.size();
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace lagrangia
