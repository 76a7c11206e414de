#include "lagrangia/search.hpp"

#include <algorithm>
#include <unordered_set>

namespace lagrangia {

std::string_view to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::found: return "found";
    case SearchOutcome::not_found: return "not_found";
    case SearchOutcome::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

class MapSearch {
 public:
  MapSearch(const Hypergraph& pattern, const Hypergraph& target, bool injective, std::uint64_t budget)
      : p_(pattern), t_(target), injective_(injective), budget_(budget) {
    if (target.n() > kMaxMaskGround) throw std::invalid_argument("search target limited to 64 vertices");
    // every subset of a target edge is a feasible partial image
    for (Mask e : target.masks())
      for (Mask sub = e;; sub = (sub - 1) & e) {
        feasible_.insert(sub);
        if (!sub) break;
      }
    incident_.resize(pattern.n() + 1);
    for (std::size_t i = 0; i < pattern.size(); ++i)
      for (Vertex v : pattern.edges()[i]) incident_[v].push_back(i);
    order_vertices();
    image_.assign(pattern.n() + 1, 0);
  }

  SearchResult run() {
    SearchResult res;
    if (injective_ && p_.n() > t_.n()) {
      res.outcome = SearchOutcome::not_found;
    } else if (p_.r() != t_.r()) {
      res.outcome = p_.empty() ? SearchOutcome::found : SearchOutcome::not_found;
    } else if (!p_.empty() && t_.empty()) {
      res.outcome = SearchOutcome::not_found;
    } else {
      const bool ok = extend(0);
      res.nodes = nodes_;
      if (exhausted_) {
        res.outcome = SearchOutcome::inconclusive;
        return res;
      }
      res.outcome = ok ? SearchOutcome::found : SearchOutcome::not_found;
    }
    if (res.found() && t_.n() > 0) {
      // isolated pattern vertices go to the unused target vertices (any vertex for homomorphisms)
      std::vector<Vertex> w(p_.n());
      Mask used = 0;
      for (Vertex v : order_) used |= Mask{1} << (image_[v] - 1);
      Vertex next_free = 1;
      for (Vertex v = 1; v <= p_.n(); ++v) {
        if (image_[v]) {
          w[v - 1] = image_[v];
          continue;
        }
        if (!injective_) {
          w[v - 1] = 1;
          continue;
        }
        while ((used >> (next_free - 1)) & 1) ++next_free;
        used |= Mask{1} << (next_free - 1);
        w[v - 1] = next_free;
      }
      res.witness = std::move(w);
    }
    return res;
  }

 private:
  // Greedy edge-driven order: next vertex has the most edges touching mapped vertices.
  void order_vertices() {
    const int n = p_.n();
    std::vector<char> placed(n + 1, 0);
    std::vector<int> deg(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) deg[v] = static_cast<int>(incident_[v].size());
    std::vector<int> touch(p_.size(), 0);
    while (true) {
      Vertex best = 0;
      long best_score = -1;
      for (Vertex v = 1; v <= n; ++v) {
        if (placed[v] || deg[v] == 0) continue;
        long score = 0;
        for (auto i : incident_[v]) score += static_cast<long>(touch[i]) * touch[i] + 1;
        score = score * 1024 + deg[v];
        if (score > best_score) best = v, best_score = score;
      }
      if (!best) break;
      placed[best] = 1;
      order_.push_back(best);
      for (auto i : incident_[best]) ++touch[i];
    }
  }

  bool consistent(Vertex v) const {
    for (auto i : incident_[v]) {
      Mask img = 0;
      int mapped = 0;
      for (Vertex u : p_.edges()[i]) {
        if (!image_[u]) continue;
        ++mapped;
        img |= Mask{1} << (image_[u] - 1);
      }
      if (popcount(img) != mapped) return false;
      if (!feasible_.count(img)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex y = 1; y <= t_.n(); ++y) {
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      if (injective_ && ((used_ >> (y - 1)) & 1)) continue;
      image_[v] = y;
      if (consistent(v)) {
        used_ |= Mask{1} << (y - 1);
        if (extend(depth + 1)) return true;
        used_ &= ~(Mask{1} << (y - 1));
        if (exhausted_) {
          image_[v] = 0;
          return false;
        }
      }
      image_[v] = 0;
    }
    return false;
  }

  const Hypergraph& p_;
  const Hypergraph& t_;
  bool injective_;
  std::uint64_t budget_;
  std::unordered_set<Mask> feasible_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  Mask used_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

SearchResult has_homomorphism(const Hypergraph& pattern, const Hypergraph& target, const SearchConfig& cfg) {
  return MapSearch(pattern, target, false, cfg.node_budget).run();
}

SearchResult contains_subgraph(const Hypergraph& host, const Hypergraph& pattern, const SearchConfig& cfg) {
  return MapSearch(pattern, host, true, cfg.node_budget).run();
}

}  // namespace lagrangia
