#include "lagrangia/canonical.hpp"

#include <algorithm>
#include <sstream>

#include "lagrangia/rng.hpp"

namespace lagrangia {

std::string CanonicalKey::to_string() const {
  std::ostringstream os;
  os << vertices << ':';
  for (std::size_t i = 0; i < edges.size(); ++i) os << (i ? "." : "") << std::hex << edges[i] << std::dec;
  return os.str();
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& k) const noexcept {
  std::uint64_t h = splitmix64(static_cast<std::uint64_t>(k.vertices));
  for (Mask e : k.edges) h = splitmix64(h ^ e);
  return static_cast<std::size_t>(h);
}

namespace {

class Canonizer {
 public:
  Canonizer(int n, std::vector<Mask> edges, const CanonicalLimits& limits)
      : n_(n), edges_(std::move(edges)), limits_(limits), incident_(n), twin_rep_(n) {
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i)
      for (Mask m = edges_[i]; m; m &= m - 1) incident_[__builtin_ctzll(m)].push_back(i);
    find_twins();
  }

  std::vector<Mask> run() {
    std::vector<int> color(n_, 0);
    refine(color);
    search(color);
    return best_;
  }

 private:
  static Mask swap_bits(Mask m, int u, int v) {
    const Mask bu = Mask{1} << u, bv = Mask{1} << v;
    const bool hu = m & bu, hv = m & bv;
    if (hu == hv) return m;
    return m ^ bu ^ bv;
  }

  // u ~ v when the transposition (u v) is an automorphism.
  void find_twins() {
    for (int v = 0; v < n_; ++v) twin_rep_[v] = v;
    for (int v = 0; v < n_; ++v) {
      if (twin_rep_[v] != v) continue;
      for (int u = v + 1; u < n_; ++u) {
        if (twin_rep_[u] != u || incident_[u].size() != incident_[v].size()) continue;
        bool ok = true;
        for (auto i : incident_[v]) {
          const Mask e = edges_[i];
          if ((e >> u) & 1) continue;
          if (!std::binary_search(edges_.begin(), edges_.end(), swap_bits(e, u, v))) {
            ok = false;
            break;
          }
        }
        if (ok) twin_rep_[u] = v;
      }
    }
  }

  static int count_colors(const std::vector<int>& color) {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  }

  void refine(std::vector<int>& color) const {
    int classes = count_colors(color);
    std::vector<std::uint64_t> edge_hash(edges_.size());
    std::vector<int> scratch;
    std::vector<std::uint64_t> hs;
    std::vector<std::pair<std::pair<int, std::uint64_t>, int>> sig(n_);
    while (true) {
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        scratch.clear();
        for (Mask m = edges_[i]; m; m &= m - 1) scratch.push_back(color[__builtin_ctzll(m)]);
        std::sort(scratch.begin(), scratch.end());
        std::uint64_t h = splitmix64(scratch.size());
        for (int c : scratch) h = splitmix64(h ^ static_cast<std::uint64_t>(c));
        edge_hash[i] = h;
      }
      for (int v = 0; v < n_; ++v) {
        hs.clear();
        for (auto i : incident_[v]) hs.push_back(edge_hash[i]);
        std::sort(hs.begin(), hs.end());
        std::uint64_t h = splitmix64(hs.size() + 0x51ed);
        for (auto x : hs) h = splitmix64(h ^ x);
        sig[v] = {{color[v], h}, v};
      }
      std::sort(sig.begin(), sig.end());
      int next = -1;
      for (int i = 0; i < n_; ++i) {
        if (i == 0 || sig[i].first != sig[i - 1].first) ++next;
        color[sig[i].second] = next;
      }
      if (next + 1 == classes) return;
      classes = next + 1;
    }
  }

  void search(const std::vector<int>& color) {
    const int classes = count_colors(color);
    if (classes == n_) {
      if (++leaves_ > limits_.max_leaves) throw TooLarge("canonical labelling exceeded its leaf budget");
      leaf(color);
      return;
    }
    std::vector<int> size(classes, 0);
    for (int c : color) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;
    std::vector<int> cell;
    for (int v = 0; v < n_; ++v)
      if (color[v] == target) cell.push_back(v);
    for (int v : cell) {
      const bool shadowed = std::any_of(cell.begin(), cell.end(), [&](int u) { return u < v && twin_rep_[u] == twin_rep_[v]; });
      if (shadowed) continue;
      std::vector<int> next(color);
      for (int w = 0; w < n_; ++w) {
        if (color[w] > target) ++next[w];
        else if (color[w] == target && w != v) next[w] = target + 1;
      }
      refine(next);
      search(next);
    }
  }

  void leaf(const std::vector<int>& label) {
    scratch_.clear();
    for (Mask e : edges_) {
      Mask m = 0;
      for (Mask b = e; b; b &= b - 1) m |= Mask{1} << label[__builtin_ctzll(b)];
      scratch_.push_back(m);
    }
    std::sort(scratch_.begin(), scratch_.end());
    if (!have_best_ || scratch_ < best_) {
      best_ = scratch_;
      have_best_ = true;
    }
  }

  int n_;
  std::vector<Mask> edges_;
  CanonicalLimits limits_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<int> twin_rep_;
  std::vector<Mask> best_;
  std::vector<Mask> scratch_;
  bool have_best_ = false;
  std::uint64_t leaves_ = 0;
};

}  // namespace

CanonicalKey canonical_key(int n, const std::vector<Mask>& edges, const CanonicalLimits& limits) {
  Mask support = 0;
  for (Mask e : edges) support |= e;
  if (n < kMaxMaskGround && (support >> n)) throw std::invalid_argument("edge outside the ground set");
  // compact away isolated vertices
  std::vector<int> relabel(kMaxMaskGround, -1);
  int k = 0;
  for (int v = 0; v < kMaxMaskGround; ++v)
    if ((support >> v) & 1) relabel[v] = k++;
  if (k > limits.max_vertices)
    throw TooLarge("canonical labelling limited to " + std::to_string(limits.max_vertices) + " non-isolated vertices");
  std::vector<Mask> compact;
  compact.reserve(edges.size());
  for (Mask e : edges) {
    Mask m = 0;
    for (Mask b = e; b; b &= b - 1) m |= Mask{1} << relabel[__builtin_ctzll(b)];
    compact.push_back(m);
  }
  CanonicalKey key;
  key.vertices = k;
  key.edges = Canonizer(k, std::move(compact), limits).run();
  return key;
}

CanonicalKey canonical_key(const Hypergraph& f, const CanonicalLimits& limits) {
  const auto live = f.non_isolated();
  if (static_cast<int>(live.size()) > limits.max_vertices)
    throw TooLarge("canonical labelling limited to " + std::to_string(limits.max_vertices) + " non-isolated vertices");
  return canonical_key(live.size(), induced(f, live).masks(), limits);
}

CanonicalKey canonical_key(const SetSystem& g, const CanonicalLimits& limits) {
  return canonical_key(g.s(), g.edges(), limits);
}

bool is_isomorphic(const Hypergraph& f, const Hypergraph& g, const CanonicalLimits& limits) {
  if (f.r() != g.r() || f.size() != g.size()) return false;
  return canonical_key(f, limits) == canonical_key(g, limits);
}

bool is_isomorphic(const SetSystem& f, const SetSystem& g, const CanonicalLimits& limits) {
  if (f.size() != g.size()) return false;
  return canonical_key(f, limits) == canonical_key(g, limits);
}

}  // namespace lagrangia
