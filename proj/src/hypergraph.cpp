#include "lagrangia/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace lagrangia {

bool colex_less(const Edge& a, const Edge& b) {
  auto ia = a.rbegin(), ib = b.rbegin();
  for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return a.size() < b.size();
}

Mask to_mask(std::span<const Vertex> vertices) {
  Mask m = 0;
  for (Vertex v : vertices) {
    if (v < 1 || v > kMaxMaskGround) throw std::invalid_argument("vertex out of mask range");
    m |= Mask{1} << (v - 1);
  }
  return m;
}

Edge from_mask(Mask m) {
  Edge e;
  while (m) {
    e.push_back(__builtin_ctzll(m) + 1);
    m &= m - 1;
  }
  return e;
}

// --- Hypergraph ---------------------------------------------------------------

Hypergraph::Hypergraph(int r, int n, std::vector<Edge> edges) : r_(r), n_(n), edges_(std::move(edges)) {
  if (r < 1) throw std::invalid_argument("uniformity must be positive");
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != r) throw std::invalid_argument("edge size differs from r");
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw std::invalid_argument("edge has a repeated vertex");
    if (e.front() < 1 || e.back() > n) throw std::invalid_argument("edge vertex outside [n]");
  }
  std::sort(edges_.begin(), edges_.end(), colex_less);
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
}

bool Hypergraph::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e, colex_less);
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& e : edges_)
    for (Vertex v : e) ++deg[v - 1];
  return deg;
}

std::vector<Vertex> Hypergraph::non_isolated() const {
  std::vector<Vertex> out;
  const auto deg = degrees();
  for (int v = 1; v <= n_; ++v)
    if (deg[v - 1] > 0) out.push_back(v);
  return out;
}

std::vector<Mask> Hypergraph::masks() const {
  if (n_ > kMaxMaskGround) throw std::invalid_argument("hypergraph too large for mask form");
  std::vector<Mask> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(to_mask(e));
  return out;
}

// --- SetSystem ----------------------------------------------------------------

SetSystem::SetSystem(int s, int r_cap, std::vector<Mask> edges) : s_(s), r_cap_(r_cap), edges_(std::move(edges)) {
  if (s < 0 || s > kMaxMaskGround) throw std::invalid_argument("ground set size out of range");
  if (r_cap < 0) throw std::invalid_argument("negative edge-size cap");
  const Mask ground = ground_mask(s);
  for (Mask e : edges_) {
    if (e & ~ground) throw std::invalid_argument("edge not contained in the ground set");
    if (popcount(e) > r_cap) throw std::invalid_argument("edge larger than the size cap");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
}

bool SetSystem::contains(Mask e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

Mask SetSystem::support() const {
  Mask m = 0;
  for (Mask e : edges_) m |= e;
  return m;
}

std::vector<Edge> SetSystem::edge_lists() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (Mask e : edges_) out.push_back(from_mask(e));
  return out;
}

// --- structure ------------------------------------------------------------------

namespace {

void check_vertex_set(std::span<const Vertex> I, int n) {
  for (Vertex v : I)
    if (v < 1 || v > n) throw std::invalid_argument("vertex set not contained in [n]");
}

}  // namespace

SetSystem link(const Hypergraph& f, std::span<const Vertex> I) {
  check_vertex_set(I, f.n());
  if (f.n() > kMaxMaskGround) throw std::invalid_argument("link requires n <= 64");
  const Mask im = to_mask(I);
  std::vector<Mask> out;
  for (const auto& e : f.edges()) {
    const Mask em = to_mask(e);
    if ((em & im) == im) out.push_back(em & ~im);
  }
  const int cap = std::max(0, f.r() - popcount(im));
  return SetSystem(f.n(), cap, std::move(out));
}

Hypergraph induced(const Hypergraph& f, std::span<const Vertex> A) {
  check_vertex_set(A, f.n());
  std::vector<Vertex> sorted(A.begin(), A.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> relabel(f.n() + 1, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) relabel[sorted[i]] = static_cast<int>(i) + 1;
  std::vector<Edge> out;
  for (const auto& e : f.edges()) {
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return relabel[v] != 0; })) {
      Edge g;
      for (Vertex v : e) g.push_back(relabel[v]);
      out.push_back(std::move(g));
    }
  }
  return Hypergraph(f.r(), static_cast<int>(sorted.size()), std::move(out));
}

namespace {

bool edges_meet(const Edge& a, const Edge& b) {
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

}  // namespace

bool is_intersecting(const Hypergraph& f) {
  const auto& es = f.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (!edges_meet(es[i], es[j])) return false;
  return true;
}

bool is_t_intersecting(const SetSystem& g, int t) {
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (popcount(es[i] & es[j]) < t) return false;
  return true;
}

bool is_intersecting(const SetSystem& g) { return is_t_intersecting(g, 1); }

std::optional<Vertex> is_principal(const Hypergraph& f) {
  if (f.empty()) return 1;
  Edge common = f.edges().front();
  for (const auto& e : f.edges()) {
    Edge next;
    std::set_intersection(common.begin(), common.end(), e.begin(), e.end(), std::back_inserter(next));
    common.swap(next);
    if (common.empty()) return std::nullopt;
  }
  return common.front();
}

std::optional<Vertex> is_principal(const SetSystem& g) {
  if (g.empty()) return 1;
  Mask common = ground_mask(g.s());
  for (Mask e : g.edges()) common &= e;
  if (!common) return std::nullopt;
  return __builtin_ctzll(common) + 1;
}

bool is_principal_at_one(const SetSystem& g) {
  return std::all_of(g.edges().begin(), g.edges().end(), [](Mask e) { return e & 1; });
}

std::vector<std::pair<Vertex, Vertex>> uncovered_pairs(const Hypergraph& f) {
  const int n = f.n();
  std::vector<char> covered(static_cast<std::size_t>(n + 1) * (n + 1), 0);
  for (const auto& e : f.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) covered[e[i] * (n + 1) + e[j]] = 1;
  const auto deg = f.degrees();
  std::vector<std::pair<Vertex, Vertex>> out;
  // colex order on pairs: by larger element, then smaller
  for (Vertex v = 1; v <= n; ++v) {
    if (!deg[v - 1]) continue;
    for (Vertex u = 1; u < v; ++u)
      if (deg[u - 1] && !covered[u * (n + 1) + v]) out.emplace_back(u, v);
  }
  return out;
}

bool covers_pairs(const Hypergraph& f) { return uncovered_pairs(f).empty(); }

Hypergraph extension(const Hypergraph& f) {
  if (f.r() < 2) throw std::invalid_argument("extension needs r >= 2");
  const auto pairs = uncovered_pairs(f);
  const int fresh = f.r() - 2;
  std::vector<Edge> edges = f.edges();
  int next = f.n() + 1;
  for (const auto& [u, v] : pairs) {
    Edge e{u, v};
    for (int i = 0; i < fresh; ++i) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return Hypergraph(f.r(), next - 1, std::move(edges));
}

// --- constructions ----------------------------------------------------------------

namespace {

template <class Fn>
void for_each_subset(const std::vector<Vertex>& pool, int k, Fn&& fn) {
  const int m = static_cast<int>(pool.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  Edge cur(k);
  while (true) {
    for (int i = 0; i < k; ++i) cur[i] = pool[idx[i]];
    fn(cur);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Vertex> range_vertices(int lo, int hi) {
  std::vector<Vertex> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

}  // namespace

Hypergraph matching2(int r) {
  if (r < 1) throw std::invalid_argument("matching2 needs r >= 1");
  return Hypergraph(r, 2 * r, {range_vertices(1, r), range_vertices(r + 1, 2 * r)});
}

Hypergraph complete(int t, int r) {
  if (r < 1 || t < r) throw std::invalid_argument("complete needs t >= r >= 1");
  std::vector<Edge> edges;
  for_each_subset(range_vertices(1, t), r, [&](const Edge& e) { edges.push_back(e); });
  return Hypergraph(r, t, std::move(edges));
}

Hypergraph k_rr(int r) {
  if (r < 2) throw std::invalid_argument("k_rr needs r >= 2");
  return extension(matching2(r));
}

Hypergraph star(int a, int b, int r) {
  if (a < 1 || r < 2 || b < r - 1) throw std::invalid_argument("star needs a >= 1, r >= 2, b >= r-1");
  std::vector<Edge> edges;
  const auto bside = range_vertices(a + 1, a + b);
  for_each_subset(bside, r - 1, [&](const Edge& t) {
    for (Vertex x = 1; x <= a; ++x) {
      Edge e{x};
      e.insert(e.end(), t.begin(), t.end());
      edges.push_back(std::move(e));
    }
  });
  return Hypergraph(r, a + b, std::move(edges));
}

Hypergraph principal_star(int n, int r) {
  if (r < 1 || n < r) throw std::invalid_argument("principal_star needs n >= r >= 1");
  std::vector<Edge> edges;
  for_each_subset(range_vertices(2, n), r - 1, [&](const Edge& t) {
    Edge e{1};
    e.insert(e.end(), t.begin(), t.end());
    edges.push_back(std::move(e));
  });
  return Hypergraph(r, n, std::move(edges));
}

std::vector<int> t5_part_sizes(int n) {
  std::vector<int> sizes(5, n / 5);
  for (int i = 0; i < n % 5; ++i) ++sizes[i];
  return sizes;
}

Hypergraph balanced_blowup_t5(int n) {
  if (n < 5) throw std::invalid_argument("T_5^3(n) needs n >= 5");
  const auto sizes = t5_part_sizes(n);
  std::vector<int> part(n + 1);
  int v = 1;
  for (int p = 0; p < 5; ++p)
    for (int i = 0; i < sizes[p]; ++i) part[v++] = p;
  std::vector<Edge> edges;
  for_each_subset(range_vertices(1, n), 3, [&](const Edge& e) {
    if (part[e[0]] != part[e[1]] && part[e[0]] != part[e[2]] && part[e[1]] != part[e[2]]) edges.push_back(e);
  });
  return Hypergraph(3, n, std::move(edges));
}

BestStar best_star(int n, int r) {
  if (r < 2 || n < r) throw std::invalid_argument("best_star needs n >= r >= 2");
  BestStar best{1, 0};
  for (int a = 1; a <= n - r + 1; ++a) {
    BigInt m = BigInt(a) * binomial(static_cast<unsigned>(n - a), static_cast<unsigned>(r - 1));
    if (m > best.edges) best = {a, m};
  }
  return best;
}

Hypergraph clone_vertex(const Hypergraph& f, Vertex v, int k) {
  if (v < 1 || v > f.n()) throw std::invalid_argument("clone_vertex: vertex outside [n]");
  if (k < 0) throw std::invalid_argument("clone_vertex: negative clone count");
  std::vector<Edge> edges;
  if (k == 0) {
    for (const auto& e : f.edges()) {
      if (std::binary_search(e.begin(), e.end(), v)) continue;
      Edge g;
      for (Vertex u : e) g.push_back(u > v ? u - 1 : u);
      edges.push_back(std::move(g));
    }
    return Hypergraph(f.r(), f.n() - 1, std::move(edges));
  }
  edges = f.edges();
  for (const auto& e : f.edges()) {
    if (!std::binary_search(e.begin(), e.end(), v)) continue;
    for (int c = 1; c < k; ++c) {
      Edge g;
      for (Vertex u : e)
        if (u != v) g.push_back(u);
      g.push_back(f.n() + c);
      edges.push_back(std::move(g));
    }
  }
  return Hypergraph(f.r(), f.n() + k - 1, std::move(edges));
}

namespace {

/// Exact 1-in-e search: assign vertices in order, A-side tried first.
class StarSearch {
 public:
  explicit StarSearch(const Hypergraph& f) : f_(f), side_(f.n() + 1, -1), in_a_(f.size(), 0), open_(f.size()) {
    incident_.resize(f.n() + 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
      open_[i] = f.r();
      for (Vertex v : f.edges()[i]) incident_[v].push_back(i);
    }
  }

  std::optional<StarPartition> run() {
    if (!assign(1)) return std::nullopt;
    StarPartition sp;
    for (Vertex v = 1; v <= f_.n(); ++v) (side_[v] == 1 ? sp.a_side : sp.b_side).push_back(v);
    return sp;
  }

 private:
  bool assign(Vertex v) {
    if (v > f_.n()) return true;
    if (incident_[v].empty()) {
      side_[v] = 0;
      return assign(v + 1);
    }
    for (int choice : {1, 0}) {
      bool ok = true;
      for (auto i : incident_[v]) {
        --open_[i];
        in_a_[i] += choice;
        if (in_a_[i] > 1 || (in_a_[i] == 0 && open_[i] == 0)) ok = false;
      }
      side_[v] = choice;
      if (ok && assign(v + 1)) return true;
      for (auto i : incident_[v]) {
        ++open_[i];
        in_a_[i] -= choice;
      }
    }
    side_[v] = -1;
    return false;
  }

  const Hypergraph& f_;
  std::vector<int> side_;
  std::vector<int> in_a_;
  std::vector<int> open_;
  std::vector<std::vector<std::size_t>> incident_;
};

}  // namespace

std::optional<StarPartition> star_partition(const Hypergraph& f) { return StarSearch(f).run(); }

bool is_balanced(const Hypergraph& f, double eps) {
  const auto sp = star_partition(f);
  if (!sp) return false;
  const double dev = static_cast<double>(sp->a_side.size()) - static_cast<double>(f.n()) / f.r();
  return std::abs(dev) <= eps * f.n();
}

// --- text format -------------------------------------------------------------------

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string to_text(const Hypergraph& f) {
  std::ostringstream os;
  os << f;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Hypergraph& f) {
  os << f.r() << ' ' << f.n() << ' ' << f.size() << '\n';
  for (const auto& e : f.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
    os << '\n';
  }
  return os;
}

namespace {

std::vector<long> read_ints(const std::string& line, int lineno) {
  std::istringstream is(line);
  std::vector<long> out;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(lineno, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(lineno, "expected an integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  long r = 0, n = 0, m = 0;
  std::vector<Edge> edges;
  Edge prev;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') throw ParseError(lineno, "CR line endings are not accepted");
    if (!header_seen) {
      if (!line.empty() && line[0] == '#') continue;
      const auto h = read_ints(line, lineno);
      if (h.size() != 3) throw ParseError(lineno, "header must be 'r n m'");
      r = h[0], n = h[1], m = h[2];
      if (r < 1 || n < 0 || m < 0) throw ParseError(lineno, "header values out of range");
      header_seen = true;
      continue;
    }
    if (line.empty()) {
      if (static_cast<long>(edges.size()) == m) continue;
      throw ParseError(lineno, "blank line inside the edge list");
    }
    if (static_cast<long>(edges.size()) == m) throw ParseError(lineno, "more edge lines than declared");
    const auto vals = read_ints(line, lineno);
    if (static_cast<long>(vals.size()) != r) throw ParseError(lineno, "edge must have exactly r vertices");
    Edge e(vals.begin(), vals.end());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 1 || e[i] > n) throw ParseError(lineno, "vertex outside [n]");
      if (i && e[i] <= e[i - 1]) throw ParseError(lineno, "edge vertices must be strictly ascending");
    }
    if (!edges.empty() && !colex_less(prev, e)) throw ParseError(lineno, "edges must be in strictly increasing colex order");
    prev = e;
    edges.push_back(std::move(e));
  }
  if (!header_seen) throw ParseError(lineno + 1, "missing header line");
  if (static_cast<long>(edges.size()) != m) throw ParseError(lineno + 1, "fewer edge lines than declared");
  return Hypergraph(static_cast<int>(r), static_cast<int>(n), std::move(edges));
}

}  // namespace lagrangia
