#include "lagrangia/wiss.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lagrangia/simplex_ascent.hpp"

namespace lagrangia {

// --- ProbDist --------------------------------------------------------------------

ProbDist ProbDist::unordered(std::vector<double> p) {
  ProbDist d;
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0)) throw std::invalid_argument("probabilities must be non-negative");
    sum += v;
  }
  if (sum > 1.0 + 1e-12) throw std::invalid_argument("probabilities on [s] exceed 1");
  d.p_ = std::move(p);
  d.p_inf_ = std::max(0.0, 1.0 - sum);
  return d;
}

ProbDist ProbDist::from_doubles(std::vector<double> p) {
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] > p[i - 1] + 1e-12) throw std::invalid_argument("probabilities must be non-increasing on [s]");
  return unordered(std::move(p));
}

ProbDist ProbDist::from_rationals(std::vector<Rational> q) {
  Rational sum = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (sgn(q[i]) < 0) throw std::invalid_argument("probabilities must be non-negative");
    if (i && q[i] > q[i - 1]) throw std::invalid_argument("probabilities must be non-increasing on [s]");
    sum += q[i];
  }
  if (sum > 1) throw std::invalid_argument("probabilities on [s] exceed 1");
  ProbDist d;
  for (const auto& v : q) d.p_.push_back(v.get_d());
  d.q_inf_ = 1 - sum;
  d.p_inf_ = d.q_inf_.get_d();
  d.q_ = std::move(q);
  d.exact_ = true;
  return d;
}

const Rational& ProbDist::exact_at(int i) const {
  if (!exact_) throw std::logic_error("distribution has no exact representation");
  return q_.at(i - 1);
}

const Rational& ProbDist::exact_inf() const {
  if (!exact_) throw std::logic_error("distribution has no exact representation");
  return q_inf_;
}

ProbDist ProbDist::without_last() const {
  if (p_.empty()) throw std::invalid_argument("empty ground set");
  ProbDist d = *this;
  d.p_.pop_back();
  d.p_inf_ = p_inf_ + p_.back();
  if (exact_) {
    d.q_.pop_back();
    d.q_inf_ = q_inf_ + q_.back();
  }
  return d;
}

Wiss::Wiss(SetSystem g_, int r_, ProbDist p_) : g(std::move(g_)), r(r_), p(std::move(p_)) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (g.s() != p.s()) throw std::invalid_argument("ground set and distribution sizes differ");
  for (Mask e : g.edges()) {
    if (!e) throw std::invalid_argument("edges must be non-empty");
    if (popcount(e) > r) throw std::invalid_argument("edge larger than r");
  }
  if (!is_intersecting(g)) throw std::invalid_argument("set system is not intersecting");
}

// --- weights ---------------------------------------------------------------------

double weight_edge(Mask e, int r, const ProbDist& p) {
  const int k = popcount(e);
  if (k > r) throw std::invalid_argument("edge larger than r");
  if (e & ~ground_mask(p.s())) throw std::invalid_argument("edge outside the ground set");
  double w = 1.0;
  for (int i = r - k + 1; i <= r; ++i) w *= i;
  for (int i = 0; i < r - k; ++i) w *= p.inf();
  for (Mask b = e; b; b &= b - 1) w *= p.at(__builtin_ctzll(b) + 1);
  return w;
}

Rational weight_edge_exact(Mask e, int r, const ProbDist& p) {
  const int k = popcount(e);
  if (k > r) throw std::invalid_argument("edge larger than r");
  if (e & ~ground_mask(p.s())) throw std::invalid_argument("edge outside the ground set");
  Rational w(falling_factorial(r, k));
  w *= pow(p.exact_inf(), r - k);
  for (Mask b = e; b; b &= b - 1) w *= p.exact_at(__builtin_ctzll(b) + 1);
  return w;
}

WeightReport weight_of(const SetSystem& g, int r, const ProbDist& p) {
  WeightReport rep;
  rep.rational_mode = p.exact();
  if (p.exact()) {
    Rational total = 0;
    for (Mask e : g.edges()) {
      Rational w = weight_edge_exact(e, r, p);
      total += w;
      rep.per_edge.emplace_back(e, w.get_d());
      rep.exact_per_edge.push_back(std::move(w));
    }
    rep.total = total.get_d();
    rep.exact_total = std::move(total);
  } else {
    double sum = 0.0, comp = 0.0;
    for (Mask e : g.edges()) {
      const double w = weight_edge(e, r, p);
      rep.per_edge.emplace_back(e, w);
      const double y = w - comp, t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    rep.total = sum;
  }
  return rep;
}

WeightReport weight_system(const Wiss& w) { return weight_of(w.g, w.r, w.p); }

// --- sampling --------------------------------------------------------------------

namespace {

std::vector<double> cumulative(const ProbDist& p) {
  std::vector<double> cdf;
  double c = 0.0;
  for (double v : p.weights()) cdf.push_back(c += v);
  return cdf;
}

// index in 1..s, or 0 for inf
int draw(const std::vector<double>& cdf, Rng& rng) {
  const double u = rng.uniform();
  for (std::size_t i = 0; i < cdf.size(); ++i)
    if (u < cdf[i]) return static_cast<int>(i + 1);
  return 0;
}

}  // namespace

std::vector<int> sample_multiset(int r, const ProbDist& p, Rng& rng) {
  const auto cdf = cumulative(p);
  std::vector<int> out(r);
  for (auto& x : out) x = draw(cdf, rng);
  return out;
}

std::vector<int> sample_multiset(int r, const ProbDist& p, std::uint64_t seed) {
  Rng rng(seed);
  return sample_multiset(r, p, rng);
}

MonteCarloEstimate monte_carlo_weight(const Wiss& w, std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  constexpr std::uint64_t kChunk = 1 << 16;
  const auto cdf = cumulative(w.p);
  const int s = w.s();
  std::vector<char> member;
  const bool table = s <= 24;
  if (table) {
    member.assign(std::size_t{1} << s, 0);
    for (Mask e : w.g.edges()) member[e] = 1;
  }
  std::uint64_t hits = 0;
  for (std::uint64_t chunk = 0; chunk * kChunk < samples; ++chunk) {
    Rng rng(stream_seed(seed, chunk));
    const std::uint64_t todo = std::min(kChunk, samples - chunk * kChunk);
    for (std::uint64_t k = 0; k < todo; ++k) {
      Mask trace = 0;
      bool repeat = false;
      for (int j = 0; j < w.r; ++j) {
        const int x = draw(cdf, rng);
        if (!x) continue;
        const Mask bit = Mask{1} << (x - 1);
        if (trace & bit) repeat = true;
        trace |= bit;
      }
      if (repeat) continue;
      if (table ? member[trace] != 0 : w.g.contains(trace)) ++hits;
    }
  }
  const double est = static_cast<double>(hits) / static_cast<double>(samples);
  return {est, std::sqrt(est * (1 - est) / static_cast<double>(samples))};
}

// --- compression -----------------------------------------------------------------

SetSystem compress(const SetSystem& g, int i, int j) {
  if (i < 1 || j > g.s() || i >= j) throw std::invalid_argument("compression needs 1 <= i < j <= s");
  const Mask bi = Mask{1} << (i - 1), bj = Mask{1} << (j - 1);
  std::vector<Mask> out;
  out.reserve(g.size());
  for (Mask e : g.edges()) {
    if ((e & bj) && !(e & bi)) {
      const Mask moved = (e & ~bj) | bi;
      if (!g.contains(moved)) {
        out.push_back(moved);
        continue;
      }
    }
    out.push_back(e);
  }
  return SetSystem(g.s(), g.r_cap(), std::move(out));
}

bool is_left_compressed(const SetSystem& g) {
  for (Mask e : g.edges())
    for (int j = 1; j <= g.s(); ++j) {
      const Mask bj = Mask{1} << (j - 1);
      if (!(e & bj)) continue;
      for (int i = 1; i < j; ++i) {
        const Mask bi = Mask{1} << (i - 1);
        if (!(e & bi) && !g.contains((e & ~bj) | bi)) return false;
      }
    }
  return true;
}

// --- traces ----------------------------------------------------------------------

SetSystem restrict(const Hypergraph& f, std::span<const Vertex> S) {
  std::vector<Vertex> sorted(S.begin(), S.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("repeated vertex in S");
  if (sorted.size() > static_cast<std::size_t>(kMaxMaskGround)) throw std::invalid_argument("S limited to 64 vertices");
  std::vector<int> pos(f.n() + 1, -1);
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] < 1 || sorted[k] > f.n()) throw std::invalid_argument("S not contained in [n]");
    pos[sorted[k]] = static_cast<int>(k);
  }
  std::vector<Mask> traces;
  for (const auto& e : f.edges()) {
    Mask m = 0;
    for (Vertex v : e)
      if (pos[v] >= 0) m |= Mask{1} << pos[v];
    traces.push_back(m);
  }
  std::sort(traces.begin(), traces.end());
  traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
  return SetSystem(static_cast<int>(sorted.size()), f.r(), std::move(traces));
}

Hypergraph reconstruct(const SetSystem& gd, int r, int n) {
  const int s = gd.s();
  if (n < s + r) throw std::invalid_argument("reconstruct needs n >= s + r");
  std::vector<Edge> edges;
  for (Mask t : gd.edges()) {
    if (!t) throw std::invalid_argument("the empty trace cannot be reconstructed");
    const int k = popcount(t);
    if (k > r) throw std::invalid_argument("trace larger than r");
    const Edge base = from_mask(t);
    // all (r-k)-subsets of {s+1..n}
    std::vector<Vertex> pick(r - k);
    for (int a = 0; a < r - k; ++a) pick[a] = s + 1 + a;
    while (true) {
      Edge e(base);
      e.insert(e.end(), pick.begin(), pick.end());
      edges.push_back(std::move(e));
      int a = r - k - 1;
      while (a >= 0 && pick[a] == n - (r - k - 1 - a)) --a;
      if (a < 0) break;
      ++pick[a];
      for (int b = a + 1; b < r - k; ++b) pick[b] = pick[b - 1] + 1;
    }
  }
  return Hypergraph(r, n, std::move(edges));
}

// --- inequality checks ---------------------------------------------------------------

namespace {

SetSystem drop_element(const SetSystem& g) {
  const Mask keep = ground_mask(g.s() - 1);
  std::vector<Mask> out;
  for (Mask e : g.edges()) out.push_back(e & keep);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return SetSystem(g.s() - 1, g.r_cap(), std::move(out));
}

}  // namespace

Wiss drop_last(const Wiss& w) {
  if (w.s() < 2) throw std::invalid_argument("drop_last needs s >= 2");
  const SetSystem g2 = drop_element(w.g);
  if (g2.contains(0) || !is_intersecting(g2))
    throw NotIntersectingAfterDeletion("two edges meet only in the last element");
  return Wiss(g2, w.r, w.p.without_last());
}

ContributionCheck contribution_check(Mask e, int r, const ProbDist& p) {
  const int s = p.s();
  if (s < 1) throw std::invalid_argument("empty ground set");
  const Mask bs = Mask{1} << (s - 1);
  if (!(e & bs)) throw std::invalid_argument("edge must contain s");
  ContributionCheck c;
  c.precondition_met = p.exact_inf() >= p.exact_at(s) && sgn(p.exact_at(s)) > 0;
  c.lhs = weight_edge_exact(e & ~bs, r, p.without_last());
  c.rhs = 2 * weight_edge_exact(e, r, p);
  c.holds = c.lhs >= c.rhs;
  return c;
}

Case1Split case1_split(const Wiss& w) {
  const int s = w.s();
  if (s < 3) throw std::invalid_argument("case1_split needs s >= 3");
  const Mask bs = Mask{1} << (s - 1);
  const auto& edges = w.g.edges();
  std::vector<int> partner(edges.size(), -1);
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      if ((edges[a] & edges[b]) != bs) continue;
      if (partner[a] != -1 || partner[b] != -1) throw std::invalid_argument("an edge meets two others only in s");
      if ((edges[a] | edges[b]) != ground_mask(s)) throw std::logic_error("edges meeting only in s do not cover [s]");
      partner[a] = static_cast<int>(b);
      partner[b] = static_cast<int>(a);
    }
  std::vector<Mask> g0, h1, h2;
  for (std::size_t a = 0; a < edges.size(); ++a) {
    if (partner[a] == -1) g0.push_back(edges[a]);
    else if (static_cast<int>(a) < partner[a]) h1.push_back(edges[a]);
    else h2.push_back(edges[a]);
  }
  Case1Split out{SetSystem(s, w.r, g0), SetSystem(s, w.r, h1), SetSystem(s, w.r, h2)};
  // both halves stay intersecting after deleting s
  for (const auto* h : {&out.h1, &out.h2}) {
    std::vector<Mask> merged(out.g0.edges());
    merged.insert(merged.end(), h->edges().begin(), h->edges().end());
    std::sort(merged.begin(), merged.end());
    const SetSystem dropped = drop_element(SetSystem(s, w.r, merged));
    if (dropped.contains(0) || !is_intersecting(dropped)) throw std::logic_error("case1_split produced a non-intersecting half");
  }
  return out;
}

// --- optimisation ----------------------------------------------------------------

WeightOptimum optimize_weight(const SetSystem& g, int r, const WeightOptConfig& cfg) {
  const int s = g.s();
  if (g.empty()) throw std::invalid_argument("optimize_weight needs at least one edge");
  std::vector<Monomial> terms;
  for (Mask e : g.edges()) {
    const int k = popcount(e);
    if (k > r) throw std::invalid_argument("edge larger than r");
    Monomial m;
    m.coeff = falling_factorial(r, k).get_d();
    for (Mask b = e; b; b &= b - 1) m.factors.emplace_back(__builtin_ctzll(b), 1);
    if (r > k) m.factors.emplace_back(s, r - k);
    terms.push_back(std::move(m));
  }
  const SimplexPolynomial poly(s + 1, r, std::move(terms));
  const SimplexObjective obj(poly, cfg.ordered ? s : 0);
  std::vector<std::vector<double>> starts;
  {
    std::vector<double> p(s + 1, 1.0 / (s + 1));
    starts.push_back(obj.from_variables(p));
    std::fill(p.begin(), p.end(), 0.0);
    p[0] = 1.0 / r;
    p[s] = 1.0 - p[0];
    starts.push_back(obj.from_variables(p));
  }
  AscentConfig acfg;
  acfg.restarts = cfg.restarts;
  acfg.seed = cfg.seed;
  acfg.max_iters = cfg.max_iters;
  const auto best = maximize_on_simplex(obj, starts, acfg);
  WeightOptimum out;
  auto p = obj.to_variables(best.point);
  out.p_inf = p[s];
  p.pop_back();
  out.p = std::move(p);
  out.value = weight_of(g, r, ProbDist::unordered(out.p)).total;
  out.converged = best.converged;
  out.starts_used = best.starts_used;
  return out;
}

long index_sum(const SetSystem& g) {
  long t = 0;
  for (Mask e : g.edges())
    for (Mask b = e; b; b &= b - 1) t += __builtin_ctzll(b) + 1;
  return t;
}

// --- text format -----------------------------------------------------------------

std::string to_text(const Wiss& w) {
  std::ostringstream os;
  os << w.r << ' ' << w.s() << ' ' << w.g.size() << '\n';
  for (int i = 1; i <= w.s(); ++i) {
    os << (i > 1 ? " " : "");
    if (w.p.exact()) os << to_string(w.p.exact_at(i));
    else os << w.p.at(i);
  }
  os << '\n';
  for (Mask e : w.g.edges()) {
    const auto list = from_mask(e);
    for (std::size_t k = 0; k < list.size(); ++k) os << (k ? " " : "") << list[k];
    os << '\n';
  }
  return os.str();
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

long to_long(const std::string& tok, int lineno) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(lineno, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(lineno, "expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace

Wiss parse_wiss(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  enum { header, weights, edges } stage = header;
  long r = 0, s = 0, m = 0;
  std::vector<Rational> q;
  std::vector<Mask> masks;
  int weight_line = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') throw ParseError(lineno, "CR line endings are not accepted");
    const auto tok = tokens(line);
    if (stage == header) {
      if (!line.empty() && line[0] == '#') continue;
      if (tok.size() != 3) throw ParseError(lineno, "header must be 'r s m'");
      r = to_long(tok[0], lineno), s = to_long(tok[1], lineno), m = to_long(tok[2], lineno);
      if (r < 1 || s < 0 || s > kMaxMaskGround || m < 0) throw ParseError(lineno, "header values out of range");
      stage = weights;
      continue;
    }
    if (stage == weights) {
      if (static_cast<long>(tok.size()) != s) throw ParseError(lineno, "expected " + std::to_string(s) + " weights");
      for (const auto& t : tok) {
        try {
          q.push_back(parse_rational(t));
        } catch (const std::invalid_argument& ex) {
          throw ParseError(lineno, ex.what());
        }
      }
      weight_line = lineno;
      stage = edges;
      continue;
    }
    if (tok.empty()) {
      if (static_cast<long>(masks.size()) == m) continue;
      throw ParseError(lineno, "blank line inside the edge list");
    }
    if (static_cast<long>(masks.size()) == m) throw ParseError(lineno, "more edge lines than declared");
    Edge e;
    for (const auto& t : tok) e.push_back(static_cast<Vertex>(to_long(t, lineno)));
    if (static_cast<long>(e.size()) > r) throw ParseError(lineno, "edge larger than r");
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 1 || e[i] > s) throw ParseError(lineno, "element outside [s]");
      if (i && e[i] <= e[i - 1]) throw ParseError(lineno, "edge elements must be strictly ascending");
    }
    const Mask mk = to_mask(e);
    if (!masks.empty() && mk <= masks.back()) throw ParseError(lineno, "edges must be in strictly increasing colex order");
    masks.push_back(mk);
  }
  if (stage == header) throw ParseError(lineno + 1, "missing header line");
  if (stage == weights) throw ParseError(lineno + 1, "missing weight line");
  if (static_cast<long>(masks.size()) != m) throw ParseError(lineno + 1, "fewer edge lines than declared");
  std::optional<ProbDist> dist;
  try {
    dist = ProbDist::from_rationals(std::move(q));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(weight_line, ex.what());
  }
  try {
    return Wiss(SetSystem(static_cast<int>(s), static_cast<int>(r), std::move(masks)), static_cast<int>(r), *dist);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(lineno, ex.what());
  }
}

}  // namespace lagrangia
