#include "lagrangia/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>

#include "lagrangia/polynomial.hpp"

namespace lagrangia {

std::string_view to_string(LagrangianMethod m) {
  return m == LagrangianMethod::ascent ? "ascent" : "orbit-exact";
}

namespace {

void check_dim(const Hypergraph& f, std::span<const double> p) {
  if (static_cast<int>(p.size()) != f.n()) throw std::invalid_argument("point dimension does not match vertex count");
}

std::vector<Vertex> support_of(std::span<const double> p, double tol) {
  std::vector<Vertex> s;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > tol) s.push_back(static_cast<Vertex>(i + 1));
  return s;
}

}  // namespace

double evaluate(const Hypergraph& f, std::span<const double> p) {
  check_dim(f, p);
  double sum = 0.0, comp = 0.0;
  for (const auto& e : f.edges()) {
    double prod = 1.0;
    for (Vertex v : e) prod *= p[v - 1];
    const double y = prod - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

std::vector<double> gradient(const Hypergraph& f, std::span<const double> p) {
  check_dim(f, p);
  std::vector<double> g(f.n(), 0.0);
  for (const auto& e : f.edges())
    for (Vertex v : e) {
      double prod = 1.0;
      for (Vertex u : e)
        if (u != v) prod *= p[u - 1];
      g[v - 1] += prod;
    }
  return g;
}

SimplexPolynomial lagrangian_polynomial(const Hypergraph& f) {
  std::vector<Monomial> terms;
  terms.reserve(f.size());
  for (const auto& e : f.edges()) {
    Monomial m;
    for (Vertex v : e) m.factors.emplace_back(v - 1, 1);
    terms.push_back(std::move(m));
  }
  return SimplexPolynomial(std::max(1, f.n()), f.r(), std::move(terms));
}

namespace {

std::vector<double> uniform_on(int n, const std::vector<Vertex>& vs) {
  std::vector<double> x(n, 0.0);
  for (Vertex v : vs) x[v - 1] = 1.0 / static_cast<double>(vs.size());
  return x;
}

// Grows edge e greedily into a vertex set whose induced subgraph covers its pairs.
std::vector<Vertex> grow_covering(const Hypergraph& f, const Edge& e) {
  std::vector<Vertex> set(e);
  for (Vertex v = 1; v <= f.n(); ++v) {
    if (std::binary_search(set.begin(), set.end(), v)) continue;
    std::vector<Vertex> trial(set);
    trial.insert(std::upper_bound(trial.begin(), trial.end(), v), v);
    const auto sub = induced(f, trial);
    if (sub.non_isolated().size() == trial.size() && covers_pairs(sub)) set = std::move(trial);
  }
  return set;
}

}  // namespace

LagrangianResult maximize(const Hypergraph& f, const LagrangianConfig& cfg) {
  LagrangianResult res;
  const int n = f.n();
  if (n < 1) throw std::invalid_argument("maximize needs at least one vertex");
  if (f.empty()) {
    res.point.assign(n, 1.0 / n);
    res.converged = true;
    res.support = support_of(res.point, cfg.support_tol);
    return res;
  }
  const auto poly = lagrangian_polynomial(f);
  const SimplexObjective obj(poly);
  std::vector<std::vector<double>> starts;
  starts.push_back(uniform_on(n, f.non_isolated()));
  const int m = static_cast<int>(f.size());
  const int k = std::min(m, cfg.structured_starts);
  std::vector<std::vector<Vertex>> seen;
  for (int i = 0; i < k; ++i) {
    // evenly spaced seed edges
    const auto& e = f.edges()[static_cast<std::size_t>(static_cast<long>(i) * m / k)];
    auto set = grow_covering(f, e);
    if (std::find(seen.begin(), seen.end(), set) != seen.end()) continue;
    starts.push_back(uniform_on(n, set));
    seen.push_back(std::move(set));
  }
  AscentConfig acfg;
  acfg.restarts = cfg.restarts;
  acfg.seed = cfg.seed;
  acfg.max_iters = cfg.max_iters;
  acfg.tol = cfg.tol;
  const auto best = maximize_on_simplex(obj, starts, acfg);
  res.point = best.point;
  res.value = evaluate(f, res.point);
  res.lower_bound = res.value;
  res.converged = best.converged;
  res.kkt_residual = best.kkt_residual;
  res.restarts_used = best.starts_used;
  res.support = support_of(res.point, cfg.support_tol);
  return res;
}

Rational clique_lagrangian(int t, int r) {
  if (r < 1 || t < r) throw std::invalid_argument("clique_lagrangian needs t >= r >= 1");
  return Rational(binomial(t, r)) / Rational(pow(Rational(t), r));
}

std::vector<std::vector<Vertex>> consecutive_orbits(int n, std::span<const int> sizes) {
  std::vector<std::vector<Vertex>> orbits;
  Vertex next = 1;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("orbit sizes must be positive");
    std::vector<Vertex> o;
    for (int i = 0; i < s; ++i) o.push_back(next++);
    orbits.push_back(std::move(o));
  }
  if (next - 1 != n) throw std::invalid_argument("orbit sizes must sum to the vertex count");
  return orbits;
}

namespace {

std::vector<int> orbit_index(int n, const std::vector<std::vector<Vertex>>& orbits) {
  std::vector<int> idx(n + 1, -1);
  for (std::size_t j = 0; j < orbits.size(); ++j)
    for (Vertex v : orbits[j]) {
      if (v < 1 || v > n) throw std::invalid_argument("orbit vertex outside [n]");
      if (idx[v] != -1) throw std::invalid_argument("orbits overlap");
      idx[v] = static_cast<int>(j);
    }
  for (Vertex v = 1; v <= n; ++v)
    if (idx[v] == -1) throw std::invalid_argument("orbits do not cover every vertex");
  return idx;
}

// exponent vector of an edge's orbit type
std::vector<int> edge_type(const Edge& e, const std::vector<int>& idx, std::size_t m) {
  std::vector<int> a(m, 0);
  for (Vertex v : e) ++a[idx[v]];
  return a;
}

}  // namespace

bool is_orbit_partition(const Hypergraph& f, const std::vector<std::vector<Vertex>>& orbits) {
  const auto idx = orbit_index(f.n(), orbits);
  std::vector<std::map<std::vector<int>, long>> profile(f.n() + 1);
  for (const auto& e : f.edges()) {
    const auto t = edge_type(e, idx, orbits.size());
    for (Vertex v : e) ++profile[v][t];
  }
  for (const auto& o : orbits)
    for (Vertex v : o)
      if (profile[v] != profile[o.front()]) return false;
  return true;
}

namespace {

using Exponents = std::vector<int>;

// Bivariate polynomial in (t1, t2) with long double coefficients, t >= 0 on the domain.
struct Bivariate {
  std::vector<std::pair<std::pair<int, int>, long double>> terms;

  long double at(long double a, long double b) const {
    long double s = 0;
    for (auto [e, c] : terms) s += c * std::pow(a, e.first) * std::pow(b, e.second);
    return s;
  }
  Bivariate d(int var) const {
    Bivariate out;
    for (auto [e, c] : terms) {
      const int k = var == 0 ? e.first : e.second;
      if (!k) continue;
      auto e2 = e;
      (var == 0 ? e2.first : e2.second) -= 1;
      out.terms.push_back({e2, c * k});
    }
    return out;
  }
  // enclosure over [a1,b1] x [a2,b2] with 0 <= a <= b
  std::pair<long double, long double> range(long double a1, long double b1, long double a2, long double b2) const {
    long double lo = 0, hi = 0;
    for (auto [e, c] : terms) {
      const long double mn = std::pow(a1, e.first) * std::pow(a2, e.second);
      const long double mx = std::pow(b1, e.first) * std::pow(b2, e.second);
      if (c >= 0) lo += c * mn, hi += c * mx;
      else lo += c * mx, hi += c * mn;
    }
    return {lo, hi};
  }
  long double abs_sum() const {
    long double s = 0;
    for (auto [e, c] : terms) s += std::fabs(c);
    return s;
  }
};

struct Box {
  long double a1, b1, a2, b2, upper;
  bool operator<(const Box& o) const { return upper < o.upper; }
};

}  // namespace

LagrangianResult orbit_exact(const Hypergraph& f, const std::vector<std::vector<Vertex>>& orbits, double support_tol) {
  if (orbits.empty() || orbits.size() > 3) throw std::invalid_argument("orbit_exact supports 1 to 3 orbits");
  if (!is_orbit_partition(f, orbits)) throw std::invalid_argument("vertex partition is not orbit-valid");
  const auto idx = orbit_index(f.n(), orbits);
  const std::size_t m = orbits.size();
  std::map<Exponents, long> count;
  for (const auto& e : f.edges()) ++count[edge_type(e, idx, m)];
  std::vector<Rational> sz(m);
  for (std::size_t j = 0; j < m; ++j) sz[j] = static_cast<long>(orbits[j].size());

  LagrangianResult res;
  res.method = LagrangianMethod::orbit_exact;
  res.converged = true;
  std::vector<double> y(m, 0.0);  // per-vertex weight of each orbit
  const Rational width(1, BigInt("10000000000000"));

  if (m == 1) {
    const Rational yv = 1 / sz[0];
    Rational v = 0;
    for (const auto& [a, c] : count) v += Rational(c) * pow(yv, a[0]);
    res.exact_value = v;
    res.certified_lower = res.certified_upper = to_double(v);
    y[0] = to_double(yv);
  } else if (m == 2) {
    // y1 = t, y2 = (1 - n1 t) / n2 on t in [0, 1/n1]
    const RationalPoly t = RationalPoly::x();
    const RationalPoly y2 = (1 / sz[1]) * (RationalPoly::constant(1) - sz[0] * t);
    RationalPoly p;
    for (const auto& [a, c] : count) p = p + Rational(c) * (pow(t, a[0]) * pow(y2, a[1]));
    const auto cm = certified_max(p, 0, 1 / sz[0], width);
    res.certified_lower = to_double(cm.lower);
    res.certified_upper = to_double(cm.upper);
    if (cm.lower == cm.upper) res.exact_value = cm.lower;
    y[0] = to_double(cm.argmax);
    y[1] = to_double(y2(cm.argmax));
  } else {
    // y3 = (1 - n1 t1 - n2 t2) / n3; expand exactly, then branch and bound
    std::map<std::pair<int, int>, Rational> coeff;
    for (const auto& [a, c] : count) {
      const int k = a[2];
      // ((1 - n1 t1 - n2 t2)/n3)^k by the trinomial theorem
      for (int i = 0; i <= k; ++i)
        for (int j = 0; i + j <= k; ++j) {
          Rational term = Rational(c) * Rational(factorial(k)) /
                          Rational(factorial(i) * factorial(j) * factorial(k - i - j));
          term *= pow(-sz[0], i) * pow(-sz[1], j) / pow(sz[2], k);
          coeff[{a[0] + i, a[1] + j}] += term;
        }
    }
    Bivariate poly;
    for (const auto& [e, c] : coeff)
      if (sgn(c) != 0) poly.terms.push_back({e, static_cast<long double>(c.get_d())});
    const Bivariate d1 = poly.d(0), d2 = poly.d(1);
    const long double n1 = sz[0].get_d(), n2 = sz[1].get_d();
    const long double slack = 1e-16L * (poly.abs_sum() + 1);
    long double best = -1, bx = 0, by = 0;
    auto consider = [&](long double a, long double b) {
      if (n1 * a + n2 * b > 1) return;
      const long double v = poly.at(a, b);
      if (v > best) best = v, bx = a, by = b;
    };
    auto bound = [&](const Box& bx0) {
      auto [lo, hi] = poly.range(bx0.a1, bx0.b1, bx0.a2, bx0.b2);
      (void)lo;
      const long double m1 = (bx0.a1 + bx0.b1) / 2, m2 = (bx0.a2 + bx0.b2) / 2;
      auto g1 = d1.range(bx0.a1, bx0.b1, bx0.a2, bx0.b2);
      auto g2 = d2.range(bx0.a1, bx0.b1, bx0.a2, bx0.b2);
      const long double s1 = std::max(std::fabs(g1.first), std::fabs(g1.second));
      const long double s2 = std::max(std::fabs(g2.first), std::fabs(g2.second));
      const long double mv = poly.at(m1, m2) + s1 * (bx0.b1 - bx0.a1) / 2 + s2 * (bx0.b2 - bx0.a2) / 2;
      return std::min(hi, mv) + slack;
    };
    consider(0, 0);
    consider(1 / n1, 0);
    consider(0, 1 / n2);
    std::priority_queue<Box> queue;
    Box root{0, 1 / n1, 0, 1 / n2, 0};
    root.upper = bound(root);
    queue.push(root);
    long double upper = root.upper;
    std::uint64_t boxes = 0;
    res.converged = false;
    while (!queue.empty()) {
      Box b = queue.top();
      upper = b.upper;
      if (upper - best <= 1e-13L) {
        res.converged = true;
        break;
      }
      if (++boxes > 4'000'000) break;
      queue.pop();
      consider(b.a1, b.a2);
      consider((b.a1 + b.b1) / 2, (b.a2 + b.b2) / 2);
      // the hypotenuse point above the lower-left corner
      consider(b.a1, std::min(b.b2, (1 - n1 * b.a1) / n2));
      Box c1 = b, c2 = b;
      if (b.b1 - b.a1 >= b.b2 - b.a2) {
        c1.b1 = c2.a1 = (b.a1 + b.b1) / 2;
      } else {
        c1.b2 = c2.a2 = (b.a2 + b.b2) / 2;
      }
      for (Box* c : {&c1, &c2}) {
        if (n1 * c->a1 + n2 * c->a2 > 1) continue;
        c->upper = bound(*c);
        if (c->upper > best) queue.push(*c);
      }
    }
    if (queue.empty()) {
      res.converged = true;
      upper = best;
    }
    res.certified_lower = static_cast<double>(best);
    res.certified_upper = static_cast<double>(std::max(upper, best));
    y[0] = static_cast<double>(bx);
    y[1] = static_cast<double>(by);
    y[2] = std::max(0.0, static_cast<double>((1 - n1 * bx - n2 * by) / sz[2].get_d()));
  }
  res.point.assign(f.n(), 0.0);
  for (Vertex v = 1; v <= f.n(); ++v) res.point[v - 1] = y[idx[v]];
  res.value = evaluate(f, res.point);
  res.lower_bound = res.value;
  res.support = support_of(res.point, support_tol);
  return res;
}

}  // namespace lagrangia
