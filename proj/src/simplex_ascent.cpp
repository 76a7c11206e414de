#include "lagrangia/simplex_ascent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lagrangia/rng.hpp"

namespace lagrangia {

SimplexPolynomial::SimplexPolynomial(int dim, int degree, std::vector<Monomial> terms)
    : dim_(dim), degree_(degree), terms_(std::move(terms)) {
  if (dim < 1) throw std::invalid_argument("simplex dimension must be positive");
  for (const auto& t : terms_) {
    if (t.coeff < 0) throw std::invalid_argument("coefficients must be non-negative");
    int deg = 0;
    for (auto [v, k] : t.factors) {
      if (v < 0 || v >= dim || k < 1) throw std::invalid_argument("bad monomial factor");
      deg += k;
    }
    if (deg != degree) throw std::invalid_argument("polynomial must be homogeneous");
  }
}

double SimplexPolynomial::value(std::span<const double> x) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    double prod = t.coeff;
    for (auto [v, k] : t.factors) prod *= k == 1 ? x[v] : std::pow(x[v], k);
    sum += prod;
  }
  return sum;
}

double SimplexPolynomial::value_and_gradient(std::span<const double> x, std::span<double> g) const {
  std::fill(g.begin(), g.end(), 0.0);
  double sum = 0.0;
  double pw[16];
  for (const auto& t : terms_) {
    const std::size_t m = t.factors.size();
    double prod = t.coeff;
    for (std::size_t a = 0; a < m; ++a) {
      auto [v, k] = t.factors[a];
      pw[a] = k == 1 ? x[v] : std::pow(x[v], k);
      prod *= pw[a];
    }
    sum += prod;
    // partial derivatives by explicit leave-one-out products; zeros are common
    for (std::size_t a = 0; a < m; ++a) {
      auto [v, k] = t.factors[a];
      double d = t.coeff * k * (k == 1 ? 1.0 : std::pow(x[v], k - 1));
      for (std::size_t b = 0; b < m; ++b)
        if (b != a) d *= pw[b];
      g[v] += d;
    }
  }
  return sum;
}

SimplexObjective::SimplexObjective(const SimplexPolynomial& poly, int ordered_prefix)
    : poly_(poly), ordered_(ordered_prefix), p_(poly.dim()), gp_(poly.dim()) {
  if (ordered_prefix < 0 || ordered_prefix > poly.dim()) throw std::invalid_argument("bad ordered prefix");
  for (const auto& t : poly.terms())
    if (t.factors.size() > 16) throw std::invalid_argument("monomial has too many factors");
}

std::vector<double> SimplexObjective::to_variables(std::span<const double> u) const {
  std::vector<double> p(u.begin(), u.end());
  double tail = 0.0;
  for (int k = ordered_ - 1; k >= 0; --k) {
    tail += u[k] / (k + 1);
    p[k] = tail;
  }
  return p;
}

std::vector<double> SimplexObjective::from_variables(std::span<const double> p) const {
  std::vector<double> u(p.begin(), p.end());
  for (int k = 0; k < ordered_; ++k) {
    const double next = k + 1 < ordered_ ? p[k + 1] : 0.0;
    u[k] = std::max(0.0, (k + 1) * (p[k] - next));
  }
  return u;
}

double SimplexObjective::value(std::span<const double> u) const {
  if (!ordered_) return poly_.value(u);
  const auto p = to_variables(u);
  return poly_.value(p);
}

double SimplexObjective::value_and_gradient(std::span<const double> u, std::span<double> g) const {
  if (!ordered_) return poly_.value_and_gradient(u, g);
  p_ = to_variables(u);
  const double f = poly_.value_and_gradient(p_, gp_);
  std::copy(gp_.begin(), gp_.end(), g.begin());
  // d/du_k = (1/(k+1)) sum_{i <= k} d/dp_i
  double prefix = 0.0;
  for (int k = 0; k < ordered_; ++k) {
    prefix += gp_[k];
    g[k] = prefix / (k + 1);
  }
  return f;
}

void project_to_simplex(std::span<double> x) {
  std::vector<double> s(x.begin(), x.end());
  std::sort(s.begin(), s.end(), std::greater<>());
  double cum = 0.0, theta = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    cum += s[i];
    const double t = (cum - 1.0) / static_cast<double>(i + 1);
    if (s[i] - t > 0) theta = t;
  }
  for (auto& v : x) v = std::max(0.0, v - theta);
}

double kkt_residual(std::span<const double> x, std::span<const double> g) {
  double mu = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) mu += x[i] * g[i];
  double res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = g[i] - mu;
    if (x[i] > 1e-9) res = std::max(res, std::abs(d));
    else res = std::max(res, d);
  }
  return res;
}

namespace {

void normalize(std::vector<double>& x) {
  double s = 0.0;
  for (auto& v : x) {
    if (!(v > 0)) v = 0.0;
    s += v;
  }
  if (s <= 0) {
    std::fill(x.begin(), x.end(), 1.0 / static_cast<double>(x.size()));
    return;
  }
  for (auto& v : x) v /= s;
}

}  // namespace

double local_ascent(const SimplexObjective& obj, std::vector<double>& x, const AscentConfig& cfg) {
  const int n = obj.dim();
  const double r = obj.degree();
  std::vector<double> g(n), y(n), gy(n);
  normalize(x);
  double f = obj.value_and_gradient(x, g);
  for (int it = 0; it < cfg.max_iters; ++it) {
    const double mu = r * f;  // Euler: sum x_i g_i
    if (!(mu > 0)) break;
    for (int i = 0; i < n; ++i) y[i] = x[i] * g[i] / mu;
    normalize(y);
    const double fy = obj.value_and_gradient(y, gy);
    if (fy < f) break;  // rounding only; the update is monotone
    const bool stalled = fy - f <= cfg.tol * std::max(f, 1e-300);
    x.swap(y);
    g.swap(gy);
    f = fy;
    if (stalled && (it % 8 == 7 || it > 64)) {
      if (kkt_residual(x, g) <= cfg.kkt_tol * std::max(1.0, r * f)) break;
    }
  }
  // projected-gradient polish with backtracking
  double step = 1.0;
  for (int it = 0; it < cfg.polish_iters; ++it) {
    double gmax = 0.0;
    for (double v : g) gmax = std::max(gmax, std::abs(v));
    if (gmax == 0) break;
    bool improved = false;
    for (int tries = 0; tries < 40; ++tries) {
      for (int i = 0; i < n; ++i) y[i] = x[i] + step * g[i] / gmax;
      project_to_simplex(y);
      const double fy = obj.value_and_gradient(y, gy);
      if (fy > f) {
        x.swap(y);
        g.swap(gy);
        f = fy;
        improved = true;
        step = std::min(1.0, step * 2);
        break;
      }
      step *= 0.5;
    }
    if (!improved) break;
  }
  return f;
}

AscentResult maximize_on_simplex(const SimplexObjective& obj, const std::vector<std::vector<double>>& starts,
                                 const AscentConfig& cfg) {
  const int n = obj.dim();
  AscentResult best;
  best.value = -1.0;
  auto consider = [&](std::vector<double> x) {
    const double v = local_ascent(obj, x, cfg);
    ++best.starts_used;
    if (v > best.value) {
      best.value = v;
      best.point = std::move(x);
    }
  };
  for (const auto& s : starts) {
    if (static_cast<int>(s.size()) != n) throw std::invalid_argument("start has wrong dimension");
    consider(s);
  }
  Rng rng(stream_seed(cfg.seed, 0x51a9));
  std::vector<double> x(n);
  for (int k = 0; k < cfg.restarts; ++k) {
    rng.dirichlet(x);
    consider(x);
  }
  if (best.point.empty()) {
    best.point.assign(n, 1.0 / n);
    best.value = obj.value(best.point);
  }
  std::vector<double> g(n);
  obj.value_and_gradient(best.point, g);
  best.kkt_residual = kkt_residual(best.point, g);
  best.converged = best.kkt_residual <= cfg.kkt_tol * std::max(1.0, obj.degree() * best.value);
  return best;
}

}  // namespace lagrangia
