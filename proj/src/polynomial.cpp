#include "lagrangia/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lagrangia {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::x() { return RationalPoly({Rational(0), Rational(1)}); }

void RationalPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational RationalPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double RationalPoly::eval(double t) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

int RationalPoly::sign_at(const Rational& t) const { return sgn((*this)(t)); }

RationalPoly RationalPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> d(c_);
  const Rational l = lead();
  for (auto& v : d) v /= l;
  return RationalPoly(std::move(d));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + Rational(-1) * b; }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return RationalPoly(std::move(c));
}

RationalPoly operator*(const Rational& k, const RationalPoly& a) {
  std::vector<Rational> c(a.c_);
  for (auto& v : c) v *= k;
  return RationalPoly(std::move(c));
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(a.c_);
  const int db = b.degree();
  std::vector<Rational> q(std::max(0, a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    if (sgn(rem[k]) == 0) continue;
    const Rational f = rem[k] / b.lead();
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
  }
  return {RationalPoly(std::move(q)), RationalPoly(std::move(rem))};
}

RationalPoly RationalPoly::gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::string RationalPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (sgn(c_[k]) == 0) continue;
    os << (first ? "" : " + ") << lagrangia::to_string(c_[k]);
    if (k) os << "*x^" << k;
    first = false;
  }
  return os.str();
}

RationalPoly pow(const RationalPoly& p, unsigned k) {
  RationalPoly acc = RationalPoly::constant(1);
  for (unsigned i = 0; i < k; ++i) acc = acc * p;
  return acc;
}

RationalPoly squarefree_part(const RationalPoly& p) {
  if (p.degree() <= 0) return p;
  const auto g = RationalPoly::gcd(p, p.derivative());
  return RationalPoly::divmod(p, g).first;
}

std::vector<RationalPoly> sturm_chain(const RationalPoly& p) {
  std::vector<RationalPoly> chain{p};
  if (p.degree() <= 0) return chain;
  chain.push_back(p.derivative());
  while (true) {
    auto r = RationalPoly::divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(Rational(-1) * r);
  }
  return chain;
}

namespace {

int variations(const std::vector<RationalPoly>& chain, const Rational& t) {
  int v = 0, last = 0;
  for (const auto& q : chain) {
    const int s = q.sign_at(t);
    if (s == 0) continue;
    if (last && s != last) ++v;
    last = s;
  }
  return v;
}

// a point of (lo, hi) that is not a root, near the midpoint
Rational split_point(const RationalPoly& p, const Rational& lo, const Rational& hi) {
  Rational off = (hi - lo) / 4;
  Rational mid = (lo + hi) / 2;
  while (p.sign_at(mid) == 0) {
    mid = (lo + hi) / 2 + off;
    off /= 2;
  }
  return mid;
}

void isolate(const std::vector<RationalPoly>& chain, const Rational& lo, const Rational& hi, int count,
             const Rational& width, std::vector<RootBracket>& out) {
  // invariant: `count` roots in (lo, hi), none at lo or hi
  if (count == 0) return;
  if (count == 1 && hi - lo <= width) {
    out.push_back({lo, hi});
    return;
  }
  const Rational mid = split_point(chain[0], lo, hi);
  const int left = count_roots(chain, lo, mid);
  isolate(chain, lo, mid, left, width, out);
  isolate(chain, mid, hi, count - left, width, out);
}

}  // namespace

int count_roots(const std::vector<RationalPoly>& chain, const Rational& a, const Rational& b) {
  return variations(chain, a) - variations(chain, b);
}

std::vector<RootBracket> isolate_roots(const RationalPoly& p, const Rational& a, const Rational& b,
                                       const Rational& width) {
  std::vector<RootBracket> out;
  if (p.degree() <= 0 || a > b) return out;
  const auto sq = squarefree_part(p);
  const auto chain = sturm_chain(sq);
  Rational lo = a, hi = b;
  const bool root_at_a = sq.sign_at(a) == 0, root_at_b = sq.sign_at(b) == 0;
  if (root_at_a) out.push_back({a, a});
  if (a == b) return out;
  // step inwards past endpoint roots; the root-free margin is found by Sturm counts
  if (root_at_a) {
    Rational eps = (b - a) / 4;
    while (sq.sign_at(a + eps) == 0 || count_roots(chain, a, a + eps) != 0) eps /= 2;
    lo = a + eps;
  }
  if (root_at_b) {
    Rational eps = (b - lo) / 4;
    while (sq.sign_at(b - eps) == 0 || count_roots(chain, b - eps, b) != 1) eps /= 2;
    hi = b - eps;
  }
  isolate(chain, lo, hi, count_roots(chain, lo, hi), width, out);
  if (root_at_b) out.push_back({b, b});
  return out;
}

namespace {

// sup of |p'| on [lo, hi] by the coefficient-magnitude bound
Rational derivative_bound(const RationalPoly& dp, const Rational& lo, const Rational& hi) {
  const Rational m = std::max(abs(lo), abs(hi));
  Rational acc = 0, pw = 1;
  for (const auto& c : dp.coeffs()) {
    acc += abs(c) * pw;
    pw *= m;
  }
  return acc;
}

}  // namespace

CertifiedMax certified_max(const RationalPoly& p, const Rational& a, const Rational& b, const Rational& width) {
  if (a > b) throw std::invalid_argument("empty interval");
  CertifiedMax best{p(a), p(a), a};
  auto take = [&](const Rational& t) {
    const Rational v = p(t);
    if (v > best.lower) best.lower = v, best.argmax = t;
  };
  take(b);
  best.upper = best.lower;
  const auto dp = p.derivative();
  if (dp.is_zero()) return best;
  const auto brackets = isolate_roots(dp, a, b, width);
  const auto sq = squarefree_part(dp);
  for (auto br : brackets) {
    while (true) {
      take(br.lo);
      take(br.hi);
      const Rational vmax = std::max(p(br.lo), p(br.hi));
      const Rational up = vmax + derivative_bound(dp, br.lo, br.hi) * (br.hi - br.lo);
      if (up - vmax <= width / 2 || br.lo == br.hi) {
        best.upper = std::max(best.upper, up);
        break;
      }
      // bisect, keeping the sign change of p'
      const Rational mid = (br.lo + br.hi) / 2;
      const int sm = sq.sign_at(mid);
      if (sm == 0) br.lo = br.hi = mid;
      else if (sm == sq.sign_at(br.hi)) br.hi = mid;
      else br.lo = mid;
    }
  }
  best.upper = std::max(best.upper, best.lower);
  return best;
}

}  // namespace lagrangia
