#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lagrangia/rational.hpp"

namespace lagrangia {

/// Dense univariate polynomial with rational coefficients; coeffs()[k] multiplies x^k.
/// The zero polynomial has no coefficients.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly constant(const Rational& c);
  static RationalPoly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& lead() const { return c_.back(); }

  Rational operator()(const Rational& t) const;
  double eval(double t) const;
  int sign_at(const Rational& t) const;

  RationalPoly derivative() const;
  RationalPoly monic() const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& k, const RationalPoly& a);
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  /// (quotient, remainder) of Euclidean division; b must be non-zero.
  static std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);
  static RationalPoly gcd(RationalPoly a, RationalPoly b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

RationalPoly pow(const RationalPoly& p, unsigned k);

/// p / gcd(p, p'): same real roots, all simple.
RationalPoly squarefree_part(const RationalPoly& p);

/// Sturm chain of a squarefree polynomial.
std::vector<RationalPoly> sturm_chain(const RationalPoly& p);

/// Number of distinct real roots of squarefree p in the half-open interval (a, b].
int count_roots(const std::vector<RationalPoly>& chain, const Rational& a, const Rational& b);

struct RootBracket {
  Rational lo, hi;  // lo == hi for an exact rational root; otherwise one simple root in (lo, hi)
};

/// Isolates every distinct real root of p in [a, b], each to width <= width.
std::vector<RootBracket> isolate_roots(const RationalPoly& p, const Rational& a, const Rational& b,
                                       const Rational& width);

struct CertifiedMax {
  Rational lower;   // attained at argmax_lo or argmax_hi, both feasible
  Rational upper;   // no point of [a, b] exceeds it
  Rational argmax;  // feasible point attaining `lower`
};

/// Global maximum of p on [a, b] from endpoints and bracketed critical points;
/// upper - lower is driven below `width` by refining the brackets.
CertifiedMax certified_max(const RationalPoly& p, const Rational& a, const Rational& b, const Rational& width);

}  // namespace lagrangia
