#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lagrangia {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Canonical "a/b" form; integers are written as "a/1" so the format is uniform.
std::string to_string(const Rational& q);

/// Parses "a", "a/b" or a finite decimal such as "0.125" exactly.
Rational parse_rational(const std::string& text);

Rational pow(const Rational& base, unsigned exponent);

inline double to_double(const Rational& q) { return q.get_d(); }

Rational from_double(double x);

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);
/// n (n-1) ... (n-k+1); zero when k > n.
BigInt falling_factorial(long n, unsigned k);

}  // namespace lagrangia
