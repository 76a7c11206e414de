#include "lagrangia/rational.hpp"

#include <stdexcept>

namespace lagrangia {

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rational q;
    try {
      q = Rational(BigInt(text.substr(0, slash), 10), BigInt(text.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("malformed rational '" + text + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
  }
  const auto dot = text.find('.');
  try {
    if (dot == std::string::npos) return Rational(BigInt(text, 10));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t frac = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument("bad");
    if (digits[0] == '+') digits.erase(0, 1);
    BigInt den = 1;
    for (std::size_t i = 0; i < frac; ++i) den *= 10;
    Rational q(BigInt(digits, 10), den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed number '" + text + "'");
  }
}

Rational pow(const Rational& base, unsigned exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational from_double(double x) { return Rational(x); }

BigInt binomial(unsigned n, unsigned k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

BigInt factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigInt falling_factorial(long n, unsigned k) {
  BigInt f = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (n - static_cast<long>(i) <= 0) return 0;
    f *= n - static_cast<long>(i);
  }
  return f;
}

}  // namespace lagrangia
