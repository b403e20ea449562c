#include "expo/rational.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace expo {

std::string numerator_string(const Rational& r) {
  return r.get_num().get_str();
}

std::string denominator_string(const Rational& r) {
  return r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    return Rational(mpz_class(text));
  }
  // Decimal literal: digits after the point scale the denominator.
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  bool negative = false;
  if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
    negative = digits[0] == '-';
    digits = digits.substr(1);
  }
  if (digits.empty()) throw std::invalid_argument("bad rational literal: " + text);
  mpz_class num(digits);
  mpz_class den = 1;
  for (size_t k = 0; k < text.size() - dot - 1; ++k) den *= 10;
  if (negative) num = -num;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_decimal_string(const Rational& r, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  if (r == 0) return "0";
  mpq_class a = abs(Rational(r));
  // Decimal exponent e with 10^(e-1) <= a < 10^e.
  int e = 0;
  mpq_class ten = 10;
  mpq_class lo = a;
  while (lo >= 1) {
    lo /= ten;
    ++e;
  }
  mpq_class hi = a;
  while (hi < mpq_class(1, 10)) {
    hi *= ten;
    --e;
  }
  // Round a * 10^(digits - e) to nearest integer.
  int shift = significant_digits - e;
  mpq_class scaled = a;
  for (int k = 0; k < shift; ++k) scaled *= ten;
  for (int k = 0; k < -shift; ++k) scaled /= ten;
  mpz_class twice_num = scaled.get_num() * 2 + scaled.get_den();
  mpz_class rounded = twice_num / (scaled.get_den() * 2);
  std::string mantissa = rounded.get_str();
  if ((int)mantissa.size() > significant_digits) {
    // Rounding bumped into the next decade (e.g. 9.99... -> 10.0).
    mantissa = mantissa.substr(0, significant_digits);
    ++e;
  }
  std::string out;
  if (r < 0) out += "-";
  if (e <= 0) {
    out += "0.";
    out.append(-e, '0');
    out += mantissa;
  } else if (e >= (int)mantissa.size()) {
    out += mantissa;
    out.append(e - mantissa.size(), '0');
  } else {
    out += mantissa.substr(0, e);
    out += ".";
    out += mantissa.substr(e);
  }
  return out;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class falling_factorial(unsigned n, unsigned k) {
  mpz_class out = 1;
  for (unsigned j = 0; j < k; ++j) out *= n - j;
  return out;
}

}  // namespace expo
