#ifndef EXPO_RATIONAL_HPP
#define EXPO_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace expo {

// Exact rational scalar used for all probability masses and estimand
// arithmetic. GMP keeps numerators and denominators arbitrary precision,
// so enumerated tables reproduce exactly instead of to rounding error.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Exact value of the double (doubles are dyadic rationals).
inline Rational rational_from_double(double x) { return Rational(x); }

inline double to_double(const Rational& r) { return r.get_d(); }

// Numerator/denominator in canonical form (den > 0), as decimal strings.
std::string numerator_string(const Rational& r);
std::string denominator_string(const Rational& r);

// Parses "p/q", "p", or a decimal literal like "0.25" exactly.
Rational parse_rational(const std::string& text);

// Fixed significant-digit rendering used by all reports, so diffs in CI
// are stable. 12 significant digits, no trailing-zero trimming games.
std::string to_decimal_string(const Rational& r, int significant_digits = 12);

// n choose k and falling factorial N!/(N-n)!, exact.
mpz_class binomial(unsigned n, unsigned k);
mpz_class falling_factorial(unsigned n, unsigned k);

}  // namespace expo

#endif  // EXPO_RATIONAL_HPP
