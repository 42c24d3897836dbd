#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sortnet {

// Exact arithmetic carrier for all distributions and expectations.
// mpq_class keeps values in lowest terms with a positive denominator as long
// as every value is built through make_rational or arithmetic on canonical
// operands.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// mpz_class has no long long constructor.
inline BigInt to_bigint(long long v) { return BigInt(std::to_string(v)); }

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// "p/q", or just "p" for integers.
std::string to_string(const Rational& q);

// Decimal rendering to 12 significant digits.
std::string to_decimal(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace sortnet
