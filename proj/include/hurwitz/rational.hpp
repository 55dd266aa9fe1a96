#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hurwitz {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& value) { return value.get_str(); }
inline std::string to_string(const BigInt& value) { return value.get_str(); }

/// Accepts "p", "-p" or "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// num/den in lowest terms (the two-argument mpq constructor does not reduce).
inline Rational ratio(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// x^e for integer e of either sign (x must be nonzero when e < 0).
Rational power(const Rational& x, int e);

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

}  // namespace hurwitz
