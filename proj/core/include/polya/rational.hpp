#pragma once

// Exact arithmetic for the enumeration oracle, backed by GMP.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace polya {

using BigInt = mpz_class;
using Rational = mpq_class;  // always kept canonical (reduced, positive denominator)

/// Parses "p/q" or an integer "p". Decimal or exponent notation is rejected
/// with NonRationalNoiseError, since it would silently stand in for a float.
/// Throws DomainError for a zero denominator or malformed text.
Rational parse_rational(std::string_view text);

/// "p/q", with "/1" kept for integers so the text format stays uniform.
std::string to_fraction_string(const Rational& r);

/// num / den in canonical form. den must be nonzero.
Rational ratio(const BigInt& num, const BigInt& den);

BigInt factorial(std::uint64_t n);
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Nearest double.
inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace polya
