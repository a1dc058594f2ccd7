#pragma once

#include <gmpxx.h>

#include <string>

namespace polymod {

// Exact arbitrary-precision arithmetic, GMP-backed. No floating point is
// used anywhere in the library; decimals appear only at the formatting
// boundary (format_rational).
using Int = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient C(n, k) with the zero-outside convention:
/// returns 0 whenever n < 0, k < 0 or k > n; C(n, 0) = 1 for n >= 0.
Int binomial(long n, long k);

/// Decimal expansion of q with `digits` fractional digits, rounded
/// half-to-even. Deterministic; throws InvalidParams if digits < 1.
std::string format_rational(const Rational& q, int digits);

/// Parse "p/q", plain integers, decimals ("0.25") and scientific
/// notation ("1e-8") into an exact rational. Throws InvalidParams on
/// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Render q as "p/q" ("p" when the denominator is 1).
std::string rational_string(const Rational& q);

} // namespace polymod
