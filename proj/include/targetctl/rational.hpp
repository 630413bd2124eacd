#pragma once

#include <gmpxx.h>

#include <string>

namespace targetctl {

// Exact arbitrary-precision arithmetic. mpq_class keeps values canonical
// (reduced, positive denominator) through all operations.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parse "a" or "a/b" (base 10). Throws InputError on malformed input or
/// zero denominator.
Rational rational_from_string(const std::string& text);

/// Canonical "a" or "a/b" rendering.
std::string to_string(const Rational& q);

} // namespace targetctl
