#pragma once

#include <gmpxx.h>

#include <string>

namespace superbrauer {

// Exact arithmetic scalars. All linear algebra in this project is over Q;
// matrices that arise in practice have integer entries, so rational
// elimination is exact end to end.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a", "-a" or "a/b" (b > 0 after canonicalization).
/// Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& text);

/// Decimal-free rendering: "3/2", "-1", "0".
std::string to_string(const Rational& value);

}  // namespace superbrauer
