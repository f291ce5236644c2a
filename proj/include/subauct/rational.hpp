#pragma once

#include <gmpxx.h>

#include <string>

namespace subauct {

/// Exact rational number. All money amounts, prices and welfare values in
/// this library are Rational; there is no floating point anywhere in the
/// valuation logic.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization).
Rational parse_rational(const std::string& text);

/// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// 2^k as an exact rational; k may be negative.
Rational pow2(int k);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace subauct
