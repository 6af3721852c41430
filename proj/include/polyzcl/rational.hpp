#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "polyzcl/errors.hpp"

namespace polyzcl {

// Exact rational arithmetic everywhere; the library never touches floating point.
using Rational = mpq_class;

// Accepts "p", "-p", "p/q" with optional surrounding whitespace. Decimals and
// exponents are rejected so that genericity tests stay exact.
Rational parse_rational(std::string_view text);

// "p" or "p/q", canonical (gcd reduced, denominator positive).
std::string to_string(const Rational& r);

}  // namespace polyzcl
