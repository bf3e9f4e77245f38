#ifndef PLESKEN_RATIONAL_HPP
#define PLESKEN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace plesken {

// Exact arbitrary-precision rational scalar. GMP keeps values canonical
// (gcd(|num|, den) = 1, den > 0), which every equality test here relies on.
using Rational = mpq_class;

// Parses "p/q" or "n" with optional leading '-'. Floating-point syntax,
// empty strings and zero denominators are rejected.
Rational parse_rational(const std::string& text);

// Formats as "p/q", or "n" when the denominator is 1.
std::string to_string(const Rational& value);

} // namespace plesken

#endif
