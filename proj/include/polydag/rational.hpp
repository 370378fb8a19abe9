#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polydag {

using Rational = mpq_class;

/// Parses "p/q", "p" or a finite decimal such as "-1.25" into a canonical rational.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Nearest double; only for rendering and reporting, never for predicates.
inline double to_double(const Rational& value) { return value.get_d(); }

/// Exact conversion of a finite double (every finite double is a dyadic rational).
Rational from_double(double value);

}  // namespace polydag
