#ifndef DGLA_RATIONAL_HPP
#define DGLA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace dgla {

// Exact arithmetic over Q. cpp_rational keeps every value in canonical
// reduced form (gcd 1, positive denominator), so equality is syntactic.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" with decimal integers; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string rational_string(const Rational& value);

}  // namespace dgla

#endif
