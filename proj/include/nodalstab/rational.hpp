#ifndef NODALSTAB_RATIONAL_HPP
#define NODALSTAB_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace nodalstab {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p/q", "p" or "-p/q". Throws Error(InvalidRational) on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms with positive q, or "p" when q == 1.
std::string to_string(const Rational& value);

/// Comma-separated list of rationals, e.g. "1,1/2,-3".
std::vector<Rational> parse_rational_list(std::string_view text);

Integer lcm_of_denominators(const std::vector<Rational>& values);

/// Largest integer n with n <= value.
Integer floor_of(const Rational& value);

/// Smallest integer n with n*n >= value (value >= 0).
Integer ceil_sqrt(const Rational& value);

inline int sign(const Rational& value) { return value.sign(); }

}  // namespace nodalstab

#endif
