#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace kodaira {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Renders a rational as "p/q" (or "p" when q == 1). Always canonical.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace kodaira
