#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace signlab {

using Rational = boost::multiprecision::mpq_rational;

/// Accepts "a", "-a", "a/b" with b > 0 after normalization.
Rational parse_rational(std::string_view text);

/// Always "num/den", even for integers, so files stay uniform.
std::string format_fraction(const Rational& value);

/// "num" for integers, otherwise "num/den".
std::string format_rational(const Rational& value);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace signlab
