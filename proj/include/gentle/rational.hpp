#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace gentle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "3", "-2", "1/2". Decimal points and exponents are rejected so that no
// floating-point value can sneak into a computation.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

}  // namespace gentle
