#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace dcgen::exact {

using Rational = boost::multiprecision::cpp_rational;

// The decimal value a double was written as: the shortest representation that
// round-trips, read back as an exact fraction. 0.708 becomes 708/1000, not the
// nearest binary64.
Rational from_decimal(double value);

std::int64_t ceil(const Rational& q);
std::int64_t floor(const Rational& q);
// Nearest integer, halves rounded up.
std::int64_t round_half_up(const Rational& q);

double to_double(const Rational& q);

}  // namespace dcgen::exact
