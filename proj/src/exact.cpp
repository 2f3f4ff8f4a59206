#include "dcgen/exact.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dcgen::exact {

using boost::multiprecision::cpp_int;

namespace {

cpp_int pow10(int n) {
  cpp_int p = 1;
  for (int i = 0; i < n; ++i) p *= 10;
  return p;
}

}  // namespace

Rational from_decimal(double value) {
  if (!std::isfinite(value)) throw std::domain_error("non-finite value has no exact form");
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::runtime_error("to_chars failed");
  std::string text(buf, end);

  bool negative = false;
  std::size_t pos = 0;
  if (!text.empty() && text[0] == '-') {
    negative = true;
    pos = 1;
  }
  cpp_int digits = 0;
  int exponent = 0;
  bool after_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      after_point = true;
    } else if (c == 'e' || c == 'E') {
      exponent += std::stoi(text.substr(pos + 1));
      break;
    } else {
      digits = digits * 10 + (c - '0');
      if (after_point) --exponent;
    }
  }
  Rational q = exponent >= 0 ? Rational(digits * pow10(exponent))
                             : Rational(digits, pow10(-exponent));
  return negative ? Rational(-q) : q;
}

std::int64_t floor(const Rational& q) {
  cpp_int n = boost::multiprecision::numerator(q);
  cpp_int d = boost::multiprecision::denominator(q);  // always positive
  cpp_int quot = n / d;                               // truncates toward zero
  if (n < 0 && quot * d != n) quot -= 1;
  return quot.convert_to<std::int64_t>();
}

std::int64_t ceil(const Rational& q) { return -floor(Rational(-q)); }

std::int64_t round_half_up(const Rational& q) { return floor(q + Rational(1, 2)); }

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace dcgen::exact
