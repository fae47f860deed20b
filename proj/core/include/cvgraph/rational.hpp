#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace cvgraph {

/// Exact arbitrary-precision rational. Always held in canonical form:
/// gcd(|num|, den) = 1 and den >= 1. All arithmetic is exact; division by
/// zero throws. Expression templates are disabled so `auto` deduces Rational.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using BigInt = boost::multiprecision::cpp_int;

/// Parses `[+-]?digits` or `[+-]?digits/digits` (denominator unsigned,
/// nonzero). Non-canonical input such as "2/4" is accepted and reduced.
/// Returns nullopt on any malformed input.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical text: "p" when the denominator is 1, otherwise "p/q" with the
/// sign on the numerator. Inverse of parse_rational on valid values.
std::string to_string(const Rational& value);

inline Rational rational_abs(const Rational& value) {
  return value < 0 ? Rational(-value) : value;
}

}  // namespace cvgraph
