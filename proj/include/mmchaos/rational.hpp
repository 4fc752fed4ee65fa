#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace mmchaos {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 2^exponent, exponent may be negative.
Rational pow2(int exponent);

// True when r = p / 2^e in lowest terms. Reports e if requested.
bool is_dyadic(const Rational& r, unsigned* exponent = nullptr);

double rational_to_double(const Rational& r);

// Accepts "p/q", "p/2^e", "2^-e", plain integers and decimal literals
// ("0.25", ".5"). Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text);

// Lowest terms with an explicit denominator: "3/4", "0/1", "1/1".
std::string format_rational(const Rational& r);

} // namespace mmchaos
