#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace coalbribe {

/// Exact rational number, always normalized (positive denominator, lowest terms).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are written as "p/1".
std::string format_rational(const Rational& value);

/// Least integer k with k >= value.
std::int64_t ceil_to_int64(const Rational& value);

/// Exact test of `lhs >= ratio * rhs` on non-negative integer counts.
bool at_least_fraction_of(std::int64_t lhs, const Rational& ratio, std::int64_t rhs);

}  // namespace coalbribe
