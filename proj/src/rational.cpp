#include "coalbribe/rational.hpp"

#include <limits>
#include <stdexcept>

namespace coalbribe {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  bool negative = false;
  if (digits.front() == '-' || digits.front() == '+') {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  return negative ? BigInt(-value) : value;
}

bool fits_int64(const BigInt& v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

std::int64_t ceil_to_int64(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;  // truncates toward zero
  if (q * den < num) {
    q += 1;
  }
  if (!fits_int64(q)) {
    throw std::overflow_error("rational ceiling does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(q);
}

bool at_least_fraction_of(std::int64_t lhs, const Rational& ratio, std::int64_t rhs) {
  const BigInt& num = boost::multiprecision::numerator(ratio);
  const BigInt& den = boost::multiprecision::denominator(ratio);
  if (fits_int64(num) && fits_int64(den) && num >= 0 && num <= (std::int64_t{1} << 40) &&
      den <= (std::int64_t{1} << 40) && lhs < (std::int64_t{1} << 40) &&
      rhs < (std::int64_t{1} << 40)) {
    auto n = static_cast<__int128>(static_cast<std::int64_t>(num));
    auto d = static_cast<__int128>(static_cast<std::int64_t>(den));
    return static_cast<__int128>(lhs) * d >= n * rhs;
  }
  return BigInt(lhs) * den >= num * BigInt(rhs);
}

}  // namespace coalbribe
