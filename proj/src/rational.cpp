#include "harbourne/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace harbourne {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    value_ = Impl(BigInt(-num), BigInt(-den));
  } else {
    value_ = Impl(num, den);
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

BigInt parse_integer(std::string_view text, bool allow_sign, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size())
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '.' || c == 'e' || c == 'E')
      throw std::invalid_argument("malformed rational '" + std::string(whole) +
                                  "': decimals are not accepted, write an exact fraction such as -29/12");
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, true, text), BigInt(1));
  const BigInt num = parse_integer(text.substr(0, slash), true, text);
  const BigInt den = parse_integer(text.substr(slash + 1), false, text);
  if (den == 0) throw std::invalid_argument("malformed rational '" + std::string(text) + "': zero denominator");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::string Rational::to_fraction_string() const {
  return numerator().str() + "/" + denominator().str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace harbourne
