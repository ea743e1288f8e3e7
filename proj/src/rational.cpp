#include "plumbing/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace plumbing {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size())
    throw std::invalid_argument("malformed rational \"" + std::string(whole) + "\"");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("malformed rational \"" + std::string(whole) + "\"");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits);
}

}  // namespace

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(num, den);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  return make_rational(num, den);
}

std::string to_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_string(const BigInt& value) { return value.str(); }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  const BigInt r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

BigInt floor(const Rational& value) {
  return floor_div(numerator(value), denominator(value));
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace plumbing
