#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace plumbing {

/// Arbitrary-precision integer. Expression templates are disabled so that
/// `auto` bindings always hold values.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Exact rational in lowest terms with a positive denominator.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Throws std::domain_error when `den` is zero.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument on
/// malformed text and std::domain_error on a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q", with q > 0 and gcd(p, q) = 1; integers render as "n/1".
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

BigInt floor(const Rational& value);
BigInt floor_div(const BigInt& a, const BigInt& b);

/// Lossy; display only.
double to_double(const Rational& value);

}  // namespace plumbing
