#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace pmdecomp {

// Exact arbitrary-precision rational, always reduced, denominator > 0.
// All coordinates, slopes and intercepts in this project are Rationals;
// there is no floating point anywhere in the set algebra.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Serialized form is "p/q" with "/q" omitted when q == 1.
std::string to_string(const Rational& r);

// Parses "p", "-p", "p/q" with q > 0. Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

inline Rational rat(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Smallest integer n with n >= a/b for b > 0.
BigInt ceil_div(const BigInt& a, const BigInt& b);

// Smallest integer n with n >= r.
BigInt rational_ceil(const Rational& r);

} // namespace pmdecomp
