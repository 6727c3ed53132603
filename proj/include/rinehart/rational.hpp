#ifndef RINEHART_RATIONAL_HPP
#define RINEHART_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "rinehart/errors.hpp"

namespace rinehart {

// Exact arithmetic over Q. cpp_rational keeps gcd(num, den) = 1 and den > 0,
// so equality of values is equality of representations.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Renders as "num/den", or plain "num" when the denominator is 1.
std::string rat_to_string(const Rational& r);

/// Parses "num", "-num" or "num/den". Throws user_error on malformed input.
Rational rat_from_string(const std::string& text);

Int factorial(unsigned n);

} // namespace rinehart

#endif
