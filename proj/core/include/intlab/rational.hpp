#ifndef INTLAB_RATIONAL_HPP
#define INTLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace intlab {

/// Exact arbitrary-precision integers and rationals. All core arithmetic is
/// exact; floating point appears only in CLI rendering.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p", "p/q", or a decimal string such as "-4.25" exactly.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// n! as a big integer; n must be small enough to materialize.
BigInt factorial(unsigned n);

}  // namespace intlab

#endif  // INTLAB_RATIONAL_HPP
