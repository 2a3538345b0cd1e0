#ifndef COLORLAB_RATIONAL_HPP
#define COLORLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "colorlab/errors.hpp"

namespace colorlab {

// Exact arbitrary-precision rational, kept normalized (gcd 1, denominator
// positive) by the backend. All certificate arithmetic runs on this type so
// every inequality in the oracles is checked by equality/comparison, never by
// tolerance.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Canonical "num/den" text (plain integer when den == 1).
inline std::string rat_to_string(const Rational& r) {
    BigInt num = rat_num(r), den = rat_den(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Parses "num", "num/den" or "-num/den"; rejects anything else.
Rational rat_from_string(const std::string& text);

inline double rat_to_double(const Rational& r) { return static_cast<double>(r); }

Rational rat_pow(const Rational& base, int exponent);

} // namespace colorlab

#endif
