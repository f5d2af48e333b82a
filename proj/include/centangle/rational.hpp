#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace centangle {

// Exact arbitrary-precision arithmetic. Every quantity that the toolkit
// promises exactly (LP optima, weight-enumerator transforms, hierarchy
// thresholds) is carried as a Rational; doubles appear only at the edges.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);
BigInt ipow(const BigInt& base, int exp);

double to_double(const Rational& r);

// True when the decimal expansion of r terminates (denominator 2^a * 5^b).
bool decimal_terminates(const Rational& r);

enum class DecimalMode { Truncate, RoundHalfUp };

// Renders r as a plain decimal string. If the exact expansion terminates
// within max_digits fractional digits it is printed exactly; otherwise it is
// truncated or rounded to max_digits. Trailing fractional zeros are trimmed.
std::string to_decimal_string(const Rational& r, int max_digits,
                              DecimalMode mode = DecimalMode::RoundHalfUp);

// Parses "123", "-0.25", "3/4" style literals into an exact Rational.
Rational parse_rational(const std::string& text);

}  // namespace centangle
