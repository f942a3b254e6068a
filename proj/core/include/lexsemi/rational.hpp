#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lexsemi {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Reduced "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& n);

}  // namespace lexsemi
