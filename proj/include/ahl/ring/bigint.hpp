#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ahl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& x) { return x.str(); }
std::string to_string(const Rational& x);

BigInt parse_bigint(std::string_view text);
Rational parse_rational(std::string_view text);

}  // namespace ahl
