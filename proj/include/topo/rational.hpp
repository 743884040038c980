#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace topo {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", integers and finite decimals. Throws ParseError.
Rational parse_rational(const std::string& s);
// "p/q", or "p" for integers.
std::string format_rational(const Rational& r);

}  // namespace topo
