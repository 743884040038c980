#include "topo/rational.hpp"

#include <cctype>

#include "topo/errors.hpp"

namespace topo {

namespace {

BigInt parse_integer(const std::string& s, const std::string& whole) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
  if (i == s.size()) throw ParseError("malformed number: " + whole);
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("malformed number: " + whole);
    v = v * 10 + (s[i] - '0');
  }
  return neg ? BigInt(-v) : v;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty()) throw ParseError("empty number");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt p = parse_integer(trim(s.substr(0, slash)), raw);
    BigInt q = parse_integer(trim(s.substr(slash + 1)), raw);
    if (q == 0) throw ParseError("zero denominator: " + raw);
    return Rational(p, q);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (ip.empty() || ip == "-" || ip == "+") ip += "0";
    if (fp.empty()) throw ParseError("malformed number: " + raw);
    BigInt whole = parse_integer(ip, raw);
    BigInt frac = parse_integer(fp, raw);
    if (fp[0] == '-' || fp[0] == '+') throw ParseError("malformed number: " + raw);
    BigInt scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    Rational r = Rational(abs(whole)) + Rational(frac, scale);
    return neg ? Rational(-r) : r;
  }
  return Rational(parse_integer(s, raw));
}

std::string format_rational(const Rational& r) {
  const BigInt& den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

}  // namespace topo
