#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topo/rational.hpp"

namespace topo {

// mantissa * 2^exponent, mantissa odd or zero (then exponent 0).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long v) : Dyadic(BigInt(v), 0) {}
  Dyadic(BigInt mantissa, std::int64_t exponent);
  // Throws ParseError when the rational is not dyadic.
  static Dyadic from_rational(const Rational& r);
  static std::optional<Dyadic> try_from_rational(const Rational& r);
  static Dyadic pow2(std::int64_t e) { return Dyadic(1, e); }

  const BigInt& mantissa() const { return m_; }
  std::int64_t exponent() const { return e_; }
  Rational to_rational() const;
  int sign() const { return m_.sign(); }

  Dyadic operator-() const { return Dyadic(-m_, e_); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
  Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }
  // times 2^k
  Dyadic scaled(std::int64_t k) const { return m_ == 0 ? *this : Dyadic(m_, e_ + k); }
  Dyadic half() const { return scaled(-1); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.m_ == b.m_ && a.e_ == b.e_; }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  BigInt m_ = 0;
  std::int64_t e_ = 0;
};

Dyadic abs(const Dyadic& d);
Dyadic pow(const Dyadic& d, unsigned k);

// "m*2^e", "2^e", "p/q" with q a power of two, integers, finite decimals.
// Throws ParseError, also for non-dyadic values.
Dyadic parse_dyadic(const std::string& s);
std::string to_dyadic_string(const Dyadic& d);   // "11*2^-3"
std::string to_fraction_string(const Dyadic& d);  // "11/8"
std::string to_decimal_string(const Dyadic& d);   // "1.375"

// Sum of x_l .. x_m, 1-based, by the running-sum recursion. Throws IndexOutOfRange.
Dyadic finite_series(const std::vector<Dyadic>& xs, std::size_t l, std::size_t m);

struct GeometricResult {
  Dyadic sum;
  std::optional<Dyadic> closed_form;  // absent for x = 1
};
// sum_{k=0}^m x^k
GeometricResult geometric_partial_sum(const Dyadic& x, unsigned m);
// (1 - x^(m+1)) / (1 - x); requires x != 1.
Rational geometric_closed_form(const Rational& x, unsigned m);
// Exact rational partial sum; throws NonDyadicClosedForm carrying "p/q"
// when the closed form is not dyadic.
GeometricResult geometric_partial_sum(const Rational& x, unsigned m);

class DyadicPoly {
 public:
  DyadicPoly() = default;
  explicit DyadicPoly(std::vector<Dyadic> coeffs);  // ascending degree
  static DyadicPoly monomial(unsigned m);
  const std::vector<Dyadic>& coeffs() const { return c_; }
  Dyadic operator()(const Dyadic& x) const;

 private:
  std::vector<Dyadic> c_;
};

struct BisectionStep {
  Dyadic x, y;    // bracket after the step
  Dyadic px, py;  // p at the endpoints
};
struct BisectionResult {
  Dyadic value;
  std::vector<BisectionStep> trace;  // trace[0] is the initial bracket
};
// Throws BracketViolation naming the step where w left the bracket.
BisectionResult bisection_invert(const DyadicPoly& p, const Dyadic& a, const Dyadic& b, const Dyadic& w,
                                 const Dyadic& tol);
// bisection of x^m on [0, max(1, a)]
BisectionResult mth_root(const Dyadic& a, unsigned m, const Dyadic& tol);

struct CauchySchwarz {
  Dyadic lhs;  // (sum x_k y_k)^2
  Dyadic rhs;  // (sum x_k^2)(sum y_k^2)
  bool holds = false;
};
// Throws LengthMismatch, EmptyArgument for empty vectors.
CauchySchwarz cauchy_schwarz_check(const std::vector<Dyadic>& x, const std::vector<Dyadic>& y);

struct MetricComparison {
  Dyadic max_distance;       // d(x, y)
  Dyadic euclid_squared;     // e(x, y)^2
  bool sandwich = false;     // d^2 <= e^2 <= n d^2
  bool minkowski = false;    // |x + y| <= |x| + |y|, squared form
};
MetricComparison metric_compare(const std::vector<Dyadic>& x, const std::vector<Dyadic>& y);

// sqrt(a) <= sqrt(b) + sqrt(c) for non-negative a, b, c, exactly.
bool sqrt_sum_le(const Dyadic& a, const Dyadic& b, const Dyadic& c);

}  // namespace topo
