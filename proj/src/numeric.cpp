#include "topo/numeric.hpp"

#include <cctype>

#include "topo/errors.hpp"

namespace topo {

namespace {

std::size_t trailing_zeros(const BigInt& m) {
  return m == 0 ? 0 : boost::multiprecision::lsb(boost::multiprecision::abs(m));
}

bool power_of_two(const BigInt& q) { return q > 0 && (q & (q - 1)) == 0; }

}  // namespace

Dyadic::Dyadic(BigInt mantissa, std::int64_t exponent) : m_(std::move(mantissa)), e_(exponent) {
  if (m_ == 0) {
    e_ = 0;
    return;
  }
  std::size_t tz = trailing_zeros(m_);
  m_ >>= tz;
  e_ += static_cast<std::int64_t>(tz);
}

std::optional<Dyadic> Dyadic::try_from_rational(const Rational& r) {
  BigInt q = boost::multiprecision::denominator(r);
  if (!power_of_two(q)) return std::nullopt;
  return Dyadic(boost::multiprecision::numerator(r), -static_cast<std::int64_t>(boost::multiprecision::msb(q)));
}

Dyadic Dyadic::from_rational(const Rational& r) {
  if (auto d = try_from_rational(r)) return *d;
  throw ParseError("not a dyadic rational: " + format_rational(r));
}

Rational Dyadic::to_rational() const {
  if (e_ >= 0) return Rational(BigInt(m_ << static_cast<unsigned>(e_)));
  return Rational(m_, BigInt(1) << static_cast<unsigned>(-e_));
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.m_ == 0) return b;
  if (b.m_ == 0) return a;
  std::int64_t e = std::min(a.e_, b.e_);
  BigInt m = (a.m_ << static_cast<unsigned>(a.e_ - e)) + (b.m_ << static_cast<unsigned>(b.e_ - e));
  return Dyadic(std::move(m), e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) { return Dyadic(a.m_ * b.m_, a.e_ + b.e_); }

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Dyadic abs(const Dyadic& d) { return d.sign() < 0 ? -d : d; }

Dyadic pow(const Dyadic& d, unsigned k) {
  Dyadic r(1), b = d;
  for (; k; k >>= 1, b *= b)
    if (k & 1u) r *= b;
  return r;
}

namespace {

std::string strip(const std::string& s) {
  std::string o;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) o += c;
  return o;
}

std::int64_t parse_exponent(const std::string& s, const std::string& whole) {
  try {
    std::size_t used = 0;
    long long e = std::stoll(s, &used);
    if (used != s.size()) throw ParseError("malformed exponent: " + whole);
    return e;
  } catch (const std::logic_error&) {
    throw ParseError("malformed exponent: " + whole);
  }
}

}  // namespace

Dyadic parse_dyadic(const std::string& raw) {
  std::string s = strip(raw);
  if (auto caret = s.find("2^"); caret != std::string::npos) {
    std::int64_t e = parse_exponent(s.substr(caret + 2), raw);
    if (caret == 0) return Dyadic(1, e);
    if (caret < 2 || s[caret - 1] != '*') throw ParseError("malformed dyadic: " + raw);
    Dyadic m = Dyadic::from_rational(parse_rational(s.substr(0, caret - 1)));
    return m.scaled(e);
  }
  return Dyadic::from_rational(parse_rational(s));
}

std::string to_dyadic_string(const Dyadic& d) {
  if (d.exponent() == 0) return d.mantissa().str();
  return d.mantissa().str() + "*2^" + std::to_string(d.exponent());
}

std::string to_fraction_string(const Dyadic& d) { return format_rational(d.to_rational()); }

std::string to_decimal_string(const Dyadic& d) {
  if (d.exponent() >= 0) return to_fraction_string(d);
  // m / 2^k = m * 5^k / 10^k
  unsigned k = static_cast<unsigned>(-d.exponent());
  BigInt m = boost::multiprecision::abs(d.mantissa());
  BigInt five = 1;
  for (unsigned i = 0; i < k; ++i) five *= 5;
  std::string digits = BigInt(m * five).str();
  if (digits.size() <= k) digits = std::string(k - digits.size() + 1, '0') + digits;
  std::string out = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
  return (d.sign() < 0 ? "-" : "") + out;
}

Dyadic finite_series(const std::vector<Dyadic>& xs, std::size_t l, std::size_t m) {
  if (l < 1 || l > m || m > xs.size())
    throw IndexOutOfRange("need 1 <= l <= m <= " + std::to_string(xs.size()) + ", got l=" + std::to_string(l) +
                          " m=" + std::to_string(m));
  Dyadic s = xs[l - 1];
  for (std::size_t k = l; k < m; ++k) s = s + xs[k];
  return s;
}

GeometricResult geometric_partial_sum(const Dyadic& x, unsigned m) {
  GeometricResult r;
  Dyadic term(1);
  r.sum = term;
  for (unsigned k = 1; k <= m; ++k) {
    term *= x;
    r.sum += term;
  }
  if (x != Dyadic(1)) {
    Rational c = geometric_closed_form(x.to_rational(), m);
    auto d = Dyadic::try_from_rational(c);
    if (!d) throw NonDyadicClosedForm(format_rational(c));
    r.closed_form = *d;
  }
  return r;
}

Rational geometric_closed_form(const Rational& x, unsigned m) {
  Rational p = 1;
  for (unsigned k = 0; k <= m; ++k) p *= x;
  return (1 - p) / (1 - x);
}

GeometricResult geometric_partial_sum(const Rational& x, unsigned m) {
  if (auto d = Dyadic::try_from_rational(x)) return geometric_partial_sum(*d, m);
  throw NonDyadicClosedForm(format_rational(geometric_closed_form(x, m)));
}

DyadicPoly::DyadicPoly(std::vector<Dyadic> coeffs) : c_(std::move(coeffs)) {}

DyadicPoly DyadicPoly::monomial(unsigned m) {
  std::vector<Dyadic> c(m + 1, Dyadic(0));
  c[m] = Dyadic(1);
  return DyadicPoly(std::move(c));
}

Dyadic DyadicPoly::operator()(const Dyadic& x) const {
  Dyadic r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

namespace {

bool between(const Dyadic& w, const Dyadic& u, const Dyadic& v) {
  return (u <= w && w <= v) || (v <= w && w <= u);
}

}  // namespace

BisectionResult bisection_invert(const DyadicPoly& p, const Dyadic& a, const Dyadic& b, const Dyadic& w,
                                 const Dyadic& tol) {
  if (!(a < b)) throw BracketViolation("step 0: need a < b");
  if (tol.sign() <= 0) throw BracketViolation("step 0: tolerance must be positive");
  BisectionResult r;
  Dyadic x = a, y = b, px = p(a), py = p(b);
  r.trace.push_back({x, y, px, py});
  if (!between(w, px, py)) throw BracketViolation("step 0: target outside [p(a), p(b)]");
  for (std::size_t step = 1;; ++step) {
    if (px == w) {
      r.value = x;
      return r;
    }
    if (py == w) {
      r.value = y;
      return r;
    }
    if (y - x <= tol) {
      r.value = x;
      return r;
    }
    Dyadic z = (x + y).half();
    Dyadic pz = p(z);
    if (between(w, px, pz)) {
      y = z;
      py = pz;
    } else {
      x = z;
      px = pz;
    }
    r.trace.push_back({x, y, px, py});
    if (!between(w, px, py)) throw BracketViolation("step " + std::to_string(step) + ": target left the bracket");
  }
}

BisectionResult mth_root(const Dyadic& a, unsigned m, const Dyadic& tol) {
  if (m == 0) throw BracketViolation("step 0: root degree must be at least 1");
  Dyadic hi = a > Dyadic(1) ? a : Dyadic(1);
  return bisection_invert(DyadicPoly::monomial(m), Dyadic(0), hi, a, tol);
}

namespace {

void check_lengths(const std::vector<Dyadic>& x, const std::vector<Dyadic>& y) {
  if (x.size() != y.size())
    throw LengthMismatch("vectors of length " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
  if (x.empty()) throw EmptyArgument("vectors must be nonempty");
}

Dyadic dot(const std::vector<Dyadic>& x, const std::vector<Dyadic>& y) {
  Dyadic s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace

CauchySchwarz cauchy_schwarz_check(const std::vector<Dyadic>& x, const std::vector<Dyadic>& y) {
  check_lengths(x, y);
  Dyadic xy = dot(x, y);
  CauchySchwarz r{xy * xy, dot(x, x) * dot(y, y), false};
  r.holds = r.lhs <= r.rhs;
  return r;
}

bool sqrt_sum_le(const Dyadic& a, const Dyadic& b, const Dyadic& c) {
  // a <= b + c + 2 sqrt(bc)
  Dyadic lhs = a - b - c;
  if (lhs.sign() <= 0) return true;
  return lhs * lhs <= Dyadic(4) * b * c;
}

MetricComparison metric_compare(const std::vector<Dyadic>& x, const std::vector<Dyadic>& y) {
  check_lengths(x, y);
  MetricComparison r;
  std::vector<Dyadic> diff(x.size()), sum(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    diff[i] = x[i] - y[i];
    sum[i] = x[i] + y[i];
    if (abs(diff[i]) > r.max_distance) r.max_distance = abs(diff[i]);
  }
  r.euclid_squared = dot(diff, diff);
  Dyadic d2 = r.max_distance * r.max_distance;
  r.sandwich = d2 <= r.euclid_squared && r.euclid_squared <= Dyadic(static_cast<long long>(x.size())) * d2;
  r.minkowski = sqrt_sum_le(dot(sum, sum), dot(x, x), dot(y, y));
  return r;
}

}  // namespace topo
