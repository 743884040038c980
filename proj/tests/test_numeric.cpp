#include <doctest.h>

#include "topo/numeric.hpp"
#include "topo/random.hpp"

using namespace topo;

namespace {

Dyadic d(const char* s) { return parse_dyadic(s); }

// exact check that w lies between p(x) and p(y)
bool brackets(const Dyadic& w, const Dyadic& a, const Dyadic& b) {
  return (a <= w && w <= b) || (b <= w && w <= a);
}

}  // namespace

TEST_SUITE("numeric") {

TEST_CASE("dyadic canonical form and arithmetic") {
  Dyadic x(BigInt(12), 0);
  CHECK(x.mantissa() == 3);
  CHECK(x.exponent() == 2);
  CHECK(Dyadic(BigInt(0), 5).exponent() == 0);
  CHECK(d("3/8") + d("5/8") == Dyadic(1));
  CHECK(d("3/8") - d("5/8") == d("-1/4"));
  CHECK(d("3/8") * d("4") == d("3/2"));
  CHECK(d("1/2") < d("3/4"));
  CHECK(abs(d("-7/4")) == d("7/4"));
  CHECK(pow(d("1/2"), 10) == Dyadic::pow2(-10));
  CHECK(d("3").half() == d("3/2"));
  CHECK(Dyadic::from_rational(Rational(11, 8)) == d("11*2^-3"));
  CHECK_FALSE(Dyadic::try_from_rational(Rational(1, 3)));
  CHECK_THROWS_AS(Dyadic::from_rational(Rational(1, 3)), ParseError);
}

TEST_CASE("dyadic arithmetic agrees with rationals") {
  Rng rng(21);
  for (int i = 0; i < 2000; ++i) {
    auto a = random_dyadic(rng, 40, 30), b = random_dyadic(rng, 40, 30);
    REQUIRE((a + b).to_rational() == a.to_rational() + b.to_rational());
    REQUIRE((a - b).to_rational() == a.to_rational() - b.to_rational());
    REQUIRE((a * b).to_rational() == a.to_rational() * b.to_rational());
    REQUIRE((a < b) == (a.to_rational() < b.to_rational()));
    REQUIRE(Dyadic::from_rational(a.to_rational()) == a);
  }
}

TEST_CASE("parsing and formatting") {
  CHECK(d("11*2^-3") == Dyadic(BigInt(11), -3));
  CHECK(d("2^-4") == Dyadic::pow2(-4));
  CHECK(d("1.375") == d("11/8"));
  CHECK(d("-0.5") == d("-1/2"));
  CHECK(d(" 6 ") == Dyadic(6));
  CHECK(d("3*2^2") == Dyadic(12));
  CHECK_THROWS_AS(d("1/3"), ParseError);
  CHECK_THROWS_AS(d("0.1"), ParseError);
  CHECK_THROWS_AS(d("abc"), ParseError);
  CHECK_THROWS_AS(d("3*2^x"), ParseError);
  CHECK_THROWS_AS(d("32^4"), ParseError);
  auto v = d("11/8");
  CHECK(to_dyadic_string(v) == "11*2^-3");
  CHECK(to_fraction_string(v) == "11/8");
  CHECK(to_decimal_string(v) == "1.375");
  CHECK(to_decimal_string(d("-1/16")) == "-0.0625");
  CHECK(to_decimal_string(Dyadic(12)) == "12");
  CHECK(to_dyadic_string(Dyadic(0)) == "0");
  CHECK(parse_rational("7/2") == Rational(7, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(format_rational(Rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("finite series") {
  std::vector<Dyadic> xs{1, 2, 3};
  CHECK(finite_series(xs, 1, 3) == Dyadic(6));
  CHECK(finite_series(xs, 2, 2) == Dyadic(2));
  CHECK(finite_series({0, 0, 0}, 1, 3) == Dyadic(0));
  CHECK_THROWS_AS(finite_series(xs, 0, 2), IndexOutOfRange);
  CHECK_THROWS_AS(finite_series(xs, 3, 2), IndexOutOfRange);
  CHECK_THROWS_AS(finite_series(xs, 1, 4), IndexOutOfRange);
  Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    auto v = random_dyadic_vector(rng, 1 + i % 8);
    auto z = random_dyadic(rng, 20, 10);
    std::vector<Dyadic> zv;
    for (auto& x : v) zv.push_back(z * x);
    REQUIRE(finite_series(zv, 1, v.size()) == z * finite_series(v, 1, v.size()));
  }
}

TEST_CASE("geometric partial sums") {
  CHECK(geometric_partial_sum(d("1/2"), 3).sum == d("15/8"));
  for (unsigned m = 0; m < 10; ++m) CHECK(geometric_partial_sum(Dyadic(0), m).sum == Dyadic(1));
  for (unsigned m = 0; m <= 30; ++m) {
    auto g = geometric_partial_sum(d("1/2"), m);
    REQUIRE(abs(g.sum - Dyadic(2)) == Dyadic::pow2(-static_cast<std::int64_t>(m)));
    REQUIRE(g.closed_form);
    REQUIRE(*g.closed_form == g.sum);
  }
  auto one = geometric_partial_sum(Dyadic(1), 4);
  CHECK(one.sum == Dyadic(5));
  CHECK_FALSE(one.closed_form);
  CHECK(geometric_closed_form(Rational(1, 3), 3) == Rational(40, 27));
  try {
    geometric_partial_sum(Rational(1, 3), 3);
    FAIL("expected NonDyadicClosedForm");
  } catch (const NonDyadicClosedForm& e) {
    CHECK(std::string(e.what()) == "40/27");
  }
  CHECK(geometric_partial_sum(Rational(3, 4), 2).sum == d("37/16"));
}

TEST_CASE("polynomials") {
  DyadicPoly p({Dyadic(1), Dyadic(0), Dyadic(2)});
  CHECK(p(Dyadic(3)) == Dyadic(19));
  CHECK(DyadicPoly::monomial(3)(d("1/2")) == d("1/8"));
}

TEST_CASE("bisection examples") {
  auto r = bisection_invert(DyadicPoly::monomial(1), Dyadic(0), Dyadic(1), d("3/8"), d("2^-3"));
  CHECK(r.value == d("3/8"));
  auto s = bisection_invert(DyadicPoly::monomial(2), Dyadic(1), Dyadic(2), Dyadic(2), d("2^-4"));
  CHECK(s.value == d("11/8"));
  CHECK(s.trace.size() == 5);
  auto hit = bisection_invert(DyadicPoly::monomial(2), Dyadic(1), Dyadic(2), Dyadic(1), d("2^-4"));
  CHECK(hit.value == Dyadic(1));
  CHECK(hit.trace.size() == 1);
  auto root = mth_root(Dyadic(2), 2, d("2^-4"));
  CHECK(root.value == d("11/8"));
  CHECK(to_decimal_string(root.value) == "1.375");
  for (unsigned m = 1; m <= 6; ++m) CHECK(mth_root(Dyadic(1), m, d("2^-10")).value == Dyadic(1));
  CHECK_THROWS_AS(bisection_invert(DyadicPoly::monomial(2), Dyadic(0), Dyadic(1), Dyadic(2), d("2^-4")),
                  BracketViolation);
  CHECK_THROWS_AS(bisection_invert(DyadicPoly::monomial(2), Dyadic(1), Dyadic(1), Dyadic(1), d("2^-4")),
                  BracketViolation);
  CHECK_THROWS_AS(bisection_invert(DyadicPoly::monomial(2), Dyadic(0), Dyadic(1), Dyadic(0), Dyadic(0)),
                  BracketViolation);
  CHECK_THROWS_AS(mth_root(Dyadic(2), 0, d("2^-4")), BracketViolation);
}

TEST_CASE("non-monotone polynomials") {
  // p(x) = x^2 - x on [0, 2] still brackets 1/4 and converges to a preimage
  DyadicPoly p({Dyadic(0), Dyadic(-1), Dyadic(1)});
  auto r = bisection_invert(p, Dyadic(0), Dyadic(2), d("1/4"), d("2^-6"));
  CHECK(brackets(d("1/4"), p(r.value), p(r.value + d("2^-6"))));
  // p(0) = p(1) = 0, so w = 1/4 is outside the starting bracket
  try {
    bisection_invert(p, Dyadic(0), Dyadic(1), d("1/4"), d("2^-6"));
    FAIL("expected BracketViolation");
  } catch (const BracketViolation& e) {
    CHECK(std::string(e.what()).rfind("step 0", 0) == 0);
  }
}

TEST_CASE("bisection invariants on random monotone instances") {
  Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    auto in = random_bisection_instance(rng);
    auto r = bisection_invert(in.p, in.a, in.b, in.w, in.tol);
    Dyadic width = in.b - in.a;
    for (std::size_t s = 0; s < r.trace.size(); ++s) {
      const auto& st = r.trace[s];
      REQUIRE(st.y - st.x == width.scaled(-static_cast<std::int64_t>(s)));
      REQUIRE(st.px == in.p(st.x));
      REQUIRE(st.py == in.p(st.y));
      REQUIRE(brackets(in.w, st.px, st.py));
    }
    const auto& last = r.trace.back();
    bool exact = in.p(r.value) == in.w;
    REQUIRE((exact || last.y - last.x <= in.tol));
    if (!exact) REQUIRE(brackets(in.w, in.p(r.value), in.p(r.value + (last.y - last.x))));
  }
}

TEST_CASE("root laws") {
  Dyadic tol = Dyadic::pow2(-20);
  auto r4 = mth_root(Dyadic(4), 2, tol).value;
  auto r9 = mth_root(Dyadic(9), 2, tol).value;
  auto r36 = mth_root(Dyadic(36), 2, tol).value;
  CHECK(r4 == Dyadic(2));
  // |root(ab) - root(a)root(b)| <= tol (root(a) + root(b)) + tol^2, with roots under 7
  CHECK(abs(r36 - r4 * r9) <= tol * Dyadic(7 + 7) + tol * tol);
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    auto a = abs(random_dyadic(rng, 12, 4));
    auto b = a + abs(random_dyadic(rng, 12, 4));
    unsigned m = 1 + static_cast<unsigned>(rng() % 5);
    REQUIRE(mth_root(a, m, Dyadic::pow2(-12)).value <= mth_root(b, m, Dyadic::pow2(-12)).value);
  }
}

TEST_CASE("power inequalities") {
  Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    Dyadic x = Dyadic(1) + abs(random_dyadic(rng, 8, 8));
    if (x == Dyadic(1)) x = d("3/2");
    unsigned m = 1 + static_cast<unsigned>(rng() % 50);
    REQUIRE(pow(x, m) >= Dyadic(static_cast<long long>(m)) * (x - Dyadic(1)) + Dyadic(1));
  }
  // explicit thresholds for growth above 2^20 and decay below 2^-20
  Dyadic up = d("33/32"), down = d("31/32");
  CHECK(pow(up, 452) > Dyadic::pow2(20));
  CHECK(pow(down, 448) < Dyadic::pow2(-20));
}

TEST_CASE("cauchy-schwarz and metric comparisons") {
  auto c = cauchy_schwarz_check({1, 2}, {2, 1});
  CHECK(c.lhs == Dyadic(16));
  CHECK(c.rhs == Dyadic(25));
  CHECK(c.holds);
  auto e = cauchy_schwarz_check({1, d("3/2"), -2}, {1, d("3/2"), -2});
  CHECK(e.lhs == e.rhs);
  CHECK_THROWS_AS(cauchy_schwarz_check({1}, {1, 2}), LengthMismatch);
  CHECK_THROWS_AS(cauchy_schwarz_check({}, {}), EmptyArgument);
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    std::size_t n = 1 + i % 8;
    auto x = random_dyadic_vector(rng, n), y = random_dyadic_vector(rng, n);
    REQUIRE(cauchy_schwarz_check(x, y).holds);
    auto mc = metric_compare(x, y);
    REQUIRE(mc.sandwich);
    REQUIRE(mc.minkowski);
  }
  auto mc = metric_compare({0, 0}, {3, 4});
  CHECK(mc.max_distance == Dyadic(4));
  CHECK(mc.euclid_squared == Dyadic(25));
  CHECK(sqrt_sum_le(Dyadic(9), Dyadic(4), Dyadic(1)));
  CHECK_FALSE(sqrt_sum_le(Dyadic(10), Dyadic(4), Dyadic(1)));
}

}
