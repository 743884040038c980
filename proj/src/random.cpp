#include "topo/random.hpp"

namespace topo {

PseudoMetric random_pseudometric(Rng& rng, int n) {
  static const Rational weights[] = {Rational(0),    Rational(1, 2), Rational(1),    Rational(3, 2),
                                     Rational(2),    Rational(1, 3), Rational(2, 3), Rational(5, 4),
                                     Rational(7, 3), Rational(3)};
  std::uniform_int_distribution<int> pick(0, 9);
  std::bernoulli_distribution zero(0.15);
  Matrix d(n, std::vector<Rational>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      Rational w = zero(rng) ? Rational(0) : weights[pick(rng)];
      d[x][y] = d[y][x] = w;
    }
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (d[x][k] + d[k][y] < d[x][y]) d[x][y] = d[x][k] + d[k][y];
  return PseudoMetric(std::move(d));
}

Dyadic random_dyadic(Rng& rng, int bits, int max_shift) {
  long long lim = (1LL << bits) - 1;
  std::uniform_int_distribution<long long> k(-lim, lim);
  std::uniform_int_distribution<int> e(0, max_shift);
  return Dyadic(BigInt(k(rng)), -e(rng));
}

DyadicPoly random_monotone_poly(Rng& rng, unsigned max_degree, bool decreasing) {
  std::uniform_int_distribution<unsigned> deg(1, max_degree);
  std::uniform_int_distribution<int> num(0, 7), shift(0, 3);
  unsigned d = deg(rng);
  std::vector<Dyadic> c(d + 1);
  for (auto& x : c) x = Dyadic(BigInt(num(rng)), -shift(rng));
  if (c[d].sign() == 0) c[d] = Dyadic(1);
  if (decreasing)
    for (auto& x : c) x = -x;
  return DyadicPoly(std::move(c));
}

BisectionInstance random_bisection_instance(Rng& rng) {
  BisectionInstance in;
  in.p = random_monotone_poly(rng, 5, std::bernoulli_distribution(0.5)(rng));
  in.a = abs(random_dyadic(rng, 6, 4));
  Dyadic width = abs(random_dyadic(rng, 6, 3));
  if (width.sign() == 0) width = Dyadic(1);
  in.b = in.a + width;
  // w = p(a) + t (p(b) - p(a)) with t in [0, 1]
  std::uniform_int_distribution<int> t(0, 256);
  Dyadic pa = in.p(in.a), pb = in.p(in.b);
  in.w = pa + Dyadic(BigInt(t(rng)), -8) * (pb - pa);
  in.tol = Dyadic::pow2(-std::uniform_int_distribution<int>(1, 24)(rng));
  return in;
}

std::vector<Dyadic> random_dyadic_vector(Rng& rng, std::size_t n) {
  std::vector<Dyadic> v(n);
  for (auto& x : v) x = random_dyadic(rng, 10, 6);
  return v;
}

}  // namespace topo
