#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "yangsym/tau.hpp"
#include "yangsym/upolynomial.hpp"

using namespace yangsym;
using namespace yangsym::testing;

TEST_CASE("rational arithmetic is canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
  CHECK_THROWS(Rational::parse("x"));
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(factorial(4) == Rational(24));
}

TEST_CASE("series_mul keeps factor order") {
  const Word x{0}, y{1};
  USeries<FreeElement> a(2, {FreeElement(Rational(1)), FreeElement::word(x)});
  USeries<FreeElement> b(2, {FreeElement(Rational(1)), FreeElement::word(y)});
  const auto p = a * b;
  CHECK(p.order() == 2);
  CHECK(p.coeff(0) == FreeElement(Rational(1)));
  CHECK(p.coeff(1) == FreeElement::word(x) + FreeElement::word(y));
  CHECK(p.coeff(2) == FreeElement::word(Word{0, 1}));
  CHECK(a * USeries<FreeElement>(Rational(1)) == a);
}

TEST_CASE("series_mul of geometric series") {
  const auto g = rational_series(3, {1, 1, 1, 1});
  CHECK(g * g == rational_series(3, {1, 2, 3, 4}));
}

TEST_CASE("mixed orders reconcile to the minimum") {
  const auto a = rational_series(5, {1, 1, 1, 1, 1, 1});
  const auto b = rational_series(2, {1, 2, 3});
  CHECK((a + b).order() == 2);
  CHECK((a * b).order() == 2);
  CHECK((a + b) == rational_series(2, {2, 3, 4}));
}

TEST_CASE("series_shift examples") {
  const auto inv_u = USeries<Rational>::term(Rational(1), 1, 3);
  CHECK(series_shift(inv_u, Rational(1)) == rational_series(3, {0, 1, -1, 1}));
  CHECK(series_shift(inv_u, Rational(0)) == inv_u);

  // (u-1)^{-2}: check by multiplying back with (u-1)^2 = u^2 - 2u + 1.
  const auto s = series_shift(USeries<Rational>::term(Rational(1), 2, 4), Rational(-1));
  CHECK(s == rational_series(4, {0, 0, 1, 2, 3}));
  for (int j = 0; j + 2 <= 4; ++j) {
    const Rational back = s.coeff(j + 2) - Rational(2) * s.coeff(j + 1) + s.coeff(j);
    CHECK(back == Rational(j == 0 ? 1 : 0));
  }
}

TEST_CASE("series_shift refuses to shift an exact non-constant series") {
  const USeries<Rational> exact(kExactOrder, {Rational(1), Rational(1)});
  CHECK_THROWS_AS(series_shift(exact, Rational(1)), std::domain_error);
}

TEST_CASE("series_invert examples") {
  CHECK(series_invert(rational_series(3, {1, 1})) == rational_series(3, {1, -1, 1, -1}));
  CHECK(series_invert(USeries<Rational>(Rational(1))) == USeries<Rational>(Rational(1)));
  const auto f = USeries<Rational>(2, {Rational(2), Rational(1)});
  const auto g = series_invert(f);
  CHECK(g == USeries<Rational>(2, {Rational(1, 2), Rational(-1, 4), Rational(1, 8)}));
  CHECK(f * g == USeries<Rational>(2, {Rational(1)}));
  CHECK_THROWS_AS(series_invert(rational_series(3, {0, 1})), std::domain_error);
}

TEST_CASE("tau_mul examples") {
  using Op = TauOperator<Rational>;
  const auto f = rational_series(3, {1, 2});
  const auto g = rational_series(3, {0, 1, 5});
  const Op prod = Op(f, 1) * Op(g, 1);
  CHECK(prod == Op(f * series_shift(g, Rational(1)), 2));
  CHECK(Op(f, 0) * Op(g, 0) == Op(f * g, 0));

  const Op x(USeries<Rational>::term(Rational(1), 1, 3), -1);
  CHECK(x * x == Op(rational_series(3, {0, 0, 1, 1}), -2));
}

TEST_CASE("factorial powers") {
  using P = UPolynomial<Rational>;
  CHECK(falling_factorial(2) == P({Rational(0), Rational(-1), Rational(1)}));
  CHECK(falling_factorial(0) == P(Rational(1)));
  CHECK(rising_factorial(3) == P({Rational(0), Rational(2), Rational(3), Rational(1)}));
  const auto shifted = falling_factorial(poly_shift(P::variable(), Rational(-1)), 2);
  CHECK(poly_eval(shifted, Rational(5)) == Rational(12));
}

TEST_CASE("property: series ring axioms on random noncommutative series") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int order = 1 + trial % 6;
    const auto a = random_free_series(rng, order);
    const auto b = random_free_series(rng, order);
    const auto c = random_free_series(rng, order);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
  }
}

TEST_CASE("property: shifts compose and are multiplicative") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int order = 1 + trial % 6;
    const auto f = random_free_series(rng, order);
    const auto g = random_free_series(rng, order);
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    CHECK(series_shift(series_shift(f, a), b) == series_shift(f, a + b));
    CHECK(series_shift(f * g, a) == series_shift(f, a) * series_shift(g, a));
  }
}

TEST_CASE("property: tau operators associate and tau^c tau^-c = 1") {
  std::mt19937_64 rng(13);
  using Op = TauOperator<FreeElement>;
  for (int trial = 0; trial < 10; ++trial) {
    const int order = 2 + trial % 4;
    Op x, y, z;
    for (int d = -1; d <= 1; ++d) {
      x += Op(random_free_series(rng, order), d);
      y += Op(random_free_series(rng, order), d - 1);
      z += Op(random_free_series(rng, order), -d);
    }
    CHECK((x * y) * z == x * (y * z));
  }
  for (int c = -3; c <= 3; ++c) {
    const Op up(USeries<FreeElement>(Rational(1)), c);
    const Op down(USeries<FreeElement>(Rational(1)), -c);
    CHECK(up * down == Op(Rational(1)));
  }
}

TEST_CASE("property: series times its inverse is one") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int order = 1 + trial % 6;
    auto f = random_free_series(rng, order);
    Rational c0 = random_rational(rng);
    if (c0.is_zero()) c0 = Rational(1);
    f.set_coeff(0, FreeElement(c0));
    const auto g = series_invert(f);
    CHECK(f * g == USeries<FreeElement>(order, {FreeElement(Rational(1))}));
    CHECK(g * f == USeries<FreeElement>(order, {FreeElement(Rational(1))}));
  }
}

TEST_CASE("exact series of different lengths add and multiply exactly") {
  const USeries<Rational> a(kExactOrder, {Rational(1), Rational(2)});
  const USeries<Rational> b(kExactOrder, {Rational(3), Rational(0), Rational(0), Rational(-1, 2)});
  const auto s = a + b;
  CHECK(s.is_exact());
  CHECK(s.stored() == 4);
  CHECK(s.coeff(0) == Rational(4));
  CHECK(s.coeff(1) == Rational(2));
  CHECK(s.coeff(3) == Rational(-1, 2));
  CHECK((b + a) == s);
  // (1 + 2x)(3 - x^3/2) = 3 + 6x - x^3/2 - x^4
  const auto p = a * b;
  CHECK(p.is_exact());
  CHECK(p == USeries<Rational>(kExactOrder, {Rational(3), Rational(6), Rational(0), Rational(-1, 2), Rational(-1)}));
  // Cancelling the top term leaves a shorter exact series.
  const auto d = s - b;
  CHECK(d == a);
}
