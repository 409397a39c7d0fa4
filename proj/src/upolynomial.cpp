#include "yangsym/upolynomial.hpp"

namespace yangsym {

namespace {

UPolynomial<Rational> step_product(const UPolynomial<Rational>& x, int k, int step) {
  if (k < 0) throw std::invalid_argument("factorial power with negative k");
  UPolynomial<Rational> acc(Rational(1));
  for (int j = 0; j < k; ++j) acc = acc * (x + UPolynomial<Rational>(Rational(step * j)));
  return acc;
}

}  // namespace

UPolynomial<Rational> falling_factorial(const UPolynomial<Rational>& x, int k) { return step_product(x, k, -1); }

UPolynomial<Rational> rising_factorial(const UPolynomial<Rational>& x, int k) { return step_product(x, k, 1); }

}  // namespace yangsym
