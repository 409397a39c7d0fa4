#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "yangsym/ring.hpp"

namespace yangsym {

/// Polynomial in a commuting variable u with coefficients in R.
template <class R>
class UPolynomial {
public:
  UPolynomial() = default;
  explicit UPolynomial(const Rational& c) {
    if (!c.is_zero()) coeffs_.push_back(R(c));
  }
  explicit UPolynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  /// c * u^d
  static UPolynomial monomial(R c, int d) {
    std::vector<R> v(static_cast<std::size_t>(d) + 1);
    v[static_cast<std::size_t>(d)] = std::move(c);
    return UPolynomial(std::move(v));
  }
  static UPolynomial variable() { return monomial(R(Rational(1)), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  R coeff(int d) const {
    if (d < 0 || d > degree()) return R();
    return coeffs_[static_cast<std::size_t>(d)];
  }
  const std::vector<R>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  UPolynomial& operator+=(const UPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    normalize();
    return *this;
  }
  UPolynomial& operator-=(const UPolynomial& o) { return *this += -o; }
  friend UPolynomial operator+(UPolynomial a, const UPolynomial& b) { return a += b; }
  friend UPolynomial operator-(UPolynomial a, const UPolynomial& b) { return a -= b; }
  UPolynomial operator-() const {
    UPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend UPolynomial operator*(const UPolynomial& a, const UPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return UPolynomial(std::move(out));
  }
  friend UPolynomial operator*(UPolynomial a, const Rational& q) {
    for (auto& c : a.coeffs_) c = c * q;
    a.normalize();
    return a;
  }
  friend bool operator==(const UPolynomial& a, const UPolynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<R> coeffs_;
};

/// p(u + a)
template <Ring R>
UPolynomial<R> poly_shift(const UPolynomial<R>& p, const Rational& a) {
  std::vector<R> out(static_cast<std::size_t>(std::max(p.degree() + 1, 0)));
  for (int d = 0; d <= p.degree(); ++d) {
    const R c = p.coeff(d);
    if (c.is_zero()) continue;
    for (int j = 0; j <= d; ++j)
      out[static_cast<std::size_t>(j)] = out[static_cast<std::size_t>(j)] + c * (binomial(d, j) * power(a, static_cast<unsigned>(d - j)));
  }
  return UPolynomial<R>(std::move(out));
}

inline Rational poly_eval(const UPolynomial<Rational>& p, const Rational& x) {
  Rational acc(0);
  for (int d = p.degree(); d >= 0; --d) acc = acc * x + p.coeff(d);
  return acc;
}

/// x (x-1) ... (x-k+1) for a polynomial argument x.
UPolynomial<Rational> falling_factorial(const UPolynomial<Rational>& x, int k);
/// x (x+1) ... (x+k-1) for a polynomial argument x.
UPolynomial<Rational> rising_factorial(const UPolynomial<Rational>& x, int k);

/// (u↓k) = u(u-1)...(u-k+1)
inline UPolynomial<Rational> falling_factorial(int k) {
  return falling_factorial(UPolynomial<Rational>::variable(), k);
}
/// (u↑k) = u(u+1)...(u+k-1)
inline UPolynomial<Rational> rising_factorial(int k) {
  return rising_factorial(UPolynomial<Rational>::variable(), k);
}

}  // namespace yangsym
