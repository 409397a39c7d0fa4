#pragma once

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "yangsym/ring.hpp"

namespace yangsym {

/// Order of a series that is known exactly (finitely many terms, nothing
/// truncated). Scalars embedded as series carry this order.
inline constexpr int kExactOrder = INT_MAX;

template <class R>
class USeries;

template <Ring R>
USeries<R> series_mul(const USeries<R>& a, const USeries<R>& b);

/// Formal power series in u^{-1} truncated after u^{-order}. Coefficient m is
/// the u^{-m} coefficient. Binary operations reconcile to the smaller order.
template <class R>
class USeries {
public:
  USeries() = default;
  explicit USeries(const Rational& c) {
    if (!c.is_zero()) coeffs_.push_back(R(c));
  }
  USeries(int order, std::vector<R> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < 0) throw std::invalid_argument("USeries: negative order");
    normalize();
  }

  static USeries constant(R c, int order = kExactOrder) { return USeries(order, {std::move(c)}); }
  /// c * u^{-m}
  static USeries term(R c, int m, int order) {
    if (m > order) return zero(order);
    std::vector<R> v(static_cast<std::size_t>(m) + 1);
    v[static_cast<std::size_t>(m)] = std::move(c);
    return USeries(order, std::move(v));
  }
  static USeries zero(int order) { return USeries(order, {}); }

  int order() const { return order_; }
  bool is_exact() const { return order_ == kExactOrder; }
  /// Number of stored coefficients; everything past this index is zero.
  int stored() const { return static_cast<int>(coeffs_.size()); }
  R coeff(int m) const {
    if (m < 0 || m >= stored()) return R();
    return coeffs_[static_cast<std::size_t>(m)];
  }
  const std::vector<R>& coeffs() const { return coeffs_; }

  void set_coeff(int m, R value) {
    if (m < 0 || m > order_) throw std::out_of_range("USeries: coefficient beyond order");
    if (m >= stored()) coeffs_.resize(static_cast<std::size_t>(m) + 1);
    coeffs_[static_cast<std::size_t>(m)] = std::move(value);
    normalize();
  }

  bool is_zero() const { return coeffs_.empty(); }

  USeries truncated(int order) const {
    const int o = std::min(order, order_);
    const int keep = o == kExactOrder ? stored() : std::min(stored(), o + 1);
    std::vector<R> v(coeffs_.begin(), coeffs_.begin() + keep);
    return USeries(o, std::move(v));
  }

  USeries& operator+=(const USeries& o) { return combine(o, 1); }
  USeries& operator-=(const USeries& o) { return combine(o, -1); }
  friend USeries operator+(USeries a, const USeries& b) { return a += b; }
  friend USeries operator-(USeries a, const USeries& b) { return a -= b; }
  USeries operator-() const {
    USeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend USeries operator*(const USeries& a, const USeries& b) { return series_mul(a, b); }
  friend USeries operator*(USeries a, const Rational& q) {
    if (q.is_zero()) return zero(a.order_);
    for (auto& c : a.coeffs_) c = c * q;
    a.normalize();
    return a;
  }
  friend USeries operator*(const Rational& q, const USeries& a) { return a * q; }

  /// Same order and same coefficients.
  friend bool operator==(const USeries& a, const USeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

private:
  USeries& combine(const USeries& o, int sign) {
    order_ = std::min(order_, o.order_);
    if (!is_exact() && stored() > order_ + 1) coeffs_.resize(static_cast<std::size_t>(order_) + 1);
    const int upto = is_exact() ? o.stored() : std::min(o.stored(), order_ + 1);
    if (stored() < upto) coeffs_.resize(static_cast<std::size_t>(upto));
    for (int m = 0; m < upto; ++m) {
      auto& dst = coeffs_[static_cast<std::size_t>(m)];
      const auto& src = o.coeffs_[static_cast<std::size_t>(m)];
      if (sign > 0) dst = dst + src;
      else dst = dst - src;
    }
    normalize();
    return *this;
  }

  void normalize() {
    if (order_ != kExactOrder && stored() > order_ + 1)
      coeffs_.resize(static_cast<std::size_t>(order_) + 1);
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  int order_ = kExactOrder;
  std::vector<R> coeffs_;
};

/// Cauchy product; the u^{-m} coefficient is sum_i a_i * b_{m-i} with factor
/// order preserved.
template <Ring R>
USeries<R> series_mul(const USeries<R>& a, const USeries<R>& b) {
  int order = std::min(a.order(), b.order());
  const int top = a.stored() + b.stored() - 2;
  if (order == kExactOrder && top < 0) return USeries<R>();
  const int last = std::min(order, top);
  std::vector<R> out(static_cast<std::size_t>(std::max(last + 1, 0)));
  for (int i = 0; i < a.stored() && i <= last; ++i) {
    const R& ai = a.coeffs()[static_cast<std::size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = 0; j < b.stored() && i + j <= last; ++j) {
      const R& bj = b.coeffs()[static_cast<std::size_t>(j)];
      if (bj.is_zero()) continue;
      auto& dst = out[static_cast<std::size_t>(i + j)];
      dst = dst + ai * bj;
    }
  }
  return USeries<R>(order, std::move(out));
}

/// f(u + a). Each u^{-m} is re-expanded as u^{-m} (1 + a/u)^{-m}.
template <Ring R>
USeries<R> series_shift(const USeries<R>& f, const Rational& a) {
  if (a.is_zero() || f.stored() <= 1) return f;
  if (f.is_exact())
    throw std::domain_error("series_shift: an exact non-constant series has an infinite shift");
  const int order = f.order();
  std::vector<R> out(static_cast<std::size_t>(order) + 1);
  out[0] = f.coeff(0);
  for (int m = 1; m < f.stored(); ++m) {
    const R c = f.coeff(m);
    if (c.is_zero()) continue;
    Rational minus_a_pow(1);
    for (int j = 0; m + j <= order; ++j) {
      auto& dst = out[static_cast<std::size_t>(m + j)];
      dst = dst + c * (binomial(m + j - 1, j) * minus_a_pow);
      minus_a_pow *= -a;
    }
  }
  return USeries<R>(order, std::move(out));
}

/// Multiplicative inverse. The constant term must be an invertible scalar.
template <Ring R>
USeries<R> series_invert(const USeries<R>& f) {
  const auto c0 = as_scalar(f.coeff(0));
  if (!c0 || c0->is_zero())
    throw std::domain_error("series_invert: constant term is not an invertible scalar");
  if (f.is_exact() && f.stored() > 1)
    throw std::domain_error("series_invert: exact non-constant series has an infinite inverse");
  const Rational inv = c0->reciprocal();
  const int order = f.is_exact() ? 0 : f.order();
  std::vector<R> g(static_cast<std::size_t>(order) + 1);
  g[0] = R(inv);
  for (int m = 1; m <= order; ++m) {
    R acc;
    for (int i = 1; i <= m && i < f.stored(); ++i) acc = acc + f.coeff(i) * g[static_cast<std::size_t>(m - i)];
    g[static_cast<std::size_t>(m)] = -(acc * inv);
  }
  return USeries<R>(f.order(), std::move(g));
}

}  // namespace yangsym
