#pragma once

#include <map>
#include <utility>

#include "yangsym/series.hpp"

namespace yangsym {

/// Finite sum  sum_d f_d(u) tau^d  with the shift symbol kept to the right.
/// Products follow tau^c g(u) = g(u + c) tau^c.
template <class R>
class TauOperator {
public:
  using Series = USeries<R>;

  TauOperator() = default;
  explicit TauOperator(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(0, Series(c));
  }
  /// f(u) tau^d
  TauOperator(Series f, int d) {
    if (!f.is_zero()) terms_.emplace(d, std::move(f));
  }

  const std::map<int, Series>& terms() const { return terms_; }
  Series coeff(int d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Series() : it->second;
  }
  bool is_zero() const { return terms_.empty(); }
  int order() const {
    int o = kExactOrder;
    for (const auto& [d, f] : terms_) o = std::min(o, f.order());
    return o;
  }

  TauOperator& operator+=(const TauOperator& o) {
    for (const auto& [d, f] : o.terms_) add_term(d, f);
    return *this;
  }
  TauOperator& operator-=(const TauOperator& o) {
    for (const auto& [d, f] : o.terms_) add_term(d, -f);
    return *this;
  }
  friend TauOperator operator+(TauOperator a, const TauOperator& b) { return a += b; }
  friend TauOperator operator-(TauOperator a, const TauOperator& b) { return a -= b; }
  TauOperator operator-() const {
    TauOperator r;
    for (const auto& [d, f] : terms_) r.terms_.emplace(d, -f);
    return r;
  }
  friend TauOperator operator*(const TauOperator& a, const TauOperator& b) { return tau_mul(a, b); }
  friend TauOperator operator*(const TauOperator& a, const Rational& q) {
    TauOperator r;
    for (const auto& [d, f] : a.terms_) r.add_term(d, f * q);
    return r;
  }
  friend bool operator==(const TauOperator& a, const TauOperator& b) { return a.terms_ == b.terms_; }

  void add_term(int d, const Series& f) {
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      if (!f.is_zero()) terms_.emplace(d, f);
      return;
    }
    it->second += f;
    // A vanished term keeps no record of its order; the order of a zero
    // operator is irrelevant to every identity check.
    if (it->second.is_zero()) terms_.erase(it);
  }

private:
  std::map<int, Series> terms_;
};

/// (f(u) tau^c)(g(u) tau^d) = f(u) g(u + c) tau^{c+d}, extended bilinearly.
template <Ring R>
TauOperator<R> tau_mul(const TauOperator<R>& a, const TauOperator<R>& b) {
  TauOperator<R> out;
  for (const auto& [c, f] : a.terms())
    for (const auto& [d, g] : b.terms()) out.add_term(c + d, f * series_shift(g, Rational(c)));
  return out;
}

/// Substitutes u -> u + a in an operator written as sum f_d(u) tau^d.
template <Ring R>
TauOperator<R> tau_shift_argument(const TauOperator<R>& x, const Rational& a) {
  TauOperator<R> out;
  for (const auto& [d, f] : x.terms()) out.add_term(d, series_shift(f, a));
  return out;
}

}  // namespace yangsym
