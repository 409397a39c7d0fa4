#pragma once

#include <map>
#include <string>
#include <vector>

#include "yangsym/report.hpp"
#include "yangsym/symfun.hpp"
#include "yangsym/upolynomial.hpp"

namespace yangsym {

/// Weakly decreasing integer weight μ_1 >= ... >= μ_n.
class HighestWeight {
public:
  explicit HighestWeight(std::vector<int> mu);
  static HighestWeight parse(const std::string& text);  // "1,0,0"

  int n() const { return static_cast<int>(mu_.size()); }
  const std::vector<int>& mu() const { return mu_; }
  int operator[](int i) const { return mu_.at(static_cast<std::size_t>(i - 1)); }  // 1-based
  std::string str() const;

private:
  std::vector<int> mu_;
};

/// All weights with entries in [lo, hi], in lexicographically decreasing order.
std::vector<HighestWeight> weight_grid(int n, int lo = -2, int hi = 3);

/// Polynomial with rational coefficients in μ_1..μ_n and u, expanded.
class ShiftedPolynomial {
public:
  using Exponents = std::vector<int>;  // μ_1..μ_n, then u

  explicit ShiftedPolynomial(int n, const Rational& c = Rational(0));
  static ShiftedPolynomial mu(int n, int i);
  static ShiftedPolynomial u(int n);

  int n() const { return n_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int u_degree() const;

  ShiftedPolynomial& operator+=(const ShiftedPolynomial& o);
  ShiftedPolynomial& operator-=(const ShiftedPolynomial& o);
  friend ShiftedPolynomial operator+(ShiftedPolynomial a, const ShiftedPolynomial& b) { return a += b; }
  friend ShiftedPolynomial operator-(ShiftedPolynomial a, const ShiftedPolynomial& b) { return a -= b; }
  friend ShiftedPolynomial operator*(const ShiftedPolynomial& a, const ShiftedPolynomial& b);
  friend ShiftedPolynomial operator*(ShiftedPolynomial a, const Rational& q);
  friend bool operator==(const ShiftedPolynomial& a, const ShiftedPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// p(u + a)
  ShiftedPolynomial shift_u(const Rational& a) const;
  /// Substitute μ; the result is a polynomial in u.
  UPolynomial<Rational> at(const HighestWeight& mu) const;
  std::string str() const;

private:
  void add(const Exponents& e, const Rational& c);
  void check(const ShiftedPolynomial& o) const;

  int n_;
  std::map<Exponents, Rational> terms_;
};

/// e*_k(u) = Σ_{i_1<...<i_k} (μ_{i_1}+u+k-1)(μ_{i_2}+u+k-2)...(μ_{i_k}+u), indices in 1..n.
ShiftedPolynomial shifted_e_star(int k, int n);
/// h*_k(u) = Σ_{i_1<=...<=i_k} (μ_{i_1}+u-k+1)...(μ_{i_k}+u).
ShiftedPolynomial shifted_h_star(int k, int n);

/// m_i = μ_i + n - i.
std::vector<Rational> pp_shifted_weights(const HighestWeight& mu);
/// γ_i = Π_{j≠i} (1 - 1/(m_i - m_j)).
std::vector<Rational> pp_gammas(const HighestWeight& mu);
/// Σ γ_i m_i^k, the eigenvalue of tr E^k on the module of highest weight μ.
Rational pp_eigen_trEk(int k, const HighestWeight& mu);
/// p*_k(u) at μ: Σ γ_i (m_i+u)(m_i+u+1)...(m_i+u+k-1).
UPolynomial<Rational> p_star_at(int k, const HighestWeight& mu);

/// Highest-weight coefficient: Cartan-only monomials of the gl-normal form with
/// e_ii -> μ_i. This is the eigenvalue when z is central.
Rational hw_eigenvalue(const AlgebraElement& z, const HighestWeight& mu);
/// The same with μ kept symbolic.
ShiftedPolynomial hw_symbolic(const AlgebraElement& z, int n);
/// Coefficientwise, with the polynomial variable becoming u.
ShiftedPolynomial hw_symbolic(const UPolynomial<AlgebraElement>& z, int n);
/// Image under e_ij -> matrix unit E_ij.
TensorMatrix<Rational> defining_rep_value(const AlgebraElement& z, int n);
/// Scalar c if m = c·Id.
std::optional<Rational> scalar_value(const TensorMatrix<Rational>& m);

using GlSeries = USeries<AlgebraElement>;

/// U(gl_n) together with the evaluation map from the Yangian.
class CapelliContext {
public:
  explicit CapelliContext(int n);

  int n() const { return n_; }
  const AlgebraPtr& gl() const { return gl_; }
  AlgebraElement e(int i, int j) const;

  /// t_ij^(1) -> e_ij, t_ij^(r) -> 0 for r >= 2.
  AlgebraElement ev(const AlgebraElement& y) const;
  GlSeries ev(const YSeries& f) const;

  /// tr E^k, with E^0 = Id.
  AlgebraElement trace_power(int k) const;
  /// p_m(u) = tr((E+u)(E+u+1)...(E+u+m-1)).
  UPolynomial<AlgebraElement> capelli_p(int m) const;
  /// p*_k as a polynomial in (μ, u): highest-weight image of capelli_p(k).
  ShiftedPolynomial shifted_p_star(int k) const;

  /// Commutes with every e_ij.
  bool is_central(const AlgebraElement& z) const;

private:
  int n_;
  AlgebraPtr gl_;
};

/// (eh*) fully symbolic for m <= m_max, and the two p*-composition
/// identities for k <= m_max at every sample weight.
std::vector<CheckRecord> verify_shifted_identities(int m_max, int n, const std::vector<HighestWeight>& samples);

/// ev(e_k)·(u↓k) = e*_k(u-k+1) and ev(h_k)·(u↑k) = h*_k(u+k-1) through
/// highest-weight eigenvalues for k <= k_max at series order N; ev(h^-_m) =
/// ev(h_m) for m <= hminus_max; centrality of the evaluated coefficients;
/// the capelli_p relations for m <= k_max.
std::vector<CheckRecord> verify_ev_bridge(int k_max, int n, int order, const std::vector<HighestWeight>& samples,
                                          int hminus_max = 2);

/// tr E^k eigenvalues by the γ formula against hw_eigenvalue on the samples,
/// and against the defining representation at μ = (1,0,...,0).
std::vector<CheckRecord> verify_perelomov_popov(int k_max, int n, const std::vector<HighestWeight>& samples);

/// Coefficients of capelli_p(m), m <= m_max: central, scalar in the defining
/// representation, scalar equal to hw_eigenvalue at (1,0,...,0).
std::vector<CheckRecord> verify_capelli_centrality(int m_max, int n);

}  // namespace yangsym
