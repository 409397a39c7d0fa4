#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "yangsym/tlegs.hpp"

namespace yangsym {

/// Ordered compositions of k (2^{k-1} of them), in lexicographic order.
std::vector<std::vector<int>> compositions(int k);

class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition parse(const std::string& text);  // "2,1"

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// λ_i (1-based); 0 past the end.
  int part(int i) const;
  Partition conjugate() const;
  std::string str() const;
  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;  // strictly positive, weakly decreasing
};

/// Row determinant: sum over σ of sgn(σ) m[0][σ0] m[1][σ1] ... in row order.
template <Ring R>
R rdet(const std::vector<std::vector<R>>& m) {
  const std::size_t k = m.size();
  for (const auto& row : m)
    if (row.size() != k) throw std::invalid_argument("rdet: matrix is not square");
  if (k == 0) return R(Rational(1));
  std::vector<bool> used(k, false);
  // Depth-first over rows so that partial products are shared.
  auto rec = [&](auto&& self, std::size_t row) -> R {
    R acc;
    int sign = 1;
    for (std::size_t col = 0; col < k; ++col) {
      if (used[col]) continue;
      const R& x = m[row][col];
      const int s = sign;
      sign = -sign;
      if (x.is_zero()) continue;
      if (row + 1 == k) {
        acc = s > 0 ? acc + x : acc - x;
        continue;
      }
      used[col] = true;
      R rest = self(self, row + 1);
      used[col] = false;
      if (rest.is_zero()) continue;
      acc = s > 0 ? acc + x * rest : acc - x * rest;
    }
    return acc;
  };
  return rec(rec, 0);
}

enum class EBVariant { BMinus = 1, BPlus = 2, AIncreasing = 3, SDecreasing = 4 };
/// The four p/e/h determinant layouts, plus PFromE/PFromH variants whose integer
/// weights sit in the last row instead of the first column.
enum class DetFormula { EFromP, HFromP, PFromE, PFromH, PFromELastRow, PFromHLastRow };
enum class SymKind { E, H };

/// Argument convention for the e-route Schur determinant: entry (i, j) is
/// e_{λ'_i-i+j}(u) (Plain) or e_{λ'_i-i+j}(u+j-1) (Column). Only Column
/// agrees with the h-route once λ_1 >= 2.
enum class ESchurShift { Plain, Column };

/// All symmetric functions over Y(gl_n) at one series order, with caches.
/// Series live in a Yangian truncated at level = order, which is exact for
/// every coefficient up to u^{-order}. Not thread-safe.
class SymContext {
public:
  SymContext(int n, int order);

  int n() const { return n_; }
  int order() const { return order_; }
  const AlgebraPtr& algebra() const { return alg_; }

  /// T(u + shift) on one leg (cached).
  const YMatrix& T(const Rational& shift);

  /// tr(op · T_1(u+a_1) ... T_k(u+a_k) · Z_{k+1} ... Z_m), op on m legs.
  YSeries leg_trace_of(const TensorMatrix<Rational>& op, const std::vector<Rational>& shifts,
                       const TensorMatrix<Rational>* z = nullptr);

  /// Both sides of X T_1(u)T_2(u∓1)...T_k(u∓(k-1)) = T_k(...)...T_1(u) X
  /// for X = A_k (decreasing shifts) or S_k (increasing shifts).
  std::pair<YMatrix, YMatrix> intertwining_sides(int k, SymKind kind);

  /// e_k(u); zero for k > n, 1 for k = 0.
  const YSeries& e(int k);
  const YSeries& h(int k);
  /// p^±_k(u) = tr T(u)T(u±1)...T(u±(k-1)); sign is +1 or -1. p_0 = 1.
  const YSeries& p(int k, int sign);
  /// b_k(u, Z) = tr(A_n T_1(u)...T_k(u-k+1) Z_{k+1}...Z_n).
  YSeries bethe_b(int k, const TensorMatrix<Rational>& z);
  YSeries eB_trace(int k, EBVariant variant);
  /// The series eB_trace(k, variant) should equal.
  YSeries eB_target(int k, EBVariant variant);

  YTau e_tau(int k);
  YTau h_tau(int k);
  YTau p_tau(int k, int sign);
  /// The same operators evaluated directly as traces of (T(u)τ^{±1}) products.
  YTau e_tau_direct(int k);
  YTau h_tau_direct(int k);
  YTau p_tau_direct(int k, int sign);

  YTau composition_sum(int k, SymKind kind);
  /// Left and right sides of the Newton identity of degree m.
  std::pair<YTau, YTau> newton_sides(int m, SymKind kind);

  /// Determinant formula, normalized so it compares directly to det_target.
  YSeries det_formula(int m, DetFormula which);
  YSeries det_target(int m, DetFormula which);

  /// h^-_m(u) from its determinant (m! h^-_m = det), and by the recursion
  /// forced by E(u,τ)H^-(u+1,τ) = 1.
  const YSeries& h_minus(int m);
  const YSeries& h_minus_recursive(int m);
  YTau gen_E();
  /// sum_{l <= depth} τ^{-l} h^-_l(u).
  YTau gen_Hminus(int depth);
  /// det(h^-_{j-i+1}(u-j+1)), i, j = 1..k.
  YSeries e_from_hminus(int k);

  YSeries schur_h(const Partition& lambda);
  YSeries schur_e(const Partition& lambda, ESchurShift shift);

private:
  YSeries shifted(const YSeries& f, int a) const { return series_shift(f, Rational(a)); }
  YSeries one() const;

  int n_;
  int order_;
  AlgebraPtr alg_;
  std::map<Rational, YMatrix> t_cache_;
  std::map<int, YSeries> e_, h_;
  std::map<std::pair<int, int>, YSeries> p_;
  std::map<int, YSeries> hm_, hm_rec_;
};

/// Every coefficient of u^{-m} has total level <= m.
bool level_bound_holds(const YSeries& f);

/// Index of the first u^{-m} coefficient where a and b differ, compared up to
/// the smaller order; nullopt if they agree.
std::optional<int> first_difference(const YSeries& a, const YSeries& b);
/// Smallest differing series index over all entries.
std::optional<int> first_difference(const YMatrix& a, const YMatrix& b);
/// Smallest differing series index over all τ-degrees.
std::optional<int> first_difference(const YTau& a, const YTau& b);

}  // namespace yangsym
