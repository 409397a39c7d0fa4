#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "yangsym/ring.hpp"

namespace yangsym {

/// Operator on (C^n)^{⊗legs} with entries in R, stored densely. Row and column
/// indices are multi-indices (i_1..i_legs) flattened with leg 1 most
/// significant; each i_s is 0-based here.
template <class R>
class TensorMatrix {
public:
  TensorMatrix() = default;
  TensorMatrix(int n, int legs) : n_(n), legs_(legs) {
    if (n < 1 || legs < 0) throw std::invalid_argument("TensorMatrix: bad shape");
    dim_ = 1;
    for (int s = 0; s < legs; ++s) dim_ *= static_cast<std::size_t>(n);
    entries_.resize(dim_ * dim_);
  }

  static TensorMatrix identity(int n, int legs) {
    TensorMatrix m(n, legs);
    for (std::size_t i = 0; i < m.dim_; ++i) m.at(i, i) = R(Rational(1));
    return m;
  }

  int n() const { return n_; }
  int legs() const { return legs_; }
  std::size_t dim() const { return dim_; }

  R& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const R& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  /// 0-based per-leg digits of a flat index.
  std::vector<int> digits(std::size_t index) const {
    std::vector<int> d(static_cast<std::size_t>(legs_));
    for (int s = legs_ - 1; s >= 0; --s) {
      d[static_cast<std::size_t>(s)] = static_cast<int>(index % static_cast<std::size_t>(n_));
      index /= static_cast<std::size_t>(n_);
    }
    return d;
  }
  std::size_t flat(const std::vector<int>& digits) const {
    std::size_t idx = 0;
    for (int d : digits) idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(d);
    return idx;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const R& x) { return x.is_zero(); });
  }

  TensorMatrix& operator+=(const TensorMatrix& o) {
    check_shape(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = entries_[i] + o.entries_[i];
    return *this;
  }
  TensorMatrix& operator-=(const TensorMatrix& o) {
    check_shape(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = entries_[i] - o.entries_[i];
    return *this;
  }
  friend TensorMatrix operator+(TensorMatrix a, const TensorMatrix& b) { return a += b; }
  friend TensorMatrix operator-(TensorMatrix a, const TensorMatrix& b) { return a -= b; }
  friend TensorMatrix operator*(TensorMatrix a, const Rational& q) {
    for (auto& x : a.entries_) x = x * q;
    return a;
  }
  friend TensorMatrix operator*(const TensorMatrix& a, const TensorMatrix& b) { return tm_mul(a, b); }
  friend bool operator==(const TensorMatrix& a, const TensorMatrix& b) {
    return a.n_ == b.n_ && a.legs_ == b.legs_ && a.entries_ == b.entries_;
  }

  void check_shape(const TensorMatrix& o) const {
    if (n_ != o.n_ || legs_ != o.legs_) throw std::invalid_argument("TensorMatrix: dimension mismatch");
  }

private:
  int n_ = 1;
  int legs_ = 0;
  std::size_t dim_ = 1;
  std::vector<R> entries_ = std::vector<R>(1);
};

/// Matrix product; entry order of noncommutative products is preserved.
template <Ring R>
TensorMatrix<R> tm_mul(const TensorMatrix<R>& a, const TensorMatrix<R>& b) {
  a.check_shape(b);
  TensorMatrix<R> out(a.n(), a.legs());
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const R& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        const R& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        out.at(i, j) = out.at(i, j) + aik * bkj;
      }
    }
  return out;
}

template <Ring R>
R trace_full(const TensorMatrix<R>& a) {
  R acc;
  for (std::size_t i = 0; i < a.dim(); ++i) acc = acc + a.at(i, i);
  return acc;
}

/// Contracts the listed legs (1-based); the remaining legs keep their order.
template <Ring R>
TensorMatrix<R> trace_partial(const TensorMatrix<R>& a, const std::set<int>& traced) {
  for (int s : traced)
    if (s < 1 || s > a.legs()) throw std::out_of_range("trace_partial: leg out of range");
  const int kept = a.legs() - static_cast<int>(traced.size());
  TensorMatrix<R> out(a.n(), kept);
  for (std::size_t row = 0; row < a.dim(); ++row) {
    const auto rd = a.digits(row);
    for (std::size_t col = 0; col < a.dim(); ++col) {
      const R& x = a.at(row, col);
      if (x.is_zero()) continue;
      const auto cd = a.digits(col);
      bool diagonal = true;
      std::vector<int> orow, ocol;
      for (int s = 0; s < a.legs(); ++s) {
        const auto us = static_cast<std::size_t>(s);
        if (traced.count(s + 1)) {
          if (rd[us] != cd[us]) { diagonal = false; break; }
        } else {
          orow.push_back(rd[us]);
          ocol.push_back(cd[us]);
        }
      }
      if (!diagonal) continue;
      auto& dst = out.at(out.flat(orow), out.flat(ocol));
      dst = dst + x;
    }
  }
  return out;
}

/// a ⊗ 1 on `extra` additional trailing legs.
template <Ring R>
TensorMatrix<R> extend_legs(const TensorMatrix<R>& a, int extra) {
  TensorMatrix<R> out(a.n(), a.legs() + extra);
  std::size_t tail = 1;
  for (int s = 0; s < extra; ++s) tail *= static_cast<std::size_t>(a.n());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) {
      const R& x = a.at(r, c);
      if (x.is_zero()) continue;
      for (std::size_t t = 0; t < tail; ++t) out.at(r * tail + t, c * tail + t) = x;
    }
  return out;
}

/// X_s: the n×n matrix x placed on leg s (1-based) of `legs` legs.
template <Ring R>
TensorMatrix<R> embed_leg(const TensorMatrix<R>& x, int s, int legs) {
  if (x.legs() != 1) throw std::invalid_argument("embed_leg: expected a single-leg matrix");
  if (s < 1 || s > legs) throw std::out_of_range("embed_leg: leg out of range");
  TensorMatrix<R> out(x.n(), legs);
  for (std::size_t row = 0; row < out.dim(); ++row) {
    auto rd = out.digits(row);
    const int i = rd[static_cast<std::size_t>(s - 1)];
    for (int j = 0; j < x.n(); ++j) {
      const R& v = x.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (v.is_zero()) continue;
      auto cd = rd;
      cd[static_cast<std::size_t>(s - 1)] = j;
      out.at(row, out.flat(cd)) = v;
    }
  }
  return out;
}

/// X(1)_{leg_1} X(2)_{leg_2} ... in the given multiplication order, for
/// distinct legs. Entry (I, J) is the ordered product of x(t)[i_leg, j_leg].
template <Ring R>
TensorMatrix<R> leg_product(int legs, const std::vector<std::pair<int, const TensorMatrix<R>*>>& factors) {
  if (factors.empty()) throw std::invalid_argument("leg_product: no factors");
  const int n = factors.front().second->n();
  std::set<int> seen;
  for (const auto& [s, x] : factors) {
    if (s < 1 || s > legs || !seen.insert(s).second) throw std::invalid_argument("leg_product: bad leg list");
    if (x->n() != n || x->legs() != 1) throw std::invalid_argument("leg_product: dimension mismatch");
  }
  TensorMatrix<R> out(n, legs);
  for (std::size_t row = 0; row < out.dim(); ++row) {
    const auto rd = out.digits(row);
    for (std::size_t col = 0; col < out.dim(); ++col) {
      const auto cd = out.digits(col);
      bool ok = true;
      for (int s = 1; s <= legs && ok; ++s)
        if (!seen.count(s) && rd[static_cast<std::size_t>(s - 1)] != cd[static_cast<std::size_t>(s - 1)]) ok = false;
      if (!ok) continue;
      R acc(Rational(1));
      for (const auto& [s, x] : factors) {
        const auto us = static_cast<std::size_t>(s - 1);
        const R& v = x->at(static_cast<std::size_t>(rd[us]), static_cast<std::size_t>(cd[us]));
        if (v.is_zero()) { ok = false; break; }
        acc = acc * v;
      }
      if (ok) out.at(row, col) = std::move(acc);
    }
  }
  return out;
}

namespace detail {

struct LegTraceEntry {
  std::vector<int> key;  // i_1, j_1, i_2, j_2, ...
  Rational coeff;
};

template <Ring R>
R leg_trace_rec(const std::vector<LegTraceEntry>& entries, std::size_t lo, std::size_t hi, std::size_t depth,
                const std::vector<const TensorMatrix<R>*>& legs) {
  R acc;
  const bool last = depth + 1 == legs.size();
  std::size_t start = lo;
  while (start < hi) {
    const int i = entries[start].key[2 * depth];
    const int j = entries[start].key[2 * depth + 1];
    std::size_t stop = start;
    Rational leaf_sum(0);
    while (stop < hi && entries[stop].key[2 * depth] == i && entries[stop].key[2 * depth + 1] == j) {
      if (last) leaf_sum += entries[stop].coeff;
      ++stop;
    }
    const R& x = legs[depth]->at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    if (!x.is_zero()) {
      if (last) {
        if (!leaf_sum.is_zero()) acc = acc + x * leaf_sum;
      } else {
        R rest = leg_trace_rec(entries, start, stop, depth + 1, legs);
        if (!rest.is_zero()) acc = acc + x * rest;
      }
    }
    start = stop;
  }
  return acc;
}

}  // namespace detail

/// tr(a · X(1)_1 X(2)_2 ... X(k)_k) for a scalar operator a on k legs and
/// single-leg matrices X(s). Common leg prefixes are contracted once.
template <Ring R>
R leg_trace(const TensorMatrix<Rational>& a, const std::vector<const TensorMatrix<R>*>& legs) {
  if (static_cast<int>(legs.size()) != a.legs() || legs.empty())
    throw std::invalid_argument("leg_trace: one matrix per leg is required");
  std::vector<detail::LegTraceEntry> entries;
  for (std::size_t jrow = 0; jrow < a.dim(); ++jrow)
    for (std::size_t icol = 0; icol < a.dim(); ++icol) {
      const Rational& c = a.at(jrow, icol);
      if (c.is_zero()) continue;
      const auto id = a.digits(icol);
      const auto jd = a.digits(jrow);
      detail::LegTraceEntry e{{}, c};
      for (std::size_t s = 0; s < id.size(); ++s) {
        e.key.push_back(id[s]);
        e.key.push_back(jd[s]);
      }
      entries.push_back(std::move(e));
    }
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.key < y.key; });
  if (entries.empty()) return R();
  return detail::leg_trace_rec(entries, 0, entries.size(), 0, legs);
}

/// Entry-wise conversion of a scalar operator into another ring.
template <Ring R>
TensorMatrix<R> lift(const TensorMatrix<Rational>& a) {
  TensorMatrix<R> out(a.n(), a.legs());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (!a.at(r, c).is_zero()) out.at(r, c) = R(a.at(r, c));
  return out;
}

// ---- scalar operators on (C^n)^{⊗k} -------------------------------------

enum class ProjectorMethod { GroupSum, Fusion, BProduct };
enum class FusionKind { Antisymmetric, Symmetric };

/// P_{l,m}: swap of legs l and m (1-based, l < m <= k).
TensorMatrix<Rational> perm_op(int l, int m, int k, int n);

/// The operator of a permutation of legs: leg s of the input is sent to leg
/// perm[s] (0-based entries).
TensorMatrix<Rational> permutation_operator(const std::vector<int>& perm, int n);

/// R_{l,m}(c) = 1 - P_{l,m}/c. Throws at the pole c = 0.
TensorMatrix<Rational> r_matrix(int l, int m, const Rational& c, int k, int n);

TensorMatrix<Rational> antisymmetrizer(int k, int n, ProjectorMethod method = ProjectorMethod::GroupSum);
TensorMatrix<Rational> symmetrizer(int k, int n, ProjectorMethod method = ProjectorMethod::GroupSum);

/// The (1/l!) R_{l-1,l}(±1/(l-1)) ... R_{1,2}(±1) factor on l legs; the
/// antisymmetric kind uses the positive arguments.
TensorMatrix<Rational> b_factor(int l, int n, FusionKind kind);

/// A_k -> A_{k+1} (or S_k -> S_{k+1}) via (1/(k+1)) X_k R_{k,k+1}(±1/k) X_k.
TensorMatrix<Rational> fusion_step(const TensorMatrix<Rational>& projector, FusionKind kind);

/// Rank of a rational matrix (used for projector sanity checks).
int rank(const TensorMatrix<Rational>& a);

}  // namespace yangsym
