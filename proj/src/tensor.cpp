#include "yangsym/tensor.hpp"

#include <numeric>

namespace yangsym {

namespace {

int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

void check_legs(int l, int m, int k, int n) {
  if (n < 1 || k < 1 || l < 1 || m > k || l >= m) throw std::out_of_range("leg indices out of range");
}

TensorMatrix<Rational> group_sum(int k, int n, bool alternating) {
  TensorMatrix<Rational> out(n, k);
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  const Rational weight = factorial(k).reciprocal();
  do {
    const Rational c = alternating && permutation_sign(perm) < 0 ? -weight : weight;
    out += permutation_operator(perm, n) * c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// (1/k!) (R_{k-1,k})(R_{k-2,k} R_{k-2,k-1}) ... (R_{1,k} ... R_{1,2}) with
// R_{a,b} evaluated at the difference of spectral parameters v_a - v_b.
TensorMatrix<Rational> fused_product(int k, int n, int step) {
  auto out = TensorMatrix<Rational>::identity(n, k);
  for (int a = k - 1; a >= 1; --a)
    for (int b = k; b > a; --b) out = out * r_matrix(a, b, Rational(step * (a - b)), k, n);
  return out * factorial(k).reciprocal();
}

TensorMatrix<Rational> b_product(int k, int n, FusionKind kind) {
  auto out = TensorMatrix<Rational>::identity(n, k);
  for (int l = 2; l <= k; ++l) out = out * extend_legs(b_factor(l, n, kind), k - l);
  return out;
}

TensorMatrix<Rational> projector(int k, int n, ProjectorMethod method, FusionKind kind) {
  if (k < 1) throw std::invalid_argument("projector: k must be at least 1");
  if (k == 1) return TensorMatrix<Rational>::identity(n, 1);
  const bool anti = kind == FusionKind::Antisymmetric;
  switch (method) {
    case ProjectorMethod::GroupSum: return group_sum(k, n, anti);
    // A_k uses v_i = u - i + 1 so v_a - v_b = b - a; S_k uses v_i = u + i - 1.
    case ProjectorMethod::Fusion: return fused_product(k, n, anti ? -1 : 1);
    case ProjectorMethod::BProduct: return b_product(k, n, kind);
  }
  throw std::logic_error("projector: unknown method");
}

}  // namespace

TensorMatrix<Rational> permutation_operator(const std::vector<int>& perm, int n) {
  const int k = static_cast<int>(perm.size());
  TensorMatrix<Rational> out(n, k);
  for (std::size_t col = 0; col < out.dim(); ++col) {
    const auto cd = out.digits(col);
    std::vector<int> rd(cd.size());
    for (std::size_t s = 0; s < cd.size(); ++s) rd[static_cast<std::size_t>(perm[s])] = cd[s];
    out.at(out.flat(rd), col) = Rational(1);
  }
  return out;
}

TensorMatrix<Rational> perm_op(int l, int m, int k, int n) {
  check_legs(l, m, k, n);
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[static_cast<std::size_t>(l - 1)], perm[static_cast<std::size_t>(m - 1)]);
  return permutation_operator(perm, n);
}

TensorMatrix<Rational> r_matrix(int l, int m, const Rational& c, int k, int n) {
  if (c.is_zero()) throw std::domain_error("r_matrix: pole of the Yang matrix at zero argument");
  return TensorMatrix<Rational>::identity(n, k) - perm_op(l, m, k, n) * c.reciprocal();
}

TensorMatrix<Rational> antisymmetrizer(int k, int n, ProjectorMethod method) {
  return projector(k, n, method, FusionKind::Antisymmetric);
}

TensorMatrix<Rational> symmetrizer(int k, int n, ProjectorMethod method) {
  return projector(k, n, method, FusionKind::Symmetric);
}

TensorMatrix<Rational> b_factor(int l, int n, FusionKind kind) {
  if (l < 2) throw std::invalid_argument("b_factor: needs at least two legs");
  const int sign = kind == FusionKind::Antisymmetric ? 1 : -1;
  auto out = TensorMatrix<Rational>::identity(n, l);
  for (int a = l - 1; a >= 1; --a) out = out * r_matrix(a, a + 1, Rational(sign, a), l, n);
  return out * factorial(l).reciprocal();
}

TensorMatrix<Rational> fusion_step(const TensorMatrix<Rational>& proj, FusionKind kind) {
  const int k = proj.legs();
  if (k < 1) throw std::invalid_argument("fusion_step: needs a projector on at least one leg");
  const auto big = extend_legs(proj, 1);
  const int sign = kind == FusionKind::Antisymmetric ? 1 : -1;
  const auto r = r_matrix(k, k + 1, Rational(sign, k), k + 1, proj.n());
  return big * r * big * Rational(1, k + 1);
}

int rank(const TensorMatrix<Rational>& a) {
  const std::size_t d = a.dim();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m[r][c] = a.at(r, c);
  int rk = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < d && row < d; ++col) {
    std::size_t piv = row;
    while (piv < d && m[piv][col].is_zero()) ++piv;
    if (piv == d) continue;
    std::swap(m[piv], m[row]);
    const Rational inv = m[row][col].reciprocal();
    for (std::size_t r = row + 1; r < d; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational f = m[r][col] * inv;
      for (std::size_t c = col; c < d; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
    ++rk;
  }
  return rk;
}

}  // namespace yangsym
