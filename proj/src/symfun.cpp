#include "yangsym/symfun.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace yangsym {

std::vector<std::vector<int>> compositions(int k) {
  if (k < 1) throw std::invalid_argument("compositions: k must be positive");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = 1; part <= rest; ++part) {
      cur.push_back(part);
      self(self, rest - part);
      cur.pop_back();
    }
  };
  rec(rec, k);
  return out;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be non-negative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("Partition: empty part in '" + text + "'");
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("Partition: bad part '" + item + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

int Partition::part(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; j <= part(1); ++j) {
    int count = 0;
    for (int p : parts_)
      if (p >= j) ++count;
    c.push_back(count);
  }
  return Partition(std::move(c));
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s + ")";
}

namespace {

TensorMatrix<YTau> with_tau(const YMatrix& t, int degree) {
  TensorMatrix<YTau> out(t.n(), 1);
  for (std::size_t r = 0; r < t.dim(); ++r)
    for (std::size_t c = 0; c < t.dim(); ++c) out.at(r, c) = YTau(t.at(r, c), degree);
  return out;
}

template <Ring R>
R matrix_trace_of_power(const TensorMatrix<R>& x, int k) {
  auto prod = x;
  for (int s = 1; s < k; ++s) prod = prod * x;
  return trace_full(prod);
}

const TensorMatrix<Rational>& cached_projector(int k, int n, bool anti) {
  static std::map<std::tuple<int, int, bool>, TensorMatrix<Rational>> cache;
  auto key = std::make_tuple(k, n, anti);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, anti ? antisymmetrizer(k, n) : symmetrizer(k, n)).first;
  return it->second;
}

}  // namespace

SymContext::SymContext(int n, int order) : n_(n), order_(order) {
  if (n < 1) throw std::invalid_argument("SymContext: n must be positive");
  if (order < 1) throw std::invalid_argument("SymContext: order must be positive");
  alg_ = Algebra::yangian(n, order);
}

YSeries SymContext::one() const { return YSeries::constant(AlgebraElement(alg_, Rational(1)), order_); }

const YMatrix& SymContext::T(const Rational& shift) {
  auto it = t_cache_.find(shift);
  if (it == t_cache_.end()) it = t_cache_.emplace(shift, generating_matrix(alg_, order_, shift)).first;
  return it->second;
}

YSeries SymContext::leg_trace_of(const TensorMatrix<Rational>& op, const std::vector<Rational>& shifts,
                                 const TensorMatrix<Rational>* z) {
  const int legs = op.legs();
  if (static_cast<int>(shifts.size()) > legs) throw std::invalid_argument("leg_trace_of: more T factors than legs");
  if (!z && static_cast<int>(shifts.size()) != legs) throw std::invalid_argument("leg_trace_of: missing legs");
  std::vector<const YMatrix*> factors;
  for (const auto& a : shifts) factors.push_back(&T(a));
  YMatrix zm;
  if (z) {
    if (z->legs() != 1 || z->n() != n_) throw std::invalid_argument("leg_trace_of: Z must be n x n");
    zm = constant_legs(*z);
    while (static_cast<int>(factors.size()) < legs) factors.push_back(&zm);
  }
  auto r = leg_trace(op, factors);
  return r.truncated(order_) + YSeries::zero(order_);
}

std::pair<YMatrix, YMatrix> SymContext::intertwining_sides(int k, SymKind kind) {
  if (k < 1) throw std::invalid_argument("intertwining_sides: k must be positive");
  const bool anti = kind == SymKind::E;
  const auto x = lift<YSeries>(cached_projector(k, n_, anti));
  std::vector<std::pair<int, const YMatrix*>> forward, backward;
  for (int s = 1; s <= k; ++s) forward.emplace_back(s, &T(Rational(anti ? -(s - 1) : s - 1)));
  backward.assign(forward.rbegin(), forward.rend());
  return {x * leg_product(k, forward), leg_product(k, backward) * x};
}

const YSeries& SymContext::e(int k) {
  if (k < 0) throw std::invalid_argument("e: negative degree");
  auto it = e_.find(k);
  if (it != e_.end()) return it->second;
  YSeries v;
  if (k == 0) v = one();
  else if (k > n_) v = YSeries::zero(order_);
  else {
    std::vector<Rational> shifts;
    for (int s = 0; s < k; ++s) shifts.emplace_back(-s);
    v = leg_trace_of(cached_projector(k, n_, true), shifts);
  }
  return e_.emplace(k, std::move(v)).first->second;
}

const YSeries& SymContext::h(int k) {
  if (k < 0) throw std::invalid_argument("h: negative degree");
  auto it = h_.find(k);
  if (it != h_.end()) return it->second;
  YSeries v;
  if (k == 0) v = one();
  else {
    std::vector<Rational> shifts;
    for (int s = 0; s < k; ++s) shifts.emplace_back(s);
    v = leg_trace_of(cached_projector(k, n_, false), shifts);
  }
  return h_.emplace(k, std::move(v)).first->second;
}

const YSeries& SymContext::p(int k, int sign) {
  if (k < 0) throw std::invalid_argument("p: negative degree");
  if (sign != 1 && sign != -1) throw std::invalid_argument("p: sign must be +1 or -1");
  auto key = std::make_pair(k, sign);
  auto it = p_.find(key);
  if (it != p_.end()) return it->second;
  YSeries v;
  if (k == 0) v = one();
  else {
    auto prod = T(Rational(0));
    for (int s = 1; s < k; ++s) prod = prod * T(Rational(sign * s));
    v = trace_full(prod) + YSeries::zero(order_);
  }
  return p_.emplace(key, std::move(v)).first->second;
}

YSeries SymContext::bethe_b(int k, const TensorMatrix<Rational>& z) {
  if (k < 1 || k > n_) throw std::invalid_argument("bethe_b: need 1 <= k <= n");
  std::vector<Rational> shifts;
  for (int s = 0; s < k; ++s) shifts.emplace_back(-s);
  return leg_trace_of(cached_projector(n_, n_, true), shifts, &z);
}

YSeries SymContext::eB_trace(int k, EBVariant variant) {
  if (k < 1) throw std::invalid_argument("eB_trace: k must be positive");
  TensorMatrix<Rational> op;
  int dir = -1;
  switch (variant) {
    case EBVariant::BMinus:
      op = k == 1 ? TensorMatrix<Rational>::identity(n_, 1) : b_factor(k, n_, FusionKind::Antisymmetric);
      break;
    case EBVariant::BPlus:
      op = k == 1 ? TensorMatrix<Rational>::identity(n_, 1) : b_factor(k, n_, FusionKind::Symmetric);
      dir = 1;
      break;
    case EBVariant::AIncreasing:
      op = cached_projector(k, n_, true);
      dir = 1;
      break;
    case EBVariant::SDecreasing: op = cached_projector(k, n_, false); break;
  }
  std::vector<Rational> shifts;
  for (int s = 0; s < k; ++s) shifts.emplace_back(dir * s);
  return leg_trace_of(op, shifts);
}

YSeries SymContext::eB_target(int k, EBVariant variant) {
  switch (variant) {
    case EBVariant::BMinus: return e(k);
    case EBVariant::BPlus: return h(k);
    case EBVariant::AIncreasing: return shifted(e(k), k - 1);
    case EBVariant::SDecreasing: return shifted(h(k), -(k - 1));
  }
  throw std::logic_error("eB_target: unknown variant");
}

YTau SymContext::e_tau(int k) { return YTau(e(k), -k); }
YTau SymContext::h_tau(int k) { return YTau(h(k), k); }
YTau SymContext::p_tau(int k, int sign) { return YTau(p(k, sign), sign * k); }

YTau SymContext::e_tau_direct(int k) {
  if (k == 0) return YTau(Rational(1));
  const auto x = with_tau(T(Rational(0)), -1);
  return leg_trace(cached_projector(k, n_, true), std::vector<const TensorMatrix<YTau>*>(k, &x));
}

YTau SymContext::h_tau_direct(int k) {
  if (k == 0) return YTau(Rational(1));
  const auto x = with_tau(T(Rational(0)), 1);
  return leg_trace(cached_projector(k, n_, false), std::vector<const TensorMatrix<YTau>*>(k, &x));
}

YTau SymContext::p_tau_direct(int k, int sign) {
  if (k == 0) return YTau(Rational(1));
  return matrix_trace_of_power(with_tau(T(Rational(0)), sign), k);
}

YTau SymContext::composition_sum(int k, SymKind kind) {
  const int sign = kind == SymKind::E ? -1 : 1;
  YTau total;
  for (const auto& lambda : compositions(k)) {
    const int m = static_cast<int>(lambda.size());
    Rational coeff(1);
    int a = 0;
    YTau prod(Rational(1));
    for (int part : lambda) {
      a += part;
      coeff /= Rational(a);
      prod = prod * p_tau(part, sign);
    }
    if (kind == SymKind::E && (k - m) % 2 != 0) coeff = -coeff;
    total += prod * coeff;
  }
  return total;
}

std::pair<YTau, YTau> SymContext::newton_sides(int m, SymKind kind) {
  if (m < 1) throw std::invalid_argument("newton_sides: m must be positive");
  YTau lhs;
  for (int k = 0; k < m; ++k) {
    if (kind == SymKind::E) {
      auto term = e_tau(k) * p_tau(m - k, -1);
      lhs += (m - k - 1) % 2 == 0 ? term : -term;
    } else {
      lhs += h_tau(k) * p_tau(m - k, 1);
    }
  }
  const YTau rhs = (kind == SymKind::E ? e_tau(m) : h_tau(m)) * Rational(m);
  return {lhs, rhs};
}

YSeries SymContext::det_formula(int m, DetFormula which) {
  if (m < 1) throw std::invalid_argument("det_formula: m must be positive");
  const auto zero = YSeries::zero(order_);
  auto constant = [&](int c) { return YSeries::constant(AlgebraElement(alg_, Rational(c)), order_); };
  std::vector<std::vector<YSeries>> mat(static_cast<std::size_t>(m), std::vector<YSeries>(static_cast<std::size_t>(m), zero));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      auto& x = mat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      const int d = i - j + 1;
      switch (which) {
        case DetFormula::EFromP:
          if (j <= i) x = shifted(p(d, -1), -(j - 1));
          else if (j == i + 1) x = constant(i);
          break;
        case DetFormula::HFromP:
          if (j <= i) x = shifted(p(d, 1), j - 1);
          else if (j == i + 1) x = constant(-i);
          break;
        case DetFormula::PFromE:
          if (j == 1) x = e(i) * Rational(i);
          else if (j <= i) x = shifted(e(d), -(j - 1));
          else if (j == i + 1) x = constant(1);
          break;
        case DetFormula::PFromH:
          if (j == 1) x = h(i) * Rational(i);
          else if (j <= i) x = shifted(h(d), j - 1);
          else if (j == i + 1) x = constant(1);
          break;
        case DetFormula::PFromELastRow:
        case DetFormula::PFromHLastRow: {
          const bool use_e = which == DetFormula::PFromELastRow;
          if (j <= i) x = shifted(use_e ? e(d) : h(d), use_e ? -(j - 1) : j - 1);
          else if (j == i + 1) x = constant(1);
          if (i == m && j <= i) x = x * Rational(d);
          break;
        }
      }
    }
  const YSeries det = rdet(mat);
  switch (which) {
    case DetFormula::EFromP:
    case DetFormula::HFromP: return det * factorial(m).reciprocal();
    case DetFormula::PFromE:
    case DetFormula::PFromELastRow: return det;
    case DetFormula::PFromH:
    case DetFormula::PFromHLastRow: return m % 2 == 1 ? det : -det;
  }
  throw std::logic_error("det_formula: unknown formula");
}

YSeries SymContext::det_target(int m, DetFormula which) {
  switch (which) {
    case DetFormula::EFromP: return e(m);
    case DetFormula::HFromP: return h(m);
    case DetFormula::PFromE:
    case DetFormula::PFromELastRow: return p(m, -1);
    case DetFormula::PFromH:
    case DetFormula::PFromHLastRow: return p(m, 1);
  }
  throw std::logic_error("det_target: unknown formula");
}

const YSeries& SymContext::h_minus(int m) {
  if (m < 0) throw std::invalid_argument("h_minus: negative degree");
  auto it = hm_.find(m);
  if (it != hm_.end()) return it->second;
  YSeries v;
  if (m == 0) v = one();
  else {
    const auto zero = YSeries::zero(order_);
    std::vector<std::vector<YSeries>> mat(static_cast<std::size_t>(m), std::vector<YSeries>(static_cast<std::size_t>(m), zero));
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        auto& x = mat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        if (j <= i) x = shifted(p(i - j + 1, -1), i - 1);
        else if (j == i + 1) x = YSeries::constant(AlgebraElement(alg_, Rational(-i)), order_);
      }
    v = rdet(mat) * factorial(m).reciprocal();
  }
  return hm_.emplace(m, std::move(v)).first->second;
}

const YSeries& SymContext::h_minus_recursive(int m) {
  if (m < 0) throw std::invalid_argument("h_minus_recursive: negative degree");
  auto it = hm_rec_.find(m);
  if (it != hm_rec_.end()) return it->second;
  YSeries v;
  if (m == 0) v = one();
  else {
    // Degree -m of E(u,τ)H^-(u+1,τ) = 1, solved for h^-_m(v), v = u - m + 1.
    v = YSeries::zero(order_);
    for (int k = 1; k <= std::min(m, n_); ++k) {
      auto term = shifted(e(k), m - 1) * h_minus_recursive(m - k);
      v = k % 2 == 1 ? v + term : v - term;
    }
  }
  return hm_rec_.emplace(m, std::move(v)).first->second;
}

YTau SymContext::gen_E() {
  YTau out;
  for (int k = 0; k <= n_; ++k) out += k % 2 == 0 ? e_tau(k) : -e_tau(k);
  return out;
}

YTau SymContext::gen_Hminus(int depth) {
  if (depth < 0) throw std::invalid_argument("gen_Hminus: negative depth");
  YTau out;
  for (int l = 0; l <= depth; ++l) out += YTau(shifted(h_minus(l), -l), -l);
  return out;
}

YSeries SymContext::e_from_hminus(int k) {
  if (k < 1) throw std::invalid_argument("e_from_hminus: k must be positive");
  const auto zero = YSeries::zero(order_);
  std::vector<std::vector<YSeries>> mat(static_cast<std::size_t>(k), std::vector<YSeries>(static_cast<std::size_t>(k), zero));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      const int d = j - i + 1;
      if (d >= 0) mat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = shifted(h_minus(d), -(j - 1));
    }
  return rdet(mat);
}

YSeries SymContext::schur_h(const Partition& lambda) {
  const int k = lambda.length();
  if (k == 0) throw std::invalid_argument("schur_h: empty partition");
  const auto zero = YSeries::zero(order_);
  std::vector<std::vector<YSeries>> mat(static_cast<std::size_t>(k), std::vector<YSeries>(static_cast<std::size_t>(k), zero));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      const int d = lambda.part(i) - i + j;
      if (d >= 0) mat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = shifted(h_minus(d), -(j - 1));
    }
  return rdet(mat);
}

YSeries SymContext::schur_e(const Partition& lambda, ESchurShift shift) {
  const Partition conj = lambda.conjugate();
  const int k = conj.length();
  if (k == 0) throw std::invalid_argument("schur_e: empty partition");
  const auto zero = YSeries::zero(order_);
  std::vector<std::vector<YSeries>> mat(static_cast<std::size_t>(k), std::vector<YSeries>(static_cast<std::size_t>(k), zero));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      const int d = conj.part(i) - i + j;
      if (d < 0) continue;
      const int offset = shift == ESchurShift::Column ? j - 1 : 0;
      mat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = shifted(e(d), offset);
    }
  return rdet(mat);
}

bool level_bound_holds(const YSeries& f) {
  for (int m = 0; m < f.stored(); ++m)
    if (f.coeff(m).max_level() > m) return false;
  return true;
}

std::optional<int> first_difference(const YSeries& a, const YSeries& b) {
  const YSeries d = a - b;
  for (int m = 0; m < d.stored(); ++m)
    if (!d.coeff(m).is_zero()) return m;
  return std::nullopt;
}

std::optional<int> first_difference(const YMatrix& a, const YMatrix& b) {
  a.check_shape(b);
  std::optional<int> best;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (auto d = first_difference(a.at(r, c), b.at(r, c)); d && (!best || *d < *best)) best = d;
  return best;
}

std::optional<int> first_difference(const YTau& a, const YTau& b) {
  std::optional<int> best;
  const YTau diff = a - b;
  for (const auto& [d, f] : diff.terms())
    for (int m = 0; m < f.stored(); ++m)
      if (!f.coeff(m).is_zero()) {
        if (!best || m < *best) best = m;
        break;
      }
  return best;
}

}  // namespace yangsym
