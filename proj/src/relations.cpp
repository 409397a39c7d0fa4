#include <stdexcept>

#include "yangsym/pbw.hpp"
#include "yangsym/tensor.hpp"

namespace yangsym {

namespace {

// t_ij^{(r)} as a free-algebra element; t_ij^{(0)} is the scalar δ_ij.
FreeElement t_free(const GeneratorSet& gens, int i, int j, int r) {
  if (r == 0) return FreeElement(Rational(i == j ? 1 : 0));
  return FreeElement::word(Word{gens.id(i, j, r)});
}

// The coefficient matrix T^{(r)} on one leg.
TensorMatrix<FreeElement> t_coefficient(const GeneratorSet& gens, int r) {
  const int n = gens.n();
  TensorMatrix<FreeElement> m(n, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = t_free(gens, i, j, r);
  return m;
}

// Coefficient of u^{-p} v^{-q} of
//   (u - v) T_1(u) T_2(v) - P T_1(u) T_2(v) - (u - v) T_2(v) T_1(u) + T_2(v) T_1(u) P,
// which is R(u-v) T_1(u) T_2(v) - T_2(v) T_1(u) R(u-v) multiplied through by (u - v).
TensorMatrix<FreeElement> rtt_matrix(const GeneratorSet& gens, int p, int q) {
  const int n = gens.n();
  auto t1 = [&](int a) { return embed_leg(t_coefficient(gens, a), 1, 2); };
  auto t2 = [&](int b) { return embed_leg(t_coefficient(gens, b), 2, 2); };
  const auto perm = lift<FreeElement>(perm_op(1, 2, 2, n));
  // (T_1(u) T_2(v))_{a,b} = T_1^{(a)} T_2^{(b)}, (T_2(v) T_1(u))_{a,b} = T_2^{(b)} T_1^{(a)}.
  auto lhs = [&](int a, int b) { return t1(a) * t2(b); };
  auto rhs = [&](int a, int b) { return t2(b) * t1(a); };
  auto out = lhs(p + 1, q) - lhs(p, q + 1) - perm * lhs(p, q);
  out -= rhs(p + 1, q) - rhs(p, q + 1);
  out += rhs(p, q) * perm;
  return out;
}

FreeElement entry(const TensorMatrix<FreeElement>& m, int i, int j, int k, int l) {
  return m.at(m.flat({i - 1, k - 1}), m.flat({j - 1, l - 1}));
}

// Part of the (p, q) relation below the top level p + q + 1. The top level is
// C(p+1, q) - C(p, q+1) with C(r, s) = [t_ij^{(r)}, t_kl^{(s)}]; anything else
// at that level means the extraction is wrong.
FreeElement lower_part(const GeneratorSet& gens, const TensorMatrix<FreeElement>& x, int i, int j, int k, int l,
                       int p, int q) {
  auto comm = [&](int r, int s) {
    const auto a = t_free(gens, i, j, r);
    const auto b = t_free(gens, k, l, s);
    return a * b - b * a;
  };
  FreeElement rest = entry(x, i, j, k, l) - (comm(p + 1, q) - comm(p, q + 1));
  for (const auto& [w, c] : rest.terms())
    if (gens.level(w) > p + q)
      throw std::logic_error("RTT extraction: unexpected top-level term " + std::to_string(gens.level(w)));
  return rest;
}

}  // namespace

FreeElement rtt_coefficient(const GeneratorSet& gens, int i, int j, int k, int l, int p, int q) {
  return entry(rtt_matrix(gens, p, q), i, j, k, l);
}

// C(r, s) satisfies C(r, s) = C(r-1, s+1) - Rem(r-1, s) and C(0, s) = 0, hence
//   C(r, s) = - sum_{b=1}^{r} Rem(r-b, s+b-1).
FreeElement yangian_commutator(const GeneratorSet& gens, int i, int j, int r, int k, int l, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("yangian_commutator: levels start at 1");
  if (r + s > gens.max_level())
    throw std::out_of_range("yangian_commutator: generator set too small for this pair");
  FreeElement c;
  for (int b = 1; b <= r; ++b) {
    const int p = r - b;
    const int q = s + b - 1;
    c -= lower_part(gens, rtt_matrix(gens, p, q), i, j, k, l, p, q);
  }
  return c;
}

RewriteSystem yangian_relations(int n, int max_level) {
  const auto gens = GeneratorSet::yangian(n, max_level);
  // The top-level terms of the (p, q) relation carry level p + q + 1, one
  // more than any rule in the table uses.
  const auto wide = GeneratorSet::yangian(n, max_level + 1);
  RewriteSystem rules(gens.size());

  std::vector<std::vector<TensorMatrix<FreeElement>>> rtt(static_cast<std::size_t>(max_level));
  for (int p = 0; p < max_level; ++p)
    for (int q = 0; p + q <= max_level; ++q) rtt[static_cast<std::size_t>(p)].push_back(rtt_matrix(wide, p, q));

  auto to_narrow = [&](const Word& w) {
    Word out;
    for (GenId g : w) {
      const auto& id = wide[g];
      out.push_back(gens.id(id.i, id.j, id.level));
    }
    return out;
  };

  for (int a = 0; a < gens.size(); ++a)
    for (int b = a + 1; b < gens.size(); ++b) {
      const auto& x = gens[static_cast<GenId>(a)];
      const auto& y = gens[static_cast<GenId>(b)];
      if (x.level + y.level - 1 > max_level) continue;
      // C = x y - y x; rule: y x = x y - C.
      FreeElement comm;
      for (int t = 1; t <= x.level; ++t) {
        const int p = x.level - t;
        const int q = y.level + t - 1;
        comm -= lower_part(wide, rtt[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)], x.i, x.j, y.i, y.j, p,
                           q);
      }
      Terms corr;
      for (const auto& [w, c] : comm.terms()) corr.emplace_back(to_narrow(w), -c);
      std::sort(corr.begin(), corr.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
      rules.set(static_cast<GenId>(b), static_cast<GenId>(a), std::move(corr));
    }
  return rules;
}

RewriteSystem ugl_relations(int n) {
  const auto gens = GeneratorSet::gl(n);
  RewriteSystem rules(gens.size());
  for (int a = 0; a < gens.size(); ++a)
    for (int b = a + 1; b < gens.size(); ++b) {
      const auto& x = gens[static_cast<GenId>(a)];
      const auto& y = gens[static_cast<GenId>(b)];
      // [x, y] = [e_ij, e_kl] = δ_jk e_il - δ_li e_kj; rule y x = x y - [x, y].
      std::map<Word, Rational> acc;
      if (x.j == y.i) acc[Word{gens.id(x.i, y.j)}] += Rational(-1);
      if (y.j == x.i) acc[Word{gens.id(y.i, x.j)}] += Rational(1);
      Terms corr;
      for (auto& [w, c] : acc)
        if (!c.is_zero()) corr.emplace_back(w, c);
      rules.set(static_cast<GenId>(b), static_cast<GenId>(a), std::move(corr));
    }
  return rules;
}

}  // namespace yangsym
