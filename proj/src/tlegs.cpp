#include "yangsym/tlegs.hpp"

namespace yangsym {

YMatrix generating_matrix(const AlgebraPtr& alg, int order, const Rational& shift) {
  if (!alg || alg->kind() != AlgebraKind::Yangian) throw std::invalid_argument("generating_matrix: needs a Yangian");
  if (order < 1) throw std::invalid_argument("generating_matrix: order must be positive");
  const int n = alg->n();
  const auto& g = alg->generators();
  if (g.max_level() < order) throw std::invalid_argument("generating_matrix: truncation level below series order");
  YMatrix t(n, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      std::vector<AlgebraElement> c;
      c.emplace_back(alg, Rational(i == j ? 1 : 0));
      for (int r = 1; r <= order; ++r) c.push_back(AlgebraElement::generator(alg, g.id(i, j, r)));
      t.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          series_shift(YSeries(order, std::move(c)), shift);
    }
  return t;
}

YMatrix t_leg(const AlgebraPtr& alg, int s, const Rational& shift, int k, int order) {
  return embed_leg(generating_matrix(alg, order, shift), s, k);
}

YMatrix constant_legs(const TensorMatrix<Rational>& a) { return lift<YSeries>(a); }

}  // namespace yangsym
