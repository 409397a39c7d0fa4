#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "yangsym/symfun.hpp"

using namespace yangsym;

namespace {

AlgebraElement t(const SymContext& ctx, int i, int j, int r) {
  return AlgebraElement::generator(ctx.algebra(), ctx.algebra()->generators().id(i, j, r));
}

AlgebraElement scalar(const SymContext& ctx, long c) { return AlgebraElement(ctx.algebra(), Rational(c)); }

bool same(const YSeries& a, const YSeries& b) { return !first_difference(a, b); }
bool same(const YTau& a, const YTau& b) { return !first_difference(a, b); }

}  // namespace

TEST_CASE("compositions and partitions") {
  CHECK(compositions(1) == std::vector<std::vector<int>>{{1}});
  CHECK(compositions(3) == std::vector<std::vector<int>>{{1, 1, 1}, {1, 2}, {2, 1}, {3}});
  for (int k = 1; k <= 6; ++k) CHECK(compositions(k).size() == (1u << (k - 1)));

  const auto l = Partition::parse("3,1,1");
  CHECK(l.conjugate() == Partition({3, 1, 1}));
  CHECK(Partition::parse("2,1").conjugate() == Partition({2, 1}));
  CHECK(Partition::parse("2").conjugate() == Partition({1, 1}));
  CHECK(Partition::parse("4,2,1").conjugate().conjugate() == Partition::parse("4,2,1"));
  CHECK_THROWS(Partition::parse("1,2"));
  CHECK_THROWS(Partition::parse("1,x"));
}

TEST_CASE("row determinant") {
  using M = std::vector<std::vector<Rational>>;
  CHECK(rdet(M{{Rational(7)}}) == Rational(7));
  CHECK(rdet(M{{Rational(2), Rational(1), Rational(0)},
               {Rational(1), Rational(3), Rational(1)},
               {Rational(0), Rational(1), Rational(4)}}) == Rational(18));
  const auto x = [](int g) { return FreeElement::word(Word{static_cast<GenId>(g)}); };
  const std::vector<std::vector<FreeElement>> m{{x(0), x(1)}, {x(2), x(3)}};
  CHECK(rdet(m) == x(0) * x(3) - x(1) * x(2));
}

TEST_CASE("generating matrix") {
  const auto alg = Algebra::yangian(2, 2);
  const auto t1 = generating_matrix(alg, 1);
  CHECK(t1.at(0, 0) == YSeries(1, {AlgebraElement(alg, Rational(1)), t1.at(0, 0).coeff(1)}));
  CHECK(t1.at(0, 1).coeff(0).is_zero());
  CHECK(t1.at(0, 1).coeff(1) == AlgebraElement::generator(alg, alg->generators().id(1, 2, 1)));

  const auto tm = generating_matrix(alg, 2, Rational(-1));
  const auto g1 = AlgebraElement::generator(alg, alg->generators().id(1, 1, 1));
  const auto g2 = AlgebraElement::generator(alg, alg->generators().id(1, 1, 2));
  CHECK(tm.at(0, 0) == YSeries(2, {AlgebraElement(alg, Rational(1)), g1, g1 + g2}));

  const auto leg = t_leg(alg, 2, Rational(0), 2, 2);
  for (std::size_t r = 0; r < leg.dim(); ++r)
    for (std::size_t c = 0; c < leg.dim(); ++c) {
      const auto v = leg.at(r, c).coeff(0).scalar();
      CHECK((v && *v == Rational(r == c ? 1 : 0)));
    }
}

TEST_CASE("elementary, homogeneous and power sums: basic values") {
  for (int n = 1; n <= 3; ++n) {
    SymContext ctx(n, 3);
    AlgebraElement tr1, tr2;
    for (int i = 1; i <= n; ++i) {
      tr1 += t(ctx, i, i, 1);
      tr2 += t(ctx, i, i, 2);
    }
    CHECK(ctx.e(1).coeff(0) == scalar(ctx, n));
    CHECK(ctx.e(1).coeff(1) == tr1);
    CHECK(ctx.e(1).coeff(2) == tr2);
    CHECK(same(ctx.h(1), ctx.e(1)));
    CHECK(same(ctx.p(1, 1), ctx.e(1)));
    CHECK(same(ctx.p(1, -1), ctx.e(1)));
    for (int k = 1; k <= 3; ++k) {
      CHECK(ctx.e(k).coeff(0) == scalar(ctx, 0) + AlgebraElement(ctx.algebra(), binomial(n, k)));
      CHECK(ctx.h(k).coeff(0) == AlgebraElement(ctx.algebra(), binomial(n + k - 1, k)));
      CHECK(ctx.p(k, -1).coeff(0) == scalar(ctx, n));
      CHECK(level_bound_holds(ctx.e(k)));
      CHECK(level_bound_holds(ctx.h(k)));
      CHECK(level_bound_holds(ctx.p(k, 1)));
    }
    CHECK(ctx.e(n + 1).is_zero());
    CHECK(ctx.algebra()->dropped_monomials() == 0);
  }
}

TEST_CASE("h_2 against a direct expansion") {
  // tr(S_2 X_1 Y_2) = (tr X tr Y + tr XY) / 2 with X = T(u), Y = T(u+1).
  SymContext ctx(2, 2);
  const auto& x = ctx.T(Rational(0));
  const auto& y = ctx.T(Rational(1));
  YSeries direct = YSeries::zero(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) direct = direct + x.at(i, i) * y.at(j, j) + x.at(i, j) * y.at(j, i);
  CHECK(same(ctx.h(2), direct * Rational(1, 2)));
}

TEST_CASE("p^-_2 through the cyclic permutation identity") {
  SymContext ctx(2, 4);
  const auto legs = leg_product<YSeries>(2, {{1, &ctx.T(Rational(0))}, {2, &ctx.T(Rational(-1))}});
  const auto via_perm = trace_full(lift<YSeries>(perm_op(1, 2, 2, 2)) * legs);
  CHECK(same(ctx.p(2, -1), via_perm));
}

TEST_CASE("tau operators match their direct traces") {
  SymContext ctx(2, 4);
  for (int k = 1; k <= 3; ++k) {
    CHECK(same(ctx.e_tau(k), ctx.e_tau_direct(k)));
    CHECK(same(ctx.h_tau(k), ctx.h_tau_direct(k)));
    CHECK(same(ctx.p_tau(k, 1), ctx.p_tau_direct(k, 1)));
    CHECK(same(ctx.p_tau(k, -1), ctx.p_tau_direct(k, -1)));
  }
  CHECK(ctx.e_tau(2).terms().begin()->first == -2);
}

TEST_CASE("Bethe generators and the lemma constant") {
  for (int n = 1; n <= 3; ++n) {
    SymContext ctx(n, 3);
    const auto id = TensorMatrix<Rational>::identity(n, 1);
    for (int k = 1; k <= n; ++k) {
      // Tracing A_n over legs k+1..n leaves A_k / binom(n, k).
      CHECK(same(ctx.e(k), ctx.bethe_b(k, id) * binomial(n, k)));
    }
    TensorMatrix<Rational> z(n, 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) z.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(i + 2 * j + 1, 3);
    CHECK(same(ctx.bethe_b(n, z), ctx.e(n)));
  }
  SymContext c2(2, 3), c3(3, 3);
  const auto i2 = TensorMatrix<Rational>::identity(2, 1);
  const auto i3 = TensorMatrix<Rational>::identity(3, 1);
  CHECK(same(c2.bethe_b(1, i2), c2.e(1) * Rational(1, 2)));
  CHECK(same(c3.bethe_b(1, i3), c3.e(1) * Rational(1, 3)));
  CHECK_THROWS(c2.bethe_b(3, i2));
}

TEST_CASE("trace presentations with B-factors and shifted projectors") {
  for (int n = 1; n <= 2; ++n) {
    SymContext ctx(n, 4);
    for (int k = 1; k <= 3; ++k)
      for (auto v : {EBVariant::BMinus, EBVariant::BPlus, EBVariant::AIncreasing, EBVariant::SDecreasing}) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(static_cast<int>(v));
        CHECK(same(ctx.eB_trace(k, v), ctx.eB_target(k, v)));
      }
    CHECK(same(ctx.eB_trace(1, EBVariant::AIncreasing), ctx.p(1, 1)));
  }
  SymContext ctx(2, 4);
  CHECK(same(ctx.eB_trace(2, EBVariant::AIncreasing), series_shift(ctx.e(2), Rational(1))));
}

TEST_CASE("intertwining") {
  for (int n = 1; n <= 2; ++n) {
    SymContext ctx(n, 3);
    for (int k = 1; k <= 2; ++k)
      for (auto kind : {SymKind::E, SymKind::H}) {
        const auto [lhs, rhs] = ctx.intertwining_sides(k, kind);
        CHECK_FALSE(first_difference(lhs, rhs));
      }
  }
  // Without the projector the two orderings differ.
  SymContext ctx(2, 2);
  const auto a = leg_product<YSeries>(2, {{1, &ctx.T(Rational(0))}, {2, &ctx.T(Rational(-1))}});
  const auto b = leg_product<YSeries>(2, {{2, &ctx.T(Rational(-1))}, {1, &ctx.T(Rational(0))}});
  CHECK(first_difference(a, b));
}

TEST_CASE("composition sums") {
  SymContext ctx(2, 4);
  CHECK(same(ctx.composition_sum(1, SymKind::E), ctx.p_tau(1, -1)));
  CHECK(same(ctx.composition_sum(1, SymKind::H), ctx.p_tau(1, 1)));
  const auto two = ctx.p_tau(2, -1) * Rational(-1, 2) + ctx.p_tau(1, -1) * ctx.p_tau(1, -1) * Rational(1, 2);
  CHECK(same(ctx.composition_sum(2, SymKind::E), two));
  for (int k = 1; k <= 3; ++k) {
    CHECK(same(ctx.composition_sum(k, SymKind::E), ctx.e_tau(k)));
    CHECK(same(ctx.composition_sum(k, SymKind::H), ctx.h_tau(k)));
  }
}

TEST_CASE("Newton identities") {
  SymContext ctx(2, 4);
  for (int m = 1; m <= 3; ++m)
    for (auto kind : {SymKind::E, SymKind::H}) {
      const auto [lhs, rhs] = ctx.newton_sides(m, kind);
      CHECK(same(lhs, rhs));
    }
  const auto [lhs, rhs] = ctx.newton_sides(3, SymKind::E);
  CHECK(rhs.is_zero());
  CHECK(lhs.is_zero());
  // Replacing p^- by p^+ breaks the identity.
  const auto wrong = ctx.p_tau(2, 1) * Rational(-1) + ctx.e_tau(1) * ctx.p_tau(1, 1);
  CHECK_FALSE(same(wrong, ctx.e_tau(2) * Rational(2)));
}

TEST_CASE("determinant formulas") {
  SymContext ctx(2, 4);
  for (int m = 1; m <= 4; ++m)
    for (auto f : {DetFormula::EFromP, DetFormula::HFromP, DetFormula::PFromELastRow, DetFormula::PFromHLastRow}) {
      CAPTURE(m);
      CAPTURE(static_cast<int>(f));
      CHECK(same(ctx.det_formula(m, f), ctx.det_target(m, f)));
    }
  for (int m = 1; m <= 2; ++m) {
    CHECK(same(ctx.det_formula(m, DetFormula::PFromE), ctx.p(m, -1)));
    CHECK(same(ctx.det_formula(m, DetFormula::PFromH), ctx.p(m, 1)));
  }
  // With first-column weights the m = 3 determinant overshoots p^-_3 by
  // e_1(u)e_2(u-1) - e_2(u)e_1(u-2), which is nonzero from u^{-3} on.
  const auto excess = ctx.e(1) * series_shift(ctx.e(2), Rational(-1)) - ctx.e(2) * series_shift(ctx.e(1), Rational(-2));
  CHECK(first_difference(excess, YSeries::zero(4)) == 3);
  CHECK(same(ctx.det_formula(3, DetFormula::PFromE) - ctx.p(3, -1), excess));
  CHECK(first_difference(ctx.det_formula(3, DetFormula::PFromH), ctx.p(3, 1)) == 3);
  // m = 2, p from h: h_1(u) h_1(u+1) - 2 h_2(u) = -p^+_2(u)
  const auto det = ctx.h(1) * series_shift(ctx.h(1), Rational(1)) - ctx.h(2) * Rational(2);
  CHECK(same(det, -ctx.p(2, 1)));
}

TEST_CASE("h^- and the inverse of E") {
  SymContext ctx(2, 4);
  CHECK(same(ctx.h_minus(1), ctx.e(1)));
  const auto h2 = (series_shift(ctx.p(2, -1), Rational(1)) + ctx.p(1, -1) * series_shift(ctx.p(1, -1), Rational(1))) *
                  Rational(1, 2);
  CHECK(same(ctx.h_minus(2), h2));
  for (int m = 0; m <= 4; ++m) CHECK(same(ctx.h_minus(m), ctx.h_minus_recursive(m)));

  const int depth = 4;
  const auto prod = ctx.gen_E() * tau_shift_argument(ctx.gen_Hminus(depth), Rational(1));
  CHECK(same(YTau(prod.coeff(0), 0), YTau(Rational(1))));
  for (int d = -1; d >= -depth; --d) CHECK(prod.coeff(d).is_zero());
  CHECK(same(YTau(prod.coeff(-1), -1), YTau(ctx.h_minus(1) - ctx.e(1), -1)));

  for (int k = 1; k <= 3; ++k) CHECK(same(ctx.e_from_hminus(k), ctx.e(k)));
}

TEST_CASE("Schur functions") {
  SymContext ctx(2, 4);
  const auto one = Partition::parse("1");
  CHECK(same(ctx.schur_h(one), ctx.e(1)));
  CHECK(same(ctx.schur_e(one, ESchurShift::Column), ctx.h_minus(1)));
  CHECK(same(ctx.schur_h(Partition::parse("1,1")), ctx.e(2)));
  CHECK(same(ctx.schur_e(Partition::parse("1,1"), ESchurShift::Plain), ctx.e(2)));
  for (const char* l : {"1", "2", "1,1", "2,1", "2,2"}) {
    const auto lambda = Partition::parse(l);
    CHECK(same(ctx.schur_h(lambda), ctx.schur_e(lambda, ESchurShift::Column)));
  }
  CHECK_FALSE(same(ctx.schur_h(Partition::parse("2")), ctx.schur_e(Partition::parse("2"), ESchurShift::Plain)));
}
