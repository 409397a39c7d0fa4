#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "yangsym/tensor.hpp"

using namespace yangsym;
using yangsym::testing::random_free;
using TM = TensorMatrix<Rational>;

namespace {

const ProjectorMethod kMethods[] = {ProjectorMethod::GroupSum, ProjectorMethod::Fusion, ProjectorMethod::BProduct};

// Matrix of the basis map e_{a_1}⊗...⊗e_{a_k} -> e_{b_1}⊗...⊗e_{b_k}, b = f(a).
template <class F>
TM basis_map(int n, int k, F f) {
  TM out(n, k);
  for (std::size_t col = 0; col < out.dim(); ++col) out.at(out.flat(f(out.digits(col))), col) = Rational(1);
  return out;
}

TensorMatrix<FreeElement> random_matrix(std::mt19937_64& rng, int n) {
  TensorMatrix<FreeElement> x(n, 1);
  for (std::size_t r = 0; r < x.dim(); ++r)
    for (std::size_t c = 0; c < x.dim(); ++c) x.at(r, c) = random_free(rng, 4);
  return x;
}

}  // namespace

TEST_CASE("permutation operators") {
  const auto p = perm_op(1, 2, 2, 2);
  TM swap(2, 2);
  swap.at(0, 0) = swap.at(1, 2) = swap.at(2, 1) = swap.at(3, 3) = Rational(1);
  CHECK(p == swap);
  for (int n = 1; n <= 3; ++n) CHECK(perm_op(1, 3, 3, n) * perm_op(1, 3, 3, n) == TM::identity(n, 3));

  const auto cycle = basis_map(3, 3, [](const std::vector<int>& a) { return std::vector<int>{a[2], a[0], a[1]}; });
  CHECK(perm_op(1, 3, 3, 3) * perm_op(1, 2, 3, 3) == cycle);
  CHECK(permutation_operator({1, 2, 0}, 3) == cycle);

  CHECK_THROWS(perm_op(2, 2, 3, 2));
  CHECK_THROWS(perm_op(1, 4, 3, 2));
}

TEST_CASE("Yang R-matrix") {
  CHECK(r_matrix(1, 2, Rational(1), 2, 2) == antisymmetrizer(2, 2) * Rational(2));
  for (const auto& c : {Rational(1), Rational(3), Rational(-1, 2)}) {
    const auto prod = r_matrix(1, 2, c, 2, 3) * r_matrix(1, 2, -c, 2, 3);
    CHECK(prod == TM::identity(3, 2) * (Rational(1) - (c * c).reciprocal()));
  }
  CHECK(r_matrix(1, 2, Rational(1), 2, 1).is_zero());
  CHECK_THROWS_AS(r_matrix(1, 2, Rational(0), 2, 2), std::domain_error);
}

TEST_CASE("A_2 by all three methods") {
  for (int n = 1; n <= 3; ++n) {
    const auto expect = (TM::identity(n, 2) - perm_op(1, 2, 2, n)) * Rational(1, 2);
    for (auto m : kMethods) CHECK(antisymmetrizer(2, n, m) == expect);
  }
}

TEST_CASE("explicit A_3 factorizations") {
  for (int n = 1; n <= 3; ++n) {
    const auto a3 = antisymmetrizer(3, n);
    const auto r = [&](int l, int m, Rational c) { return r_matrix(l, m, c, 3, n); };
    CHECK(r(2, 3, Rational(1)) * r(1, 3, Rational(2)) * r(1, 2, Rational(1)) * Rational(1, 6) == a3);
    CHECK(r(1, 2, Rational(1)) * r(2, 3, Rational(1, 2)) * r(1, 2, Rational(1)) * Rational(1, 12) == a3);
  }
}

TEST_CASE("projector traces, idempotence and method agreement") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 4; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const auto a = antisymmetrizer(k, n);
      const auto s = symmetrizer(k, n);
      CHECK(trace_full(a) == binomial(n, k));
      CHECK(trace_full(s) == binomial(n + k - 1, k));
      CHECK(rank(a) == binomial(n, k));
      CHECK(a * a == a);
      CHECK(s * s == s);
      for (auto m : kMethods) {
        CHECK(antisymmetrizer(k, n, m) == a);
        CHECK(symmetrizer(k, n, m) == s);
      }
    }
}

TEST_CASE("fusion step") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(fusion_step(TM::identity(n, 1), FusionKind::Antisymmetric) ==
          (TM::identity(n, 2) - perm_op(1, 2, 2, n)) * Rational(1, 2));
    CHECK(fusion_step(antisymmetrizer(2, n), FusionKind::Antisymmetric) == antisymmetrizer(3, n));
    CHECK(fusion_step(symmetrizer(2, n), FusionKind::Symmetric) == symmetrizer(3, n));
    CHECK(fusion_step(antisymmetrizer(n, n), FusionKind::Antisymmetric).is_zero());
  }
}

TEST_CASE("traces") {
  CHECK(trace_full(TM::identity(3, 2)) == Rational(9));
  for (int n = 1; n <= 3; ++n) CHECK(trace_partial(perm_op(1, 2, 2, n), {2}) == TM::identity(n, 1));
  CHECK_THROWS(trace_partial(perm_op(1, 2, 2, 2), {3}));
}

TEST_CASE("partial trace of an antisymmetrizer over its last leg") {
  // The factor is fixed by comparing full traces: tr A_{m+1} = c tr A_m.
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m < n; ++m) {
      const auto reduced = trace_partial(antisymmetrizer(m + 1, n), {m + 1});
      const auto c = binomial(n, m + 1) / binomial(n, m);
      CHECK(reduced == antisymmetrizer(m, n) * c);
      CHECK(c == Rational(n - m, m + 1));
    }
  // Direct expansion: tr_2 (1 - P)/2 = (n - 1)/2.
  CHECK(trace_partial(antisymmetrizer(2, 3), {2}) == TM::identity(3, 1));
  CHECK(trace_partial(antisymmetrizer(3, 3), {3}) == antisymmetrizer(2, 3) * Rational(1, 3));
}

TEST_CASE("cyclic permutation turns a leg product into an ordinary matrix product") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 4; ++k) {
      if (n == 3 && k == 4) continue;  // covered by the leg_trace route below
      std::vector<TensorMatrix<FreeElement>> xs;
      for (int s = 0; s < k; ++s) xs.push_back(random_matrix(rng, n));

      auto cyc = TM::identity(n, k);
      for (int l = k - 1; l >= 1; --l) cyc = cyc * perm_op(l, l + 1, k, n);

      std::vector<std::pair<int, const TensorMatrix<FreeElement>*>> factors;
      std::vector<const TensorMatrix<FreeElement>*> legs;
      for (int s = 0; s < k; ++s) {
        factors.emplace_back(s + 1, &xs[s]);
        legs.push_back(&xs[s]);
      }
      const auto lhs = trace_full(lift<FreeElement>(cyc) * leg_product(k, factors));

      auto prod = xs[0];
      for (int s = 1; s < k; ++s) prod = prod * xs[s];
      CHECK(lhs == trace_full(prod));
      CHECK(leg_trace(cyc, legs) == lhs);
    }
}

TEST_CASE("leg_trace agrees with explicit leg products") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k) {
      std::vector<TensorMatrix<FreeElement>> xs;
      for (int s = 0; s < k; ++s) xs.push_back(random_matrix(rng, n));
      std::vector<std::pair<int, const TensorMatrix<FreeElement>*>> factors;
      std::vector<const TensorMatrix<FreeElement>*> legs;
      for (int s = 0; s < k; ++s) {
        factors.emplace_back(s + 1, &xs[s]);
        legs.push_back(&xs[s]);
      }
      const auto a = antisymmetrizer(k, n);
      const auto s = symmetrizer(k, n);
      const auto prod = leg_product(k, factors);
      CHECK(leg_trace(a, legs) == trace_full(lift<FreeElement>(a) * prod));
      CHECK(leg_trace(s, legs) == trace_full(lift<FreeElement>(s) * prod));
    }
}

TEST_CASE("leg placement") {
  TM x(2, 1);
  x.at(0, 1) = Rational(5);
  const auto e = embed_leg(x, 2, 2);
  CHECK(e.at(e.flat({0, 0}), e.flat({0, 1})) == Rational(5));
  CHECK(e.at(e.flat({1, 0}), e.flat({1, 1})) == Rational(5));
  CHECK(e.at(e.flat({0, 0}), e.flat({1, 1})) == Rational(0));
  CHECK(extend_legs(x, 1) == embed_leg(x, 1, 2));
  CHECK_THROWS(x * TM::identity(2, 2));
}
