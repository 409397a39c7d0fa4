#pragma once

#include "yangsym/pbw.hpp"
#include "yangsym/series.hpp"
#include "yangsym/tau.hpp"
#include "yangsym/tensor.hpp"

namespace yangsym {

using YSeries = USeries<AlgebraElement>;
using YTau = TauOperator<AlgebraElement>;
using YMatrix = TensorMatrix<YSeries>;

/// T(u + shift) on one leg: entry (i, j) is t_ij(u + shift) truncated at
/// `order`, with t_ij(u) = δ_ij + sum_r t_ij^(r) u^{-r}.
YMatrix generating_matrix(const AlgebraPtr& alg, int order, const Rational& shift = Rational(0));

/// T_s(u + shift) on k legs.
YMatrix t_leg(const AlgebraPtr& alg, int s, const Rational& shift, int k, int order);

/// A scalar operator as a matrix of exact constant series.
YMatrix constant_legs(const TensorMatrix<Rational>& a);

}  // namespace yangsym
