#pragma once

#include <concepts>
#include <optional>

#include "yangsym/rational.hpp"

namespace yangsym {

/// Coefficient rings used throughout: default construction is zero,
/// construction from a Rational is the scalar multiple of the unit.
/// Multiplication need not be commutative.
template <class R>
concept Ring = requires(R a, const R& b, const Rational& q) {
  R();
  R(q);
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { a * q } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { b.is_zero() } -> std::convertible_to<bool>;
  { b == b } -> std::convertible_to<bool>;
};

inline std::optional<Rational> as_scalar(const Rational& r) { return r; }

}  // namespace yangsym
