#pragma once

#include <string>

#include "json.hpp"
#include "yangsym/capelli.hpp"
#include "yangsym/symfun.hpp"

namespace yangsym {

using Json = nlohmann::ordered_json;

/// Rationals are strings "p" or "p/q".
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// [{"monomial": [generator ids], "coeff": "p/q"}, ...] in word order.
Json to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const Json& j, const AlgebraPtr& alg);

/// {"kind": "yangian" | "gl", "n": n, "truncation": L}
Json algebra_json(const AlgebraPtr& alg);

/// Canonical series / τ-operator form:
/// {"order": N, "terms": [{"tau": d, "coeffs": [{"m": m, "value": ...}]}]}.
/// A series is a single τ^0 term; exact orders are written as null.
template <class R>
Json tau_json(const TauOperator<R>& x) {
  Json terms = Json::array();
  for (const auto& [d, f] : x.terms()) {
    Json coeffs = Json::array();
    for (int m = 0; m < f.stored(); ++m)
      if (!f.coeff(m).is_zero()) coeffs.push_back(Json{{"m", m}, {"value", to_json(f.coeff(m))}});
    terms.push_back(Json{{"tau", d}, {"coeffs", std::move(coeffs)}});
  }
  Json j;
  const int order = x.order();
  if (order == kExactOrder) j["order"] = nullptr;
  else j["order"] = order;
  j["terms"] = std::move(terms);
  return j;
}

template <class R>
Json series_json(const USeries<R>& f) {
  if (f.is_zero()) {
    Json j;
    if (f.is_exact()) j["order"] = nullptr;
    else j["order"] = f.order();
    j["terms"] = Json::array();
    return j;
  }
  return tau_json(TauOperator<R>(f, 0));
}

YTau tau_from_json(const Json& j, const AlgebraPtr& alg);
/// Requires at most a τ^0 term.
YSeries series_from_json(const Json& j, const AlgebraPtr& alg);

/// [{"degree": d, "value": ...}, ...]
template <class R>
Json polynomial_json(const UPolynomial<R>& p) {
  Json out = Json::array();
  for (int d = 0; d <= p.degree(); ++d)
    if (!p.coeff(d).is_zero()) out.push_back(Json{{"degree", d}, {"value", to_json(p.coeff(d))}});
  return out;
}

/// {"variables": ["mu1", ..., "u"], "terms": [{"exponents": [...], "coeff": "p/q"}], "text": "..."}
Json to_json(const ShiftedPolynomial& p);

/// Compact dump with keys in insertion order; the byte form used by the cache.
std::string canonical_dump(const Json& j);

}  // namespace yangsym
