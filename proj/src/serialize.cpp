#include "yangsym/serialize.hpp"

#include <stdexcept>

namespace yangsym {

Json to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational: expected a string");
  return Rational::parse(j.get<std::string>());
}

Json to_json(const AlgebraElement& x) {
  Json out = Json::array();
  for (const auto& [w, c] : x.terms()) {
    Json mono = Json::array();
    for (GenId g : w) mono.push_back(static_cast<int>(g));
    out.push_back(Json{{"monomial", std::move(mono)}, {"coeff", to_json(c)}});
  }
  return out;
}

AlgebraElement element_from_json(const Json& j, const AlgebraPtr& alg) {
  if (!j.is_array()) throw std::invalid_argument("algebra element: expected an array");
  AlgebraElement out(alg, Rational(0));
  const int gens = alg->generators().size();
  for (const auto& term : j) {
    Word w;
    for (const auto& g : term.at("monomial")) {
      const int id = g.get<int>();
      if (id < 0 || id >= gens) throw std::invalid_argument("algebra element: generator id out of range");
      w.push_back(static_cast<GenId>(id));
    }
    out += AlgebraElement::from_word(alg, w, rational_from_json(term.at("coeff")));
  }
  return out;
}

Json algebra_json(const AlgebraPtr& alg) {
  return Json{{"kind", alg->kind() == AlgebraKind::Yangian ? "yangian" : "gl"},
              {"n", alg->n()},
              {"truncation", alg->truncation()}};
}

YTau tau_from_json(const Json& j, const AlgebraPtr& alg) {
  const int order = j.at("order").is_null() ? kExactOrder : j.at("order").get<int>();
  YTau out;
  for (const auto& term : j.at("terms")) {
    std::vector<AlgebraElement> coeffs;
    for (const auto& c : term.at("coeffs")) {
      const int m = c.at("m").get<int>();
      if (m < 0 || (order != kExactOrder && m > order)) throw std::invalid_argument("series: exponent beyond order");
      if (static_cast<int>(coeffs.size()) <= m) coeffs.resize(static_cast<std::size_t>(m) + 1);
      coeffs[static_cast<std::size_t>(m)] = element_from_json(c.at("value"), alg);
    }
    out += YTau(YSeries(order, std::move(coeffs)), term.at("tau").get<int>());
  }
  return out;
}

YSeries series_from_json(const Json& j, const AlgebraPtr& alg) {
  const YTau t = tau_from_json(j, alg);
  for (const auto& [d, f] : t.terms())
    if (d != 0) throw std::invalid_argument("series: unexpected τ-degree");
  const int order = j.at("order").is_null() ? kExactOrder : j.at("order").get<int>();
  return t.is_zero() ? YSeries::zero(order) : t.coeff(0);
}

Json to_json(const ShiftedPolynomial& p) {
  Json vars = Json::array();
  for (int i = 1; i <= p.n(); ++i) vars.push_back("mu" + std::to_string(i));
  vars.push_back("u");
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exponents", e}, {"coeff", to_json(c)}});
  return Json{{"variables", std::move(vars)}, {"terms", std::move(terms)}, {"text", p.str()}};
}

std::string canonical_dump(const Json& j) { return j.dump(); }

}  // namespace yangsym
