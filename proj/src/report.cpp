#include "yangsym/report.hpp"

#include <chrono>
#include <sstream>

namespace yangsym {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

CheckRecord timed_check(std::string name, std::string anchor, nlohmann::ordered_json params,
                        const std::function<Outcome()>& body) {
  CheckRecord r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.params = std::move(params);
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = Outcome::fail(std::nullopt, -1, std::string("exception: ") + e.what());
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.status = o.status;
  r.determined_order = o.determined_order;
  r.difference = std::move(o.difference);
  r.note = std::move(o.note);
  return r;
}

bool all_passed(const std::vector<CheckRecord>& records) {
  for (const auto& r : records)
    if (r.status == CheckStatus::Fail) return false;
  return true;
}

nlohmann::ordered_json to_json(const CheckRecord& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["anchor"] = r.anchor;
  j["params"] = r.params;
  j["status"] = to_string(r.status);
  if (r.determined_order >= 0) j["determined_order"] = r.determined_order;
  else j["determined_order"] = nullptr;
  if (with_timing) j["wall_seconds"] = r.wall_seconds;
  if (r.difference)
    j["first_difference"] = {{"where", r.difference->where}, {"lhs", r.difference->lhs}, {"rhs", r.difference->rhs}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string to_text(const CheckRecord& r) {
  std::ostringstream os;
  os << (r.status == CheckStatus::Pass ? "PASS" : r.status == CheckStatus::Fail ? "FAIL" : "SKIP") << "  " << r.name;
  if (!r.params.empty()) os << " " << r.params.dump();
  if (r.determined_order >= 0) os << " [order " << r.determined_order << "]";
  if (r.difference) os << " first difference at " << r.difference->where << ": " << r.difference->lhs << " vs " << r.difference->rhs;
  if (!r.note.empty()) os << " -- " << r.note;
  return os.str();
}

std::optional<Difference> difference(const AlgebraElement& lhs, const AlgebraElement& rhs, const std::string& where) {
  const AlgebraElement d = lhs - rhs;
  if (d.is_zero()) return std::nullopt;
  const Word& w = d.terms().begin()->first;
  const AlgebraPtr& alg = d.algebra();
  std::string mono = w.empty() ? "1" : alg ? alg->word_name(w) : "?";
  return Difference{where.empty() ? mono : where + " " + mono, lhs.coeff(w).str(), rhs.coeff(w).str()};
}

namespace {

std::optional<Difference> series_difference(const YSeries& lhs, const YSeries& rhs, const std::string& prefix) {
  const YSeries d = lhs - rhs;
  for (int m = 0; m < d.stored(); ++m)
    if (!d.coeff(m).is_zero()) return difference(lhs.coeff(m), rhs.coeff(m), prefix + "u^-" + std::to_string(m));
  return std::nullopt;
}

}  // namespace

std::optional<Difference> difference(const YSeries& lhs, const YSeries& rhs) { return series_difference(lhs, rhs, ""); }

std::optional<Difference> difference(const YTau& lhs, const YTau& rhs) {
  const YTau d = lhs - rhs;
  for (const auto& [deg, f] : d.terms()) {
    (void)f;
    if (auto r = series_difference(lhs.coeff(deg), rhs.coeff(deg), "tau^" + std::to_string(deg) + " ")) return r;
  }
  return std::nullopt;
}

std::optional<Difference> difference(const YMatrix& lhs, const YMatrix& rhs) {
  lhs.check_shape(rhs);
  for (std::size_t r = 0; r < lhs.dim(); ++r)
    for (std::size_t c = 0; c < lhs.dim(); ++c)
      if (auto d = series_difference(lhs.at(r, c), rhs.at(r, c), "(" + std::to_string(r) + "," + std::to_string(c) + ") "))
        return d;
  return std::nullopt;
}

std::optional<Difference> difference(const TensorMatrix<Rational>& lhs, const TensorMatrix<Rational>& rhs) {
  lhs.check_shape(rhs);
  for (std::size_t r = 0; r < lhs.dim(); ++r)
    for (std::size_t c = 0; c < lhs.dim(); ++c)
      if (lhs.at(r, c) != rhs.at(r, c))
        return Difference{"(" + std::to_string(r) + "," + std::to_string(c) + ")", lhs.at(r, c).str(), rhs.at(r, c).str()};
  return std::nullopt;
}

}  // namespace yangsym
