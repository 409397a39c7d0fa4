#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "yangsym/symfun.hpp"

namespace yangsym {

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

/// First differing coefficient of a failed identity.
struct Difference {
  std::string where;  // position: τ-degree, u-exponent, monomial
  std::string lhs;
  std::string rhs;
};

struct CheckRecord {
  std::string name;
  std::string anchor;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  CheckStatus status = CheckStatus::Pass;
  /// Series order up to which the identity is decided; -1 for non-series checks.
  int determined_order = -1;
  double wall_seconds = 0;
  std::optional<Difference> difference;
  std::string note;
};

struct Outcome {
  CheckStatus status = CheckStatus::Pass;
  int determined_order = -1;
  std::optional<Difference> difference;
  std::string note;

  static Outcome pass(int order = -1, std::string note = {}) { return {CheckStatus::Pass, order, std::nullopt, std::move(note)}; }
  static Outcome fail(std::optional<Difference> d, int order = -1, std::string note = {}) {
    return {CheckStatus::Fail, order, std::move(d), std::move(note)};
  }
  static Outcome skipped(std::string why) { return {CheckStatus::Skipped, -1, std::nullopt, std::move(why)}; }
  /// Pass iff no difference.
  static Outcome from(std::optional<Difference> d, int order = -1, std::string note = {}) {
    return d ? fail(std::move(d), order, std::move(note)) : pass(order, std::move(note));
  }
};

/// Runs body, timing it. An exception thrown by body becomes a failure whose
/// note carries the message.
CheckRecord timed_check(std::string name, std::string anchor, nlohmann::ordered_json params,
                        const std::function<Outcome()>& body);

/// Exit-status contract: true iff no record failed (skipped records do not fail).
bool all_passed(const std::vector<CheckRecord>& records);

nlohmann::ordered_json to_json(const CheckRecord& r, bool with_timing = true);
std::string to_text(const CheckRecord& r);

// ---- first differences with values --------------------------------------

std::optional<Difference> difference(const YSeries& lhs, const YSeries& rhs);
std::optional<Difference> difference(const YTau& lhs, const YTau& rhs);
std::optional<Difference> difference(const YMatrix& lhs, const YMatrix& rhs);
std::optional<Difference> difference(const AlgebraElement& lhs, const AlgebraElement& rhs, const std::string& where = {});
std::optional<Difference> difference(const TensorMatrix<Rational>& lhs, const TensorMatrix<Rational>& rhs);

}  // namespace yangsym
