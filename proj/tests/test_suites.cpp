#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "yangsym/serialize.hpp"
#include "yangsym/suites.hpp"

using namespace yangsym;

namespace {

SuiteConfig small(int n) {
  SuiteConfig c;
  c.n = n;
  c.order = 3;
  c.max_k = 2;
  c.max_m = 2;
  c.tau_order = 2;
  return c;
}

std::string failures(const std::vector<CheckRecord>& records) {
  std::string s;
  for (const auto& r : records)
    if (r.status == CheckStatus::Fail) s += to_text(r) + "\n";
  return s;
}

std::string dump(const std::vector<CheckRecord>& records, bool timing) {
  Json arr = Json::array();
  for (const auto& r : records) arr.push_back(to_json(r, timing));
  return arr.dump();
}

}  // namespace

TEST_CASE("registry") {
  std::set<std::string> names;
  for (const auto& s : all_suites()) {
    CHECK(names.insert(s.name).second);
    CHECK_FALSE(s.description.empty());
    CHECK(find_suite(s.name) == &s);
  }
  for (const char* expected : {"symmetrizers", "intertwining", "trace-presentations", "newton", "compositions",
                               "determinants", "inverse", "schur", "commutativity", "lemma-constant", "partial-trace",
                               "capelli-bridge", "perelomov-popov", "shifted", "evaluation", "engine", "series"})
    CHECK(names.count(expected) == 1);
  CHECK(find_suite("nope") == nullptr);
}

TEST_CASE("configuration validation") {
  CHECK_NOTHROW(validate(small(2)));
  auto bad = [](auto edit) {
    SuiteConfig c = small(2);
    edit(c);
    return c;
  };
  CHECK_THROWS_AS(validate(bad([](SuiteConfig& c) { c.n = 0; })), std::invalid_argument);
  CHECK_THROWS_AS(validate(bad([](SuiteConfig& c) { c.n = 5; })), std::invalid_argument);
  CHECK_THROWS_AS(validate(bad([](SuiteConfig& c) { c.order = 0; })), std::invalid_argument);
  CHECK_THROWS_AS(validate(bad([](SuiteConfig& c) { c.order = 8; })), std::invalid_argument);
  CHECK_THROWS_AS(validate(bad([](SuiteConfig& c) { c.max_k = -1; })), std::invalid_argument);
  CHECK_THROWS_AS(validate(bad([](SuiteConfig& c) { c.tau_order = -1; })), std::invalid_argument);
}

TEST_CASE("claimed constants") {
  CHECK(claimed_lemma_constant(3, 1) == Rational(3, 2));
  CHECK(claimed_lemma_constant(2, 1) == Rational(2));
  CHECK(claimed_lemma_constant(3, 3) == Rational(1));
  CHECK(claimed_partial_trace_factor(3, 2) == Rational(2, 3));
}

TEST_CASE("every suite passes at a small configuration") {
  // The unshifted Schur e route fails for every λ_1 >= 2 (pinned down below);
  // the first-column p-from-e/h layouts only fail from m = 3.
  for (int n = 1; n <= 2; ++n)
    for (const auto& s : all_suites()) {
      if (s.name == "schur") continue;
      CAPTURE(s.name);
      CAPTURE(n);
      const auto records = s.run(small(n));
      CHECK_FALSE(records.empty());
      CHECK(failures(records) == "");
    }
}

TEST_CASE("known failures of the printed forms") {
  auto c = small(2);
  c.order = 4;
  c.max_m = 3;
  for (const auto& r : find_suite("determinants")->run(c)) {
    const bool printed_p = r.anchor == "det:p-from-e" || r.anchor == "det:p-from-h";
    const int m = r.params["m"].get<int>();
    CAPTURE(r.anchor);
    CAPTURE(m);
    CHECK((r.status == CheckStatus::Fail) == (printed_p && m == 3));
  }
  for (const auto& r : find_suite("schur")->run(c)) {
    const auto lambda = r.params["lambda"].get<std::string>();
    CAPTURE(r.anchor);
    CAPTURE(lambda);
    if (r.anchor == "schur:column-shift") CHECK(r.status == CheckStatus::Pass);
    // λ_1 <= 1 leaves no room for the shift to matter.
    else CHECK((r.status == CheckStatus::Pass) == (lambda == "(1)" || lambda == "(1,1)"));
  }
}

TEST_CASE("failures carry the first difference") {
  auto c = small(2);
  c.order = 4;
  c.max_m = 3;
  for (const auto& r : find_suite("determinants")->run(c))
    if (r.status == CheckStatus::Fail) {
      REQUIRE(r.difference.has_value());
      CHECK(r.difference->where.rfind("u^-3", 0) == 0);
      CHECK(r.difference->lhs != r.difference->rhs);
      const auto j = to_json(r);
      CHECK(j["first_difference"]["where"] == r.difference->where);
    }
}

TEST_CASE("reports are deterministic given the seed") {
  auto c = small(2);
  c.seed = 7;
  const auto* suite = find_suite("commutativity");
  const auto a = suite->run(c), b = suite->run(c);
  CHECK(dump(a, false) == dump(b, false));
  c.seed = 8;
  CHECK(dump(a, false) != dump(suite->run(c), false));

  const auto* series = find_suite("series");
  c.seed = 3;
  CHECK(dump(series->run(c), false) == dump(series->run(c), false));
}

TEST_CASE("out-of-range checks are skipped, not passed") {
  const auto records = find_suite("partial-trace")->run(small(1));
  REQUIRE(records.size() == 1);
  CHECK(records[0].status == CheckStatus::Skipped);
  CHECK(to_json(records[0])["status"] == "skipped");
  // Exit status is nonzero only on a failure.
  CHECK(all_passed(records));
}
