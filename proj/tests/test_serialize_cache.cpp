#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "yangsym/cache.hpp"
#include "yangsym/serialize.hpp"

using namespace yangsym;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
  std::random_device rd;
  auto dir = fs::temp_directory_path() / ("yangsym-test-" + tag + "-" + std::to_string(rd()));
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("e_1 for n = 2, N = 1 serializes to the hand-written form") {
  SymContext ctx(2, 1);
  // t_11^(1) has id 0 and t_22^(1) id 3 in the (level, i, j) numbering.
  const std::string expected =
      R"({"order":1,"terms":[{"tau":0,"coeffs":[{"m":0,"value":[{"monomial":[],"coeff":"2"}]},)"
      R"({"m":1,"value":[{"monomial":[0],"coeff":"1"},{"monomial":[3],"coeff":"1"}]}]}]})";
  CHECK(canonical_dump(series_json(ctx.e(1))) == expected);
}

TEST_CASE("rationals are strings") {
  CHECK(to_json(Rational(-3, 6)).get<std::string>() == "-1/2");
  CHECK(rational_from_json(Json("7/21")) == Rational(1, 3));
  CHECK_THROWS_AS(rational_from_json(Json(3)), std::invalid_argument);
}

TEST_CASE("series round trip") {
  for (int n = 1; n <= 3; ++n) {
    SymContext ctx(n, 4);
    for (const auto& f : {ctx.e(2), ctx.h(2), ctx.p(2, 1), ctx.h_minus(1)}) {
      const Json j = series_json(f);
      const YSeries back = series_from_json(j, ctx.algebra());
      CHECK(back == f);
      CHECK(canonical_dump(series_json(back)) == canonical_dump(j));
    }
  }
}

TEST_CASE("tau operator round trip") {
  SymContext ctx(2, 3);
  const YTau x = YTau(ctx.e(1), -1) + YTau(ctx.h(2), 2);
  const Json j = tau_json(x);
  CHECK(j["terms"].size() == 2);
  CHECK(tau_from_json(j, ctx.algebra()) == x);
}

TEST_CASE("malformed input is rejected") {
  SymContext ctx(2, 2);
  Json j = series_json(ctx.e(1));
  Json bad_id = j;
  bad_id["terms"][0]["coeffs"][1]["value"][0]["monomial"][0] = 999;
  CHECK_THROWS_AS(series_from_json(bad_id, ctx.algebra()), std::invalid_argument);
  Json deep = j;
  deep["terms"][0]["coeffs"][1]["m"] = 5;
  CHECK_THROWS_AS(series_from_json(deep, ctx.algebra()), std::invalid_argument);
  Json shifted = j;
  shifted["terms"][0]["tau"] = 1;
  CHECK_THROWS_AS(series_from_json(shifted, ctx.algebra()), std::invalid_argument);
}

TEST_CASE("shifted polynomial and polynomial forms") {
  const Json j = to_json(shifted_e_star(1, 2));
  CHECK(j["text"] == "mu1 + mu2 + 2*u");
  CHECK(j["variables"].dump() == R"(["mu1","mu2","u"])");
  const UPolynomial<Rational> p({Rational(1), Rational(0), Rational(-1, 2)});
  CHECK(canonical_dump(polynomial_json(p)) == R"([{"degree":0,"value":"1"},{"degree":2,"value":"-1/2"}])");
}

TEST_CASE("sha256 known vectors") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cache keys") {
  const Json params{{"k", 2}};
  const auto a = Cache::key("e", 3, 5, params);
  CHECK(a == Cache::key("e", 3, 5, params));
  CHECK(a.size() == 64);
  CHECK(a != Cache::key("e", 3, 4, params));
  CHECK(a != Cache::key("e", 2, 5, params));
  CHECK(a != Cache::key("h", 3, 5, params));
  CHECK(a != Cache::key("e", 3, 5, Json{{"k", 3}}));
}

TEST_CASE("put then get returns identical bytes") {
  const auto dir = fresh_dir("roundtrip");
  Cache cache(dir);
  SymContext ctx(3, 5);
  const std::string payload = canonical_dump(series_json(ctx.e(2))) + "\n";
  const auto key = Cache::key("e", 3, 5, Json{{"k", 2}});
  CHECK_FALSE(cache.get(key).has_value());
  cache.put(key, payload);
  const auto hit = cache.get(key);
  REQUIRE(hit.has_value());
  CHECK(*hit == payload);
  fs::remove_all(dir);
}

TEST_CASE("corrupt entries are evicted with a warning") {
  const auto dir = fresh_dir("corrupt");
  std::vector<std::string> warnings;
  Cache cache(dir, [&](const std::string& w) { warnings.push_back(w); });
  const auto key = Cache::key("e", 2, 3, Json{{"k", 1}});

  SUBCASE("payload edited") {
    cache.put(key, R"({"x":1})");
    std::string body = slurp(cache.path_for(key));
    body.back() = body.back() == '}' ? ']' : '}';
    std::ofstream(cache.path_for(key), std::ios::binary | std::ios::trunc) << body;
  }
  SUBCASE("truncated file") {
    cache.put(key, R"({"x":1})");
    std::ofstream(cache.path_for(key), std::ios::binary | std::ios::trunc) << "abc";
  }
  SUBCASE("digest matches but payload is not JSON") {
    const std::string junk = "not json";
    std::ofstream(cache.path_for(key), std::ios::binary | std::ios::trunc) << sha256_hex(junk) << "\n" << junk;
  }
  CHECK_FALSE(cache.get(key).has_value());
  CHECK(warnings.size() == 1);
  CHECK_FALSE(fs::exists(cache.path_for(key)));
  fs::remove_all(dir);
}
