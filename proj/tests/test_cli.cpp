#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int status;
  std::string out;
};

// stderr goes to `err` when given, else is discarded.
Run cli(const std::string& args, const std::string& err = "/dev/null") {
  const std::string cmd = std::string(YANGSYM_CLI) + " " + args + " 2>" + err;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  const int raw = pclose(p);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& tag) {
  std::random_device rd;
  auto dir = fs::temp_directory_path() / ("yangsym-cli-" + tag + "-" + std::to_string(rd()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("compute e_1") {
  const auto r = cli("compute e --k 1 --n 2 --order 1");
  CHECK(r.status == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["object"] == "e");
  CHECK(j["algebra"]["kind"] == "yangian");
  CHECK(j["value"].dump() ==
        R"({"order":1,"terms":[{"tau":0,"coeffs":[{"m":0,"value":[{"monomial":[],"coeff":"2"}]},)"
        R"({"m":1,"value":[{"monomial":[0],"coeff":"1"},{"monomial":[3],"coeff":"1"}]}]}]})");
}

TEST_CASE("compute e_star") {
  const auto r = cli("compute e_star --k 1 --n 2 --format text");
  CHECK(r.status == 0);
  CHECK(r.out == "mu1 + mu2 + 2*u\n");
}

TEST_CASE("Schur (1,1) by the e route equals e_2") {
  const auto s = cli("compute schur --lambda 1,1 --via e --n 2 --order 2");
  const auto e = cli("compute e --k 2 --n 2 --order 2");
  REQUIRE(s.status == 0);
  REQUIRE(e.status == 0);
  CHECK(Json::parse(s.out)["value"] == Json::parse(e.out)["value"]);
}

TEST_CASE("every object computes") {
  for (const char* args : {"h --k 2", "p --k 2 --sign 1", "p --k 2 --sign -1", "b --k 2 --z 1,2,0,1", "h_minus --m 2",
                           "schur --lambda 2,1 --via h", "schur --lambda 2 --via e-shifted", "capelli_p --m 2",
                           "h_star --k 2", "p_star --k 2", "p_star --k 2 --mu 1,0"}) {
    CAPTURE(args);
    const auto r = cli(std::string("compute ") + args + " --n 2 --order 3");
    CHECK(r.status == 0);
    CHECK(Json::accept(r.out));
  }
}

TEST_CASE("usage errors exit nonzero") {
  for (const char* args : {"compute e --n 2", "compute nope --k 1", "compute e --k 1 --n 0", "compute e --k 1 --order 9",
                           "compute p --k 1 --sign 2", "compute b --k 3 --n 2", "compute b --k 1 --n 2 --z 1,2",
                           "compute schur --n 2", "compute schur --lambda 2,3", "compute e --k 1 --format xml",
                           "verify nope", "verify newton --n 0", "verify newton --max-k -1", "compute e --bogus", ""}) {
    CAPTURE(args);
    CHECK(cli(args).status != 0);
  }
}

TEST_CASE("verify exit status follows the checks") {
  CHECK(cli("verify newton --n 2 --order 6 --max-m 4").status == 0);
  CHECK(cli("verify symmetrizers --n 3 --max-k 4").status == 0);
  const auto lemma = cli("verify lemma-constant --n 3 --format text");
  CHECK(lemma.status == 0);
  CHECK(lemma.out.find("claimed") != std::string::npos);
  CHECK(cli("verify determinants --n 2 --order 5 --max-m 3").status == 1);
}

TEST_CASE("verify reports are deterministic apart from wall times") {
  const auto dir = fresh_dir("det");
  const std::string args = "verify commutativity series --n 2 --order 3 --max-k 2 --seed 11";
  REQUIRE(cli(args + " --out " + (dir / "a.json").string()).status == 0);
  REQUIRE(cli(args + " --out " + (dir / "b.json").string()).status == 0);
  auto a = Json::parse(slurp(dir / "a.json")), b = Json::parse(slurp(dir / "b.json"));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].contains("wall_seconds"));
    a[i].erase("wall_seconds");
    b[i].erase("wall_seconds");
  }
  CHECK(a.dump() == b.dump());
  REQUIRE(cli(args + " --no-timing --out " + (dir / "c.json").string()).status == 0);
  REQUIRE(cli(args + " --no-timing --out " + (dir / "d.json").string()).status == 0);
  CHECK(slurp(dir / "c.json") == slurp(dir / "d.json"));
  fs::remove_all(dir);
}

TEST_CASE("cache hit is byte-identical and reported") {
  const auto dir = fresh_dir("cache");
  const auto cache = dir / "cache";
  const std::string args = "compute e --k 2 --n 3 --order 5 --cache-dir " + cache.string();
  const auto first = cli(args + " --report " + (dir / "r1.json").string());
  const auto second = cli(args + " --report " + (dir / "r2.json").string());
  REQUIRE(first.status == 0);
  REQUIRE(second.status == 0);
  CHECK(first.out == second.out);
  CHECK(Json::parse(slurp(dir / "r1.json"))[0]["note"] == "computed");
  CHECK(Json::parse(slurp(dir / "r2.json"))[0]["note"] == "cache hit");
  CHECK(first.out == cli("compute e --k 2 --n 3 --order 5").out);

  // A different order is a different entry.
  CHECK(cli("compute e --k 2 --n 3 --order 4 --cache-dir " + cache.string()).status == 0);
  int entries = 0;
  for (const auto& f : fs::directory_iterator(cache)) entries += f.path().extension() == ".json";
  CHECK(entries == 2);

  // Corrupt every entry: evicted with a warning, recomputed to the same bytes.
  for (const auto& f : fs::directory_iterator(cache)) {
    std::string body = slurp(f.path());
    body[body.size() / 2] ^= 1;
    std::ofstream(f.path(), std::ios::binary | std::ios::trunc) << body;
  }
  const auto err = dir / "err.txt";
  const auto third = cli(args + " --report " + (dir / "r3.json").string(), err.string());
  CHECK(third.status == 0);
  CHECK(third.out == first.out);
  CHECK(slurp(err).find("warning: corrupt cache entry") != std::string::npos);
  CHECK(Json::parse(slurp(dir / "r3.json"))[0]["note"] == "computed");
  fs::remove_all(dir);
}

TEST_CASE("cache directory from the environment") {
  const auto dir = fresh_dir("env");
  const std::string env = "YANGSYM_CACHE_DIR=" + dir.string() + " ";
  const auto cmd = std::string("env ") + env + YANGSYM_CLI + " compute h --k 1 --n 2 --order 2 >/dev/null 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator()) == 1);
  fs::remove_all(dir);
}

TEST_CASE("list-suites") {
  const auto r = cli("list-suites");
  CHECK(r.status == 0);
  CHECK(r.out.find("newton\t") != std::string::npos);
  CHECK(r.out.find("capelli-bridge\t") != std::string::npos);
}
