#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "yangsym/cache.hpp"
#include "yangsym/serialize.hpp"
#include "yangsym/suites.hpp"

using namespace yangsym;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ComputeOptions {
  std::string object;
  int n = 2;
  int order = 4;
  std::optional<int> k;
  std::optional<int> m;
  int sign = -1;
  std::string lambda;
  std::string via = "h";
  std::string mu;
  std::string z;
  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
  std::string out;
  std::string report;
};

struct VerifyOptions {
  std::vector<std::string> suites;
  SuiteConfig cfg;
  std::vector<std::string> lambdas;
  std::string format = "json";
  std::string out;
  bool no_timing = false;
};

void emit(const std::string& text, const std::string& path);

// One-record Report for a compute run; the note says whether the cache answered.
void write_compute_report(const ComputeOptions& o, const std::string& key, bool hit, double secs) {
  if (o.report.empty()) return;
  CheckRecord r;
  r.name = "compute " + o.object;
  r.anchor = "cli:compute";
  r.params = Json{{"n", o.n}, {"order", o.order}, {"key", key}};
  r.status = CheckStatus::Pass;
  r.wall_seconds = secs;
  r.note = hit ? "cache hit" : "computed";
  emit(Json::array({to_json(r)}).dump(2) + "\n", o.report);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

int degree_param(const ComputeOptions& o) {
  if (o.k) return *o.k;
  if (o.m) return *o.m;
  throw UsageError(o.object + " needs --k (or --m)");
}

TensorMatrix<Rational> parse_z(const std::string& text, int n) {
  if (text.empty()) return TensorMatrix<Rational>::identity(n, 1);
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(Rational::parse(item));
  if (static_cast<int>(v.size()) != n * n) throw UsageError("--z needs n*n comma-separated rationals (row-major)");
  TensorMatrix<Rational> z(n, 1);
  for (int i = 0; i < n * n; ++i) z.at(static_cast<std::size_t>(i / n), static_cast<std::size_t>(i % n)) = v[static_cast<std::size_t>(i)];
  return z;
}

std::string series_text(const YSeries& f) {
  std::ostringstream os;
  os << "order " << f.order() << "\n";
  for (int m = 0; m < f.stored(); ++m)
    if (!f.coeff(m).is_zero()) os << "u^-" << m << ": " << f.coeff(m).str() << "\n";
  return os.str();
}

template <class R>
std::string poly_text(const UPolynomial<R>& p) {
  std::ostringstream os;
  for (int d = p.degree(); d >= 0; --d)
    if (!p.coeff(d).is_zero()) {
      if constexpr (std::is_same_v<R, Rational>) os << "u^" << d << ": " << p.coeff(d).str() << "\n";
      else os << "u^" << d << ": " << p.coeff(d).str() << "\n";
    }
  return os.str();
}

/// (value json, text rendering)
std::pair<Json, std::string> compute_value(const ComputeOptions& o, Json& params, Json& algebra) {
  const auto& obj = o.object;
  if (obj == "e_star" || obj == "h_star") {
    const int k = degree_param(o);
    params["k"] = k;
    const auto p = obj == "e_star" ? shifted_e_star(k, o.n) : shifted_h_star(k, o.n);
    return {to_json(p), p.str() + "\n"};
  }
  if (obj == "p_star") {
    const int k = degree_param(o);
    params["k"] = k;
    if (!o.mu.empty()) {
      const auto mu = HighestWeight::parse(o.mu);
      if (mu.n() != o.n) throw UsageError("--mu must have n entries");
      params["mu"] = mu.str();
      const auto p = p_star_at(k, mu);
      return {polynomial_json(p), poly_text(p)};
    }
    const auto p = CapelliContext(o.n).shifted_p_star(k);
    return {to_json(p), p.str() + "\n"};
  }
  if (obj == "capelli_p") {
    const int m = degree_param(o);
    params["m"] = m;
    CapelliContext cap(o.n);
    const auto p = cap.capelli_p(m);
    algebra = algebra_json(cap.gl());
    return {polynomial_json(p), poly_text(p)};
  }

  SymContext ctx(o.n, o.order);
  algebra = algebra_json(ctx.algebra());
  YSeries f;
  if (obj == "e" || obj == "h") {
    const int k = degree_param(o);
    params["k"] = k;
    f = obj == "e" ? ctx.e(k) : ctx.h(k);
  } else if (obj == "p") {
    const int k = degree_param(o);
    if (o.sign != 1 && o.sign != -1) throw UsageError("--sign must be 1 or -1");
    params["k"] = k;
    params["sign"] = o.sign;
    f = ctx.p(k, o.sign);
  } else if (obj == "b") {
    const int k = degree_param(o);
    if (k < 1 || k > o.n) throw UsageError("b needs 1 <= k <= n");
    params["k"] = k;
    params["z"] = o.z.empty() ? std::string("identity") : o.z;
    f = ctx.bethe_b(k, parse_z(o.z, o.n));
  } else if (obj == "h_minus") {
    const int m = degree_param(o);
    params["m"] = m;
    f = ctx.h_minus(m);
  } else if (obj == "schur") {
    if (o.lambda.empty()) throw UsageError("schur needs --lambda");
    const auto lambda = Partition::parse(o.lambda);
    params["lambda"] = lambda.str();
    params["via"] = o.via;
    if (o.via == "h") f = ctx.schur_h(lambda);
    else if (o.via == "e") f = ctx.schur_e(lambda, ESchurShift::Plain);
    else if (o.via == "e-shifted") f = ctx.schur_e(lambda, ESchurShift::Column);
    else throw UsageError("--via must be h, e or e-shifted");
  } else {
    throw UsageError("unknown object '" + obj + "'");
  }
  return {series_json(f), series_text(f)};
}

int run_compute(const ComputeOptions& o) {
  if (o.n < 1 || o.n > 4) throw UsageError("--n must be between 1 and 4");
  if (o.order < 1 || o.order > 7) throw UsageError("--order must be between 1 and 7");
  if (o.format != "json" && o.format != "text") throw UsageError("--format must be json or text");

  const auto start = std::chrono::steady_clock::now();
  Json params = Json::object();
  Json algebra = nullptr;
  std::optional<Cache> cache;
  std::filesystem::path dir = o.cache_dir;
  if (dir.empty())
    if (auto env = Cache::env_dir()) dir = *env;
  if (!o.no_cache && !dir.empty() && o.format == "json") cache.emplace(dir);

  // The cache key needs the full parameter set, so cheap parameter
  // normalization runs first; the value is only computed on a miss.
  Json key_params{{"k", o.k ? *o.k : -1}, {"m", o.m ? *o.m : -1}, {"sign", o.sign}, {"lambda", o.lambda},
                  {"via", o.via},         {"mu", o.mu},          {"z", o.z}};
  const std::string key = Cache::key(o.object, o.n, o.order, key_params);
  if (cache)
    if (auto hit = cache->get(key)) {
      emit(*hit, o.out);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::cerr << "cache: hit " << key.substr(0, 16) << " in " << secs << " s\n";
      write_compute_report(o, key, true, secs);
      return 0;
    }

  auto [value, text] = compute_value(o, params, algebra);
  std::string payload;
  if (o.format == "json") {
    Json envelope{{"object", o.object}, {"n", o.n}};
    const bool series = !algebra.is_null() && o.object != "capelli_p";
    if (series) envelope["order"] = o.order;
    envelope["params"] = params;
    if (!algebra.is_null()) envelope["algebra"] = algebra;
    envelope["value"] = value;
    payload = canonical_dump(envelope) + "\n";
  } else {
    payload = text;
  }
  emit(payload, o.out);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (cache) {
    cache->put(key, payload);
    std::cerr << "cache: miss " << key.substr(0, 16) << " computed in " << secs << " s\n";
  }
  write_compute_report(o, key, false, secs);
  return 0;
}

int run_verify(VerifyOptions o) {
  if (o.format != "json" && o.format != "text") throw UsageError("--format must be json or text");
  for (const auto& l : o.lambdas) o.cfg.lambdas.push_back(Partition::parse(l));
  validate(o.cfg);
  std::vector<const Suite*> chosen;
  for (const auto& name : o.suites) {
    if (name == "all") {
      for (const auto& s : all_suites()) chosen.push_back(&s);
      continue;
    }
    const Suite* s = find_suite(name);
    if (!s) throw UsageError("unknown suite '" + name + "' (see list-suites)");
    chosen.push_back(s);
  }
  std::vector<CheckRecord> records;
  for (const Suite* s : chosen) {
    auto r = s->run(o.cfg);
    for (auto& x : r) {
      x.params["suite"] = s->name;
      records.push_back(std::move(x));
    }
  }
  std::string text;
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& r : records) arr.push_back(to_json(r, !o.no_timing));
    text = arr.dump(2) + "\n";
  } else {
    for (const auto& r : records) text += to_text(r) + "\n";
    int fails = 0, skips = 0;
    for (const auto& r : records) {
      fails += r.status == CheckStatus::Fail;
      skips += r.status == CheckStatus::Skipped;
    }
    text += std::to_string(records.size()) + " checks, " + std::to_string(fails) + " failed, " + std::to_string(skips) + " skipped\n";
  }
  emit(text, o.out);
  return all_passed(records) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symmetric functions over the Yangian Y(gl_n) and identity verification"};
  app.require_subcommand(1);

  ComputeOptions co;
  auto* compute = app.add_subcommand("compute", "Compute one object and print its canonical serialization");
  compute->add_option("object", co.object, "e, h, p, b, h_minus, schur, capelli_p, e_star, h_star, p_star")->required();
  compute->add_option("--n", co.n, "rank n")->capture_default_str();
  compute->add_option("--order", co.order, "series truncation order N")->capture_default_str();
  compute->add_option("--k", co.k, "degree k");
  compute->add_option("--m", co.m, "degree m (alias of --k)");
  compute->add_option("--sign", co.sign, "power-sum direction, 1 or -1")->capture_default_str();
  compute->add_option("--lambda", co.lambda, "partition, e.g. 2,1");
  compute->add_option("--via", co.via, "Schur route: h, e, e-shifted")->capture_default_str();
  compute->add_option("--mu", co.mu, "highest weight for p_star, e.g. 1,0");
  compute->add_option("--z", co.z, "Z matrix for b, n*n rationals row-major (default identity)");
  compute->add_option("--format", co.format, "json or text")->capture_default_str();
  compute->add_option("--cache-dir", co.cache_dir, std::string("cache directory (default $") + kCacheEnv + ")");
  compute->add_flag("--no-cache", co.no_cache, "ignore the cache");
  compute->add_option("--out", co.out, "write to a file instead of stdout");
  compute->add_option("--report", co.report, "write a one-record JSON report (timing, cache hit)");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run verification suites and write a JSON report");
  verify->add_option("suites", vo.suites, "suite names, or all")->required();
  verify->add_option("--n", vo.cfg.n, "rank n")->capture_default_str();
  verify->add_option("--order", vo.cfg.order, "series truncation order N")->capture_default_str();
  verify->add_option("--max-m", vo.cfg.max_m, "largest degree m")->capture_default_str();
  verify->add_option("--max-k", vo.cfg.max_k, "largest degree k")->capture_default_str();
  verify->add_option("--tau-order", vo.cfg.tau_order, "deepest tau-degree inspected")->capture_default_str();
  verify->add_option("--lambda", vo.lambdas, "partition for the schur suite (repeatable)");
  verify->add_option("--seed", vo.cfg.seed, "random seed")->capture_default_str();
  verify->add_option("--format", vo.format, "json or text")->capture_default_str();
  verify->add_option("--out", vo.out, "write the report to a file");
  verify->add_flag("--no-timing", vo.no_timing, "omit wall times from the JSON report");

  auto* list = app.add_subcommand("list-suites", "List verification suites");

  CLI11_PARSE(app, argc, argv);
  try {
    if (compute->parsed()) return run_compute(co);
    if (verify->parsed()) return run_verify(vo);
    if (list->parsed()) {
      for (const auto& s : all_suites()) std::cout << s.name << "\t" << s.description << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
