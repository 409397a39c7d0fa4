#include "yangsym/cache.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace yangsym {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256: digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

Cache::Cache(std::filesystem::path dir, Warn warn) : dir_(std::move(dir)), warn_(std::move(warn)) {
  if (!warn_) warn_ = [](const std::string& msg) { std::cerr << "warning: " << msg << "\n"; };
  std::filesystem::create_directories(dir_);
}

std::optional<std::filesystem::path> Cache::env_dir() {
  const char* v = std::getenv(kCacheEnv);
  if (!v || !*v) return std::nullopt;
  return std::filesystem::path(v);
}

std::string Cache::key(const std::string& object, int n, int order, const nlohmann::ordered_json& params) {
  const nlohmann::ordered_json desc{
      {"version", kCodeVersion}, {"object", object}, {"n", n}, {"order", order}, {"params", params}};
  return sha256_hex(desc.dump());
}

std::filesystem::path Cache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<std::string> Cache::get(const std::string& key) const {
  const auto path = path_for(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string raw = ss.str();
  in.close();
  const auto nl = raw.find('\n');
  if (nl != std::string::npos) {
    std::string payload = raw.substr(nl + 1);
    if (raw.substr(0, nl) == sha256_hex(payload) && nlohmann::json::accept(payload)) return payload;
  }
  warn_("corrupt cache entry " + path.string() + " evicted");
  std::error_code ec;
  std::filesystem::remove(path, ec);
  return std::nullopt;
}

void Cache::put(const std::string& key, const std::string& payload) const {
  const auto path = path_for(key);
  // Write to a private temporary and rename so readers never see partial files.
  std::random_device rd;
  const auto tmp = dir_ / (key + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
    out << sha256_hex(payload) << '\n' << payload;
    if (!out) throw std::runtime_error("cache: write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace yangsym
