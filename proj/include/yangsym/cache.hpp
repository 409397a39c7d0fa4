#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "json.hpp"

namespace yangsym {

/// Bumped whenever a change alters any serialized result.
inline constexpr const char* kCodeVersion = "yangsym-1";

/// Environment variable naming the default cache directory.
inline constexpr const char* kCacheEnv = "YANGSYM_CACHE_DIR";

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& bytes);

/// Content-addressed store of serialized results. Each entry is one file
/// holding the payload digest on the first line and the payload after it;
/// entries whose digest does not match are evicted.
class Cache {
public:
  using Warn = std::function<void(const std::string&)>;

  explicit Cache(std::filesystem::path dir, Warn warn = {});
  /// From the environment variable, if set and non-empty.
  static std::optional<std::filesystem::path> env_dir();

  /// Key of (object, n, N, params) under the current code version.
  static std::string key(const std::string& object, int n, int order, const nlohmann::ordered_json& params);

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& payload) const;
  std::filesystem::path path_for(const std::string& key) const;

private:
  std::filesystem::path dir_;
  Warn warn_;
};

}  // namespace yangsym
