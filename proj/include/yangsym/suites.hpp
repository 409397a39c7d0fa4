#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "yangsym/report.hpp"

namespace yangsym {

struct SuiteConfig {
  int n = 2;
  int order = 4;
  int max_m = 3;
  int max_k = 3;
  /// Most negative τ-degree inspected by τ-operator identities.
  int tau_order = 4;
  /// Partitions for the Schur suite; empty selects the default list.
  std::vector<Partition> lambdas;
  std::uint64_t seed = 1;
};

/// Throws std::invalid_argument on an unusable configuration.
void validate(const SuiteConfig& cfg);

struct Suite {
  std::string name;
  std::string description;
  std::function<std::vector<CheckRecord>(const SuiteConfig&)> run;
};

const std::vector<Suite>& all_suites();
/// nullptr if unknown.
const Suite* find_suite(const std::string& name);

/// The default Schur partitions (1), (2), (1,1), (2,1), (2,2).
std::vector<Partition> default_schur_partitions();

/// Claimed constants the adjudication suites report next to the computed ones.
Rational claimed_lemma_constant(int n, int k);       // n!/(k!(n-1)^{n-k})
Rational claimed_partial_trace_factor(int n, int m);  // (n-1)/(m+1)

}  // namespace yangsym
