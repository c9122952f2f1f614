#pragma once

#include "wn/arith.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wn {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteOptions {
  unsigned n = 3;
  BigInt B = 10000;
  std::uint64_t seed = 0;
  unsigned shards = 1;
  std::uint64_t mc_samples = 10000000;
  std::int64_t prime_limit = 1000000;
};

/// Suite names accepted by verification_suite.
const std::vector<std::string>& suite_names();

/// Runs one named battery, or every battery for "all".
std::vector<CheckResult> verification_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace wn
