#pragma once
#include <string>

#include <nlohmann/json.hpp>

namespace trisect {

// One named verification check. details carries the witnessing computation
// (ranks, divisors, offending indices) whether or not the check passed.
struct CheckResult {
  std::string name;
  bool passed = false;
  nlohmann::ordered_json details;
};

}  // namespace trisect
