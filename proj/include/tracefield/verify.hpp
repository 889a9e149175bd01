#pragma once

// Named verification batteries. Each claim is computed from the library and
// checked against an exhaustive product enumeration or a direct count.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tracefield/linear_sets.hpp"

namespace tracefield {

struct Claim {
  std::string id;
  std::string statement;
  bool passed = false;
  bool informational = false;  // reported, never fails the suite
  nlohmann::json detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Claim> claims;

  bool passed() const;
  nlohmann::json to_json() const;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultSweepBudget;
};

const std::vector<std::string>& suite_names();
// UnknownSuite for names outside suite_names().
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace tracefield
