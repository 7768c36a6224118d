#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psl/psl.hpp"

namespace psl::app {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 20;
  Caps caps;
};

struct CaseResult {
  std::string instance;
  enum class Status { Pass, Fail, Skip } status = Status::Pass;
  std::string detail;
};

struct SuiteResult {
  std::string id;
  std::string statement;
  std::vector<CaseResult> cases;

  std::size_t count(CaseResult::Status s) const;
  /// No failing case and at least one case that ran.
  bool passed() const;
};

struct SuiteInfo {
  std::string id;
  std::string statement;
};

const std::vector<SuiteInfo>& suites();
std::optional<SuiteInfo> find_suite(std::string_view id);

/// Runs the suite on the fixtures, the given extra actions and `trials`
/// random finite-field instances. Deterministic for a fixed seed.
SuiteResult run_suite(std::string_view id, const std::vector<NamedAction>& extra, const SuiteOptions& opts);

/// Deterministic instance stream shared by the suites: even trials over F_2/F_3
/// with small dimensions (exhaustive searches apply), odd trials over primes
/// above every carrier dimension (trace form applies).
NamedAction suite_instance(std::uint64_t seed, std::size_t trial);

}  // namespace psl::app
