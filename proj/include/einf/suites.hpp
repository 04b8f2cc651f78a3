#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "einf/complex_x.hpp"

namespace einf {

struct SweepConfig {
  int max_arity = 4;
  int max_degree = 3;
  int coverage_bound = 3;
  int parallelism = 1;
  std::vector<std::string> suites;  // empty means all
  // Not exposed through config files; lets tests corrupt d2_x on purpose.
  SignRule x_sign_rule = SignRule::orientation;

  /// Throws Error(out_of_range) on invalid bounds.
  void validate() const;
};

/// Reads the SweepConfig fields present in `j`; others keep their defaults.
SweepConfig config_from_json(const nlohmann::json& j, SweepConfig base = {});

struct Failure {
  std::string input;
  std::string expected;
  std::string actual;

  bool operator==(const Failure&) const = default;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t instances_checked = 0;
  std::vector<Failure> failures;
  double wall_time_seconds = 0.0;

  bool passed() const noexcept { return failures.empty(); }
};

/// d2_e, d2_x, chainmap_tc, chainmap_tr, retraction, homotopy,
/// characterization, equivariance, filtration, coverage, homology.
const std::vector<std::string>& suite_names();

/// Reference implementation: one thread, instances in enumeration order.
SuiteReport run_suite_serial(std::string_view name, const SweepConfig& config);

/// OpenMP kernel over the same instance list; failures merge in instance
/// order, so the report matches the serial one.
SuiteReport run_suite_parallel(std::string_view name, const SweepConfig& config, int jobs);

/// Dispatches on config.parallelism. Throws unknown_suite.
SuiteReport run_suite(std::string_view name, const SweepConfig& config);

std::string report_to_text(const SuiteReport& r, bool with_time = true);
nlohmann::json report_to_json(const SuiteReport& r, bool with_time = true);

}  // namespace einf
