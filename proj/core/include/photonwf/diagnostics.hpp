#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

// Named identity suites behind the `identities` CLI command.  Each check
// reports the measured residual and its tolerance; tolerances can be
// overridden by name (see README for the list).

namespace photonwf::diag {

struct CheckResult {
  std::string name;
  double value = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct SuiteOptions {
  std::uint64_t seed = 20240811;
  std::map<std::string, double> tol_overrides;
};

std::vector<CheckResult> matrix_suite(const SuiteOptions& opt = {});
std::vector<CheckResult> polarization_suite(const SuiteOptions& opt = {});
std::vector<CheckResult> mode_suite(const SuiteOptions& opt = {});
std::vector<CheckResult> run_identity_suite(const SuiteOptions& opt = {});

}  // namespace photonwf::diag
