#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lfock/report.hpp"

namespace lfock {

/// Overrides for a suite; anything unset falls back to the suite's pinned
/// acceptance parameters.
struct SuiteConfig {
  std::optional<std::vector<double>> eps;
  std::optional<double> order;
  std::optional<int> N;
  std::optional<int> M;
  std::optional<double> tol;
};

struct SuiteInfo {
  std::string id;
  int criterion = 0;  // acceptance criterion number, 0 for table-only suites
  std::string summary;
  std::function<std::vector<ReportRow>(const SuiteConfig&)> run;
};

/// Verification suites, one per acceptance criterion, in criterion order.
const std::vector<SuiteInfo>& verify_suites();

/// Table suites: parameter sweeps behind the asymptotic fits.
const std::vector<SuiteInfo>& table_suites();

/// Looks up a suite by id in both lists; throws std::invalid_argument.
const SuiteInfo& find_suite(const std::string& id);

}  // namespace lfock
