#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sv/secant.hpp"
#include "sv/suites.hpp"

namespace sv {

// JSON is the canonical machine format. Keys keep insertion order and all
// values are integers, strings or booleans, so identical inputs always
// serialize to identical bytes.

using Json = nlohmann::ordered_json;

Json to_json(const SecantReport& report);
SecantReport secant_report_from_json(const Json& j);

Json to_json(const GrassmannReport& report);
GrassmannReport grassmann_report_from_json(const Json& j);

Json to_json(const SuiteOutcome& outcome);

std::string render_text(const SecantReport& report);
std::string render_text(const GrassmannReport& report);
std::string render_text(const SuiteOutcome& outcome);

// One cell of a degree/s scan. A cell whose instance exceeds the size cap
// is recorded as skipped instead of aborting the table.
struct ScanRow {
  Shape shape;
  Multidegree degree;
  int s = 1;
  std::optional<SecantReport> report;
  std::string skipped;  // reason, empty when report is present
};

Json to_json(const std::vector<ScanRow>& rows);
std::string scan_csv(const std::vector<ScanRow>& rows);
std::string render_text(const std::vector<ScanRow>& rows);

// helpers shared by the renderers
std::string join_ints(const std::vector<int>& values, char sep);

}  // namespace sv
