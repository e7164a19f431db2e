#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qcorr/conformance.hpp"
#include "qcorr_cli/scenario.hpp"

namespace qcorr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSelftestFailed = 1;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitInternal = 3;

struct RunResult {
  std::size_t rows = 0;
  std::optional<std::string> error;  // set when a grid point failed
};

/// Column names of the CSV for this scenario, in output order.
std::vector<std::string> csv_header(const Scenario& s);

/// Writes the header and one row per grid point. Rows are computed on `jobs`
/// threads and written in grid order. On the first failing point the rows
/// before it are written, followed by a "# error: ..." line.
RunResult run_scenario(const Scenario& s, std::ostream& out, int jobs = 1);

/// Conformance rows for every grid point of the scenario (teleport rows when
/// teleport = on).
std::vector<ConformanceRow> conformance_rows(const Scenario& s);

/// Markdown document: conventions followed by the table.
std::string conformance_document(const std::vector<ConformanceRow>& rows);

}  // namespace qcorr::cli
