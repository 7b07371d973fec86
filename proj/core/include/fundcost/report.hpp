#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fundcost/runner.hpp"

namespace fundcost {

// Shortest decimal form that parses back to the same double, so emitted
// tables are byte-stable across runs.
std::string format_double(double value);

// Full report as a structured record: schema_version, mode, config echo,
// mode-keyed results, runtime block.
nlohmann::json report_to_json(const RunReport& report);

// Human-readable summary of the same report.
std::string report_to_text(const RunReport& report);

// Comma-separated tables, one (filename, contents) pair per table. Every
// table carries a header row; histogram grids are (time, bucket lower edge,
// count) triples.
std::vector<std::pair<std::string, std::string>> report_csv_files(const RunReport& report);

// Writes the report in the requested format ("json", "csv", "text" or
// "all") under out_dir, creating it if needed. Returns the written paths.
// Throws std::runtime_error when the destination is not writable.
std::vector<std::string> write_report(const RunReport& report, const std::string& format,
                                      const std::string& out_dir);

}  // namespace fundcost
