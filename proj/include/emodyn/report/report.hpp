#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace emodyn::report {

struct ReportOptions {
  bool charts = true;  // SVG figures with sibling data files
  bool tables = true;  // CSV/JSON tables
};

/// Renders figures and tables from an analysis directory and, when given, a
/// stance directory. Returns the artifact names written into `out`.
std::vector<std::string> build_report(const std::filesystem::path& analysis_dir,
                                      const std::filesystem::path& stance_dir, const std::filesystem::path& out,
                                      const ReportOptions& options);

/// Splits a header-led CSV without quoting into rows of fields.
std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path,
                                               const std::vector<std::string>& expected_header);

}  // namespace emodyn::report
