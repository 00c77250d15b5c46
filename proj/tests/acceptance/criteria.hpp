#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace emodyn::acceptance {

/// Result of one acceptance criterion. Every failed expectation is kept so the
/// report says what went wrong, not just that something did.
class Outcome {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& fact) { notes_.push_back(fact); }

  bool passed() const noexcept { return failures_.empty(); }
  std::string summary() const;

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Settings {
  std::filesystem::path source_dir;  // repository root
  std::filesystem::path scratch;     // per-run temporary directory
  bool update_golden = false;
};

Outcome table1_percent_change(const Settings&);
Outcome table2_identities(const Settings&);
Outcome mann_whitney_exactness(const Settings&);
Outcome ellipse_coverage(const Settings&);
Outcome band_calibration(const Settings&);
Outcome density_oracle(const Settings&);
Outcome preprocessing_properties(const Settings&);
Outcome stance_harness(const Settings&);
Outcome throughput(const Settings&);
Outcome golden_end_to_end(const Settings&);

}  // namespace emodyn::acceptance
