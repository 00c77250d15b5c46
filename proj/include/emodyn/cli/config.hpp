#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emodyn/common/time.hpp"

namespace emodyn::cli {

/// One recognised setting: config-file key, command-line flag and default.
struct Setting {
  std::string key;
  std::string flag;  // without leading dashes; empty when file-only
  std::string default_value;
  std::string help;
};

/// All recognised settings, in display order.
const std::vector<Setting>& settings();

/// Layered `key = value` configuration. Later layers override earlier ones:
/// defaults, config file, environment (`EMODYN_<KEY>` with `.`/`-` as `_`),
/// command-line flags.
class Config {
 public:
  /// Defaults for every known key.
  static Config defaults();

  /// Merges a `key = value` file; `#` starts a comment line. Unknown keys
  /// and malformed lines throw ConfigError with the line number.
  void load_file(const std::filesystem::path& path);
  void apply_environment();
  void set(const std::string& key, std::string value);

  bool has(const std::string& key) const;
  const std::string& get(const std::string& key) const;  // ConfigError when unset

  std::string path(const std::string& key) const;  // non-empty required
  double real(const std::string& key, double lo, double hi, bool lo_open = false, bool hi_open = false) const;
  std::size_t count(const std::string& key, std::size_t lo) const;
  std::uint64_t seed(const std::string& key) const;
  bool flag(const std::string& key) const;
  Timestamp date(const std::string& key) const;

  /// Deterministic `key = value` lines (sorted) for the listed keys.
  std::string frozen(const std::vector<std::string>& keys) const;

 private:
  std::map<std::string, std::string> values_;
};

/// Environment variable that overrides `key`.
std::string env_name(std::string_view key);

}  // namespace emodyn::cli
