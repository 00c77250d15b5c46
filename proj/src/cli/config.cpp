#include "emodyn/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "emodyn/common/error.hpp"
#include "emodyn/common/format.hpp"
#include "emodyn/common/io.hpp"

namespace emodyn::cli {

const std::vector<Setting>& settings() {
  static const std::vector<Setting> table = {
      {"input", "input", "", "raw posts JSONL"},
      {"out", "out", "", "output directory"},
      {"corpus", "corpus", "", "canonical corpus directory or corpus.jsonl"},
      {"lexicons", "lexicons", "", "directory with emotion.tsv, warmth.csv and optional exclusions.txt"},
      {"from", "from", "", "analysis directory to report on"},
      {"stance_dir", "stance", "", "stance directory to report on"},
      {"workers", "workers", "1", "worker threads for parsing and scoring"},
      {"filter.enabled", "filter", "true", "apply the semantic filter (true/false)"},
      {"filter.anchor", "filter-anchor", "The Vaccines music band", "anchor text of the semantic filter"},
      {"filter.threshold", "filter-threshold", "0.7", "posts with similarity >= threshold are removed"},
      {"filter.endpoint", "embedding-endpoint", "", "embedding service URL; empty uses the offline hashing encoder"},
      {"filter.batch_size", "filter-batch", "64", "texts per embedding request"},
      {"filter.order", "filter-order", "dedup-first", "dedup-first or filter-first"},
      {"analysis.bin", "bin", "month", "time bin (month)"},
      {"analysis.rolling", "rolling", "3", "rolling-average window in bins"},
      {"analysis.rolling_mode", "rolling-mode", "trailing", "trailing or centered"},
      {"analysis.alpha", "alpha", "0.32", "home-base significance level"},
      {"analysis.split", "split", "2020-01-01", "first day of the second era"},
      {"analysis.trajectory_window", "trajectory-window", "10", "words per trajectory window"},
      {"analysis.ev_formula", "ev-formula", "sd", "sd or printed-variance"},
      {"analysis.warmth_weighting", "warmth-weighting", "token", "token or post"},
      {"lexicon.low_threshold", "low-threshold", "0.3333333333333333", "scores below this are low"},
      {"stance.per_month", "per-month", "2000", "posts sampled per month"},
      {"stance.seed", "seed", "42", "sampling and mock seed"},
      {"stance.endpoint", "llm-endpoint", "", "chat-completions URL; empty uses the mock model"},
      {"stance.model", "model", "mock", "model name sent to the endpoint"},
      {"stance.mock", "mock", "keyword", "mock model: keyword, random or constant"},
      {"stance.temperature", "temperature", "0.4", "sampling temperature in [0, 2]"},
      {"stance.target", "target", "vaccines", "stance target substituted for {target}"},
      {"stance.prompt", "prompt", "", "prompt template file; empty uses the built-in template"},
      {"stance.gold", "gold", "", "gold labels JSONL for evaluation"},
      {"stance.runs", "runs", "1", "independent classification runs over the gold set"},
      {"stance.concurrency", "concurrency", "4", "concurrent LLM requests"},
      {"stance.sweep", "sweep", "false", "also evaluate temperatures 0, 0.4, 0.7 and 1"},
      {"stance.top_k", "top-k", "15", "words per treemap"},
      {"stance.treemap_weighting", "treemap-weighting", "tokens", "tokens or posts"},
      {"report.charts", "charts", "svg", "svg or none"},
      {"report.tables", "tables", "csv", "csv or none"},
  };
  return table;
}

std::string env_name(std::string_view key) {
  std::string out = "EMODYN_";
  for (char c : key) {
    out += (c == '.' || c == '-') ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

namespace {

bool known(const std::string& key) {
  const auto& t = settings();
  return std::any_of(t.begin(), t.end(), [&](const Setting& s) { return s.key == key; });
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Config Config::defaults() {
  Config c;
  for (const auto& s : settings()) c.values_[s.key] = s.default_value;
  return c;
}

void Config::load_file(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw ConfigError("config file not found: " + path.string());
  for_each_line(path, [&](std::size_t line_no, std::string_view line) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') return;
    const auto eq = t.find('=');
    const std::string where = path.string() + ":" + std::to_string(line_no) + ": ";
    if (eq == std::string::npos) throw ConfigError(where + "expected key = value");
    const std::string key = trim(std::string_view(t).substr(0, eq));
    if (!known(key)) throw ConfigError(where + "unknown key '" + key + "'");
    values_[key] = trim(std::string_view(t).substr(eq + 1));
  });
}

void Config::apply_environment() {
  for (const auto& s : settings()) {
    if (const char* v = std::getenv(env_name(s.key).c_str())) values_[s.key] = v;
  }
}

void Config::set(const std::string& key, std::string value) {
  if (!known(key)) throw ConfigError("unknown key '" + key + "'");
  values_[key] = std::move(value);
}

bool Config::has(const std::string& key) const {
  const auto it = values_.find(key);
  return it != values_.end() && !it->second.empty();
}

const std::string& Config::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing setting '" + key + "'");
  return it->second;
}

std::string Config::path(const std::string& key) const {
  const std::string& v = get(key);
  if (v.empty()) throw ConfigError("missing required path '" + key + "'");
  return v;
}

double Config::real(const std::string& key, double lo, double hi, bool lo_open, bool hi_open) const {
  const std::string& s = get(key);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ConfigError(key + ": expected a number, got '" + s + "'");
  const bool ok = (lo_open ? v > lo : v >= lo) && (hi_open ? v < hi : v <= hi);
  if (!ok) {
    throw ConfigError(key + " = " + s + " is outside " + (lo_open ? "(" : "[") + format_real(lo) + ", " +
                      format_real(hi) + (hi_open ? ")" : "]"));
  }
  return v;
}

std::size_t Config::count(const std::string& key, std::size_t lo) const {
  const std::string& s = get(key);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ConfigError(key + ": expected an integer, got '" + s + "'");
  if (v < lo) throw ConfigError(key + " must be >= " + std::to_string(lo));
  return v;
}

std::uint64_t Config::seed(const std::string& key) const {
  const std::string& s = get(key);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ConfigError(key + ": expected an integer, got '" + s + "'");
  return v;
}

bool Config::flag(const std::string& key) const {
  const std::string& s = get(key);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError(key + ": expected true or false, got '" + s + "'");
}

Timestamp Config::date(const std::string& key) const {
  if (auto t = parse_date(get(key))) return *t;
  throw ConfigError(key + ": expected YYYY-MM-DD, got '" + get(key) + "'");
}

std::string Config::frozen(const std::vector<std::string>& keys) const {
  std::vector<std::string> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (const auto& k : sorted) out += k + " = " + get(k) + "\n";
  return out;
}

}  // namespace emodyn::cli
