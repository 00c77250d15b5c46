#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "emodyn/common/retry.hpp"
#include "emodyn/corpus/post.hpp"
#include "emodyn/stance/labels.hpp"
#include "emodyn/stance/llm.hpp"

namespace emodyn::stance {

struct StanceRecord {
  std::string post_id;
  StanceLabel label = StanceLabel::neutral;
  std::string model_id;
  double temperature = 0.4;
  std::string prompt_hash;
  std::string run_id;

  bool operator==(const StanceRecord&) const = default;
};

/// A post whose answer could not be mapped to a label after one retry.
struct ParseFailure {
  std::string post_id;
  std::string response;
  std::string run_id;

  bool operator==(const ParseFailure&) const = default;
};

inline constexpr double kDefaultTemperature = 0.4;

struct ClassifyOptions {
  double temperature = kDefaultTemperature;  // [0, 2]
  std::string target = "vaccines";
  std::string run_id = "run-1";
  std::size_t concurrency = 4;
  RetryPolicy retry;
  /// Directory of the resumable run log; empty disables checkpointing.
  std::filesystem::path checkpoint_dir;
};

struct ClassifyResult {
  std::vector<StanceRecord> records;    // sorted by post_id
  std::vector<ParseFailure> failures;   // sorted by post_id
};

/// Fills `{text}` and `{target}`. Throws ConfigError when `{text}` is absent.
std::string render_prompt(std::string_view prompt_template, std::string_view text, std::string_view target);

/// Shipped instruction used when no template file is configured.
std::string default_prompt_template();

/// Path of the append-only run log for `run_id` inside `dir`.
std::filesystem::path checkpoint_path(const std::filesystem::path& dir, const std::string& run_id);

/// Classifies every post with bounded concurrency. Transport errors are
/// retried with backoff; an unmappable answer is asked once more and then
/// logged as a parse failure. Completed answers are appended to the run log,
/// so a rerun after a provider outage resumes where it stopped. The log is
/// removed once the run completes. Persistent provider failure throws
/// ProviderError naming the log.
ClassifyResult classify(const std::vector<corpus::PostRecord>& posts, LlmClient& client,
                        const std::string& prompt_template, const ClassifyOptions& options);

std::string to_jsonl(const StanceRecord& record);
StanceRecord parse_stance_record(std::string_view line);
std::string to_jsonl(const ParseFailure& failure);

}  // namespace emodyn::stance
