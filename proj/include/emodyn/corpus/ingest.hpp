#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

#include "emodyn/corpus/clean.hpp"
#include "emodyn/corpus/filter.hpp"

namespace emodyn::corpus {

enum class StageOrder { dedup_then_filter, filter_then_dedup };

struct IngestOptions {
  CleanOptions clean;
  bool filter_enabled = true;
  FilterOptions filter;
  StageOrder order = StageOrder::dedup_then_filter;
  std::size_t workers = 1;
  std::size_t chunk_lines = 8192;
};

struct CorpusSummary {
  std::size_t lines = 0;      // non-blank input lines
  std::size_t rejected = 0;   // malformed lines (see rejects.jsonl)
  std::size_t raw = 0;        // well-formed posts
  std::size_t reposts = 0;    // dropped as re-posts
  std::size_t after_dedup = 0;
  std::size_t after_filter = 0;
  std::size_t unique_users = 0;  // in the final corpus

  std::string to_json() const;
  bool operator==(const CorpusSummary&) const = default;
};

/// Output file names inside the ingest directory.
inline constexpr const char* kCorpusFile = "corpus.jsonl";
inline constexpr const char* kRejectsFile = "rejects.jsonl";
inline constexpr const char* kDecisionsFile = "filter_decisions.jsonl";
inline constexpr const char* kSummaryFile = "ingest_summary.json";
inline constexpr const char* kFilterCheckpoint = "filter.checkpoint.jsonl";

/// JSONL of RawPost -> clean -> (dedup, filter in configured order) ->
/// canonical corpus sorted by (created_at, id). Malformed lines go to the
/// reject file and the run continues. `provider` may be null only when the
/// filter is disabled. Output is identical for any worker count.
CorpusSummary ingest(const std::filesystem::path& input, const std::filesystem::path& out_dir,
                     const IngestOptions& options, EmbeddingProvider* provider);

/// Resolves a corpus argument: a directory means `<dir>/corpus.jsonl`.
std::filesystem::path corpus_file(const std::filesystem::path& corpus);

}  // namespace emodyn::corpus
