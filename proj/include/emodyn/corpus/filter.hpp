#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "emodyn/common/retry.hpp"
#include "emodyn/corpus/embedding.hpp"
#include "emodyn/corpus/post.hpp"

namespace emodyn::corpus {

struct FilterOptions {
  std::string anchor = "The Vaccines music band";
  double threshold = 0.7;  // kept iff similarity < threshold
  std::size_t batch_size = 64;
  RetryPolicy retry;
  /// Decisions are appended here as batches complete. An existing file is
  /// resumed; the file is removed after a complete run. Empty disables it.
  std::filesystem::path checkpoint;
};

struct FilterResult {
  std::vector<PostRecord> kept;
  std::vector<FilterDecision> decisions;  // one per input post, input order
};

/// Cosine similarity clamped to [-1, 1]. Throws ProviderError on a zero vector.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

/// Drops posts whose embedding is at least `threshold`-similar to the anchor.
/// A post whose vector has zero norm scores 0 and is kept.
/// Provider failures are retried; once retries run out the run aborts with
/// ProviderError and the checkpoint holds everything decided so far.
FilterResult semantic_filter(std::vector<PostRecord> posts, EmbeddingProvider& provider,
                             const FilterOptions& options = {});

}  // namespace emodyn::corpus
