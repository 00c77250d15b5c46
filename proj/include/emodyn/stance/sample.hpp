#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "emodyn/common/time.hpp"
#include "emodyn/corpus/post.hpp"

namespace emodyn::stance {

/// Per-month uniform sampling without replacement. Every post gets a seeded
/// pseudo-random key from (seed, month, id); each month keeps the `per_month`
/// smallest keys. The result depends only on the post set and the seed, not on
/// input order, and can be computed in one streaming pass with bounded memory.
class MonthlySampler {
 public:
  MonthlySampler(std::size_t per_month, std::uint64_t seed);

  void add(const corpus::PostRecord& post);

  /// Sampled posts in canonical order. Months with fewer than `per_month`
  /// posts contribute all of them and add a warning.
  std::vector<corpus::PostRecord> finish(std::vector<std::string>* warnings = nullptr) &&;

  /// Posts seen per month.
  const std::map<Month, std::size_t>& seen() const noexcept { return seen_; }

 private:
  struct Keyed {
    std::uint64_t key;
    corpus::PostRecord post;
  };
  std::size_t per_month_;
  std::uint64_t seed_;
  std::map<Month, std::vector<Keyed>> heaps_;  // max-heap on (key, id)
  std::map<Month, std::size_t> seen_;
};

/// Throws ParameterError when per_month < 1 and DataError on an empty corpus.
std::vector<corpus::PostRecord> sample_monthly(const std::vector<corpus::PostRecord>& corpus, std::size_t per_month,
                                               std::uint64_t seed, std::vector<std::string>* warnings = nullptr);

std::vector<corpus::PostRecord> sample_monthly(const std::filesystem::path& corpus_jsonl, std::size_t per_month,
                                               std::uint64_t seed, std::vector<std::string>* warnings = nullptr);

/// Seeded key used by the sampler; exposed for tests.
std::uint64_t sample_key(std::uint64_t seed, const Month& month, std::string_view post_id) noexcept;

}  // namespace emodyn::stance
