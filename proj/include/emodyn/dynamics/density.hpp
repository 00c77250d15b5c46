#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emodyn/common/time.hpp"
#include "emodyn/lexicon/score.hpp"

namespace emodyn::dynamics {

using lexicon::Category;
using lexicon::Dimension;
using lexicon::PostScore;

/// Emotion-word density of one category in one month.
struct BinDensity {
  Month bin;
  Category category = Category::anger;
  std::uint64_t emotion_word_count = 0;
  std::uint64_t token_total = 0;

  double density() const noexcept {
    return static_cast<double>(emotion_word_count) / static_cast<double>(token_total);
  }
  bool operator==(const BinDensity&) const = default;
};

/// Integer tallies of one month. Merging is exact, so sharded aggregation
/// matches a single pass bit for bit.
struct BinAccumulator {
  std::uint64_t posts = 0;
  std::uint64_t token_total = 0;
  std::array<std::uint64_t, lexicon::kCategoryCount> counts{};
  std::array<std::int64_t, lexicon::kTrackedDimensions> score_fixed{};  // token-weighted sums
  std::uint64_t warmth_hits = 0;
  std::array<std::int64_t, lexicon::kTrackedDimensions> post_mean_fixed{};  // sum of per-post means
  std::uint64_t posts_with_hits = 0;

  void add(const PostScore& score);
  void merge(const BinAccumulator& other);
};

enum class WarmthWeighting { token, post };

/// Month -> tallies, in chronological order.
class DensityAccumulator {
 public:
  void add(const PostScore& score);
  void merge(const DensityAccumulator& other);

  /// Non-empty months (token_total > 0) in chronological order.
  std::vector<BinDensity> densities(Category category) const;

  /// Monthly mean score of a tracked dimension; months without hits omitted.
  std::vector<std::pair<Month, double>> dimension_series(Dimension d, WarmthWeighting weighting) const;

  const std::map<Month, BinAccumulator>& bins() const noexcept { return bins_; }

 private:
  std::map<Month, BinAccumulator> bins_;
};

std::vector<BinDensity> bin_density(std::span<const PostScore> scores, Category category);

struct GroupDensity {
  double mean = 0.0;        // unweighted mean of per-post proportions
  std::size_t posts = 0;
  std::size_t skipped = 0;  // zero-token posts
  std::vector<double> proportions;
};

/// Per-post proportion count(category)/token_count, averaged per group.
/// Posts for which `group` returns nullopt are ignored.
std::map<std::string, GroupDensity> per_post_density(
    std::span<const PostScore> scores, Category category,
    const std::function<std::optional<std::string>(const PostScore&)>& group);

}  // namespace emodyn::dynamics
