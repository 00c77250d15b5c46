#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "emodyn/common/time.hpp"
#include "emodyn/corpus/post.hpp"
#include "emodyn/lexicon/lexicon.hpp"

namespace emodyn::lexicon {

/// Warmth scores are accumulated as integers in units of 1e-9 so sums are
/// exact and independent of summation order.
inline constexpr std::int64_t kScoreScale = 1'000'000'000;

std::int64_t to_fixed(double score) noexcept;
inline double from_fixed(std::int64_t fixed) noexcept { return static_cast<double>(fixed) / static_cast<double>(kScoreScale); }

/// Per-post lexicon tallies.
struct PostScore {
  std::string post_id;
  Timestamp created_at;
  std::size_t token_count = 0;
  std::array<std::uint32_t, kCategoryCount> counts{};  // emotions, then low-dimension words
  std::array<std::int64_t, kTrackedDimensions> score_fixed{};  // summed over warmth-lexicon hits
  std::uint32_t warmth_hits = 0;  // tokens present in the warmth lexicon

  std::uint32_t count(Category c) const noexcept { return counts[index(c)]; }
  std::uint32_t count(Emotion e) const noexcept { return counts[index(e)]; }
  double sum(Dimension d) const noexcept { return from_fixed(score_fixed[index(d)]); }
  double warmth_sum() const noexcept { return sum(Dimension::warmth); }
  double sociability_sum() const noexcept { return sum(Dimension::sociability); }
  double trust_sum() const noexcept { return sum(Dimension::trust); }
  double competence_sum() const noexcept { return sum(Dimension::competence); }
};

/// Scores of one warmth-lexicon hit, in token order (warmth, sociability,
/// trust, competence).
using WordScore = std::array<double, kTrackedDimensions>;

struct ScoringOptions {
  double low_threshold = 1.0 / 3.0;  // "low" word: dimension score < threshold
};

/// Immutable merged index over both lexicons; safe to share across threads.
class Scorer {
 public:
  Scorer(const EmotionLexicon& emotions, const WarmthLexicon& warmth, ScoringOptions options = {});

  PostScore score(const corpus::PostRecord& post) const { return score(post, nullptr); }
  /// Appends the scores of every warmth-lexicon token to `words` when non-null.
  PostScore score(const corpus::PostRecord& post, std::vector<WordScore>* words) const;

  /// True when `word` is in the warmth lexicon with `d` score below threshold.
  bool is_low(std::string_view word, Dimension d) const;
  double low_threshold() const noexcept { return options_.low_threshold; }

 private:
  struct Entry {
    std::uint16_t emotions = 0;
    bool has_warmth = false;
    std::uint8_t low_mask = 0;
    std::array<std::int64_t, kTrackedDimensions> fixed{};
    WordScore scores{};
  };
  WordMap<Entry> index_;
  ScoringOptions options_;
};

PostScore score_post(const corpus::PostRecord& post, const EmotionLexicon& emotions, const WarmthLexicon& warmth);

}  // namespace emodyn::lexicon
