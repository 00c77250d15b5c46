#include "emodyn/dynamics/density.hpp"

#include "emodyn/common/error.hpp"

namespace emodyn::dynamics {

void BinAccumulator::add(const PostScore& score) {
  ++posts;
  token_total += score.token_count;
  for (std::size_t c = 0; c < lexicon::kCategoryCount; ++c) counts[c] += score.counts[c];
  warmth_hits += score.warmth_hits;
  for (std::size_t d = 0; d < lexicon::kTrackedDimensions; ++d) score_fixed[d] += score.score_fixed[d];
  if (score.warmth_hits > 0) {
    ++posts_with_hits;
    for (std::size_t d = 0; d < lexicon::kTrackedDimensions; ++d) {
      // Per-post mean rounded to the fixed grid, so the monthly sum stays exact.
      post_mean_fixed[d] += lexicon::to_fixed(lexicon::from_fixed(score.score_fixed[d]) / score.warmth_hits);
    }
  }
}

void BinAccumulator::merge(const BinAccumulator& other) {
  posts += other.posts;
  token_total += other.token_total;
  for (std::size_t c = 0; c < lexicon::kCategoryCount; ++c) counts[c] += other.counts[c];
  warmth_hits += other.warmth_hits;
  posts_with_hits += other.posts_with_hits;
  for (std::size_t d = 0; d < lexicon::kTrackedDimensions; ++d) {
    score_fixed[d] += other.score_fixed[d];
    post_mean_fixed[d] += other.post_mean_fixed[d];
  }
}

void DensityAccumulator::add(const PostScore& score) { bins_[month_of(score.created_at)].add(score); }

void DensityAccumulator::merge(const DensityAccumulator& other) {
  for (const auto& [month, acc] : other.bins_) bins_[month].merge(acc);
}

std::vector<BinDensity> DensityAccumulator::densities(Category category) const {
  std::vector<BinDensity> out;
  for (const auto& [month, acc] : bins_) {
    if (acc.token_total == 0) continue;
    out.push_back(BinDensity{month, category, acc.counts[lexicon::index(category)], acc.token_total});
  }
  return out;
}

std::vector<std::pair<Month, double>> DensityAccumulator::dimension_series(Dimension d, WarmthWeighting weighting) const {
  if (lexicon::index(d) >= lexicon::kTrackedDimensions) throw ParameterError("dimension is not tracked");
  std::vector<std::pair<Month, double>> out;
  for (const auto& [month, acc] : bins_) {
    if (weighting == WarmthWeighting::token) {
      if (acc.warmth_hits == 0) continue;
      out.emplace_back(month, lexicon::from_fixed(acc.score_fixed[lexicon::index(d)]) /
                                  static_cast<double>(acc.warmth_hits));
    } else {
      if (acc.posts_with_hits == 0) continue;
      out.emplace_back(month, lexicon::from_fixed(acc.post_mean_fixed[lexicon::index(d)]) /
                                  static_cast<double>(acc.posts_with_hits));
    }
  }
  return out;
}

std::vector<BinDensity> bin_density(std::span<const PostScore> scores, Category category) {
  DensityAccumulator acc;
  for (const auto& s : scores) acc.add(s);
  return acc.densities(category);
}

std::map<std::string, GroupDensity> per_post_density(
    std::span<const PostScore> scores, Category category,
    const std::function<std::optional<std::string>(const PostScore&)>& group) {
  std::map<std::string, GroupDensity> out;
  for (const auto& s : scores) {
    auto key = group(s);
    if (!key) continue;
    auto& g = out[*key];
    if (s.token_count == 0) {
      ++g.skipped;
      continue;
    }
    g.proportions.push_back(static_cast<double>(s.count(category)) / static_cast<double>(s.token_count));
  }
  for (auto& [key, g] : out) {
    g.posts = g.proportions.size();
    double total = 0.0;
    for (double p : g.proportions) total += p;
    g.mean = g.posts > 0 ? total / static_cast<double>(g.posts) : 0.0;
  }
  return out;
}

}  // namespace emodyn::dynamics
