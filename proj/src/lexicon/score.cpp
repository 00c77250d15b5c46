#include "emodyn/lexicon/score.hpp"

#include <cmath>

#include "emodyn/common/error.hpp"
#include "emodyn/lexicon/tokenize.hpp"

namespace emodyn::lexicon {

std::int64_t to_fixed(double score) noexcept {
  return static_cast<std::int64_t>(std::llround(score * static_cast<double>(kScoreScale)));
}

Scorer::Scorer(const EmotionLexicon& emotions, const WarmthLexicon& warmth, ScoringOptions options)
    : options_(options) {
  if (!(options.low_threshold > 0.0 && options.low_threshold < 1.0)) {
    throw ParameterError("low-score threshold must lie in (0, 1)");
  }
  index_.reserve(emotions.size() + warmth.size());
  for (const auto& [word, set] : emotions.entries()) index_[word].emotions = set.bits();
  for (const auto& [word, scores] : warmth.entries()) {
    Entry& e = index_[word];
    e.has_warmth = true;
    for (std::size_t d = 0; d < kTrackedDimensions; ++d) {
      e.scores[d] = scores.values[d];
      e.fixed[d] = to_fixed(scores.values[d]);
      if (scores.values[d] < options.low_threshold) e.low_mask |= static_cast<std::uint8_t>(1u << d);
    }
  }
}

PostScore Scorer::score(const corpus::PostRecord& post, std::vector<WordScore>* words) const {
  thread_local Tokenizer tokenizer;
  PostScore out;
  out.post_id = post.id;
  out.created_at = post.created_at;
  const auto& tokens = tokenizer.split(post.text);
  out.token_count = tokens.size();
  for (const auto token : tokens) {
    auto it = index_.find(token);
    if (it == index_.end()) continue;
    const Entry& e = it->second;
    for (std::uint16_t bits = e.emotions; bits != 0; bits &= static_cast<std::uint16_t>(bits - 1)) {
      ++out.counts[static_cast<std::size_t>(__builtin_ctz(bits))];
    }
    if (!e.has_warmth) continue;
    ++out.warmth_hits;
    for (std::size_t d = 0; d < kTrackedDimensions; ++d) {
      out.score_fixed[d] += e.fixed[d];
      if ((e.low_mask >> d) & 1u) ++out.counts[index(Category::low_warmth) + d];
    }
    if (words != nullptr) words->push_back(e.scores);
  }
  return out;
}

bool Scorer::is_low(std::string_view word, Dimension d) const {
  if (index(d) >= kTrackedDimensions) return false;
  auto it = index_.find(word);
  return it != index_.end() && it->second.has_warmth && ((it->second.low_mask >> index(d)) & 1u);
}

PostScore score_post(const corpus::PostRecord& post, const EmotionLexicon& emotions, const WarmthLexicon& warmth) {
  return Scorer(emotions, warmth).score(post);
}

}  // namespace emodyn::lexicon
