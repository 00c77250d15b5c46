#include "emodyn/lexicon/categories.hpp"

#include <bit>

namespace emodyn::lexicon {

namespace {
constexpr std::array<std::string_view, kCategoryCount> kCategoryNames = {
    "anger", "anticipation", "disgust",     "fear",      "joy",       "sadness",    "surprise",
    "trust", "negative",     "positive",    "low-warmth", "low-sociability", "low-trust", "low-competence",
};
constexpr std::array<std::string_view, kDimensionCount> kDimensionNames = {
    "warmth", "sociability", "trust", "competence", "arousal",
};
}  // namespace

std::string_view to_string(Emotion e) noexcept { return kCategoryNames[index(e)]; }
std::string_view to_string(Dimension d) noexcept { return kDimensionNames[index(d)]; }
std::string_view to_string(Category c) noexcept { return kCategoryNames[index(c)]; }

std::optional<Emotion> parse_emotion(std::string_view s) noexcept {
  for (std::size_t i = 0; i < kEmotionCount; ++i) {
    if (kCategoryNames[i] == s) return static_cast<Emotion>(i);
  }
  return std::nullopt;
}

std::optional<Dimension> parse_dimension(std::string_view s) noexcept {
  for (std::size_t i = 0; i < kDimensionCount; ++i) {
    if (kDimensionNames[i] == s) return static_cast<Dimension>(i);
  }
  // Dominance is the lexicon's name for competence.
  if (s == "dominance") return Dimension::competence;
  return std::nullopt;
}

std::optional<Category> parse_category(std::string_view s) noexcept {
  for (std::size_t i = 0; i < kCategoryCount; ++i) {
    if (kCategoryNames[i] == s) return static_cast<Category>(i);
  }
  return std::nullopt;
}

std::size_t EmotionSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

}  // namespace emodyn::lexicon
