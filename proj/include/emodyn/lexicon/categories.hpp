#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace emodyn::lexicon {

/// The eight emotions and two sentiments of the word-emotion lexicon.
enum class Emotion : std::uint8_t { anger, anticipation, disgust, fear, joy, sadness, surprise, trust, negative, positive };
inline constexpr std::size_t kEmotionCount = 10;

/// Continuous dimensions of the warmth lexicon.
enum class Dimension : std::uint8_t { warmth, sociability, trust, competence, arousal };
inline constexpr std::size_t kDimensionCount = 5;
/// Dimensions tracked by aggregation (arousal is loaded but not analysed).
inline constexpr std::size_t kTrackedDimensions = 4;

/// Countable categories: the ten emotions followed by "low" word sets of the
/// tracked warmth dimensions (score below the configured threshold).
enum class Category : std::uint8_t {
  anger, anticipation, disgust, fear, joy, sadness, surprise, trust, negative, positive,
  low_warmth, low_sociability, low_trust, low_competence,
};
inline constexpr std::size_t kCategoryCount = 14;

std::string_view to_string(Emotion e) noexcept;
std::string_view to_string(Dimension d) noexcept;
std::string_view to_string(Category c) noexcept;  // "anger", ..., "low-warmth"

std::optional<Emotion> parse_emotion(std::string_view s) noexcept;
std::optional<Dimension> parse_dimension(std::string_view s) noexcept;
std::optional<Category> parse_category(std::string_view s) noexcept;

constexpr Category category_of(Emotion e) noexcept { return static_cast<Category>(e); }
constexpr Category low_category_of(Dimension d) noexcept {
  return static_cast<Category>(static_cast<std::size_t>(Category::low_warmth) + static_cast<std::size_t>(d));
}
constexpr std::size_t index(Category c) noexcept { return static_cast<std::size_t>(c); }
constexpr std::size_t index(Emotion e) noexcept { return static_cast<std::size_t>(e); }
constexpr std::size_t index(Dimension d) noexcept { return static_cast<std::size_t>(d); }

/// Row order of the era report: sentiments first, then emotions alphabetically.
inline constexpr std::array<Emotion, kEmotionCount> kReportOrder = {
    Emotion::negative, Emotion::positive, Emotion::anger,   Emotion::anticipation, Emotion::disgust,
    Emotion::fear,     Emotion::joy,      Emotion::sadness, Emotion::surprise,     Emotion::trust,
};

/// Set of emotions carried by one word.
class EmotionSet {
 public:
  constexpr EmotionSet() = default;
  constexpr void add(Emotion e) noexcept { bits_ |= static_cast<std::uint16_t>(1u << index(e)); }
  constexpr void remove(Emotion e) noexcept { bits_ &= static_cast<std::uint16_t>(~(1u << index(e))); }
  constexpr bool contains(Emotion e) const noexcept { return (bits_ >> index(e)) & 1u; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::uint16_t bits() const noexcept { return bits_; }
  std::size_t size() const noexcept;
  constexpr bool operator==(const EmotionSet&) const = default;

 private:
  std::uint16_t bits_ = 0;
};

}  // namespace emodyn::lexicon
