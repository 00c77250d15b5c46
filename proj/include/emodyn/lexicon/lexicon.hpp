#pragma once

#include <array>
#include <filesystem>
#include <functional>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "emodyn/lexicon/categories.hpp"
#include "emodyn/lexicon/exclusions.hpp"

namespace emodyn::lexicon {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
};

template <typename Value>
using WordMap = std::unordered_map<std::string, Value, StringHash, std::equal_to<>>;

/// word -> emotions with a positive association.
class EmotionLexicon {
 public:
  const EmotionSet* find(std::string_view word) const;
  std::size_t size() const noexcept { return entries_.size(); }
  const WordMap<EmotionSet>& entries() const noexcept { return entries_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  void set(std::string word, EmotionSet emotions);

 private:
  friend EmotionLexicon parse_emotion_lexicon(std::istream&, const ExclusionList&, const std::string&);
  WordMap<EmotionSet> entries_;
  std::vector<std::string> warnings_;
};

struct WarmthScores {
  std::array<double, kDimensionCount> values{};

  double operator[](Dimension d) const noexcept { return values[index(d)]; }
  bool operator==(const WarmthScores&) const = default;
};

/// word -> warmth, sociability, trust, competence, arousal in [0, 1].
class WarmthLexicon {
 public:
  const WarmthScores* find(std::string_view word) const;
  std::size_t size() const noexcept { return entries_.size(); }
  const WordMap<WarmthScores>& entries() const noexcept { return entries_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// Throws DataError if a score is outside [0, 1].
  void set(std::string word, WarmthScores scores);

 private:
  friend WarmthLexicon parse_warmth_lexicon(std::istream&, const ExclusionList&, const std::string&);
  WordMap<WarmthScores> entries_;
  std::vector<std::string> warnings_;
};

/// `word<TAB>category<TAB>{0|1}` rows; only flag 1 is kept. Unknown categories
/// and malformed rows throw DataError with the line number. A repeated
/// (word, category) row overrides the earlier one and records a warning.
EmotionLexicon parse_emotion_lexicon(std::istream& in, const ExclusionList& exclusions,
                                     const std::string& source = "<stream>");
EmotionLexicon load_emotion_lexicon(const std::filesystem::path& path, const ExclusionList& exclusions);

/// CSV with header `word,warmth,sociability,trust,competence,arousal` (any
/// column order; `dominance` accepted for competence).
WarmthLexicon parse_warmth_lexicon(std::istream& in, const ExclusionList& exclusions,
                                   const std::string& source = "<stream>");
WarmthLexicon load_warmth_lexicon(const std::filesystem::path& path, const ExclusionList& exclusions);

}  // namespace emodyn::lexicon
