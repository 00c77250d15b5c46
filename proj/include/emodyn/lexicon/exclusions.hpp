#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace emodyn::lexicon {

/// Words removed from both lexicons at load time. Scoring still counts them
/// as ordinary tokens.
class ExclusionList {
 public:
  ExclusionList() = default;
  explicit ExclusionList(std::vector<std::string> words);

  /// Morphological variants of "vaccine" plus the editable illness list.
  static ExclusionList defaults();
  static ExclusionList vaccine_variants();
  static ExclusionList illness_terms();

  /// One word per line, `#` starts a comment, blank lines ignored.
  static ExclusionList load(const std::filesystem::path& path);

  void merge(const ExclusionList& other);
  bool contains(std::string_view word) const;
  std::size_t size() const noexcept { return words_.size(); }
  const std::set<std::string, std::less<>>& words() const noexcept { return words_; }

 private:
  std::set<std::string, std::less<>> words_;
};

}  // namespace emodyn::lexicon
