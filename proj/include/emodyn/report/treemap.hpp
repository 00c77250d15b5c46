#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "emodyn/corpus/post.hpp"
#include "emodyn/lexicon/categories.hpp"
#include "emodyn/lexicon/score.hpp"
#include "emodyn/stance/labels.hpp"

namespace emodyn::report {

inline constexpr std::size_t kDefaultTopK = 15;

struct TreemapEntry {
  std::string word;
  std::uint64_t frequency = 0;
  bool operator==(const TreemapEntry&) const = default;
};

enum class TreemapWeighting {
  tokens,  // every occurrence counts
  posts,   // a word counts once per post
};

struct TreemapSpec {
  stance::StanceLabel stance = stance::StanceLabel::favor;
  lexicon::Dimension dimension = lexicon::Dimension::warmth;  // low-<dimension>
  TreemapWeighting weighting = TreemapWeighting::tokens;
  std::vector<TreemapEntry> entries;  // frequency desc, then word asc; size <= k
};

/// Counts words of `subset` whose `dimension` score is below the scorer's low
/// threshold and keeps the top `k`. An empty subset yields an empty spec and a
/// warning.
TreemapSpec top_k_low_words(std::span<const corpus::PostRecord> subset, const lexicon::Scorer& scorer,
                            stance::StanceLabel stance, lexicon::Dimension dimension, std::size_t k = kDefaultTopK,
                            TreemapWeighting weighting = TreemapWeighting::tokens);

struct TreemapCell {
  TreemapEntry entry;
  double x = 0, y = 0, w = 0, h = 0;
};

/// Squarified layout of `entries` (already in display order) into a w x h box.
std::vector<TreemapCell> squarify(std::span<const TreemapEntry> entries, double width, double height);

std::string render_treemap(const TreemapSpec& spec);

std::string to_json(const TreemapSpec& spec);
TreemapSpec parse_treemap(const std::string& json_text);

/// "treemap_<stance>_<low-dimension>"
std::string treemap_stem(stance::StanceLabel stance, lexicon::Dimension dimension);

TreemapWeighting parse_treemap_weighting(const std::string& name);

}  // namespace emodyn::report
