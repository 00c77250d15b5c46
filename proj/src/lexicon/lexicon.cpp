#include "emodyn/lexicon/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "emodyn/common/error.hpp"

namespace emodyn::lexicon {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::optional<double> parse_real(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read lexicon " + path.string());
  return in;
}

}  // namespace

const EmotionSet* EmotionLexicon::find(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

void EmotionLexicon::set(std::string word, EmotionSet emotions) {
  std::string key = lower(word);
  if (emotions.empty()) {
    entries_.erase(key);
  } else {
    entries_[std::move(key)] = emotions;
  }
}

const WarmthScores* WarmthLexicon::find(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

void WarmthLexicon::set(std::string word, WarmthScores scores) {
  for (std::size_t d = 0; d < kDimensionCount; ++d) {
    const double v = scores.values[d];
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DataError(fmt::format("{} score {} for '{}' outside [0, 1]", to_string(static_cast<Dimension>(d)), v, word));
    }
  }
  entries_[lower(word)] = scores;
}

EmotionLexicon parse_emotion_lexicon(std::istream& in, const ExclusionList& exclusions, const std::string& source) {
  // Last row wins per (word, emotion); resolve in order before building sets.
  std::map<std::pair<std::string, Emotion>, bool> flags;
  EmotionLexicon lex;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    const std::string_view row = trim(line);
    if (row.empty() || row.front() == '#') continue;
    const auto fields = split(row, '\t');
    if (fields.size() != 3) {
      throw DataError(fmt::format("{}:{}: expected word<TAB>category<TAB>flag", source, no));
    }
    const std::string word = lower(trim(fields[0]));
    const auto category = parse_emotion(lower(trim(fields[1])));
    if (!category) throw DataError(fmt::format("{}:{}: unknown category '{}'", source, no, trim(fields[1])));
    const std::string_view flag = trim(fields[2]);
    if (flag != "0" && flag != "1") throw DataError(fmt::format("{}:{}: flag must be 0 or 1", source, no));
    if (word.empty()) throw DataError(fmt::format("{}:{}: empty word", source, no));

    auto [it, inserted] = flags.insert_or_assign({word, *category}, flag == "1");
    if (!inserted) {
      lex.warnings_.push_back(fmt::format("{}:{}: duplicate row for ({}, {}), last one wins", source, no, word,
                                          to_string(*category)));
    }
  }
  for (const auto& [key, flag] : flags) {
    if (!flag || exclusions.contains(key.first)) continue;
    lex.entries_[key.first].add(key.second);
  }
  for (const auto& w : lex.warnings_) spdlog::warn("{}", w);
  return lex;
}

EmotionLexicon load_emotion_lexicon(const std::filesystem::path& path, const ExclusionList& exclusions) {
  auto in = open(path);
  return parse_emotion_lexicon(in, exclusions, path.string());
}

WarmthLexicon parse_warmth_lexicon(std::istream& in, const ExclusionList& exclusions, const std::string& source) {
  WarmthLexicon lex;
  std::string line;
  std::size_t no = 0;
  std::optional<std::size_t> word_col;
  std::array<std::optional<std::size_t>, kDimensionCount> dim_col{};
  std::size_t width = 0;
  std::set<std::string> seen;

  while (std::getline(in, line)) {
    ++no;
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    const auto fields = split(row, ',');
    if (!word_col) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        std::string name = lower(trim(fields[i]));
        if (name == "word" || name == "term") {
          word_col = i;
        } else if (auto d = parse_dimension(name)) {
          dim_col[index(*d)] = i;
        }
      }
      if (!word_col) throw DataError(fmt::format("{}: missing column 'word'", source));
      for (std::size_t d = 0; d < kDimensionCount; ++d) {
        if (!dim_col[d]) {
          throw DataError(fmt::format("{}: missing column '{}'", source, to_string(static_cast<Dimension>(d))));
        }
      }
      width = fields.size();
      continue;
    }
    if (fields.size() != width) {
      throw DataError(fmt::format("{}:{}: expected {} fields, found {}", source, no, width, fields.size()));
    }
    std::string word = lower(trim(fields[*word_col]));
    if (word.size() >= 2 && word.front() == '"' && word.back() == '"') word = word.substr(1, word.size() - 2);
    WarmthScores scores;
    for (std::size_t d = 0; d < kDimensionCount; ++d) {
      const auto v = parse_real(fields[*dim_col[d]]);
      if (!v) {
        throw DataError(fmt::format("{}:{}: non-numeric {} score '{}'", source, no,
                                    to_string(static_cast<Dimension>(d)), trim(fields[*dim_col[d]])));
      }
      if (!(*v >= 0.0 && *v <= 1.0)) {
        throw DataError(fmt::format("{}:{}: {} score {} outside [0, 1]", source, no,
                                    to_string(static_cast<Dimension>(d)), *v));
      }
      scores.values[d] = *v;
    }
    if (!seen.insert(word).second) {
      lex.warnings_.push_back(fmt::format("{}:{}: duplicate row for '{}', last one wins", source, no, word));
    }
    if (exclusions.contains(word)) continue;
    lex.entries_[word] = scores;
  }
  if (!word_col) throw DataError(fmt::format("{}: missing header row", source));
  for (const auto& w : lex.warnings_) spdlog::warn("{}", w);
  return lex;
}

WarmthLexicon load_warmth_lexicon(const std::filesystem::path& path, const ExclusionList& exclusions) {
  auto in = open(path);
  return parse_warmth_lexicon(in, exclusions, path.string());
}

}  // namespace emodyn::lexicon
