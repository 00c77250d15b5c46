#include "emodyn/stance/labels.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

#include "emodyn/common/error.hpp"

namespace emodyn::stance {

namespace {

constexpr std::pair<std::string_view, StanceLabel> kTable[] = {
    {"favor", StanceLabel::favor},
    {"favour", StanceLabel::favor},
    {"in favor", StanceLabel::favor},
    {"in favour", StanceLabel::favor},
    {"pro", StanceLabel::favor},
    {"against", StanceLabel::against},
    {"anti", StanceLabel::against},
    {"neutral", StanceLabel::neutral},
    {"neither", StanceLabel::neutral},
    {"none", StanceLabel::neutral},
    {"neither of the two inferences can be reasonably made", StanceLabel::neutral},
};

constexpr std::string_view kPrefixes[] = {"stance:", "answer:", "label:"};

bool is_strip(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isspace(u) || (std::ispunct(u) && c != '-');
}

}  // namespace

std::string_view to_string(StanceLabel label) noexcept {
  switch (label) {
    case StanceLabel::favor: return "favor";
    case StanceLabel::against: return "against";
    case StanceLabel::neutral: return "neutral";
  }
  return "neutral";
}

std::optional<StanceLabel> normalize_label(std::string_view response) {
  std::string line;
  std::size_t pos = 0;
  while (pos <= response.size()) {
    const auto end = std::min(response.find('\n', pos), response.size());
    std::string_view candidate = response.substr(pos, end - pos);
    if (candidate.find_first_not_of(" \t\r") != std::string_view::npos) {
      line.assign(candidate);
      break;
    }
    pos = end + 1;
  }
  std::transform(line.begin(), line.end(), line.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

  auto trim = [](std::string& s) {
    const auto b = std::find_if_not(s.begin(), s.end(), is_strip);
    const auto e = std::find_if_not(s.rbegin(), s.rend(), is_strip).base();
    s = b < e ? std::string(b, e) : std::string();
  };
  auto first_trim = [](std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    s = b == std::string::npos ? std::string() : s.substr(b);
  };
  first_trim(line);
  for (auto prefix : kPrefixes) {
    if (line.starts_with(prefix)) {
      line.erase(0, prefix.size());
      break;
    }
  }
  trim(line);
  // Collapse inner whitespace runs.
  std::string norm;
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!norm.empty() && norm.back() != ' ') norm += ' ';
    } else {
      norm += c;
    }
  }
  for (const auto& [text, label] : kTable) {
    if (norm == text) return label;
  }
  return std::nullopt;
}

StanceLabel parse_label(std::string_view text) {
  if (auto label = normalize_label(text)) return *label;
  throw DataError("unrecognized stance label '" + std::string(text) + "'");
}

}  // namespace emodyn::stance
