#include "emodyn/report/treemap.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>
#include <spdlog/spdlog.h>

#include "emodyn/common/error.hpp"
#include "emodyn/lexicon/tokenize.hpp"
#include "emodyn/report/svg.hpp"

namespace emodyn::report {

using nlohmann::json;
using nlohmann::ordered_json;

TreemapSpec top_k_low_words(std::span<const corpus::PostRecord> subset, const lexicon::Scorer& scorer,
                            stance::StanceLabel stance, lexicon::Dimension dimension, std::size_t k,
                            TreemapWeighting weighting) {
  if (k < 1) throw ParameterError("treemap k must be >= 1");
  TreemapSpec spec{stance, dimension, weighting, {}};
  if (subset.empty()) {
    spdlog::warn("no {} posts for the low-{} treemap", stance::to_string(stance), lexicon::to_string(dimension));
    return spec;
  }
  std::map<std::string, std::uint64_t, std::less<>> counts;
  lexicon::Tokenizer tokenizer;
  std::set<std::string_view> seen;
  for (const auto& post : subset) {
    seen.clear();
    for (auto token : tokenizer.split(post.text)) {
      if (!scorer.is_low(token, dimension)) continue;
      if (weighting == TreemapWeighting::posts && !seen.insert(token).second) continue;
      auto it = counts.find(token);
      if (it == counts.end()) it = counts.emplace(std::string(token), 0).first;
      ++it->second;
    }
  }
  for (auto& [word, n] : counts) spec.entries.push_back({word, n});
  std::stable_sort(spec.entries.begin(), spec.entries.end(),
                   [](const TreemapEntry& a, const TreemapEntry& b) { return a.frequency > b.frequency; });
  if (spec.entries.size() > k) spec.entries.resize(k);
  return spec;
}

namespace {

double worst_ratio(std::span<const double> row, double side) {
  double sum = 0, lo = INFINITY, hi = 0;
  for (double a : row) sum += a, lo = std::min(lo, a), hi = std::max(hi, a);
  const double s2 = side * side;
  const double sum2 = sum * sum;
  return std::max(s2 * hi / sum2, sum2 / (s2 * lo));
}

}  // namespace

std::vector<TreemapCell> squarify(std::span<const TreemapEntry> entries, double width, double height) {
  std::vector<TreemapCell> cells;
  double total = 0;
  for (const auto& e : entries) total += static_cast<double>(e.frequency);
  if (entries.empty() || total <= 0) return cells;

  std::vector<double> areas;
  for (const auto& e : entries) areas.push_back(static_cast<double>(e.frequency) * width * height / total);

  double x = 0, y = 0, w = width, h = height;
  std::size_t i = 0;
  while (i < areas.size()) {
    const double side = std::min(w, h);
    std::size_t end = i + 1;
    while (end < areas.size() &&
           worst_ratio(std::span(areas).subspan(i, end + 1 - i), side) <=
               worst_ratio(std::span(areas).subspan(i, end - i), side)) {
      ++end;
    }
    double row_area = 0;
    for (std::size_t j = i; j < end; ++j) row_area += areas[j];
    if (w >= h) {  // column on the left
      const double cw = row_area / h;
      double cy = y;
      for (std::size_t j = i; j < end; ++j) {
        const double ch = areas[j] / cw;
        cells.push_back({entries[j], x, cy, cw, ch});
        cy += ch;
      }
      x += cw;
      w -= cw;
    } else {  // row on top
      const double rh = row_area / w;
      double cx = x;
      for (std::size_t j = i; j < end; ++j) {
        const double cw = areas[j] / rh;
        cells.push_back({entries[j], cx, y, cw, rh});
        cx += cw;
      }
      y += rh;
      h -= rh;
    }
    i = end;
  }
  return cells;
}

std::string treemap_stem(stance::StanceLabel stance, lexicon::Dimension dimension) {
  return "treemap_" + std::string(stance::to_string(stance)) + "_" +
         std::string(lexicon::to_string(lexicon::low_category_of(dimension)));
}

std::string render_treemap(const TreemapSpec& spec) {
  constexpr double kW = 640, kH = 420, kTop = 36;
  SvgDocument svg(kW, kH + kTop);
  svg.style(
      "text{font-family:sans-serif;font-size:12px;fill:#fff}.title{font-size:14px;fill:#222}"
      ".cell{stroke:#fff;stroke-width:2}.c0{fill:#08306b}.c1{fill:#2171b5}.c2{fill:#4292c6}.c3{fill:#6baed6}");
  const std::string title = "Top " + std::to_string(spec.entries.size()) + " " +
                            std::string(lexicon::to_string(lexicon::low_category_of(spec.dimension))) + " words, " +
                            std::string(stance::to_string(spec.stance));
  svg.text(kW / 2, 22, title, "title", "middle");
  const auto cells = squarify(spec.entries, kW, kH);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    svg.rect(c.x, kTop + c.y, c.w, c.h, "cell c" + std::to_string(std::min<std::size_t>(3, i / 4)));
    if (c.w >= 30 && c.h >= 28) {
      svg.text(c.x + 4, kTop + c.y + 14, c.entry.word, "word");
      svg.text(c.x + 4, kTop + c.y + 27, std::to_string(c.entry.frequency), "freq");
    }
  }
  return svg.str();
}

std::string to_json(const TreemapSpec& spec) {
  ordered_json j;
  j["stance"] = std::string(stance::to_string(spec.stance));
  j["dimension"] = std::string(lexicon::to_string(lexicon::low_category_of(spec.dimension)));
  j["weighting"] = spec.weighting == TreemapWeighting::tokens ? "tokens" : "posts";
  j["entries"] = ordered_json::array();
  for (const auto& e : spec.entries) j["entries"].push_back(ordered_json{{"word", e.word}, {"frequency", e.frequency}});
  return j.dump(2) + "\n";
}

TreemapSpec parse_treemap(const std::string& json_text) {
  try {
    const json j = json::parse(json_text);
    TreemapSpec spec;
    spec.stance = stance::parse_label(j.at("stance").get<std::string>());
    std::string dim = j.at("dimension").get<std::string>();
    if (!dim.starts_with("low-")) throw DataError("treemap dimension must be low-<dimension>");
    const auto parsed = lexicon::parse_dimension(dim.substr(4));
    if (!parsed) throw DataError("unknown treemap dimension '" + dim + "'");
    spec.dimension = *parsed;
    spec.weighting = parse_treemap_weighting(j.at("weighting").get<std::string>());
    for (const auto& e : j.at("entries")) {
      spec.entries.push_back({e.at("word").get<std::string>(), e.at("frequency").get<std::uint64_t>()});
    }
    return spec;
  } catch (const json::exception& e) {
    throw DataError("malformed treemap data: " + std::string(e.what()));
  }
}

TreemapWeighting parse_treemap_weighting(const std::string& name) {
  if (name == "tokens") return TreemapWeighting::tokens;
  if (name == "posts") return TreemapWeighting::posts;
  throw ConfigError("unknown treemap weighting '" + name + "' (expected tokens or posts)");
}

}  // namespace emodyn::report
