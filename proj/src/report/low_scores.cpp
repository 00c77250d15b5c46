#include "emodyn/report/low_scores.hpp"

#include <unordered_map>

#include "emodyn/common/format.hpp"
#include "emodyn/dynamics/density.hpp"
#include "emodyn/stats/mann_whitney.hpp"
#include "emodyn/stats/percent_change.hpp"

namespace emodyn::report {

using lexicon::Dimension;
using stance::StanceLabel;

std::vector<LowScoreRow> low_score_density(std::span<const corpus::PostRecord> posts,
                                           std::span<const stance::StanceRecord> records,
                                           const lexicon::Scorer& scorer, Timestamp split) {
  std::unordered_map<std::string_view, StanceLabel> label_of;
  for (const auto& r : records) label_of.emplace(r.post_id, r.label);

  std::vector<lexicon::PostScore> scores;
  for (const auto& post : posts) {
    if (label_of.contains(post.id)) scores.push_back(scorer.score(post));
  }
  auto group = [&](const lexicon::PostScore& s) -> std::optional<std::string> {
    const StanceLabel l = label_of.at(s.post_id);
    if (l == StanceLabel::neutral) return std::nullopt;
    return std::string(stance::to_string(l)) + (s.created_at < split ? "|pre" : "|covid");
  };

  std::vector<LowScoreRow> rows;
  for (Dimension d : {Dimension::warmth, Dimension::competence}) {
    const auto groups = dynamics::per_post_density(scores, lexicon::low_category_of(d), group);
    for (StanceLabel l : {StanceLabel::favor, StanceLabel::against}) {
      const std::string key(stance::to_string(l));
      const auto pre = groups.find(key + "|pre");
      const auto covid = groups.find(key + "|covid");
      LowScoreRow row;
      row.dimension = d;
      row.stance = l;
      if (pre != groups.end()) row.pre_mean = pre->second.mean, row.pre_posts = pre->second.proportions.size();
      if (covid != groups.end()) row.covid_mean = covid->second.mean, row.covid_posts = covid->second.proportions.size();
      if (row.pre_posts > 0 && row.covid_posts > 0) {
        if (row.pre_mean != 0.0) row.pct_change = stats::percent_change(row.pre_mean, row.covid_mean);
        row.p_value = stats::mann_whitney(pre->second.proportions, covid->second.proportions).p_value;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::string low_score_csv(std::span<const LowScoreRow> rows) {
  std::string out = "dimension,stance,pre_mean,pre_posts,covid_mean,covid_posts,pct_change,p_value,significant_at_0.001\n";
  for (const auto& r : rows) {
    out += std::string(lexicon::to_string(lexicon::low_category_of(r.dimension))) + "," +
           std::string(stance::to_string(r.stance)) + "," + format_real(r.pre_mean) + "," +
           std::to_string(r.pre_posts) + "," + format_real(r.covid_mean) + "," + std::to_string(r.covid_posts) + "," +
           (r.pct_change ? format_real(*r.pct_change) : "") + "," + (r.p_value ? format_real(*r.p_value) : "") + "," +
           (r.p_value ? (*r.p_value < 0.001 ? "true" : "false") : "") + "\n";
  }
  return out;
}

}  // namespace emodyn::report
