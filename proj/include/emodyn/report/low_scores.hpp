#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emodyn/common/time.hpp"
#include "emodyn/corpus/post.hpp"
#include "emodyn/lexicon/score.hpp"
#include "emodyn/stance/classify.hpp"

namespace emodyn::report {

/// Per-post low-score density of one dimension for one stance, by era.
struct LowScoreRow {
  lexicon::Dimension dimension = lexicon::Dimension::warmth;
  stance::StanceLabel stance = stance::StanceLabel::favor;
  double pre_mean = 0.0;
  std::size_t pre_posts = 0;
  double covid_mean = 0.0;
  std::size_t covid_posts = 0;
  std::optional<double> pct_change;  // absent when the pre mean is 0 or an era is empty
  std::optional<double> p_value;     // absent when an era is empty
};

/// Rows for low-warmth and low-competence crossed with favor and against.
/// Posts are joined to records by id; unlabeled and zero-token posts are skipped.
std::vector<LowScoreRow> low_score_density(std::span<const corpus::PostRecord> posts,
                                           std::span<const stance::StanceRecord> records,
                                           const lexicon::Scorer& scorer, Timestamp split);

/// `dimension,stance,pre_mean,pre_posts,covid_mean,covid_posts,pct_change,p_value,significant_at_0.001`
std::string low_score_csv(std::span<const LowScoreRow> rows);

}  // namespace emodyn::report
