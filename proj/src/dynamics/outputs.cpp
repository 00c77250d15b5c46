#include <json.hpp>
#include <spdlog/spdlog.h>

#include "emodyn/common/error.hpp"
#include "emodyn/common/format.hpp"
#include "emodyn/common/io.hpp"
#include "emodyn/dynamics/analyzer.hpp"
#include "emodyn/dynamics/era.hpp"
#include "emodyn/stats/mann_whitney.hpp"
#include "emodyn/stats/percent_change.hpp"

namespace emodyn::dynamics {

using nlohmann::ordered_json;

namespace {

// Numbers go into JSON as their shortest round-trip text.
ordered_json real(double v) { return ordered_json::parse(format_real(v)); }

ordered_json band_json(const HomeBase1D& hb) {
  ordered_json j;
  j["mean"] = real(hb.mean);
  j["lower"] = real(hb.lower);
  j["upper"] = real(hb.upper);
  j["variance"] = real(hb.variance);
  j["t_crit"] = real(hb.t_crit);
  j["alpha"] = real(hb.alpha);
  j["n"] = hb.n;
  return j;
}

ordered_json ellipse_json(const HomeBase2D& hb) {
  ordered_json j;
  j["mean_w"] = real(hb.mean_w);
  j["mean_c"] = real(hb.mean_c);
  j["lambda1"] = real(hb.lambda1);
  j["lambda2"] = real(hb.lambda2);
  j["angle"] = real(hb.angle);
  j["psi"] = real(hb.psi);
  j["alpha"] = real(hb.alpha);
  j["n"] = hb.n;
  j["semi_major"] = real(hb.semi_major());
  j["semi_minor"] = real(hb.semi_minor());
  j["area"] = real(hb.area());
  return j;
}

ordered_json era_json(const EraDynamics& era, const AnalysisOptions& options) {
  ordered_json j;
  j["name"] = era.name;
  j["words"] = era.words;
  const Moments2D& wc = era.warmth_competence.moments();
  const Moments2D& ts = era.trust_sociability.moments();
  j["points"] = wc.n;

  ordered_json bands = ordered_json::object();
  const std::pair<const char*, Moments1D> dims[] = {
      {"warmth", wc.x()}, {"sociability", ts.y()}, {"trust", ts.x()}, {"competence", wc.y()}};
  for (const auto& [name, m] : dims) {
    try {
      bands[name] = band_json(home_base_1d(m, options.alpha));
    } catch (const DataError& e) {
      bands[name] = nullptr;
    }
  }
  j["bands"] = bands;
  try {
    j["ellipse"] = ellipse_json(home_base_2d(wc, options.alpha));
  } catch (const DataError& e) {
    j["ellipse"] = nullptr;
    j["ellipse_error"] = e.what();
  }
  if (wc.n > 0) {
    ordered_json ev;
    ev["warmth"] = real(emotional_variability(wc.x(), options.ev_formula));
    ev["competence"] = real(emotional_variability(wc.y(), options.ev_formula));
    ev["ev_2d"] = real(ev_2d(wc, options.ev_formula));
    j["ev"] = ev;
  } else {
    j["ev"] = nullptr;
  }
  return j;
}

std::string rolling_mode_name(RollingMode m) { return m == RollingMode::trailing ? "trailing" : "centered"; }

}  // namespace

std::string densities_csv(const DensityAccumulator& bins) {
  std::string out = "month,category,emotion_word_count,token_total,density\n";
  for (const auto& [month, acc] : bins.bins()) {
    if (acc.token_total == 0) continue;
    for (std::size_t c = 0; c < lexicon::kCategoryCount; ++c) {
      const BinDensity b{month, static_cast<Category>(c), acc.counts[c], acc.token_total};
      out += month.key() + "," + std::string(lexicon::to_string(b.category)) + "," +
             std::to_string(b.emotion_word_count) + "," + std::to_string(b.token_total) + "," + format_real(b.density()) +
             "\n";
    }
  }
  return out;
}

void write_analysis(const std::filesystem::path& dir, const AnalysisResult& result, const AnalysisOptions& options) {
  ensure_directory(dir);
  write_file_atomic(dir / kDensitiesFile, densities_csv(result.bins));

  std::string rolling = "month,category,density,rolling\n";
  for (std::size_t c = 0; c < lexicon::kCategoryCount; ++c) {
    const auto bins = result.bins.densities(static_cast<Category>(c));
    std::vector<double> series;
    for (const auto& b : bins) series.push_back(b.density());
    const auto rolled = rolling_mean(series, options.rolling_window, options.rolling_mode);
    for (std::size_t i = 0; i < bins.size(); ++i) {
      rolling += bins[i].bin.key() + "," + std::string(lexicon::to_string(bins[i].category)) + "," +
                 format_real(series[i]) + "," + format_real(rolled[i]) + "\n";
    }
  }
  write_file_atomic(dir / kRollingFile, rolling);

  std::string dims = "month,dimension,mean,rolling\n";
  for (std::size_t d = 0; d < lexicon::kTrackedDimensions; ++d) {
    const auto series = result.bins.dimension_series(static_cast<Dimension>(d), options.warmth_weighting);
    std::vector<double> values;
    for (const auto& [m, v] : series) values.push_back(v);
    const auto rolled = rolling_mean(values, options.rolling_window, options.rolling_mode);
    for (std::size_t i = 0; i < series.size(); ++i) {
      dims += series[i].first.key() + "," + std::string(lexicon::to_string(static_cast<Dimension>(d))) + "," +
              format_real(values[i]) + "," + format_real(rolled[i]) + "\n";
    }
  }
  write_file_atomic(dir / kDimensionsFile, dims);

  std::string era_report =
      "category,pre_mean,pre_sd,covid_mean,covid_sd,pct_change,p_value,significant_at_0.05,significant_at_0.001\n";
  std::string era_error;
  std::vector<BinDensity> all_bins;
  for (auto e : lexicon::kReportOrder) {
    const auto b = result.bins.densities(lexicon::category_of(e));
    all_bins.insert(all_bins.end(), b.begin(), b.end());
  }
  try {
    const auto comparisons = era_compare(all_bins, options.split);
    for (auto e : lexicon::kReportOrder) {
      for (const auto& cmp : comparisons) {
        if (cmp.category != lexicon::category_of(e)) continue;
        const auto test = stats::mann_whitney(cmp.before.values, cmp.after.values);
        std::string pct;
        if (cmp.before.mean != 0.0) pct = format_real(stats::percent_change(cmp.before.mean, cmp.after.mean));
        era_report += std::string(lexicon::to_string(e)) + "," + format_real(cmp.before.mean) + "," +
                      format_real(cmp.before.sd) + "," + format_real(cmp.after.mean) + "," + format_real(cmp.after.sd) +
                      "," + pct + "," + format_real(test.p_value) + "," + (test.p_value < 0.05 ? "true" : "false") +
                      "," + (test.p_value < 0.001 ? "true" : "false") + "\n";
      }
    }
  } catch (const DataError& e) {
    era_error = e.what();
    spdlog::warn("era comparison skipped: {}", era_error);
  }
  write_file_atomic(dir / kEraReportFile, era_report);

  ordered_json hb;
  hb["alpha"] = real(options.alpha);
  hb["split"] = format_date(options.split);
  hb["trajectory_window"] = options.trajectory_window;
  hb["ev_formula"] = options.ev_formula == EvFormula::sd ? "sd" : "printed-variance";
  hb["eras"] = ordered_json::array();
  for (const auto& era : result.eras) hb["eras"].push_back(era_json(era, options));
  write_file_atomic(dir / kHomeBaseFile, hb.dump(2) + "\n");

  ordered_json summary;
  summary["posts"] = result.posts;
  summary["tokens"] = result.tokens;
  summary["months"] = result.bins.bins().size();
  if (!result.bins.bins().empty()) {
    summary["first_month"] = result.bins.bins().begin()->first.key();
    summary["last_month"] = result.bins.bins().rbegin()->first.key();
  }
  summary["rolling_window"] = options.rolling_window;
  summary["rolling_mode"] = rolling_mode_name(options.rolling_mode);
  summary["warmth_weighting"] = options.warmth_weighting == WarmthWeighting::token ? "token" : "post";
  if (!era_error.empty()) summary["era_error"] = era_error;
  write_file_atomic(dir / kAnalysisSummaryFile, summary.dump(2) + "\n");
}

}  // namespace emodyn::dynamics
