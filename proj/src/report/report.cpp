#include "emodyn/report/report.hpp"

#include <map>
#include <set>

#include <json.hpp>
#include <spdlog/spdlog.h>

#include "emodyn/common/error.hpp"
#include "emodyn/common/io.hpp"
#include "emodyn/dynamics/analyzer.hpp"
#include "emodyn/lexicon/categories.hpp"
#include "emodyn/report/charts.hpp"
#include "emodyn/report/treemap.hpp"

namespace emodyn::report {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    out.emplace_back(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

double to_double(const std::string& s, const fs::path& file) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw DataError(file.string() + ": expected a number, got '" + s + "'");
}

// Long-format CSV (month, key, value, [rolling]) to a chart.
TimeseriesChart long_chart(const std::vector<std::vector<std::string>>& rows, const std::vector<std::string>& keys,
                           std::size_t value_col, std::optional<std::size_t> rolled_col, const std::string& title,
                           const fs::path& file) {
  std::set<std::string> months;
  std::map<std::string, std::map<std::string, std::pair<double, double>>> values;  // key -> month -> (raw, rolled)
  for (const auto& r : rows) {
    if (std::find(keys.begin(), keys.end(), r[1]) == keys.end()) continue;
    months.insert(r[0]);
    values[r[1]][r[0]] = {to_double(r[value_col], file), rolled_col ? to_double(r[*rolled_col], file) : 0.0};
  }
  TimeseriesChart chart;
  chart.title = title;
  chart.x_labels.assign(months.begin(), months.end());
  for (const auto& key : keys) {
    const auto it = values.find(key);
    if (it == values.end()) continue;
    Series s{key, {}, {}};
    for (const auto& m : chart.x_labels) {
      const auto v = it->second.find(m);
      if (v == it->second.end()) throw DataError(file.string() + ": " + key + " has no value for " + m);
      s.raw.push_back(v->second.first);
      if (rolled_col) s.rolled.push_back(v->second.second);
    }
    chart.series.push_back(std::move(s));
  }
  return chart;
}

std::string filter_csv(const std::string& header, const std::vector<std::vector<std::string>>& rows,
                       const std::vector<std::string>& keys) {
  std::string out = header + "\n";
  for (const auto& r : rows) {
    if (std::find(keys.begin(), keys.end(), r[1]) == keys.end()) continue;
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + r[i];
    out += "\n";
  }
  return out;
}

void require(const fs::path& file) {
  if (!fs::exists(file)) throw DataError("missing input artifact " + file.string());
}

}  // namespace

std::vector<std::vector<std::string>> read_csv(const fs::path& path, const std::vector<std::string>& expected_header) {
  std::vector<std::vector<std::string>> rows;
  for_each_line(path, [&](std::size_t line_no, std::string_view line) {
    if (line.empty()) return;
    auto fields = split(line);
    if (line_no == 1) {
      if (fields != expected_header) throw DataError(path.string() + ": unexpected header '" + std::string(line) + "'");
      return;
    }
    if (fields.size() != expected_header.size()) {
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": expected " +
                      std::to_string(expected_header.size()) + " fields");
    }
    rows.push_back(std::move(fields));
  });
  return rows;
}

std::vector<std::string> build_report(const fs::path& analysis_dir, const fs::path& stance_dir, const fs::path& out,
                                      const ReportOptions& options) {
  ensure_directory(out);
  std::vector<std::string> written;
  auto emit = [&](const std::string& name, const std::string& content) {
    write_file_atomic(out / name, content);
    written.push_back(name);
  };
  auto copy = [&](const fs::path& from, const std::string& name) { emit(name, read_file(from)); };

  const fs::path era_report = analysis_dir / dynamics::kEraReportFile;
  const fs::path rolling = analysis_dir / dynamics::kRollingFile;
  const fs::path dims = analysis_dir / dynamics::kDimensionsFile;
  const fs::path home_base = analysis_dir / dynamics::kHomeBaseFile;
  for (const auto& f : {era_report, rolling, dims, home_base}) require(f);
  const bool have_stance = !stance_dir.empty();
  if (have_stance && !fs::is_directory(stance_dir)) throw DataError("missing stance directory " + stance_dir.string());

  if (options.tables) {
    copy(era_report, "table1_era_report.csv");
    if (have_stance) {
      if (fs::exists(stance_dir / "classification_report.json")) {
        copy(stance_dir / "classification_report.json", "table2_classification_report.json");
      }
      if (fs::exists(stance_dir / "low_score_density.csv")) {
        copy(stance_dir / "low_score_density.csv", "table3_low_score_density.csv");
      }
    }
  }
  if (!options.charts) return written;

  const std::string rolling_header = "month,category,density,rolling";
  const auto rolling_rows = read_csv(rolling, split(rolling_header));
  const std::vector<std::string> sentiment = {"negative", "positive"};
  std::vector<std::string> emotions;
  for (auto e : lexicon::kReportOrder) {
    const std::string name(lexicon::to_string(e));
    if (name != "negative" && name != "positive") emotions.push_back(name);
  }
  if (!rolling_rows.empty()) {
    emit("fig3_sentiment.csv", filter_csv(rolling_header, rolling_rows, sentiment));
    emit("fig3_sentiment.svg",
         render_timeseries(long_chart(rolling_rows, sentiment, 2, 3, "Sentiment word density by month", rolling)));
    emit("fig3_emotions.csv", filter_csv(rolling_header, rolling_rows, emotions));
    emit("fig3_emotions.svg",
         render_timeseries(long_chart(rolling_rows, emotions, 2, 3, "Emotion word density by month", rolling)));
  }

  const std::string dims_header = "month,dimension,mean,rolling";
  const auto dim_rows = read_csv(dims, split(dims_header));
  if (!dim_rows.empty()) {
    const std::vector<std::string> names = {"warmth", "trust", "sociability", "competence"};
    emit("fig6_dimensions.csv", filter_csv(dims_header, dim_rows, names));
    emit("fig6_dimensions.svg",
         render_timeseries(long_chart(dim_rows, names, 2, 3, "Mean warmth, trust, sociability and competence", dims)));
  }

  const json hb = json::parse(read_file(home_base));
  std::vector<EllipseSeries> ellipses;
  for (const auto& era : hb.at("eras")) {
    const auto& e = era.at("ellipse");
    if (e.is_null()) {
      spdlog::warn("era {} has no home-base ellipse", era.at("name").get<std::string>());
      continue;
    }
    dynamics::HomeBase2D h;
    h.mean_w = e.at("mean_w").get<double>();
    h.mean_c = e.at("mean_c").get<double>();
    h.lambda1 = e.at("lambda1").get<double>();
    h.lambda2 = e.at("lambda2").get<double>();
    h.angle = e.at("angle").get<double>();
    h.psi = e.at("psi").get<double>();
    h.alpha = e.at("alpha").get<double>();
    h.n = e.at("n").get<std::size_t>();
    ellipses.push_back({era.at("name").get<std::string>(), h});
  }
  if (!ellipses.empty()) {
    copy(home_base, "fig5_home_base.json");
    emit("fig5_home_base.svg", render_ellipses(ellipses, "Warmth-competence home base by era"));
  }

  if (have_stance) {
    const fs::path proportions = stance_dir / "monthly_stance_proportions.csv";
    if (fs::exists(proportions)) {
      const auto rows = read_csv(proportions, split("month,n_sampled,favor_frac,against_frac,neutral_frac"));
      TimeseriesChart chart;
      chart.title = "Stance share of sampled posts by month";
      std::array<Series, 3> series{Series{"favor", {}, {}}, Series{"against", {}, {}}, Series{"neutral", {}, {}}};
      for (const auto& r : rows) {
        if (r[2].empty()) continue;  // month without labeled posts
        chart.x_labels.push_back(r[0]);
        for (std::size_t k = 0; k < 3; ++k) series[k].raw.push_back(to_double(r[2 + k], proportions));
      }
      if (!chart.x_labels.empty()) {
        chart.series.assign(series.begin(), series.end());
        copy(proportions, "fig7_stance.csv");
        emit("fig7_stance.svg", render_timeseries(chart));
      }
    }
    for (auto l : {stance::StanceLabel::favor, stance::StanceLabel::against}) {
      for (auto d : {lexicon::Dimension::warmth, lexicon::Dimension::competence}) {
        const std::string stem = treemap_stem(l, d);
        const fs::path data = stance_dir / (stem + ".json");
        if (!fs::exists(data)) continue;
        const std::string text = read_file(data);
        emit(stem + ".json", text);
        emit(stem + ".svg", render_treemap(parse_treemap(text)));
      }
    }
  }
  return written;
}

}  // namespace emodyn::report
