#include "emodyn/stance/evaluate.hpp"

#include <cmath>
#include <set>

#include <json.hpp>

#include "emodyn/common/error.hpp"
#include "emodyn/common/format.hpp"
#include "emodyn/common/io.hpp"

namespace emodyn::stance {

using nlohmann::json;
using nlohmann::ordered_json;

double f1(double precision, double recall) noexcept {
  const double s = precision + recall;
  return s == 0.0 ? 0.0 : 2.0 * precision * recall / s;
}

ClassificationReport report_from_confusion(const Confusion& confusion) {
  ClassificationReport r;
  r.confusion = confusion;
  std::size_t correct = 0;
  for (std::size_t g = 0; g < kLabelCount; ++g) {
    for (std::size_t p = 0; p < kLabelCount; ++p) r.total += confusion[g][p];
    correct += confusion[g][g];
  }
  if (r.total == 0) throw DataError("cannot evaluate an empty prediction set");
  r.accuracy = static_cast<double>(correct) / static_cast<double>(r.total);

  for (std::size_t c = 0; c < kLabelCount; ++c) {
    std::size_t predicted = 0;
    std::size_t actual = 0;
    for (std::size_t k = 0; k < kLabelCount; ++k) {
      predicted += confusion[k][c];
      actual += confusion[c][k];
    }
    const double tp = static_cast<double>(confusion[c][c]);
    ClassMetrics& m = r.per_class[c];
    m.precision = predicted == 0 ? 0.0 : tp / static_cast<double>(predicted);
    m.recall = actual == 0 ? 0.0 : tp / static_cast<double>(actual);
    m.f1 = f1(m.precision, m.recall);
    m.support = static_cast<double>(actual);
  }

  const double n = static_cast<double>(r.total);
  for (const auto& m : r.per_class) {
    r.macro_avg.precision += m.precision / kLabelCount;
    r.macro_avg.recall += m.recall / kLabelCount;
    r.macro_avg.f1 += m.f1 / kLabelCount;
    r.weighted_avg.precision += m.precision * m.support / n;
    r.weighted_avg.recall += m.recall * m.support / n;
    r.weighted_avg.f1 += m.f1 * m.support / n;
  }
  r.macro_avg.support = n;
  r.weighted_avg.support = n;

  if (std::abs(r.weighted_avg.recall - r.accuracy) > 1e-12) {
    throw Error(ErrorKind::internal, "weighted recall differs from accuracy");
  }
  return r;
}

ClassificationReport evaluate(std::span<const StanceRecord> predictions,
                              const std::map<std::string, StanceLabel>& gold) {
  std::map<std::string, StanceLabel> predicted;
  for (const auto& r : predictions) {
    if (!predicted.emplace(r.post_id, r.label).second) {
      throw DataError("duplicate prediction for post '" + r.post_id + "'");
    }
  }
  std::vector<std::string> missing_gold;
  std::vector<std::string> missing_pred;
  for (const auto& [id, label] : predicted) {
    if (!gold.contains(id)) missing_gold.push_back(id);
  }
  for (const auto& [id, label] : gold) {
    if (!predicted.contains(id)) missing_pred.push_back(id);
  }
  if (!missing_gold.empty() || !missing_pred.empty()) {
    auto list = [](const std::vector<std::string>& ids) {
      std::string out;
      for (std::size_t i = 0; i < ids.size() && i < 20; ++i) out += (i ? ", " : "") + ids[i];
      if (ids.size() > 20) out += ", ... (" + std::to_string(ids.size()) + " total)";
      return out.empty() ? std::string("none") : out;
    };
    throw DataError("prediction and gold id sets differ; without gold: [" + list(missing_gold) +
                    "]; without prediction: [" + list(missing_pred) + "]");
  }
  Confusion confusion{};
  for (const auto& [id, label] : gold) ++confusion[index(label)][index(predicted.at(id))];
  return report_from_confusion(confusion);
}

namespace {

MeanSd mean_sd(const std::vector<double>& xs) {
  MeanSd out;
  for (double x : xs) out.mean += x;
  out.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return out;
}

CellStats cell_stats(std::span<const ClassificationReport> reports, const ClassMetrics& (*pick)(const ClassificationReport&, std::size_t),
                     std::size_t c) {
  std::vector<double> p, r, f, s;
  for (const auto& rep : reports) {
    const ClassMetrics& m = pick(rep, c);
    p.push_back(m.precision);
    r.push_back(m.recall);
    f.push_back(m.f1);
    s.push_back(m.support);
  }
  return {mean_sd(p), mean_sd(r), mean_sd(f), mean_sd(s)};
}

ordered_json real(double v) { return ordered_json::parse(format_real(v)); }

ordered_json metrics_json(const ClassMetrics& m) {
  ordered_json j;
  j["precision"] = real(m.precision);
  j["recall"] = real(m.recall);
  j["f1"] = real(m.f1);
  j["support"] = real(m.support);
  return j;
}

ordered_json meansd_json(const MeanSd& m) {
  ordered_json j;
  j["mean"] = real(m.mean);
  j["sd"] = real(m.sd);
  return j;
}

ordered_json cell_json(const CellStats& c) {
  ordered_json j;
  j["precision"] = meansd_json(c.precision);
  j["recall"] = meansd_json(c.recall);
  j["f1"] = meansd_json(c.f1);
  j["support"] = meansd_json(c.support);
  return j;
}

ordered_json report_json(const ClassificationReport& r) {
  ordered_json j;
  for (auto l : kAllLabels) j[std::string(to_string(l))] = metrics_json(r[l]);
  j["accuracy"] = real(r.accuracy);
  j["macro_avg"] = metrics_json(r.macro_avg);
  j["weighted_avg"] = metrics_json(r.weighted_avg);
  j["total"] = r.total;
  ordered_json conf;
  for (auto g : kAllLabels) {
    ordered_json row;
    for (auto p : kAllLabels) row[std::string(to_string(p))] = r.confusion[index(g)][index(p)];
    conf[std::string(to_string(g))] = row;
  }
  j["confusion"] = conf;
  return j;
}

}  // namespace

AggregateReport aggregate(std::span<const ClassificationReport> reports) {
  if (reports.empty()) throw ParameterError("no reports to aggregate");
  AggregateReport out;
  out.runs = reports.size();
  auto per_class = [](const ClassificationReport& r, std::size_t c) -> const ClassMetrics& { return r.per_class[c]; };
  auto macro = [](const ClassificationReport& r, std::size_t) -> const ClassMetrics& { return r.macro_avg; };
  auto weighted = [](const ClassificationReport& r, std::size_t) -> const ClassMetrics& { return r.weighted_avg; };
  for (std::size_t c = 0; c < kLabelCount; ++c) out.per_class[c] = cell_stats(reports, per_class, c);
  out.macro_avg = cell_stats(reports, macro, 0);
  out.weighted_avg = cell_stats(reports, weighted, 0);
  std::vector<double> acc;
  for (const auto& r : reports) acc.push_back(r.accuracy);
  out.accuracy = mean_sd(acc);
  return out;
}

std::string to_json(const ClassificationReport& report) { return report_json(report).dump(2) + "\n"; }

std::string to_json(const AggregateReport& report, std::span<const ClassificationReport> runs) {
  ordered_json j;
  j["runs"] = report.runs;
  ordered_json mean;
  for (auto l : kAllLabels) mean[std::string(to_string(l))] = cell_json(report.per_class[index(l)]);
  mean["accuracy"] = meansd_json(report.accuracy);
  mean["macro_avg"] = cell_json(report.macro_avg);
  mean["weighted_avg"] = cell_json(report.weighted_avg);
  j["aggregate"] = mean;
  j["per_run"] = ordered_json::array();
  for (const auto& r : runs) j["per_run"].push_back(report_json(r));
  return j.dump(2) + "\n";
}

std::map<std::string, StanceLabel> load_gold(const std::filesystem::path& path) {
  std::map<std::string, StanceLabel> gold;
  for_each_line(path, [&](std::size_t line_no, std::string_view line) {
    if (line.find_first_not_of(" \t") == std::string_view::npos) return;
    const std::string where = path.string() + ":" + std::to_string(line_no) + ": ";
    try {
      const json j = json::parse(line);
      const auto id = j.at("post_id").get<std::string>();
      if (!gold.emplace(id, parse_label(j.at("label").get<std::string>())).second) {
        throw DataError("duplicate gold label for post '" + id + "'");
      }
    } catch (const json::exception& e) {
      throw DataError(where + e.what());
    } catch (const DataError& e) {
      throw DataError(where + e.what());
    }
  });
  if (gold.empty()) throw DataError("gold file " + path.string() + " has no labels");
  return gold;
}

}  // namespace emodyn::stance
