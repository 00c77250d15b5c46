#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "emodyn/stance/classify.hpp"
#include "emodyn/stance/labels.hpp"

namespace emodyn::stance {

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double support = 0.0;
};

/// confusion[gold][predicted], indexed by `index(StanceLabel)`.
using Confusion = std::array<std::array<std::size_t, kLabelCount>, kLabelCount>;

struct ClassificationReport {
  std::array<ClassMetrics, kLabelCount> per_class{};
  double accuracy = 0.0;
  ClassMetrics macro_avg;     // unweighted mean over classes
  ClassMetrics weighted_avg;  // support-weighted mean
  std::size_t total = 0;
  Confusion confusion{};

  const ClassMetrics& operator[](StanceLabel l) const noexcept { return per_class[index(l)]; }
};

/// 2PR/(P+R); 0 when P+R = 0.
double f1(double precision, double recall) noexcept;

ClassificationReport report_from_confusion(const Confusion& confusion);

/// Requires identical post_id sets; a mismatch throws DataError listing the
/// ids missing on either side. Asserts weighted recall == accuracy.
ClassificationReport evaluate(std::span<const StanceRecord> predictions,
                              const std::map<std::string, StanceLabel>& gold);

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;  // sample SD; 0 for a single run
};

struct CellStats {
  MeanSd precision, recall, f1, support;
};

/// Mean ± SD of every cell across independent runs.
struct AggregateReport {
  std::size_t runs = 0;
  std::array<CellStats, kLabelCount> per_class{};
  MeanSd accuracy;
  CellStats macro_avg, weighted_avg;
};

AggregateReport aggregate(std::span<const ClassificationReport> reports);

std::string to_json(const ClassificationReport& report);
std::string to_json(const AggregateReport& report, std::span<const ClassificationReport> runs);

/// JSONL rows `{"post_id": ..., "label": ...}`; labels go through the
/// normalization table.
std::map<std::string, StanceLabel> load_gold(const std::filesystem::path& path);

}  // namespace emodyn::stance
