#pragma once

#include <array>
#include <filesystem>
#include <string>

#include "emodyn/common/time.hpp"
#include "emodyn/dynamics/density.hpp"
#include "emodyn/dynamics/home_base.hpp"
#include "emodyn/dynamics/moments.hpp"
#include "emodyn/dynamics/rolling.hpp"
#include "emodyn/dynamics/trajectory.hpp"
#include "emodyn/dynamics/variability.hpp"
#include "emodyn/lexicon/score.hpp"

namespace emodyn::dynamics {

struct AnalysisOptions {
  Timestamp split = Timestamp{1577836800};  // 2020-01-01
  double alpha = kDefaultAlpha;
  std::size_t rolling_window = 3;
  RollingMode rolling_mode = RollingMode::trailing;
  std::size_t trajectory_window = kDefaultTrajectoryWindow;
  EvFormula ev_formula = EvFormula::sd;
  WarmthWeighting warmth_weighting = WarmthWeighting::token;
  std::size_t workers = 1;
  std::size_t chunk_lines = 4096;
};

/// Streaming state of one era: trajectory moments over windowed word scores.
struct EraDynamics {
  std::string name;
  std::uint64_t words = 0;  // warmth-lexicon hits seen
  MomentAccumulator2D warmth_competence;
  MomentAccumulator2D trust_sociability;
};

struct AnalysisResult {
  DensityAccumulator bins;
  std::array<EraDynamics, 2> eras{EraDynamics{"pre", 0, {}, {}}, EraDynamics{"covid", 0, {}, {}}};
  std::uint64_t posts = 0;
  std::uint64_t tokens = 0;
};

/// Scores a canonical corpus in one streaming pass. Chunks are scored in
/// parallel and merged in file order: densities by exact integer merge,
/// trajectories sequentially, so output is independent of `workers`. Memory
/// is bounded by the lexicons, per-month accumulators and in-flight chunks.
AnalysisResult analyze_corpus(const std::filesystem::path& corpus_jsonl, const lexicon::Scorer& scorer,
                              const AnalysisOptions& options);

/// Writes monthly_densities.csv, monthly_rolling.csv, monthly_dimensions.csv,
/// era_report.csv, home_base.json and analysis_summary.json into `dir`.
void write_analysis(const std::filesystem::path& dir, const AnalysisResult& result, const AnalysisOptions& options);

inline constexpr const char* kDensitiesFile = "monthly_densities.csv";
inline constexpr const char* kRollingFile = "monthly_rolling.csv";
inline constexpr const char* kDimensionsFile = "monthly_dimensions.csv";
inline constexpr const char* kEraReportFile = "era_report.csv";
inline constexpr const char* kHomeBaseFile = "home_base.json";
inline constexpr const char* kAnalysisSummaryFile = "analysis_summary.json";

std::string densities_csv(const DensityAccumulator& bins);

}  // namespace emodyn::dynamics
