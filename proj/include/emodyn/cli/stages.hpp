#pragma once

#include <filesystem>
#include <string>

#include "emodyn/cli/config.hpp"
#include "emodyn/lexicon/score.hpp"

namespace emodyn::cli {

/// Where a stage runs. Inside `all`, `root` is the run directory and inputs
/// under it are recorded relative to the stage directory in config.frozen.
struct StageContext {
  std::filesystem::path out;
  std::filesystem::path root;
};

/// Each stage writes its artifacts, `config.frozen` and `manifest.json` into
/// `ctx.out`. `upstream` is mixed into the manifest fingerprint so a changed
/// input invalidates a completed stage.
void run_ingest(const Config& config, const StageContext& ctx, const std::string& upstream = {});
void run_analyze(const Config& config, const StageContext& ctx, const std::string& upstream = {});
void run_stance(const Config& config, const StageContext& ctx, const std::string& upstream = {});
void run_report(const Config& config, const StageContext& ctx, const std::string& upstream = {});

/// Runs ingest, analyze, stance and report under `<out>/{corpus,analysis,
/// stance,report}`, skipping stages whose manifest matches the current
/// configuration, then writes a manifest over the whole tree.
void run_all(const Config& config);

/// Loads emotion.tsv, warmth.csv and optional exclusions.txt from `dir`.
lexicon::Scorer load_scorer(const std::filesystem::path& dir, double low_threshold);

}  // namespace emodyn::cli
