#include "emodyn/cli/app.hpp"

#include <iostream>
#include <map>
#include <set>

#include <CLI11.hpp>
#include <spdlog/sinks/ansicolor_sink.h>
#include <spdlog/spdlog.h>

#include "emodyn/cli/config.hpp"
#include "emodyn/cli/stages.hpp"
#include "emodyn/common/error.hpp"

namespace emodyn::cli {

namespace {

// Settings exposed as flags on each subcommand.
const std::map<std::string, std::set<std::string>> kCommandKeys = {
    {"ingest", {"input", "out", "workers", "filter.enabled", "filter.anchor", "filter.threshold", "filter.endpoint",
                "filter.batch_size", "filter.order"}},
    {"analyze", {"corpus", "lexicons", "out", "workers", "analysis.bin", "analysis.rolling", "analysis.rolling_mode",
                 "analysis.alpha", "analysis.split", "analysis.trajectory_window", "analysis.ev_formula",
                 "analysis.warmth_weighting", "lexicon.low_threshold"}},
    {"stance", {"corpus", "lexicons", "out", "analysis.split", "lexicon.low_threshold", "stance.per_month",
                "stance.seed", "stance.endpoint", "stance.model", "stance.mock", "stance.temperature", "stance.target",
                "stance.prompt", "stance.gold", "stance.runs", "stance.concurrency", "stance.sweep", "stance.top_k",
                "stance.treemap_weighting"}},
    {"report", {"from", "stance_dir", "out", "report.charts", "report.tables"}},
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::config: return kExitConfig;
    case ErrorKind::data: return kExitData;
    case ErrorKind::provider: return kExitProvider;
    case ErrorKind::internal: return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Emotion dynamics toolkit for timestamped post corpora", "emodyn"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string log_level = "info";
  app.add_option("--log-level", log_level, "trace, debug, info, warn, error or off")->capture_default_str();

  std::map<std::string, std::string> flag_values;
  std::string config_file;
  const auto describe = [](const Setting& s) {
    return s.default_value.empty() ? s.help : s.help + " (default: " + s.default_value + ")";
  };
  std::map<std::string, CLI::App*> commands;
  const std::map<std::string, std::string> about = {
      {"ingest", "Clean, deduplicate and filter raw posts into a canonical corpus"},
      {"analyze", "Score a corpus and compute densities, era statistics and home bases"},
      {"stance", "Sample posts per month, classify stance and evaluate against gold labels"},
      {"report", "Render charts and tables from analysis and stance outputs"},
      {"all", "Run ingest, analyze, stance and report, skipping completed stages"},
  };
  for (const auto& [name, text] : about) {
    CLI::App* sub = app.add_subcommand(name, text);
    sub->add_option("--config", config_file, "key = value configuration file");
    for (const auto& s : settings()) {
      if (s.flag.empty()) continue;
      const auto keys = kCommandKeys.find(name);
      if (name != "all" && !keys->second.contains(s.key)) continue;
      if (name == "all" && (s.key == "corpus" || s.key == "from" || s.key == "stance_dir")) continue;
      sub->add_option("--" + s.flag, flag_values[s.key], describe(s));
    }
    commands[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  auto logger = std::make_shared<spdlog::logger>("emodyn", std::make_shared<spdlog::sinks::ansicolor_stderr_sink_mt>());
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::from_str(log_level));

  try {
    Config config = Config::defaults();
    if (!config_file.empty()) config.load_file(config_file);
    config.apply_environment();
    for (const auto& [key, value] : flag_values) {
      if (!value.empty()) config.set(key, value);
    }
    const StageContext ctx{config.has("out") ? std::filesystem::path(config.get("out")) : std::filesystem::path(), {}};
    auto need_out = [&] {
      if (ctx.out.empty()) throw ConfigError("missing required path 'out' (--out)");
    };
    if (commands["ingest"]->parsed()) need_out(), run_ingest(config, ctx);
    else if (commands["analyze"]->parsed()) need_out(), run_analyze(config, ctx);
    else if (commands["stance"]->parsed()) need_out(), run_stance(config, ctx);
    else if (commands["report"]->parsed()) need_out(), run_report(config, ctx);
    else if (commands["all"]->parsed()) run_all(config);
    return kExitOk;
  } catch (const Error& e) {
    spdlog::error("{} error: {}", to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    spdlog::error("internal error: {}", e.what());
    return kExitInternal;
  }
}

}  // namespace emodyn::cli
