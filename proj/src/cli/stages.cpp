#include "emodyn/cli/stages.hpp"

#include <cstdlib>
#include <set>

#include <spdlog/spdlog.h>

#include "emodyn/common/error.hpp"
#include "emodyn/common/format.hpp"
#include "emodyn/common/hash.hpp"
#include "emodyn/common/io.hpp"
#include "emodyn/corpus/ingest.hpp"
#include "emodyn/dynamics/analyzer.hpp"
#include "emodyn/report/low_scores.hpp"
#include "emodyn/report/manifest.hpp"
#include "emodyn/report/report.hpp"
#include "emodyn/report/treemap.hpp"
#include "emodyn/stance/evaluate.hpp"
#include "emodyn/stance/proportions.hpp"
#include "emodyn/stance/sample.hpp"

namespace emodyn::cli {

namespace fs = std::filesystem;

namespace {

const std::vector<std::string> kIngestKeys = {"input", "workers", "filter.enabled", "filter.anchor",
                                              "filter.threshold", "filter.endpoint", "filter.batch_size",
                                              "filter.order"};
const std::vector<std::string> kAnalyzeKeys = {"corpus", "lexicons", "workers", "analysis.bin", "analysis.rolling",
                                               "analysis.rolling_mode", "analysis.alpha", "analysis.split",
                                               "analysis.trajectory_window", "analysis.ev_formula",
                                               "analysis.warmth_weighting", "lexicon.low_threshold"};
const std::vector<std::string> kStanceKeys = {
    "corpus",        "lexicons",        "analysis.split", "lexicon.low_threshold", "stance.per_month",
    "stance.seed",   "stance.endpoint", "stance.model",   "stance.mock",           "stance.temperature",
    "stance.target", "stance.prompt",   "stance.gold",    "stance.runs",           "stance.concurrency",
    "stance.sweep",  "stance.top_k",    "stance.treemap_weighting"};
const std::vector<std::string> kReportKeys = {"from", "stance_dir", "report.charts", "report.tables"};

// Records `key` relative to the stage directory when it points inside the run root.
Config portable(const Config& config, const StageContext& ctx, const std::vector<std::string>& path_keys) {
  Config c = config;
  if (ctx.root.empty()) return c;
  const fs::path root = fs::weakly_canonical(ctx.root);
  const fs::path out = fs::weakly_canonical(ctx.out);
  for (const auto& key : path_keys) {
    if (!c.has(key)) continue;
    const fs::path p = fs::weakly_canonical(c.get(key));
    const auto rel_root = p.lexically_relative(root);
    if (!rel_root.empty() && *rel_root.begin() != "..") c.set(key, p.lexically_relative(out).generic_string());
  }
  return c;
}

std::string begin_stage(const Config& config, const StageContext& ctx, const std::vector<std::string>& keys,
                        const std::vector<std::string>& path_keys, const std::string& upstream) {
  ensure_directory(ctx.out);
  const std::string frozen = portable(config, ctx, path_keys).frozen(keys);
  write_file_atomic(ctx.out / report::kFrozenConfigFile, frozen);
  return sha256_hex(frozen + upstream);
}

void end_stage(const StageContext& ctx, const std::string& stage, const std::string& fingerprint) {
  report::write_manifest(ctx.out, stage, fingerprint);
  spdlog::info("{} complete: {}", stage, ctx.out.string());
}

std::string join_lines(const auto& items) {
  std::string out;
  for (const auto& item : items) out += stance::to_jsonl(item) + "\n";
  return out;
}

dynamics::AnalysisOptions analysis_options(const Config& c) {
  if (c.get("analysis.bin") != "month") {
    throw ConfigError("analysis.bin = " + c.get("analysis.bin") + " is not supported (only month)");
  }
  dynamics::AnalysisOptions o;
  o.split = c.date("analysis.split");
  o.alpha = c.real("analysis.alpha", 0.0, 1.0, true, true);
  o.rolling_window = c.count("analysis.rolling", 1);
  const std::string& mode = c.get("analysis.rolling_mode");
  if (mode == "trailing") o.rolling_mode = dynamics::RollingMode::trailing;
  else if (mode == "centered") o.rolling_mode = dynamics::RollingMode::centered;
  else throw ConfigError("analysis.rolling_mode must be trailing or centered");
  o.trajectory_window = c.count("analysis.trajectory_window", 1);
  o.ev_formula = dynamics::parse_ev_formula(c.get("analysis.ev_formula"));
  const std::string& w = c.get("analysis.warmth_weighting");
  if (w == "token") o.warmth_weighting = dynamics::WarmthWeighting::token;
  else if (w == "post") o.warmth_weighting = dynamics::WarmthWeighting::post;
  else throw ConfigError("analysis.warmth_weighting must be token or post");
  o.workers = c.count("workers", 1);
  return o;
}

fs::path existing_corpus(const Config& c) {
  const fs::path file = corpus::corpus_file(c.path("corpus"));
  if (!fs::exists(file)) throw ConfigError("corpus not found: " + file.string());
  return file;
}

std::unique_ptr<stance::LlmClient> make_client(const Config& c) {
  if (c.has("stance.endpoint")) {
    stance::HttpLlmConfig http;
    http.url = c.get("stance.endpoint");
    http.model = c.get("stance.model");
    if (const char* key = std::getenv(stance::kApiKeyEnv)) http.api_key = key;
    return std::make_unique<stance::HttpLlmClient>(http);
  }
  stance::MockOptions mock;
  mock.mode = stance::parse_mock_mode(c.get("stance.mock"));
  mock.seed = c.seed("stance.seed");
  return std::make_unique<stance::MockLlmClient>(mock);
}

struct GoldRun {
  std::vector<stance::ClassificationReport> reports;
  std::vector<stance::StanceRecord> records;
  std::size_t failures = 0;
};

// Classifies the gold posts `runs` times. Posts the model could not label are
// excluded from that run's evaluation and counted.
GoldRun evaluate_gold(const std::vector<corpus::PostRecord>& posts, const std::map<std::string, stance::StanceLabel>& gold,
                      stance::LlmClient& client, const std::string& prompt, stance::ClassifyOptions options,
                      std::size_t runs, const std::string& run_prefix) {
  GoldRun out;
  for (std::size_t r = 1; r <= runs; ++r) {
    options.run_id = run_prefix + "-r" + std::to_string(r);
    auto result = stance::classify(posts, client, prompt, options);
    std::map<std::string, stance::StanceLabel> labeled_gold;
    for (const auto& rec : result.records) labeled_gold.emplace(rec.post_id, gold.at(rec.post_id));
    out.failures += result.failures.size();
    out.reports.push_back(stance::evaluate(result.records, labeled_gold));
    out.records.insert(out.records.end(), result.records.begin(), result.records.end());
  }
  return out;
}

}  // namespace

lexicon::Scorer load_scorer(const fs::path& dir, double low_threshold) {
  if (!fs::is_directory(dir)) throw ConfigError("lexicon directory not found: " + dir.string());
  auto exclusions = lexicon::ExclusionList::defaults();
  if (fs::exists(dir / "exclusions.txt")) exclusions.merge(lexicon::ExclusionList::load(dir / "exclusions.txt"));
  const auto emotions = lexicon::load_emotion_lexicon(dir / "emotion.tsv", exclusions);
  const auto warmth = lexicon::load_warmth_lexicon(dir / "warmth.csv", exclusions);
  for (const auto& w : emotions.warnings()) spdlog::warn("{}", w);
  for (const auto& w : warmth.warnings()) spdlog::warn("{}", w);
  spdlog::info("lexicons: {} emotion words, {} warmth words", emotions.size(), warmth.size());
  lexicon::ScoringOptions options;
  options.low_threshold = low_threshold;
  return lexicon::Scorer(emotions, warmth, options);
}

void run_ingest(const Config& c, const StageContext& ctx, const std::string& upstream) {
  const fs::path input = c.path("input");
  if (!fs::exists(input)) throw ConfigError("input not found: " + input.string());
  corpus::IngestOptions options;
  options.workers = c.count("workers", 1);
  options.filter_enabled = c.flag("filter.enabled");
  options.filter.anchor = c.get("filter.anchor");
  options.filter.threshold = c.real("filter.threshold", 0.0, 1.0, true, false);
  options.filter.batch_size = c.count("filter.batch_size", 1);
  const std::string& order = c.get("filter.order");
  if (order == "dedup-first") options.order = corpus::StageOrder::dedup_then_filter;
  else if (order == "filter-first") options.order = corpus::StageOrder::filter_then_dedup;
  else throw ConfigError("filter.order: expected dedup-first or filter-first, got '" + order + "'");
  const std::string fp = begin_stage(c, ctx, kIngestKeys, {"input"}, upstream);

  std::unique_ptr<corpus::EmbeddingProvider> provider;
  if (c.has("filter.endpoint")) provider = std::make_unique<corpus::HttpEmbeddingProvider>(c.get("filter.endpoint"));
  else provider = std::make_unique<corpus::HashingEmbeddingProvider>();
  corpus::ingest(input, ctx.out, options, provider.get());
  end_stage(ctx, "ingest", fp);
}

void run_analyze(const Config& c, const StageContext& ctx, const std::string& upstream) {
  const fs::path corpus_path = existing_corpus(c);
  const auto options = analysis_options(c);
  const auto scorer = load_scorer(c.path("lexicons"), c.real("lexicon.low_threshold", 0.0, 1.0, true, true));
  const std::string fp = begin_stage(c, ctx, kAnalyzeKeys, {"corpus", "lexicons"}, upstream);
  const auto result = dynamics::analyze_corpus(corpus_path, scorer, options);
  dynamics::write_analysis(ctx.out, result, options);
  end_stage(ctx, "analyze", fp);
}

void run_stance(const Config& c, const StageContext& ctx, const std::string& upstream) {
  const fs::path corpus_path = existing_corpus(c);
  const std::size_t per_month = c.count("stance.per_month", 1);
  const std::uint64_t seed = c.seed("stance.seed");
  const std::size_t runs = c.count("stance.runs", 1);
  const std::size_t top_k = c.count("stance.top_k", 1);
  const auto weighting = report::parse_treemap_weighting(c.get("stance.treemap_weighting"));
  const Timestamp split = c.date("analysis.split");
  stance::ClassifyOptions options;
  options.temperature = c.real("stance.temperature", 0.0, 2.0);
  options.target = c.get("stance.target");
  options.concurrency = c.count("stance.concurrency", 1);
  options.checkpoint_dir = ctx.out;
  const std::string prompt = c.has("stance.prompt") ? read_file(c.get("stance.prompt")) : stance::default_prompt_template();
  if (prompt.find("{text}") == std::string::npos) throw ConfigError("prompt template has no {text} slot");
  auto client = make_client(c);
  const std::string fp = begin_stage(c, ctx, kStanceKeys, {"corpus", "lexicons", "stance.prompt", "stance.gold"}, upstream);

  const auto sample = stance::sample_monthly(corpus_path, per_month, seed);
  options.run_id = "sample";
  const auto result = stance::classify(sample, *client, prompt, options);
  write_file_atomic(ctx.out / "stance_records.jsonl", join_lines(result.records));
  write_file_atomic(ctx.out / "parse_failures.jsonl", join_lines(result.failures));
  const auto months = stance::monthly_proportions(sample, result.records);
  write_file_atomic(ctx.out / "monthly_stance_proportions.csv", stance::proportions_csv(months));
  spdlog::info("stance: {} sampled, {} labeled, {} parse failures", sample.size(), result.records.size(),
               result.failures.size());

  if (c.has("stance.gold")) {
    const auto gold = stance::load_gold(c.get("stance.gold"));
    std::vector<corpus::PostRecord> gold_posts;
    for_each_line(corpus_path, [&](std::size_t, std::string_view line) {
      if (line.empty()) return;
      auto post = corpus::parse_post_record(line);
      if (gold.contains(post.id)) gold_posts.push_back(std::move(post));
    });
    if (gold_posts.size() != gold.size()) {
      std::set<std::string> found;
      for (const auto& p : gold_posts) found.insert(p.id);
      std::string missing;
      for (const auto& [id, l] : gold) {
        if (!found.contains(id)) missing += (missing.empty() ? "" : ", ") + id;
      }
      throw DataError("gold posts missing from the corpus: " + missing);
    }
    auto eval = evaluate_gold(gold_posts, gold, *client, prompt, options, runs, "gold");
    const auto agg = stance::aggregate(eval.reports);
    write_file_atomic(ctx.out / "classification_report.json", stance::to_json(agg, eval.reports));
    write_file_atomic(ctx.out / "gold_records.jsonl", join_lines(eval.records));
    if (eval.failures > 0) spdlog::warn("{} gold posts could not be labeled and were left out", eval.failures);

    if (c.flag("stance.sweep")) {
      std::string csv =
          "temperature,runs,accuracy_mean,accuracy_sd,macro_f1_mean,macro_f1_sd,weighted_f1_mean,weighted_f1_sd\n";
      for (double t : {0.0, 0.4, 0.7, 1.0}) {
        auto sweep_options = options;
        sweep_options.temperature = t;
        const auto sweep = evaluate_gold(gold_posts, gold, *client, prompt, sweep_options, runs,
                                         "sweep-t" + format_real(t));
        const auto a = stance::aggregate(sweep.reports);
        csv += format_real(t) + "," + std::to_string(runs) + "," + format_real(a.accuracy.mean) + "," +
               format_real(a.accuracy.sd) + "," + format_real(a.macro_avg.f1.mean) + "," +
               format_real(a.macro_avg.f1.sd) + "," + format_real(a.weighted_avg.f1.mean) + "," +
               format_real(a.weighted_avg.f1.sd) + "\n";
      }
      write_file_atomic(ctx.out / "temperature_sweep.csv", csv);
    }
  }

  if (c.has("lexicons")) {
    const auto scorer = load_scorer(c.get("lexicons"), c.real("lexicon.low_threshold", 0.0, 1.0, true, true));
    const auto rows = report::low_score_density(sample, result.records, scorer, split);
    write_file_atomic(ctx.out / "low_score_density.csv", report::low_score_csv(rows));
    std::map<std::string, stance::StanceLabel> label_of;
    for (const auto& r : result.records) label_of.emplace(r.post_id, r.label);
    for (auto l : {stance::StanceLabel::favor, stance::StanceLabel::against}) {
      std::vector<corpus::PostRecord> subset;
      for (const auto& p : sample) {
        const auto it = label_of.find(p.id);
        if (it != label_of.end() && it->second == l) subset.push_back(p);
      }
      for (auto d : {lexicon::Dimension::warmth, lexicon::Dimension::competence}) {
        const auto spec = report::top_k_low_words(subset, scorer, l, d, top_k, weighting);
        write_file_atomic(ctx.out / (report::treemap_stem(l, d) + ".json"), report::to_json(spec));
      }
    }
  }
  end_stage(ctx, "stance", fp);
}

void run_report(const Config& c, const StageContext& ctx, const std::string& upstream) {
  const fs::path from = c.path("from");
  if (!fs::is_directory(from)) throw ConfigError("analysis directory not found: " + from.string());
  report::ReportOptions options;
  const std::string& charts = c.get("report.charts");
  const std::string& tables = c.get("report.tables");
  if (charts != "svg" && charts != "none") throw ConfigError("report.charts must be svg or none");
  if (tables != "csv" && tables != "none") throw ConfigError("report.tables must be csv or none");
  options.charts = charts == "svg";
  options.tables = tables == "csv";
  const std::string fp = begin_stage(c, ctx, kReportKeys, {"from", "stance_dir"}, upstream);
  const fs::path stance_dir = c.has("stance_dir") ? fs::path(c.get("stance_dir")) : fs::path();
  report::build_report(from, stance_dir, ctx.out, options);
  end_stage(ctx, "report", fp);
}

void run_all(const Config& config) {
  const fs::path root = config.path("out");
  ensure_directory(root);
  Config c = config;
  const fs::path corpus_dir = root / "corpus";
  const fs::path analysis_dir = root / "analysis";
  const fs::path stance_dir = root / "stance";
  const fs::path report_dir = root / "report";
  c.set("corpus", corpus_dir.string());
  c.set("from", analysis_dir.string());
  c.set("stance_dir", stance_dir.string());

  std::vector<std::string> all_keys;
  for (const auto& s : settings()) all_keys.push_back(s.key);
  write_file_atomic(root / report::kFrozenConfigFile,
                    portable(c, StageContext{root, root}, {"out", "corpus", "from", "stance_dir"}).frozen(all_keys));

  std::string upstream;
  auto stage = [&](const char* name, const fs::path& dir, const std::vector<std::string>& keys,
                   const std::vector<std::string>& path_keys, auto run) {
    const StageContext ctx{dir, root};
    const std::string fp = sha256_hex(portable(c, ctx, path_keys).frozen(keys) + upstream);
    if (report::manifest_matches(dir, fp)) {
      spdlog::info("{}: up to date, skipped", name);
    } else {
      run(c, ctx, upstream);
    }
    upstream += read_file(dir / report::kManifestFile);
  };
  stage("ingest", corpus_dir, kIngestKeys, {"input"}, run_ingest);
  stage("analyze", analysis_dir, kAnalyzeKeys, {"corpus", "lexicons"}, run_analyze);
  stage("stance", stance_dir, kStanceKeys, {"corpus", "lexicons", "stance.prompt", "stance.gold"}, run_stance);
  stage("report", report_dir, kReportKeys, {"from", "stance_dir"}, run_report);
  report::write_manifest(root, "all");
}

}  // namespace emodyn::cli
