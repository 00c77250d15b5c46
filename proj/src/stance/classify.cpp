#include "emodyn/stance/classify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>
#include <spdlog/spdlog.h>

#include "emodyn/common/error.hpp"
#include "emodyn/common/format.hpp"
#include "emodyn/common/hash.hpp"
#include "emodyn/common/io.hpp"

namespace emodyn::stance {

using nlohmann::json;
using nlohmann::ordered_json;

std::string render_prompt(std::string_view prompt_template, std::string_view text, std::string_view target) {
  if (prompt_template.find("{text}") == std::string_view::npos) {
    throw ConfigError("prompt template has no {text} slot");
  }
  std::string out;
  std::size_t pos = 0;
  while (pos < prompt_template.size()) {
    const auto open = prompt_template.find('{', pos);
    if (open == std::string_view::npos) break;
    out.append(prompt_template.substr(pos, open - pos));
    const auto rest = prompt_template.substr(open);
    if (rest.starts_with("{text}")) {
      out.append(text);
      pos = open + 6;
    } else if (rest.starts_with("{target}")) {
      out.append(target);
      pos = open + 8;
    } else {
      out += '{';
      pos = open + 1;
    }
  }
  out.append(prompt_template.substr(std::min(pos, prompt_template.size())));
  return out;
}

std::string default_prompt_template() {
  return "Read the following social media post and infer the stance of its author towards {target}.\n"
         "Answer with exactly one of: \"favor\", \"against\", or \"neither of the two inferences can be "
         "reasonably made\".\n"
         "Do not explain your answer.\n"
         "\n"
         "Post: {text}\n"
         "Stance:";
}

std::filesystem::path checkpoint_path(const std::filesystem::path& dir, const std::string& run_id) {
  return dir / ("stance_records." + run_id + ".partial.jsonl");
}

std::string to_jsonl(const StanceRecord& r) {
  ordered_json j;
  j["post_id"] = r.post_id;
  j["label"] = std::string(to_string(r.label));
  j["model_id"] = r.model_id;
  j["temperature"] = ordered_json::parse(format_real(r.temperature));
  j["prompt_hash"] = r.prompt_hash;
  j["run_id"] = r.run_id;
  return j.dump();
}

std::string to_jsonl(const ParseFailure& f) {
  ordered_json j;
  j["post_id"] = f.post_id;
  j["parse_failure"] = f.response;
  j["run_id"] = f.run_id;
  return j.dump();
}

StanceRecord parse_stance_record(std::string_view line) {
  try {
    const json j = json::parse(line);
    StanceRecord r;
    r.post_id = j.at("post_id").get<std::string>();
    r.label = parse_label(j.at("label").get<std::string>());
    r.model_id = j.at("model_id").get<std::string>();
    r.temperature = j.at("temperature").get<double>();
    r.prompt_hash = j.at("prompt_hash").get<std::string>();
    r.run_id = j.at("run_id").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw DataError("malformed stance record: " + std::string(e.what()));
  }
}

namespace {

struct Outcome {
  std::optional<StanceRecord> record;
  std::optional<ParseFailure> failure;
};

// Restores completed answers from an interrupted run of the same run_id.
std::map<std::string, Outcome> load_checkpoint(const std::filesystem::path& path, const std::string& prompt_hash,
                                               double temperature) {
  std::map<std::string, Outcome> done;
  if (!std::filesystem::exists(path)) return done;
  for_each_line(path, [&](std::size_t line_no, std::string_view line) {
    if (line.empty()) return;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception&) {
      // A torn final line from a crash is dropped; the post is asked again.
      spdlog::warn("{}:{}: ignoring unreadable checkpoint line", path.string(), line_no);
      return;
    }
    const std::string id = j.value("post_id", "");
    if (j.contains("parse_failure")) {
      done[id].failure = ParseFailure{id, j.at("parse_failure").get<std::string>(), j.value("run_id", "")};
      return;
    }
    StanceRecord r = parse_stance_record(line);
    if (r.prompt_hash != prompt_hash || r.temperature != temperature) {
      throw ConfigError("checkpoint " + path.string() + " was written with a different prompt or temperature");
    }
    done[id].record = std::move(r);
  });
  return done;
}

}  // namespace

ClassifyResult classify(const std::vector<corpus::PostRecord>& posts, LlmClient& client,
                        const std::string& prompt_template, const ClassifyOptions& options) {
  if (!(options.temperature >= 0.0 && options.temperature <= 2.0)) {
    throw ParameterError("temperature must be in [0, 2], got " + format_real(options.temperature));
  }
  if (prompt_template.find("{text}") == std::string::npos) throw ConfigError("prompt template has no {text} slot");
  if (options.run_id.empty()) throw ParameterError("run_id is empty");
  {
    std::set<std::string_view> ids;
    for (const auto& p : posts) {
      if (!ids.insert(p.id).second) throw DataError("duplicate post id '" + p.id + "' in classification input");
    }
  }

  const std::string prompt_hash = sha256_hex(prompt_template);
  const std::string model = client.model_id();
  std::filesystem::path log_path;
  std::map<std::string, Outcome> done;
  if (!options.checkpoint_dir.empty()) {
    ensure_directory(options.checkpoint_dir);
    log_path = checkpoint_path(options.checkpoint_dir, options.run_id);
    done = load_checkpoint(log_path, prompt_hash, options.temperature);
    if (!done.empty()) spdlog::info("resuming run {} with {} answers from {}", options.run_id, done.size(), log_path.string());
  }
  std::optional<AppendLog> log;
  if (!log_path.empty()) log.emplace(log_path);

  std::vector<const corpus::PostRecord*> todo;
  for (const auto& p : posts) {
    if (!done.contains(p.id)) todo.push_back(&p);
  }

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> aborted{false};
  std::string abort_reason;

  auto worker = [&] {
    while (!aborted.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= todo.size()) return;
      const auto& post = *todo[i];
      LlmRequest request{post.id, post.text, render_prompt(prompt_template, post.text, options.target),
                         options.temperature, options.run_id};
      Outcome outcome;
      try {
        std::string answer = with_retries(options.retry, "LLM request for " + post.id,
                                          [&] { return client.complete(request); });
        auto label = normalize_label(answer);
        if (!label) {
          answer = with_retries(options.retry, "LLM request for " + post.id, [&] { return client.complete(request); });
          label = normalize_label(answer);
        }
        if (label) {
          outcome.record = StanceRecord{post.id, *label, model, options.temperature, prompt_hash, options.run_id};
        } else {
          outcome.failure = ParseFailure{post.id, answer, options.run_id};
        }
      } catch (const ProviderError& e) {
        std::lock_guard lock(mu);
        if (!aborted.exchange(true)) abort_reason = e.what();
        return;
      }
      std::lock_guard lock(mu);
      if (log) log->append(outcome.record ? to_jsonl(*outcome.record) : to_jsonl(*outcome.failure));
      if (outcome.failure) spdlog::warn("unparseable stance answer for post {}: '{}'", post.id, outcome.failure->response);
      done[post.id] = std::move(outcome);
    }
  };

  const std::size_t threads = std::max<std::size_t>(1, std::min(options.concurrency, todo.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  if (aborted) {
    std::string msg = "LLM endpoint unavailable: " + abort_reason;
    if (!log_path.empty()) msg += "; completed answers kept in " + log_path.string() + ", rerun to resume";
    throw ProviderError(msg);
  }

  ClassifyResult result;
  std::set<std::string_view> wanted;
  for (const auto& p : posts) wanted.insert(p.id);
  for (auto& [id, outcome] : done) {  // map order = post_id order
    if (!wanted.contains(id)) continue;
    if (outcome.record) result.records.push_back(std::move(*outcome.record));
    else if (outcome.failure) result.failures.push_back(std::move(*outcome.failure));
  }
  log.reset();
  if (!log_path.empty()) std::filesystem::remove(log_path);
  return result;
}

}  // namespace emodyn::stance
