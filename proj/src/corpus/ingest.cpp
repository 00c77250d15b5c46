#include "emodyn/corpus/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include <json.hpp>
#include <spdlog/spdlog.h>

#include "emodyn/common/error.hpp"
#include "emodyn/common/io.hpp"
#include "emodyn/corpus/dedup.hpp"
#include "emodyn/lexicon/tokenize.hpp"

namespace emodyn::corpus {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

struct Reject {
  std::size_t line;
  std::string reason;
};

struct ChunkResult {
  std::vector<RawPost> posts;
  std::vector<Reject> rejects;
  std::size_t reposts = 0;
};

ChunkResult process_chunk(const std::vector<Line>& lines, const CleanOptions& clean) {
  ChunkResult out;
  for (const auto& line : lines) {
    try {
      RawPost post = parse_raw_post(line.text);
      if (is_repost(post)) {
        ++out.reposts;
        continue;
      }
      post.text = clean_text(post.text, clean);
      out.posts.push_back(std::move(post));
    } catch (const DataError& e) {
      out.rejects.push_back(Reject{line.number, e.what()});
    }
  }
  return out;
}

std::vector<PostRecord> to_records(std::vector<RawPost> posts) {
  std::vector<PostRecord> out;
  out.reserve(posts.size());
  for (auto& p : posts) {
    const std::size_t n = lexicon::count_tokens(p.text);
    out.push_back(PostRecord{std::move(p.id), std::move(p.user_id), p.created_at, std::move(p.text), n});
  }
  return out;
}

std::vector<RawPost> to_raw(std::vector<PostRecord> posts) {
  std::vector<RawPost> out;
  out.reserve(posts.size());
  for (auto& p : posts) out.push_back(RawPost{std::move(p.id), std::move(p.user_id), p.created_at, std::move(p.text)});
  return out;
}

}  // namespace

std::string CorpusSummary::to_json() const {
  nlohmann::ordered_json doc;
  doc["lines"] = lines;
  doc["rejected"] = rejected;
  doc["raw"] = raw;
  doc["reposts"] = reposts;
  doc["after_dedup"] = after_dedup;
  doc["after_filter"] = after_filter;
  doc["unique_users"] = unique_users;
  return doc.dump(2) + "\n";
}

std::filesystem::path corpus_file(const std::filesystem::path& corpus) {
  return std::filesystem::is_directory(corpus) ? corpus / kCorpusFile : corpus;
}

CorpusSummary ingest(const std::filesystem::path& input, const std::filesystem::path& out_dir,
                     const IngestOptions& options, EmbeddingProvider* provider) {
  if (options.filter_enabled && provider == nullptr) throw ConfigError("semantic filter needs an embedding provider");
  if (!std::filesystem::exists(input)) throw ConfigError("input not found: " + input.string());
  ensure_directory(out_dir);

  const std::size_t workers = std::max<std::size_t>(1, options.workers);
  const std::size_t chunk = std::max<std::size_t>(1, options.chunk_lines);

  CorpusSummary summary;
  DailyDeduplicator dedup;
  std::vector<RawPost> undeduped;  // filter-first order keeps every cleaned post
  std::vector<Reject> rejects;

  std::vector<std::vector<Line>> pending(1);
  auto flush = [&] {
    std::vector<std::future<ChunkResult>> futures;
    for (auto& lines : pending) {
      if (lines.empty()) continue;
      futures.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                   [&lines, &options] { return process_chunk(lines, options.clean); }));
    }
    for (auto& f : futures) {
      ChunkResult r = f.get();
      summary.reposts += r.reposts;
      summary.raw += r.posts.size() + r.reposts;
      for (auto& rej : r.rejects) rejects.push_back(std::move(rej));
      for (auto& p : r.posts) {
        if (options.order == StageOrder::dedup_then_filter) {
          dedup.add(std::move(p));
        } else {
          undeduped.push_back(std::move(p));
        }
      }
    }
    pending.assign(1, {});
  };

  for_each_line(input, [&](std::size_t no, std::string_view line) {
    if (line.find_first_not_of(" \t") == std::string_view::npos) return;
    ++summary.lines;
    if (pending.back().size() >= chunk) {
      if (pending.size() >= workers) flush();
      else pending.emplace_back();
    }
    pending.back().push_back(Line{no, std::string(line)});
  });
  flush();
  summary.rejected = rejects.size();

  auto filter = [&](std::vector<PostRecord> posts, std::vector<FilterDecision>& decisions) {
    if (!options.filter_enabled) return posts;
    FilterOptions fopts = options.filter;
    fopts.checkpoint = out_dir / kFilterCheckpoint;
    FilterResult fr = semantic_filter(std::move(posts), *provider, fopts);
    decisions = std::move(fr.decisions);
    return std::move(fr.kept);
  };

  std::vector<FilterDecision> decisions;
  std::vector<PostRecord> final_posts;
  if (options.order == StageOrder::dedup_then_filter) {
    auto deduped = to_records(std::move(dedup).finish());
    summary.after_dedup = deduped.size();
    final_posts = filter(std::move(deduped), decisions);
  } else {
    std::sort(undeduped.begin(), undeduped.end(), canonical_less<RawPost>);
    {
      std::set<std::string> ids;
      for (const auto& p : undeduped) {
        if (!ids.insert(p.id).second) throw DataError("duplicate post id '" + p.id + "'");
      }
    }
    auto kept = filter(to_records(std::move(undeduped)), decisions);
    final_posts = to_records(dedup_daily(to_raw(std::move(kept))));
    summary.after_dedup = final_posts.size();
  }
  summary.after_filter = final_posts.size();

  std::set<std::string_view> users;
  std::string corpus_text;
  for (const auto& p : final_posts) {
    users.insert(p.user_id);
    corpus_text += to_jsonl(p);
    corpus_text += '\n';
  }
  summary.unique_users = users.size();

  std::sort(rejects.begin(), rejects.end(), [](const Reject& a, const Reject& b) { return a.line < b.line; });
  std::string reject_text;
  for (const auto& r : rejects) {
    nlohmann::ordered_json doc;
    doc["line"] = r.line;
    doc["reason"] = r.reason;
    reject_text += doc.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
  }
  std::string decision_text;
  for (const auto& d : decisions) decision_text += to_jsonl(d) + "\n";

  write_file_atomic(out_dir / kCorpusFile, corpus_text);
  write_file_atomic(out_dir / kRejectsFile, reject_text);
  write_file_atomic(out_dir / kDecisionsFile, decision_text);
  write_file_atomic(out_dir / kSummaryFile, summary.to_json());
  spdlog::info("ingest: {} lines, {} rejected, {} re-posts, {} after dedup, {} after filter, {} users", summary.lines,
               summary.rejected, summary.reposts, summary.after_dedup, summary.after_filter, summary.unique_users);
  return summary;
}

}  // namespace emodyn::corpus
