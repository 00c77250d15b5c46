#include "emodyn/dynamics/analyzer.hpp"

#include <fstream>
#include <future>

#include <spdlog/spdlog.h>

#include "emodyn/common/error.hpp"
#include "emodyn/corpus/post.hpp"

namespace emodyn::dynamics {

namespace {

struct ChunkOut {
  DensityAccumulator bins;
  std::vector<std::pair<bool, lexicon::WordScore>> words;  // (after split, scores) in corpus order
  std::uint64_t posts = 0;
  std::uint64_t tokens = 0;
};

ChunkOut score_chunk(const std::vector<std::string>& lines, std::size_t first_line, const lexicon::Scorer& scorer,
                     Timestamp split) {
  ChunkOut out;
  std::vector<lexicon::WordScore> words;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    corpus::PostRecord post;
    try {
      post = corpus::parse_post_record(lines[i]);
    } catch (const DataError& e) {
      throw DataError("corpus line " + std::to_string(first_line + i) + ": " + e.what());
    }
    words.clear();
    const auto score = scorer.score(post, &words);
    out.bins.add(score);
    ++out.posts;
    out.tokens += score.token_count;
    const bool after = !(post.created_at < split);
    for (const auto& w : words) out.words.emplace_back(after, w);
  }
  return out;
}

}  // namespace

AnalysisResult analyze_corpus(const std::filesystem::path& corpus_jsonl, const lexicon::Scorer& scorer,
                              const AnalysisOptions& options) {
  if (options.trajectory_window < 1) throw ParameterError("trajectory window must be at least 1");
  std::ifstream in(corpus_jsonl, std::ios::binary);
  if (!in) throw ConfigError("corpus not found: " + corpus_jsonl.string());

  const std::size_t workers = std::max<std::size_t>(1, options.workers);
  const std::size_t chunk = std::max<std::size_t>(1, options.chunk_lines);
  AnalysisResult result;
  std::array<SlidingWindow<lexicon::kTrackedDimensions>, 2> windows{
      SlidingWindow<lexicon::kTrackedDimensions>(options.trajectory_window),
      SlidingWindow<lexicon::kTrackedDimensions>(options.trajectory_window)};

  auto consume = [&](ChunkOut&& part) {
    result.bins.merge(part.bins);
    result.posts += part.posts;
    result.tokens += part.tokens;
    for (const auto& [after, w] : part.words) {
      EraDynamics& era = result.eras[after ? 1 : 0];
      ++era.words;
      if (auto mean = windows[after ? 1 : 0].push(w)) {
        const auto& m = *mean;
        era.warmth_competence.add(m[lexicon::index(Dimension::warmth)], m[lexicon::index(Dimension::competence)]);
        era.trust_sociability.add(m[lexicon::index(Dimension::trust)], m[lexicon::index(Dimension::sociability)]);
      }
    }
  };

  std::string line;
  std::size_t line_no = 0;
  bool eof = false;
  while (!eof) {
    std::vector<std::vector<std::string>> batch;
    std::vector<std::size_t> first_lines;
    for (std::size_t w = 0; w < workers && !eof; ++w) {
      std::vector<std::string> lines;
      first_lines.push_back(line_no + 1);
      while (lines.size() < chunk) {
        if (!std::getline(in, line)) {
          eof = true;
          break;
        }
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        lines.push_back(std::move(line));
      }
      batch.push_back(std::move(lines));
    }
    if (workers == 1) {
      for (std::size_t k = 0; k < batch.size(); ++k) consume(score_chunk(batch[k], first_lines[k], scorer, options.split));
      continue;
    }
    std::vector<std::future<ChunkOut>> futures;
    for (std::size_t k = 0; k < batch.size(); ++k) {
      futures.push_back(std::async(std::launch::async, [&, k] {
        return score_chunk(batch[k], first_lines[k], scorer, options.split);
      }));
    }
    for (auto& f : futures) consume(f.get());
  }
  spdlog::info("analyze: {} posts, {} tokens, {} months", result.posts, result.tokens, result.bins.bins().size());
  return result;
}

}  // namespace emodyn::dynamics
