#include "emodyn/corpus/filter.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <unordered_map>

#include "emodyn/common/io.hpp"
#include "emodyn/simd/kernels.hpp"

namespace emodyn::corpus {

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ProviderError("embedding dimensions differ");
  const double aa = simd::dot(a, a);
  const double bb = simd::dot(b, b);
  if (!(aa > 0.0) || !(bb > 0.0)) throw ProviderError("embedding vector has zero norm");
  return std::clamp(simd::dot(a, b) / std::sqrt(aa * bb), -1.0, 1.0);
}

FilterResult semantic_filter(std::vector<PostRecord> posts, EmbeddingProvider& provider,
                             const FilterOptions& options) {
  if (!(options.threshold > 0.0 && options.threshold <= 1.0)) {
    throw ParameterError("filter threshold must lie in (0, 1]");
  }
  if (options.batch_size == 0) throw ParameterError("filter batch size must be positive");

  std::unordered_map<std::string, double> resumed;
  if (!options.checkpoint.empty() && std::filesystem::exists(options.checkpoint)) {
    for_each_line(options.checkpoint, [&](std::size_t, std::string_view line) {
      if (line.empty()) return;
      auto d = parse_filter_decision(line);
      resumed[d.post_id] = d.similarity;
    });
    spdlog::info("resuming semantic filter with {} decisions from {}", resumed.size(), options.checkpoint.string());
  }

  std::vector<std::optional<double>> similarity(posts.size());
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < posts.size(); ++i) {
    if (auto it = resumed.find(posts[i].id); it != resumed.end()) {
      similarity[i] = it->second;
    } else {
      pending.push_back(i);
    }
  }

  if (!pending.empty()) {
    const auto anchor = with_retries(options.retry, "anchor embedding",
                                     [&] { return provider.embed({options.anchor}); });
    if (anchor.size() != 1) throw ProviderError("anchor embedding returned no vector");
    if (!(simd::dot(anchor.front(), anchor.front()) > 0.0)) throw ProviderError("anchor embedding has zero norm");
    std::optional<AppendLog> log;
    if (!options.checkpoint.empty()) log.emplace(options.checkpoint);

    for (std::size_t start = 0; start < pending.size(); start += options.batch_size) {
      const std::size_t end = std::min(pending.size(), start + options.batch_size);
      std::vector<std::string> texts;
      texts.reserve(end - start);
      for (std::size_t k = start; k < end; ++k) texts.push_back(posts[pending[k]].text);

      std::vector<std::vector<double>> vectors;
      try {
        vectors = with_retries(options.retry, "embedding batch", [&] { return provider.embed(texts); });
      } catch (const ProviderError& e) {
        std::string msg = std::string("embedding provider unavailable: ") + e.what();
        if (log) msg += "; resumable checkpoint at " + options.checkpoint.string();
        throw ProviderError(msg);
      }
      if (vectors.size() != texts.size()) throw ProviderError("embedding batch size mismatch");

      for (std::size_t k = start; k < end; ++k) {
        const std::size_t i = pending[k];
        // A post with no encodable content shares nothing with the anchor.
        const auto& v = vectors[k - start];
        if (v.size() != anchor.front().size()) throw ProviderError("embedding dimensions differ");
        similarity[i] = simd::dot(v, v) > 0.0 ? cosine_similarity(v, anchor.front()) : 0.0;
        if (log) log->append(to_jsonl(FilterDecision{posts[i].id, *similarity[i], *similarity[i] < options.threshold}));
      }
    }
  }

  FilterResult result;
  result.decisions.reserve(posts.size());
  for (std::size_t i = 0; i < posts.size(); ++i) {
    const double s = *similarity[i];
    const bool kept = s < options.threshold;
    result.decisions.push_back(FilterDecision{posts[i].id, s, kept});
    if (kept) result.kept.push_back(std::move(posts[i]));
  }
  if (!options.checkpoint.empty()) std::filesystem::remove(options.checkpoint);
  return result;
}

}  // namespace emodyn::corpus
