#include "emodyn/stance/sample.hpp"

#include <algorithm>

#include <spdlog/spdlog.h>

#include "emodyn/common/error.hpp"
#include "emodyn/common/hash.hpp"
#include "emodyn/common/io.hpp"

namespace emodyn::stance {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t sample_key(std::uint64_t seed, const Month& month, std::string_view post_id) noexcept {
  const auto m = static_cast<std::uint64_t>(month.year * 12 + static_cast<int>(month.month) - 1);
  return splitmix64(splitmix64(seed ^ splitmix64(m)) ^ fnv1a64(post_id));
}

MonthlySampler::MonthlySampler(std::size_t per_month, std::uint64_t seed) : per_month_(per_month), seed_(seed) {
  if (per_month < 1) throw ParameterError("per_month must be >= 1");
}

void MonthlySampler::add(const corpus::PostRecord& post) {
  const Month month = month_of(post.created_at);
  ++seen_[month];
  auto& heap = heaps_[month];
  auto less = [](const Keyed& a, const Keyed& b) {
    return a.key != b.key ? a.key < b.key : a.post.id < b.post.id;
  };
  Keyed item{sample_key(seed_, month, post.id), post};
  if (heap.size() < per_month_) {
    heap.push_back(std::move(item));
    std::push_heap(heap.begin(), heap.end(), less);
  } else if (less(item, heap.front())) {
    std::pop_heap(heap.begin(), heap.end(), less);
    heap.back() = std::move(item);
    std::push_heap(heap.begin(), heap.end(), less);
  }
}

std::vector<corpus::PostRecord> MonthlySampler::finish(std::vector<std::string>* warnings) && {
  std::vector<corpus::PostRecord> out;
  std::size_t short_months = 0;
  for (auto& [month, heap] : heaps_) {
    if (seen_[month] < per_month_) {
      const std::string msg = "month " + month.key() + " has " + std::to_string(seen_[month]) +
                              " posts, fewer than the requested " + std::to_string(per_month_) + "; all kept";
      spdlog::debug("{}", msg);
      if (warnings) warnings->push_back(msg);
      ++short_months;
    }
    for (auto& k : heap) out.push_back(std::move(k.post));
  }
  if (short_months > 0) {
    spdlog::warn("{} of {} months have fewer than {} posts; all their posts are kept", short_months, heaps_.size(),
                 per_month_);
  }
  std::sort(out.begin(), out.end(), corpus::canonical_less<corpus::PostRecord>);
  return out;
}

std::vector<corpus::PostRecord> sample_monthly(const std::vector<corpus::PostRecord>& corpus, std::size_t per_month,
                                               std::uint64_t seed, std::vector<std::string>* warnings) {
  MonthlySampler sampler(per_month, seed);
  if (corpus.empty()) throw DataError("cannot sample from an empty corpus");
  for (const auto& post : corpus) sampler.add(post);
  return std::move(sampler).finish(warnings);
}

std::vector<corpus::PostRecord> sample_monthly(const std::filesystem::path& corpus_jsonl, std::size_t per_month,
                                               std::uint64_t seed, std::vector<std::string>* warnings) {
  MonthlySampler sampler(per_month, seed);
  std::size_t n = 0;
  for_each_line(corpus_jsonl, [&](std::size_t line_no, std::string_view line) {
    if (line.find_first_not_of(" \t") == std::string_view::npos) return;
    try {
      sampler.add(corpus::parse_post_record(line));
    } catch (const DataError& e) {
      throw DataError(corpus_jsonl.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    ++n;
  });
  if (n == 0) throw DataError("cannot sample from an empty corpus: " + corpus_jsonl.string());
  return std::move(sampler).finish(warnings);
}

}  // namespace emodyn::stance
