#include "emodyn/corpus/dedup.hpp"

#include <algorithm>

#include "emodyn/common/error.hpp"

namespace emodyn::corpus {

void DailyDeduplicator::add(RawPost post) {
  if (!ids_.insert(post.id).second) throw DataError("duplicate post id '" + post.id + "'");
  Key key{post.user_id, utc_day(post.created_at)};
  auto it = best_.find(key);
  if (it == best_.end()) {
    best_.emplace(std::move(key), std::move(post));
  } else if (canonical_less(post, it->second)) {
    it->second = std::move(post);
  }
}

void DailyDeduplicator::merge(DailyDeduplicator&& other) {
  for (const auto& id : other.ids_) {
    if (ids_.contains(id)) throw DataError("duplicate post id '" + id + "'");
  }
  ids_.merge(other.ids_);
  for (auto& [key, post] : other.best_) {
    auto it = best_.find(key);
    if (it == best_.end()) {
      best_.emplace(key, std::move(post));
    } else if (canonical_less(post, it->second)) {
      it->second = std::move(post);
    }
  }
  other.best_.clear();
}

std::vector<RawPost> DailyDeduplicator::finish() && {
  std::vector<RawPost> out;
  out.reserve(best_.size());
  for (auto& [key, post] : best_) out.push_back(std::move(post));
  best_.clear();
  std::sort(out.begin(), out.end(), canonical_less<RawPost>);
  return out;
}

std::vector<RawPost> dedup_daily(std::vector<RawPost> posts) {
  DailyDeduplicator d;
  for (auto& p : posts) d.add(std::move(p));
  return std::move(d).finish();
}

}  // namespace emodyn::corpus
