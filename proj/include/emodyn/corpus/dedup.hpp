#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "emodyn/corpus/post.hpp"

namespace emodyn::corpus {

/// Keyed reduction keeping one post per (user_id, UTC day): the earliest by
/// created_at, ties to the smallest id. The winner of a key does not depend on
/// insertion order, so shards can be reduced independently and merged.
class DailyDeduplicator {
 public:
  /// Throws DataError naming the id when it was already added.
  void add(RawPost post);
  void merge(DailyDeduplicator&& other);

  std::size_t size() const noexcept { return best_.size(); }

  /// Survivors in canonical (created_at, id) order.
  std::vector<RawPost> finish() &&;

 private:
  using Key = std::pair<std::string, std::int64_t>;
  std::map<Key, RawPost> best_;
  std::unordered_set<std::string> ids_;
};

std::vector<RawPost> dedup_daily(std::vector<RawPost> posts);

}  // namespace emodyn::corpus
