#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "emodyn/common/time.hpp"

namespace emodyn::corpus {

/// One post as it arrives on ingest.
struct RawPost {
  std::string id;
  std::string user_id;
  Timestamp created_at;
  std::string text;
  bool is_repost = false;  // optional `is_repost` input field
};

/// Cleaned, canonical post.
struct PostRecord {
  std::string id;
  std::string user_id;
  Timestamp created_at;
  std::string text;
  std::size_t token_count = 0;
};

struct FilterDecision {
  std::string post_id;
  double similarity = 0.0;
  bool kept = false;
};

/// Canonical order: (created_at, id).
template <typename Post>
bool canonical_less(const Post& a, const Post& b) {
  if (a.created_at != b.created_at) return a.created_at < b.created_at;
  return a.id < b.id;
}

/// Parses one input JSONL line. Throws DataError with a reason on malformed
/// JSON, missing/mistyped fields, empty id, or an unparseable timestamp.
RawPost parse_raw_post(std::string_view line);

/// Parses a canonical corpus line. `token_count` is recomputed when absent.
PostRecord parse_post_record(std::string_view line);

std::string to_jsonl(const PostRecord& post);
std::string to_jsonl(const FilterDecision& decision);
FilterDecision parse_filter_decision(std::string_view line);

}  // namespace emodyn::corpus
