#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "emodyn/corpus/post.hpp"

namespace emodyn::corpus {

/// Whitespace-delimited ASCII emoticons removed by clean_text. Emoji are
/// non-ASCII and go with the rest of the non-ASCII codepoints.
std::vector<std::string> default_emoticons();

struct CleanOptions {
  std::vector<std::string> emoticons = default_emoticons();
};

/// Removes non-ASCII codepoints (Unicode space separators become spaces),
/// URLs (`scheme://...`, bare `www....`), `@handle` mentions and listed
/// emoticons, then collapses whitespace runs and trims. Total and idempotent.
std::string clean_text(std::string_view raw, const CleanOptions& options = {});

/// Re-post: text starts with "RT @" or the input carried `is_repost: true`.
bool is_repost(const RawPost& post);

}  // namespace emodyn::corpus
