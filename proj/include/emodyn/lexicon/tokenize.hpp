#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace emodyn::lexicon {

/// Lowercase alphanumeric runs; every other byte separates tokens, so
/// `#word` yields `word` and `state-of-the-art` yields four tokens.
std::vector<std::string> tokenize(std::string_view text);

std::size_t count_tokens(std::string_view text);

/// Allocation-reusing tokenizer for hot loops. Views stay valid until the next
/// call to `split`.
class Tokenizer {
 public:
  const std::vector<std::string_view>& split(std::string_view text);

 private:
  std::string lowered_;
  std::vector<unsigned char> alnum_;
  std::vector<std::string_view> tokens_;
};

}  // namespace emodyn::lexicon
