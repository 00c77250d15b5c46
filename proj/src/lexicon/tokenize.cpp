#include "emodyn/lexicon/tokenize.hpp"

#include "emodyn/simd/kernels.hpp"

namespace emodyn::lexicon {

const std::vector<std::string_view>& Tokenizer::split(std::string_view text) {
  lowered_.resize(text.size());
  alnum_.resize(text.size());
  simd::active().lower_alnum(text.data(), text.size(), lowered_.data(), alnum_.data());
  tokens_.clear();
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && alnum_[i] == 0) ++i;
    const std::size_t start = i;
    while (i < n && alnum_[i] != 0) ++i;
    if (i > start) tokens_.emplace_back(lowered_.data() + start, i - start);
  }
  return tokens_;
}

std::vector<std::string> tokenize(std::string_view text) {
  Tokenizer t;
  const auto& views = t.split(text);
  return {views.begin(), views.end()};
}

std::size_t count_tokens(std::string_view text) {
  thread_local Tokenizer t;
  return t.split(text).size();
}

}  // namespace emodyn::lexicon
