#include "emodyn/stance/llm.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "emodyn/common/error.hpp"
#include "emodyn/common/hash.hpp"
#include "emodyn/common/http.hpp"
#include "emodyn/lexicon/tokenize.hpp"

namespace emodyn::stance {

using nlohmann::json;

HttpLlmClient::HttpLlmClient(HttpLlmConfig config) : config_(std::move(config)) {
  parse_endpoint(config_.url);
  if (config_.model.empty()) throw ConfigError("LLM model name is empty");
}

std::string HttpLlmClient::complete(const LlmRequest& request) {
  json body;
  body["model"] = config_.model;
  body["temperature"] = request.temperature;
  body["messages"] = json::array({json{{"role", "user"}, {"content", request.prompt}}});
  const std::string response = post_json(parse_endpoint(config_.url), body.dump(), config_.timeout, config_.api_key);
  try {
    const json parsed = json::parse(response);
    return parsed.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const json::exception& e) {
    throw ProviderError("malformed LLM response: " + std::string(e.what()));
  }
}

MockLlmClient::MockLlmClient(MockOptions options) : options_(std::move(options)) {}

std::string MockLlmClient::model_id() const {
  switch (options_.mode) {
    case MockMode::keyword: return "mock-keyword";
    case MockMode::random: return "mock-random";
    case MockMode::constant: return "mock-constant";
  }
  return "mock";
}

namespace {

constexpr std::string_view kAgainstCues[] = {"poison", "dangerous", "refuse", "scam", "harm", "toxic",
                                             "forced", "mandate", "injury", "hoax", "never"};
constexpr std::string_view kFavorCues[] = {"grateful", "safe", "protect", "protected", "thankful", "booked",
                                           "dose", "jab", "science", "effective", "finally"};

std::string keyword_answer(const std::string& text) {
  int against = 0;
  int favor = 0;
  for (const auto& token : lexicon::tokenize(text)) {
    if (std::find(std::begin(kAgainstCues), std::end(kAgainstCues), token) != std::end(kAgainstCues)) ++against;
    if (std::find(std::begin(kFavorCues), std::end(kFavorCues), token) != std::end(kFavorCues)) ++favor;
  }
  if (against > favor) return "against";
  if (favor > against) return "Favor";
  return "Neither of the two inferences can be reasonably made.";
}

}  // namespace

std::string MockLlmClient::complete(const LlmRequest& request) {
  if (options_.garbage_ids.contains(request.post_id)) return "I am not sure what you mean.";
  switch (options_.mode) {
    case MockMode::keyword: return keyword_answer(request.text);
    case MockMode::constant: return options_.constant_answer;
    case MockMode::random: {
      const std::uint64_t h = fnv1a64(request.post_id, fnv1a64(request.run_id, options_.seed ^ 0x5eedULL));
      static constexpr const char* kAnswers[] = {"favor", "against", "neutral"};
      return kAnswers[h % 3];
    }
  }
  return {};
}

MockMode parse_mock_mode(const std::string& name) {
  if (name == "keyword") return MockMode::keyword;
  if (name == "random") return MockMode::random;
  if (name == "constant") return MockMode::constant;
  throw ConfigError("unknown mock LLM mode '" + name + "' (expected keyword, random or constant)");
}

}  // namespace emodyn::stance
