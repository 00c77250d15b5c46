#pragma once

#include <chrono>
#include <cstdint>
#include <set>
#include <string>

namespace emodyn::stance {

struct LlmRequest {
  std::string post_id;
  std::string text;    // raw post text; mocks read it, the HTTP client sends `prompt`
  std::string prompt;  // rendered template
  double temperature = 0.4;
  std::string run_id;
};

/// Completion backend. Implementations must be safe to call concurrently.
class LlmClient {
 public:
  virtual ~LlmClient() = default;
  /// Returns the raw answer text; transport failures throw ProviderError.
  virtual std::string complete(const LlmRequest& request) = 0;
  virtual std::string model_id() const = 0;
};

struct HttpLlmConfig {
  std::string url;  // full chat-completions URL
  std::string model;
  std::string api_key;  // sent as a bearer token when non-empty
  std::chrono::seconds timeout{60};
};

inline constexpr const char* kApiKeyEnv = "EMODYN_LLM_API_KEY";

/// Chat-style JSON endpoint:
/// {model, temperature, messages:[{role, content}]} -> {choices:[{message:{content}}]}.
class HttpLlmClient : public LlmClient {
 public:
  explicit HttpLlmClient(HttpLlmConfig config);
  std::string complete(const LlmRequest& request) override;
  std::string model_id() const override { return config_.model; }

 private:
  HttpLlmConfig config_;
};

enum class MockMode {
  keyword,   // lexical cues in the post text
  random,    // seeded uniform draw per (run, post)
  constant,  // always `constant_answer`
};

struct MockOptions {
  MockMode mode = MockMode::keyword;
  std::uint64_t seed = 0;
  std::string constant_answer = "favor";
  std::set<std::string> garbage_ids;  // posts answered with unparseable text
};

/// Deterministic offline stand-in for an LLM endpoint.
class MockLlmClient : public LlmClient {
 public:
  explicit MockLlmClient(MockOptions options = {});
  std::string complete(const LlmRequest& request) override;
  std::string model_id() const override;

 private:
  MockOptions options_;
};

MockMode parse_mock_mode(const std::string& name);

}  // namespace emodyn::stance
