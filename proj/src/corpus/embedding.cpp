#include "emodyn/corpus/embedding.hpp"

#include <json.hpp>

#include "emodyn/common/error.hpp"
#include "emodyn/common/hash.hpp"
#include "emodyn/lexicon/tokenize.hpp"

namespace emodyn::corpus {

std::vector<std::vector<double>> HashingEmbeddingProvider::embed(const std::vector<std::string>& texts) {
  std::vector<std::vector<double>> out;
  out.reserve(texts.size());
  for (const auto& text : texts) {
    std::vector<double> v(dimension_, 0.0);
    for (const auto& token : lexicon::tokenize(text)) v[fnv1a64(token) % dimension_] += 1.0;
    out.push_back(std::move(v));
  }
  return out;
}

HttpEmbeddingProvider::HttpEmbeddingProvider(const std::string& url, std::chrono::seconds timeout)
    : endpoint_(parse_endpoint(url)), timeout_(timeout) {}

std::vector<std::vector<double>> HttpEmbeddingProvider::embed(const std::vector<std::string>& texts) {
  const nlohmann::json request = {{"texts", texts}};
  const std::string body = post_json(endpoint_, request.dump(), timeout_);
  const auto doc = nlohmann::json::parse(body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("vectors") || !doc["vectors"].is_array()) {
    throw ProviderError("embedding response lacks a 'vectors' array");
  }
  std::vector<std::vector<double>> out;
  for (const auto& row : doc["vectors"]) {
    if (!row.is_array()) throw ProviderError("embedding vector is not an array");
    std::vector<double> v;
    v.reserve(row.size());
    for (const auto& x : row) {
      if (!x.is_number()) throw ProviderError("embedding component is not a number");
      v.push_back(x.get<double>());
    }
    out.push_back(std::move(v));
  }
  if (out.size() != texts.size()) {
    throw ProviderError("embedding response has " + std::to_string(out.size()) + " vectors for " +
                        std::to_string(texts.size()) + " texts");
  }
  return out;
}

}  // namespace emodyn::corpus
