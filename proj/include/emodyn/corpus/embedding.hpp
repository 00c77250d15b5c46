#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "emodyn/common/http.hpp"

namespace emodyn::corpus {

/// Text encoder behind the semantic filter. Implementations return one vector
/// per input text, all of the same dimension, or throw ProviderError.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) = 0;
};

/// Deterministic offline encoder: bag of lowercase tokens hashed (FNV-1a 64)
/// into `dimension` buckets. Texts sharing vocabulary get high cosine.
class HashingEmbeddingProvider : public EmbeddingProvider {
 public:
  explicit HashingEmbeddingProvider(std::size_t dimension = 256) : dimension_(dimension) {}
  std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) override;

 private:
  std::size_t dimension_;
};

/// `POST {"texts": [...]}` -> `{"vectors": [[...], ...]}`.
class HttpEmbeddingProvider : public EmbeddingProvider {
 public:
  HttpEmbeddingProvider(const std::string& url, std::chrono::seconds timeout = std::chrono::seconds{60});
  std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) override;

 private:
  HttpEndpoint endpoint_;
  std::chrono::seconds timeout_;
};

}  // namespace emodyn::corpus
