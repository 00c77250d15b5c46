#pragma once

#include <chrono>
#include <string>
#include <thread>

#include <spdlog/spdlog.h>

#include "emodyn/common/error.hpp"

namespace emodyn {

struct RetryPolicy {
  int retries = 3;  // attempts after the first
  std::chrono::milliseconds backoff{200};  // doubled after each failure
};

/// Runs `fn`, retrying ProviderError with exponential backoff. The last error
/// propagates once the policy is exhausted.
template <typename Fn>
auto with_retries(const RetryPolicy& policy, const std::string& what, Fn&& fn) -> decltype(fn()) {
  auto delay = policy.backoff;
  for (int attempt = 0;; ++attempt) {
    try {
      return fn();
    } catch (const ProviderError& e) {
      if (attempt >= policy.retries) throw;
      spdlog::warn("{} failed (attempt {}/{}): {}", what, attempt + 1, policy.retries + 1, e.what());
      if (delay.count() > 0) std::this_thread::sleep_for(delay);
      delay *= 2;
    }
  }
}

}  // namespace emodyn
