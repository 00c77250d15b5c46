#pragma once

#include <chrono>
#include <string>

namespace emodyn {

struct HttpEndpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;    // begins with '/'
};

/// Splits `http(s)://host[:port]/path`. Throws ConfigError on anything else.
HttpEndpoint parse_endpoint(const std::string& url);

/// POSTs a JSON body and returns the response body. Transport failures and
/// non-2xx statuses throw ProviderError.
std::string post_json(const HttpEndpoint& endpoint, const std::string& body, std::chrono::seconds timeout,
                      const std::string& bearer_token = {});

}  // namespace emodyn
