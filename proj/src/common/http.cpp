#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "emodyn/common/error.hpp"
#include "emodyn/common/http.hpp"

namespace emodyn {

HttpEndpoint parse_endpoint(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw ConfigError("endpoint URL needs a scheme: '" + url + "'");
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") throw ConfigError("unsupported URL scheme '" + scheme + "'");
  const auto path_start = url.find('/', scheme_end + 3);
  HttpEndpoint ep;
  ep.origin = url.substr(0, path_start);
  ep.path = path_start == std::string::npos ? "/" : url.substr(path_start);
  if (ep.origin.size() <= scheme_end + 3) throw ConfigError("endpoint URL has no host: '" + url + "'");
  return ep;
}

std::string post_json(const HttpEndpoint& endpoint, const std::string& body, std::chrono::seconds timeout,
                      const std::string& bearer_token) {
  httplib::Client client(endpoint.origin);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  httplib::Headers headers;
  if (!bearer_token.empty()) headers.emplace("Authorization", "Bearer " + bearer_token);
  auto res = client.Post(endpoint.path, headers, body, "application/json");
  if (!res) {
    throw ProviderError("request to " + endpoint.origin + endpoint.path + " failed: " + httplib::to_string(res.error()));
  }
  if (res->status < 200 || res->status >= 300) {
    throw ProviderError("request to " + endpoint.origin + endpoint.path + " returned HTTP " + std::to_string(res->status));
  }
  return res->body;
}

}  // namespace emodyn
