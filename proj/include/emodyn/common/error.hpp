#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace emodyn {

/// Error classes surfaced by the CLI as distinct exit codes.
enum class ErrorKind { config, data, provider, internal };

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message) : Error(ErrorKind::config, message) {}
};

/// Invalid argument to a library operation (window < 1, empty sample, ...).
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& message) : Error(ErrorKind::config, message) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& message) : Error(ErrorKind::data, message) {}
};

class ProviderError : public Error {
 public:
  explicit ProviderError(const std::string& message) : Error(ErrorKind::provider, message) {}
};

}  // namespace emodyn
