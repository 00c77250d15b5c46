#include "emodyn/common/error.hpp"

namespace emodyn {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::config:
      return "config";
    case ErrorKind::data:
      return "data";
    case ErrorKind::provider:
      return "provider";
    case ErrorKind::internal:
      return "internal";
  }
  return "internal";
}

}  // namespace emodyn
