#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace emodyn::testing {

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(std::string_view tag = "emodyn");
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(std::string_view name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

void write_text(const std::filesystem::path& path, std::string_view content);

/// Absolute path of a file in the source tree.
std::filesystem::path source_path(std::string_view relative);

}  // namespace emodyn::testing
