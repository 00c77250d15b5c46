#include "support.hpp"

#include <atomic>
#include <fstream>
#include <random>

#include <unistd.h>

namespace emodyn::testing {

TempDir::TempDir(std::string_view tag) {
  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  path_ = std::filesystem::temp_directory_path() /
          (std::string(tag) + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + "-" +
           std::to_string(rd()));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

void write_text(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::filesystem::path source_path(std::string_view relative) { return std::filesystem::path(EMODYN_SOURCE_DIR) / relative; }

}  // namespace emodyn::testing
