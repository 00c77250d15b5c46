#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <string_view>

namespace emodyn {

/// Reads a whole file; throws DataError when missing.
std::string read_file(const std::filesystem::path& path);

/// Writes through a temporary sibling and renames, so readers never observe a
/// half-written artifact.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

void ensure_directory(const std::filesystem::path& dir);

/// Streams `path` line by line (1-based line numbers). Trailing `\r` is dropped.
void for_each_line(const std::filesystem::path& path,
                   const std::function<void(std::size_t line_no, std::string_view line)>& fn);

/// Append-only line log flushed after each write, used for resumable checkpoints.
class AppendLog {
 public:
  explicit AppendLog(const std::filesystem::path& path);
  void append(std::string_view line);

 private:
  std::ofstream out_;
};

}  // namespace emodyn
