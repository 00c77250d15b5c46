#include "emodyn/report/manifest.hpp"

#include <algorithm>
#include <vector>

#include <json.hpp>

#include "emodyn/common/hash.hpp"
#include "emodyn/common/io.hpp"

namespace emodyn::report {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

std::string manifest_json(const fs::path& dir, const std::string& stage, const std::string& config_fingerprint) {
  std::vector<std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().filename() == kManifestFile) continue;
    files.push_back(entry.path().lexically_relative(dir).generic_string());
  }
  std::sort(files.begin(), files.end());
  ordered_json j;
  j["stage"] = stage;
  if (!config_fingerprint.empty()) j["config_sha256"] = config_fingerprint;
  j["artifacts"] = ordered_json::array();
  for (const auto& rel : files) {
    ordered_json a;
    a["path"] = rel;
    a["bytes"] = fs::file_size(dir / rel);
    a["sha256"] = sha256_file(dir / rel);
    j["artifacts"].push_back(a);
  }
  return j.dump(2) + "\n";
}

void write_manifest(const fs::path& dir, const std::string& stage, const std::string& config_fingerprint) {
  write_file_atomic(dir / kManifestFile, manifest_json(dir, stage, config_fingerprint));
}

bool manifest_matches(const fs::path& dir, const std::string& config_fingerprint) {
  const fs::path path = dir / kManifestFile;
  if (!fs::exists(path)) return false;
  try {
    const json j = json::parse(read_file(path));
    if (j.value("config_sha256", "") != config_fingerprint) return false;
    for (const auto& a : j.at("artifacts")) {
      const fs::path file = dir / a.at("path").get<std::string>();
      if (!fs::exists(file) || sha256_file(file) != a.at("sha256").get<std::string>()) return false;
    }
    return true;
  } catch (const json::exception&) {
    return false;
  }
}

}  // namespace emodyn::report
