#pragma once

#include <filesystem>
#include <string>

namespace emodyn::report {

inline constexpr const char* kManifestFile = "manifest.json";
inline constexpr const char* kFrozenConfigFile = "config.frozen";

/// Lists every regular file under `dir` (recursively, sorted by relative
/// path, excluding manifest.json files) with byte size and SHA-256. When
/// `config_fingerprint` is non-empty it is recorded so later runs can tell
/// whether the directory is complete for an unchanged configuration.
std::string manifest_json(const std::filesystem::path& dir, const std::string& stage,
                          const std::string& config_fingerprint = {});

void write_manifest(const std::filesystem::path& dir, const std::string& stage,
                    const std::string& config_fingerprint = {});

/// True when `dir/manifest.json` exists, carries `config_fingerprint`, and
/// every listed file is present with the recorded checksum.
bool manifest_matches(const std::filesystem::path& dir, const std::string& config_fingerprint);

}  // namespace emodyn::report
