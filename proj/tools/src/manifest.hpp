#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrmt/params.hpp"

namespace qrmt::cli {

struct OutputRecord {
  std::string path;  // relative to the manifest's directory
  std::string sha256;
  std::uintmax_t bytes = 0;
};

struct RunManifest {
  std::string tool_version;
  std::string command;
  std::optional<EnsembleParams> params;
  std::uint64_t master_seed = 0;
  std::uint64_t sample_count = 0;
  std::string started;
  std::string finished;
  std::vector<OutputRecord> outputs;
};

/// UTC timestamp, ISO 8601 with seconds.
std::string utc_now();

/// Hashes `file` (relative to `dir`) and appends it to m.outputs.
void record_output(RunManifest& m, const std::filesystem::path& dir, const std::filesystem::path& file);

nlohmann::ordered_json to_json(const RunManifest& m);

/// Writes dir/manifest.json and returns its path.
std::filesystem::path write_manifest(const RunManifest& m, const std::filesystem::path& dir);

struct DigestCheck {
  std::string path;
  bool present = false;
  bool matches = false;
};

/// Re-hashes every output listed in a manifest file.
std::vector<DigestCheck> check_manifest(const std::filesystem::path& manifest);

}  // namespace qrmt::cli
