#include "manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include "cli_params.hpp"
#include "output.hpp"
#include "qrmt/error.hpp"

namespace qrmt::cli {

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void record_output(RunManifest& m, const std::filesystem::path& dir, const std::filesystem::path& file) {
  const std::filesystem::path full = dir / file;
  m.outputs.push_back({file.generic_string(), sha256_file(full), std::filesystem::file_size(full)});
}

nlohmann::ordered_json to_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["tool_version"] = m.tool_version;
  j["command"] = m.command;
  j["params"] = m.params ? params_json(*m.params) : nlohmann::ordered_json(nullptr);
  j["master_seed"] = m.master_seed;
  j["sample_count"] = m.sample_count;
  j["started"] = m.started;
  j["finished"] = m.finished;
  j["outputs"] = nlohmann::ordered_json::array();
  for (const auto& o : m.outputs) {
    nlohmann::ordered_json e;
    e["path"] = o.path;
    e["sha256"] = o.sha256;
    e["bytes"] = o.bytes;
    j["outputs"].push_back(e);
  }
  return j;
}

std::filesystem::path write_manifest(const RunManifest& m, const std::filesystem::path& dir) {
  const auto path = dir / "manifest.json";
  write_text(path, to_json(m).dump(2) + "\n");
  return path;
}

std::vector<DigestCheck> check_manifest(const std::filesystem::path& manifest) {
  std::ifstream f(manifest);
  if (!f) throw Error(ErrorCode::Io, "cannot read manifest " + manifest.string());
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Io, "malformed manifest: " + std::string(e.what()));
  }
  const auto dir = manifest.parent_path();
  std::vector<DigestCheck> out;
  for (const auto& o : j.at("outputs")) {
    DigestCheck c;
    c.path = o.at("path").get<std::string>();
    const auto full = dir / c.path;
    c.present = std::filesystem::exists(full);
    if (c.present) c.matches = sha256_file(full) == o.at("sha256").get<std::string>();
    out.push_back(c);
  }
  return out;
}

}  // namespace qrmt::cli
