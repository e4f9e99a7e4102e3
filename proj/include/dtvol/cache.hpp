#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace dtvol {

/// One CLI invocation: what was asked and what it produced.
struct RunRecord {
  std::string command;
  nlohmann::json params;  // canonicalized arguments
  std::string version;
  std::string stdout_text;
  std::map<std::string, std::string> files;  // path -> contents written
  int exit_code = 0;
  double wall_time = 0.0;

  nlohmann::json to_json() const;
  static RunRecord from_json(const nlohmann::json& j);
};

/// Directory of JSON files keyed by (command, canonical args, version).
/// Writes go through a temporary file and a rename, so concurrent runs never
/// see a partial record.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  /// DTVOL_CACHE_DIR if set, else $XDG_CACHE_HOME/dtvol, else ~/.cache/dtvol.
  static std::filesystem::path default_dir();

  /// FNV-1a 64 of the canonical key text, as 16 hex digits.
  static std::string key(const std::string& command, const nlohmann::json& params, const std::string& version);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;

  /// The stored record, if present and matching all three key parts.
  std::optional<RunRecord> load(const std::string& command, const nlohmann::json& params,
                                const std::string& version) const;
  /// Best effort: failures to write are reported as false, never thrown.
  bool store(const RunRecord& rec) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace dtvol
