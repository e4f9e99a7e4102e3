#include "dtvol/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

namespace dtvol {

nlohmann::json RunRecord::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["params"] = params;
  j["version"] = version;
  j["stdout"] = stdout_text;
  j["files"] = files;
  j["exit_code"] = exit_code;
  j["wall_time"] = wall_time;
  return j;
}

RunRecord RunRecord::from_json(const nlohmann::json& j) {
  RunRecord r;
  r.command = j.at("command").get<std::string>();
  r.params = j.at("params");
  r.version = j.at("version").get<std::string>();
  r.stdout_text = j.at("stdout").get<std::string>();
  r.files = j.at("files").get<std::map<std::string, std::string>>();
  r.exit_code = j.at("exit_code").get<int>();
  r.wall_time = j.at("wall_time").get<double>();
  return r;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResultCache::default_dir() {
  if (const char* d = std::getenv("DTVOL_CACHE_DIR"); d != nullptr && *d != '\0') return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x != nullptr && *x != '\0')
    return std::filesystem::path(x) / "dtvol";
  if (const char* h = std::getenv("HOME"); h != nullptr && *h != '\0')
    return std::filesystem::path(h) / ".cache" / "dtvol";
  return std::filesystem::current_path() / ".dtvol-cache";
}

std::string ResultCache::key(const std::string& command, const nlohmann::json& params, const std::string& version) {
  // nlohmann objects are sorted by key, so dump() is canonical
  const std::string text = nlohmann::json::array({command, params, version}).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::filesystem::path ResultCache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<RunRecord> ResultCache::load(const std::string& command, const nlohmann::json& params,
                                           const std::string& version) const {
  std::ifstream in(path_for(key(command, params, version)), std::ios::binary);
  if (!in) return std::nullopt;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    RunRecord r = RunRecord::from_json(j);
    if (r.command != command || r.params != params || r.version != version) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed and overwritten
  }
}

bool ResultCache::store(const RunRecord& rec) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return false;
  const std::filesystem::path target = path_for(key(rec.command, rec.params, rec.version));
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp." << ::getpid() << "." << std::random_device{}();
  const std::filesystem::path tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << rec.to_json().dump(1);
    if (!out.flush()) {
      std::filesystem::remove(tmp, ec);
      return false;
    }
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    return false;
  }
  return true;
}

}  // namespace dtvol
