#include "verlab/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <system_error>

#include <json.hpp>

#ifndef VERLAB_ENGINE_VERSION
#define VERLAB_ENGINE_VERSION "verlab-dev"
#endif

namespace verlab {

const std::string& engine_version() {
  static const std::string version = VERLAB_ENGINE_VERSION;
  return version;
}

ResultCache::ResultCache(std::filesystem::path path, std::string version)
    : path_(std::move(path)), version_(std::move(version)) {
  std::ifstream in(path_);
  if (!in) return;
  try {
    const auto doc = nlohmann::json::parse(in);
    if (!doc.is_object() || doc.value("version", std::string{}) != version_) return;
    for (const auto& [k, v] : doc.at("entries").items()) {
      entries_.emplace(k, v.get<std::string>());
    }
  } catch (const nlohmann::json::exception&) {
    entries_.clear();
  }
}

std::filesystem::path ResultCache::resolve_path(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("VERLAB_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "verlab" / "cache.json";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "verlab" / "cache.json";
  }
  return std::filesystem::temp_directory_path() / "verlab-cache.json";
}

std::string ResultCache::key(const std::string& family, int n, int level, int genus, const std::string& variant) {
  return family + ":" + std::to_string(n) + ":" + std::to_string(level) + ":" + std::to_string(genus) + ":" + variant;
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  return std::nullopt;
}

void ResultCache::put(const std::string& key, std::string value) { entries_[key] = std::move(value); }

void ResultCache::save() const {
  nlohmann::json doc;
  doc["version"] = version_;
  doc["entries"] = nlohmann::json::object();
  for (const auto& [k, v] : entries_) doc["entries"][k] = v;

  std::error_code ec;
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path(), ec);
  std::random_device rd;
  auto tmp = path_;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;  // unwritable cache location is not an error
    out << doc.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, path_, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace verlab
