#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace verlab {

/// Build identifier; cache files written by another engine version are discarded.
const std::string& engine_version();

/// Persistent map from canonical query keys ("family:n:level:genus:variant")
/// to decimal-string results. Unreadable, corrupt or version-mismatched files
/// load as empty.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path, std::string version = engine_version());

  /// --cache flag, else $VERLAB_CACHE, else $XDG_CACHE_HOME/verlab/cache.json,
  /// else ~/.cache/verlab/cache.json.
  static std::filesystem::path resolve_path(const std::optional<std::string>& flag);

  static std::string key(const std::string& family, int n, int level, int genus, const std::string& variant);

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, std::string value);
  const std::map<std::string, std::string>& entries() const { return entries_; }
  const std::filesystem::path& path() const { return path_; }

  /// Writes to a sibling temp file and renames it over the target.
  void save() const;

 private:
  std::filesystem::path path_;
  std::string version_;
  std::map<std::string, std::string> entries_;
};

}  // namespace verlab
