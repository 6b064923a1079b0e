#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace tmwords {

inline constexpr int kCacheFormatVersion = 1;

/// Identifies one cached payload: (generator id, parameters, length).
struct CacheKey {
  std::string generator;
  std::string parameters;
  std::size_t length = 0;

  /// File name under the cache directory; stable and filesystem-safe.
  std::string filename() const;
  std::string header() const;
};

/// File-backed cache of generated sequences. Purely an optimization: a
/// disabled cache never hits and never writes.
///
/// Directory: $TMWORDS_CACHE_DIR, else $XDG_CACHE_HOME/tmwords, else
/// ~/.cache/tmwords. TMWORDS_NO_CACHE=1 disables it.
class SequenceCache {
 public:
  SequenceCache(std::filesystem::path dir, bool enabled);
  static SequenceCache from_environment();
  static SequenceCache disabled();

  bool enabled() const noexcept { return enabled_; }
  const std::filesystem::path& directory() const noexcept { return dir_; }

  /// Payload bytes, or nothing on a miss, a key mismatch or a version mismatch.
  std::optional<std::string> load(const CacheKey& key) const;
  void store(const CacheKey& key, const std::string& payload) const;

  struct Stats {
    std::size_t entries = 0;
    std::uintmax_t bytes = 0;
  };
  Stats stat() const;
  /// Removes every cache file; returns how many were removed.
  std::size_t clear() const;

 private:
  std::filesystem::path dir_;
  bool enabled_;
};

}  // namespace tmwords
