#include "tmwords/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

namespace tmwords {

namespace fs = std::filesystem;

namespace {

constexpr const char* kSuffix = ".tmcache";

std::string sanitize(const std::string& s) {
  std::string out;
  for (char ch : s) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '-' ||
                    ch == '_';
    out += ok ? ch : '_';
  }
  return out;
}

std::string env_or_empty(const char* name) {
  const char* v = std::getenv(name);
  return v == nullptr ? std::string() : std::string(v);
}

}  // namespace

std::string CacheKey::filename() const {
  return sanitize(generator) + "__" + sanitize(parameters) + "__" + std::to_string(length) + "__v" +
         std::to_string(kCacheFormatVersion) + kSuffix;
}

std::string CacheKey::header() const {
  return "tmwords-cache " + std::to_string(kCacheFormatVersion) + "\nkey " + generator + "|" + parameters + "|" +
         std::to_string(length) + "\n";
}

SequenceCache::SequenceCache(fs::path dir, bool enabled) : dir_(std::move(dir)), enabled_(enabled) {}

SequenceCache SequenceCache::from_environment() {
  const std::string off = env_or_empty("TMWORDS_NO_CACHE");
  const bool enabled = off.empty() || off == "0";
  fs::path dir;
  if (auto d = env_or_empty("TMWORDS_CACHE_DIR"); !d.empty()) {
    dir = d;
  } else if (auto x = env_or_empty("XDG_CACHE_HOME"); !x.empty()) {
    dir = fs::path(x) / "tmwords";
  } else if (auto h = env_or_empty("HOME"); !h.empty()) {
    dir = fs::path(h) / ".cache" / "tmwords";
  } else {
    dir = fs::temp_directory_path() / "tmwords-cache";
  }
  return SequenceCache(dir, enabled);
}

SequenceCache SequenceCache::disabled() { return SequenceCache(fs::path(), false); }

std::optional<std::string> SequenceCache::load(const CacheKey& key) const {
  if (!enabled_) return std::nullopt;
  std::ifstream in(dir_ / key.filename(), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string content = buf.str();
  const std::string header = key.header();
  if (content.compare(0, header.size(), header) != 0) return std::nullopt;
  return content.substr(header.size());
}

void SequenceCache::store(const CacheKey& key, const std::string& payload) const {
  if (!enabled_) return;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return;
  const fs::path target = dir_ / key.filename();
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << key.header() << payload;
    if (!out) return;
  }
  fs::rename(tmp, target, ec);
  if (ec) fs::remove(tmp, ec);
}

SequenceCache::Stats SequenceCache::stat() const {
  Stats s;
  std::error_code ec;
  if (dir_.empty() || !fs::is_directory(dir_, ec)) return s;
  for (const auto& entry : fs::directory_iterator(dir_, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == kSuffix) {
      ++s.entries;
      s.bytes += entry.file_size();
    }
  }
  return s;
}

std::size_t SequenceCache::clear() const {
  std::size_t removed = 0;
  std::error_code ec;
  if (dir_.empty() || !fs::is_directory(dir_, ec)) return 0;
  for (const auto& entry : fs::directory_iterator(dir_, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == kSuffix) {
      if (fs::remove(entry.path(), ec)) ++removed;
    }
  }
  return removed;
}

}  // namespace tmwords
