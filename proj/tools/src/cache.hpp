#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "intertwine/aset.hpp"

namespace intertwine::cli {

inline constexpr int kCacheVersion = 1;

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view s);

/// Persisted A-set results, one JSON file per request named by the hash of its
/// canonical request string. The file repeats the request so a hash collision
/// or a stale entry is detected and recomputed rather than trusted.
class ASetCache {
 public:
  /// No directory: memory only. Warnings go to `warn`.
  ASetCache(std::optional<std::filesystem::path> dir, std::ostream& warn, bool verify = false);

  ASetProvider provider();

  /// "aset|v1|A2|lambda=(1,1)|a1,a2,a1|(-1,-1)".
  static std::string request_key(const RootSystem& rs, const std::vector<Root>& letters, const Weight& mu,
                                 const IntegralData& ctx);

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }
  bool persistent() const { return dir_.has_value(); }

 private:
  ASet lookup(const RootSystem& rs, const WeylElem& w, const Weight& mu, const IntegralData& ctx);
  std::optional<ASet> load(const std::filesystem::path& file, const std::string& key, const RootSystem& rs,
                           const std::vector<Root>& letters);
  void store(const std::filesystem::path& file, const std::string& key, const ASet& set);

  std::optional<std::filesystem::path> dir_;
  std::ostream& warn_;
  bool verify_;
  bool write_failed_ = false;
  std::map<std::string, ASet> memory_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

}  // namespace intertwine::cli
