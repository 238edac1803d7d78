#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "hanoi/state_space.hpp"

namespace hanoi {

/// Bumped whenever the search code changes in a way that could alter results.
inline constexpr int kEngineVersion = 1;

/// JSON-file memo of expensive search results keyed by (p, N, kind, engine).
/// Purely advisory: a missing or unreadable file behaves like an empty cache.
class BfsCache {
 public:
  explicit BfsCache(std::filesystem::path file);

  /// $HANOI_CACHE_DIR, else $XDG_CACHE_HOME/hanoi, else ~/.cache/hanoi.
  static std::filesystem::path default_directory();

  std::optional<std::uint64_t> lookup(int p, int n, const std::string& kind) const;
  void store(int p, int n, const std::string& kind, std::uint64_t value);
  /// Writes the file if anything changed; errors are swallowed.
  void flush() const;

  const std::filesystem::path& file() const noexcept { return file_; }

 private:
  static std::string key(int p, int n, const std::string& kind);

  std::filesystem::path file_;
  std::map<std::string, std::uint64_t> entries_;
  bool dirty_ = false;
};

/// Source of exact BFS values, optionally memoized.
class ExactOracle {
 public:
  explicit ExactOracle(SearchLimits limits = {}, BfsCache* cache = nullptr)
      : limits_(limits), cache_(cache) {}

  std::uint64_t H(int p, int n);
  std::uint64_t gamma(int p, int n);
  const SearchLimits& limits() const noexcept { return limits_; }

 private:
  template <typename Search>
  std::uint64_t cached(int p, int n, const std::string& kind, Search&& search);

  SearchLimits limits_;
  BfsCache* cache_;
};

}  // namespace hanoi
