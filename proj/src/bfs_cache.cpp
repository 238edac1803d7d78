#include "hanoi/bfs_cache.hpp"

#include <cstdlib>
#include <fstream>

#include "json.hpp"

namespace hanoi {

BfsCache::BfsCache(std::filesystem::path file) : file_(std::move(file)) {
  std::ifstream in(file_);
  if (!in) return;
  try {
    const auto j = nlohmann::json::parse(in);
    for (const auto& [k, v] : j.at("entries").items()) entries_[k] = v.get<std::uint64_t>();
  } catch (const std::exception&) {
    entries_.clear();
  }
}

std::filesystem::path BfsCache::default_directory() {
  if (const char* dir = std::getenv("HANOI_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "hanoi";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "hanoi";
  }
  return std::filesystem::temp_directory_path() / "hanoi";
}

std::string BfsCache::key(int p, int n, const std::string& kind) {
  return "p=" + std::to_string(p) + ",N=" + std::to_string(n) + ",kind=" + kind +
         ",engine=" + std::to_string(kEngineVersion);
}

std::optional<std::uint64_t> BfsCache::lookup(int p, int n, const std::string& kind) const {
  const auto it = entries_.find(key(p, n, kind));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void BfsCache::store(int p, int n, const std::string& kind, std::uint64_t value) {
  entries_[key(p, n, kind)] = value;
  dirty_ = true;
}

void BfsCache::flush() const {
  if (!dirty_) return;
  std::error_code ec;
  std::filesystem::create_directories(file_.parent_path(), ec);
  nlohmann::json j;
  j["entries"] = entries_;
  const auto tmp = file_.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, file_, ec);
}

template <typename Search>
std::uint64_t ExactOracle::cached(int p, int n, const std::string& kind, Search&& search) {
  if (cache_) {
    if (const auto hit = cache_->lookup(p, n, kind)) return *hit;
  }
  const std::uint64_t v = search();
  if (cache_) cache_->store(p, n, kind, v);
  return v;
}

std::uint64_t ExactOracle::H(int p, int n) {
  return cached(p, n, "H", [&] { return exact_H(p, n, limits_); });
}

std::uint64_t ExactOracle::gamma(int p, int n) {
  return cached(p, n, "gamma", [&] { return exact_gamma(p, n, limits_); });
}

}  // namespace hanoi
