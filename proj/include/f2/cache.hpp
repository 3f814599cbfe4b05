#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "f2/lattice.hpp"

namespace f2 {

inline constexpr const char* kEngineVersion = "f2-lattice-1";

/// `$F2_CACHE_DIR`, else `$HOME/.cache/f2`, else none.
inline std::optional<std::filesystem::path> default_cache_dir() {
  if (const char* dir = std::getenv("F2_CACHE_DIR"); dir && *dir) return std::filesystem::path(dir);
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "f2";
  return std::nullopt;
}

/// On-disk store of subgroup lattices, keyed by the hash of the canonical
/// element table and the engine version.
class LatticeCache {
 public:
  explicit LatticeCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const noexcept { return dir_; }

  std::filesystem::path path_for(const CayleyTable& t) const {
    std::ostringstream name;
    name << "lattice-" << std::hex << std::setw(16) << std::setfill('0') << t.fingerprint_hash() << ".txt";
    return dir_ / name.str();
  }

  /// A cached lattice, or nullopt when absent, stale or malformed.
  std::optional<Lattice> load(std::shared_ptr<const CayleyTable> table) const {
    std::ifstream in(path_for(*table));
    if (!in) return std::nullopt;
    std::string version, key;
    std::size_t order = 0, count = 0;
    if (!(in >> version) || version != kEngineVersion) return std::nullopt;
    if (!(in >> key >> order) || key != "order" || order != table->order()) return std::nullopt;
    if (!(in >> key >> count) || key != "count") return std::nullopt;
    const std::size_t words = (order + 63) / 64;
    std::vector<SubgroupSet> subs;
    subs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<std::uint64_t> w(words);
      for (auto& x : w)
        if (!(in >> std::hex >> x >> std::dec)) return std::nullopt;
      auto s = SubgroupSet::from_words(order, std::move(w));
      if (!s.contains(0) || order % s.order() != 0) return std::nullopt;
      subs.push_back(std::move(s));
    }
    return Lattice(std::move(table), std::move(subs));
  }

  /// Writes atomically (temporary file + rename); failures are ignored.
  void store(const Lattice& lat) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return;
    const auto target = path_for(lat.table());
    auto tmp = target;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
      std::ofstream out(tmp);
      if (!out) return;
      out << kEngineVersion << "\norder " << lat.table().order() << "\ncount " << lat.size() << "\n" << std::hex;
      for (const auto& s : lat.subgroups()) {
        for (std::size_t i = 0; i < s.words().size(); ++i) out << (i ? " " : "") << s.words()[i];
        out << "\n";
      }
      if (!out) return;
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }

 private:
  std::filesystem::path dir_;
};

/// The lattice of a table, through the cache when one is given.
inline Lattice cached_lattice(std::shared_ptr<const CayleyTable> table, const LatticeCache* cache, unsigned jobs = 1) {
  if (cache)
    if (auto hit = cache->load(table)) return std::move(*hit);
  auto lat = all_subgroups(std::move(table), jobs);
  if (cache) cache->store(lat);
  return lat;
}

}  // namespace f2
