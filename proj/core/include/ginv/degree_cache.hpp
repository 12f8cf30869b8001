#pragma once

#include "ginv/chartab.hpp"
#include "ginv/perm_group.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace ginv {

// SHA-256 over the degree and the sorted generator image arrays; hex.
std::string group_fingerprint(const PermGroup &g);

// One file per fingerprint under the cache directory:
//   GINVCACHE 1
//   <fingerprint hex>
//   <group order, decimal>
//   <degree:multiplicity pairs, sorted by degree, space separated>
// Reads tolerate missing/corrupt/mismatched entries by reporting a miss;
// writes go through a temp file and an atomic rename.
class DegreeCache {
public:
  // Resolution order: explicit dir, $GINV_CACHE_DIR, then a per-user default.
  explicit DegreeCache(std::optional<std::filesystem::path> dir = {});

  const std::filesystem::path &directory() const { return dir_; }

  std::optional<DegreeMultiset> get(const std::string &fingerprint) const;
  void put(const std::string &fingerprint, const DegreeMultiset &degrees) const;

  std::size_t entry_count() const;
  void clear() const;

private:
  std::filesystem::path dir_;
};

// character_degrees with a read-through cache.
DegreeMultiset cached_character_degrees(const PermGroup &g,
                                        const DegreeCache &cache);

} // namespace ginv
