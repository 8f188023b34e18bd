#ifndef QUIVERCOUNT_CATALOG_CACHE_HPP
#define QUIVERCOUNT_CATALOG_CACHE_HPP

#include <filesystem>
#include <optional>
#include <vector>

#include "quivercount/catalog.hpp"

namespace quivercount {

enum class CacheOutcome { hit, miss, rebuilt_corrupt, disabled };

/// Advisory on-disk store of tree-quiver catalogs, one file qcatalog-v1-d{N}.json per d.
/// Unreadable, stale or inconsistent files are ignored and rewritten.
class CatalogCache {
 public:
  /// No directory: every lookup recomputes and nothing is written.
  CatalogCache() = default;
  explicit CatalogCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// --cache flag when given, else $QUIVERCOUNT_CACHE, else no cache.
  static CatalogCache from_environment(const std::optional<std::filesystem::path>& flag);

  const std::optional<std::filesystem::path>& directory() const { return dir_; }
  std::filesystem::path path_for(unsigned d) const;

  std::vector<TreeQuiverEntry> load(unsigned d, unsigned max_d = kDefaultMaxTreeVertices,
                                    CacheOutcome* outcome = nullptr) const;

 private:
  void store(unsigned d, const std::vector<TreeQuiverEntry>& entries) const;

  std::optional<std::filesystem::path> dir_;
};

}  // namespace quivercount

#endif  // QUIVERCOUNT_CATALOG_CACHE_HPP
