#include "quivercount/catalog_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <system_error>

#include "quivercount/errors.hpp"
#include "quivercount/json_io.hpp"

namespace quivercount {

CatalogCache CatalogCache::from_environment(const std::optional<std::filesystem::path>& flag) {
  if (flag) return CatalogCache(*flag);
  if (const char* env = std::getenv("QUIVERCOUNT_CACHE"); env && *env) return CatalogCache(env);
  return CatalogCache();
}

std::filesystem::path CatalogCache::path_for(unsigned d) const {
  if (!dir_) throw InputError("catalog cache has no directory");
  return *dir_ / ("qcatalog-v1-d" + std::to_string(d) + ".json");
}

std::vector<TreeQuiverEntry> CatalogCache::load(unsigned d, unsigned max_d, CacheOutcome* outcome) const {
  auto report = [&](CacheOutcome o) {
    if (outcome) *outcome = o;
  };
  if (d > max_d) {
    throw ResourceError("tree enumeration limited to d <= " + std::to_string(max_d));
  }
  if (!dir_) {
    report(CacheOutcome::disabled);
    return enumerate_tree_quivers(d, max_d);
  }
  const auto path = path_for(d);
  CacheOutcome result = CacheOutcome::miss;
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    const auto parsed = json::parse(in, nullptr, false);
    if (!parsed.is_discarded()) {
      if (auto entries = catalog_from_json(parsed, d)) {
        // Entries are individually re-derived; completeness follows from the orbit-size sum.
        Integer sum = 0;
        for (const auto& e : *entries) sum += factorial(d) / Integer(static_cast<unsigned long>(e.aut_order));
        const Integer labeled = d >= 2 ? power(Integer(d), d - 2) : Integer(1);
        if (sum == power(Integer(2), d - 1) * labeled) {
          report(CacheOutcome::hit);
          return *entries;
        }
      }
    }
    result = CacheOutcome::rebuilt_corrupt;
  }
  auto entries = enumerate_tree_quivers(d, max_d);
  store(d, entries);
  report(result);
  return entries;
}

void CatalogCache::store(unsigned d, const std::vector<TreeQuiverEntry>& entries) const {
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  if (ec) return;  // advisory: an unwritable cache is not an error
  const auto final_path = path_for(d);
  std::random_device rd;
  auto tmp = final_path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << catalog_to_json(d, entries).dump(1) << '\n';
    if (!out) {
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace quivercount
