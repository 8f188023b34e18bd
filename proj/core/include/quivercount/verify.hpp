#ifndef QUIVERCOUNT_VERIFY_HPP
#define QUIVERCOUNT_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quivercount/catalog_cache.hpp"
#include "quivercount/json_io.hpp"
#include "quivercount/polynomial.hpp"

namespace quivercount {

/// TM_{S_g}(d) rows for d = 1..6 as published, in the binomial basis.
const std::map<unsigned, BinomialPolyG>& reference_tm_table();
/// TM_{S_g}(6) - A_{S_g}(6, 1) as published.
BinomialPolyG reference_d6_difference();
/// Published counts of tree quivers by vertex count (d = 3..6).
const std::map<unsigned, std::uint64_t>& published_tree_counts();

struct CheckResult {
  std::string name;
  std::string item;
  bool passed = false;
  std::string detail;
};

struct TreeCountComparison {
  unsigned d = 0;
  std::uint64_t enumerated = 0;
  std::optional<std::uint64_t> oracle;
  std::optional<std::uint64_t> published;
};

struct VerifyConfig {
  std::uint64_t seed = 1;
  /// Overrides the d range of every selected check when set.
  std::optional<unsigned> dmax;
  /// Run a single named check.
  std::optional<std::string> only;
  CatalogCache cache;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<TreeCountComparison> tree_counts;
  std::vector<std::string> notes;

  bool all_passed() const;
  std::size_t failures() const;
  json to_json() const;
};

/// Names accepted by VerifyConfig::only, in execution order.
const std::vector<std::string>& check_names();

/// Runs the selected checks; failures (including exceptions) are collected, never fatal.
/// InputError for an unknown check name.
VerifyReport verify_all(const VerifyConfig& config);

/// TM_{S_g}(d) against A_{S_g}(d, 1) on a (d, g) grid.
struct CompareRow {
  unsigned d = 0;
  unsigned g = 0;
  Rational tm;
  Rational kac_at_one;
  Rational difference;
  /// "equal", "greater" or "less"
  std::string relation;
};

struct CompareReport {
  std::vector<CompareRow> rows;
  /// Published facts re-checked on the grid: equality for d <= 5, the d = 6 difference
  /// identity, and strict inequality at d = 6 for g > 1.
  std::vector<CheckResult> assertions;
  bool all_passed() const;
};

CompareReport compare_report(unsigned dmax, unsigned gmax, std::uint64_t seed = 1);

/// Certified-versus-exhaustive agreement of the indecomposability and isomorphism deciders on
/// every representation with entries in {0, 1} from a fixed family of small quivers with
/// total dimension <= max_total.
struct DeciderAgreement {
  std::uint64_t representations = 0;
  std::uint64_t iso_pairs = 0;
  std::uint64_t grid_searches = 0;
  std::uint64_t grid_skipped = 0;
  std::vector<std::string> disagreements;
};

DeciderAgreement decider_agreement(unsigned max_total, std::uint64_t seed);

}  // namespace quivercount

#endif  // QUIVERCOUNT_VERIFY_HPP
