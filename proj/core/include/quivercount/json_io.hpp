#ifndef QUIVERCOUNT_JSON_IO_HPP
#define QUIVERCOUNT_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quivercount/catalog.hpp"
#include "quivercount/kac.hpp"
#include "quivercount/representation.hpp"
#include "quivercount/tree_modules.hpp"

namespace quivercount {

using json = nlohmann::json;

std::string base64_encode(const std::string& bytes);
/// InputError on characters outside the standard alphabet or bad padding.
std::string base64_decode(const std::string& text);

/// JSON number when it fits in int64, decimal string otherwise.
json integer_to_json(const Integer& x);
/// Accepts both forms written by integer_to_json.
Integer integer_from_json(const json& j);

json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

/// {"d": N, "entries": [{"code", "arrows", "aut", "W"}]} in the given (ascending) order.
json catalog_to_json(unsigned d, const std::vector<TreeQuiverEntry>& entries);
/// Rebuilds and re-derives every entry; nullopt when anything is missing, malformed,
/// out of order or inconsistent with recomputation.
std::optional<std::vector<TreeQuiverEntry>> catalog_from_json(const json& j, unsigned d);

json binomial_poly_to_json(const BinomialPolyG& p);
json tm_report_to_json(const TMReport& report);
json kac_result_to_json(const KacResult& result);

/// {"quiver", "field", "dims", "matrices": [[["1","0"],...],...]} with rational strings.
json rep_to_json(const Rep<RationalField>& m);
Rep<RationalField> rep_from_json(const json& j);

}  // namespace quivercount

#endif  // QUIVERCOUNT_JSON_IO_HPP
