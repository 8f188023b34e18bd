#include "quivercount/json_io.hpp"

#include <array>
#include <limits>

#include "quivercount/errors.hpp"

namespace quivercount {

namespace {

constexpr char kAlphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int alphabet_index(char c) {
  if (c >= 'A' && c <= 'Z') return c - 'A';
  if (c >= 'a' && c <= 'z') return c - 'a' + 26;
  if (c >= '0' && c <= '9') return c - '0' + 52;
  if (c == '+') return 62;
  if (c == '/') return 63;
  return -1;
}

std::vector<std::size_t> size_vector(const json& j) {
  std::vector<std::size_t> out;
  for (const auto& x : j) out.push_back(x.get<std::size_t>());
  return out;
}

}  // namespace

std::string base64_encode(const std::string& bytes) {
  std::string out;
  std::size_t i = 0;
  for (; i + 2 < bytes.size(); i += 3) {
    const unsigned v = (static_cast<unsigned char>(bytes[i]) << 16) |
                       (static_cast<unsigned char>(bytes[i + 1]) << 8) | static_cast<unsigned char>(bytes[i + 2]);
    for (int s = 18; s >= 0; s -= 6) out += kAlphabet[(v >> s) & 63];
  }
  const std::size_t rest = bytes.size() - i;
  if (rest > 0) {
    unsigned v = static_cast<unsigned char>(bytes[i]) << 16;
    if (rest == 2) v |= static_cast<unsigned char>(bytes[i + 1]) << 8;
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += rest == 2 ? kAlphabet[(v >> 6) & 63] : '=';
    out += '=';
  }
  return out;
}

std::string base64_decode(const std::string& text) {
  if (text.size() % 4 != 0) throw InputError("base64 length not a multiple of 4");
  std::string out;
  for (std::size_t i = 0; i < text.size(); i += 4) {
    std::array<int, 4> v{};
    int pad = 0;
    for (int k = 0; k < 4; ++k) {
      const char c = text[i + k];
      if (c == '=' && i + 4 == text.size() && k >= 2) {
        ++pad;
        v[k] = 0;
        continue;
      }
      if (pad > 0) throw InputError("base64 padding in the middle");
      v[k] = alphabet_index(c);
      if (v[k] < 0) throw InputError("invalid base64 character");
    }
    const unsigned w = (v[0] << 18) | (v[1] << 12) | (v[2] << 6) | v[3];
    out += static_cast<char>((w >> 16) & 0xff);
    if (pad < 2) out += static_cast<char>((w >> 8) & 0xff);
    if (pad < 1) out += static_cast<char>(w & 0xff);
  }
  return out;
}

json integer_to_json(const Integer& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return json(x.get_si());
  return json(x.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw InputError("malformed integer string");
    return x;
  }
  throw InputError("expected an integer");
}

json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows()) arrows.push_back({a.tail, a.head});
  return {{"vertices", q.vertex_count()}, {"arrows", arrows}, {"text", q.to_string()}};
}

Quiver quiver_from_json(const json& j) {
  std::vector<Arrow> arrows;
  for (const auto& a : j.at("arrows")) arrows.push_back({a.at(0).get<std::size_t>(), a.at(1).get<std::size_t>()});
  return Quiver(j.at("vertices").get<std::size_t>(), std::move(arrows));
}

// ------------------------------------------------------------------ catalog

json catalog_to_json(unsigned d, const std::vector<TreeQuiverEntry>& entries) {
  json list = json::array();
  for (const auto& e : entries) {
    json arrows = json::array();
    for (const auto& a : e.quiver.arrows()) arrows.push_back({a.tail, a.head});
    list.push_back({{"code", base64_encode(e.canonical_code)},
                    {"arrows", arrows},
                    {"aut", e.aut_order},
                    {"W", e.winding_counts}});
  }
  return {{"d", d}, {"entries", list}};
}

std::optional<std::vector<TreeQuiverEntry>> catalog_from_json(const json& j, unsigned d) {
  try {
    if (j.at("d").get<unsigned>() != d) return std::nullopt;
    std::vector<TreeQuiverEntry> out;
    for (const auto& item : j.at("entries")) {
      std::vector<Arrow> arrows;
      for (const auto& a : item.at("arrows")) {
        arrows.push_back({a.at(0).get<std::size_t>(), a.at(1).get<std::size_t>()});
      }
      Quiver q(d, std::move(arrows));
      if (!q.is_tree()) return std::nullopt;
      TreeQuiverEntry e;
      e.canonical_code = base64_decode(item.at("code").get<std::string>());
      e.aut_order = item.at("aut").get<std::uint64_t>();
      e.winding_counts = item.at("W").get<std::vector<std::uint64_t>>();
      const auto cf = canonicalize(q);
      if (cf.code != e.canonical_code || cf.aut_order != e.aut_order || !(cf.relabeled == q)) return std::nullopt;
      if (winding_counts(q) != e.winding_counts) return std::nullopt;
      if (!out.empty() && !(out.back().canonical_code < e.canonical_code)) return std::nullopt;
      e.quiver = std::move(q);
      out.push_back(std::move(e));
    }
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// ------------------------------------------------------------------ reports

json binomial_poly_to_json(const BinomialPolyG& p) {
  json coeffs = json::object();
  for (const auto& [k, c] : p.coefficients()) {
    coeffs[std::to_string(k)] = is_integer(c) ? integer_to_json(Integer(c.get_num())) : json(c.get_str());
  }
  return coeffs;
}

json tm_report_to_json(const TMReport& report) {
  json j;
  j["quiver"] = report.quiver;
  j["d"] = report.d;
  if (report.dim_vector) j["dim_vector"] = *report.dim_vector;
  if (report.g) j["g"] = *report.g;
  j["basis"] = "binomial";
  if (report.polynomial) {
    j["coeffs"] = binomial_poly_to_json(*report.polynomial);
  } else if (report.count) {
    j["coeffs"] = {{"0", integer_to_json(*report.count)}};
  }
  if (report.count) j["count"] = integer_to_json(*report.count);
  json classes = json::array();
  for (const auto& c : report.classes) {
    classes.push_back({{"dim_vector", c.dim_vector},
                       {"tree_code", c.tree_code},
                       {"tree", c.tree.to_string()},
                       {"labels", c.structure.arrow_map}});
  }
  j["classes"] = classes;
  j["provenance"] = report.provenance;
  j["field_convention"] = report.field_convention;
  j["anomalies"] = report.anomalies;
  return j;
}

json kac_result_to_json(const KacResult& result) {
  json coeffs = json::array();
  for (const auto& c : result.polynomial.coefficients()) coeffs.push_back(integer_to_json(Integer(c.get_num())));
  return {{"quiver", result.quiver.to_string()},
          {"dim", result.dims},
          {"coeffs", coeffs},
          {"degree", result.degree},
          {"at_one", integer_to_json(Integer(result.value_at_one.get_num()))},
          {"skip_chars", result.skip_chars},
          {"recipe_variant", to_string(result.recipe)}};
}

json rep_to_json(const Rep<RationalField>& m) {
  json mats = json::array();
  for (const auto& mat : m.maps) {
    json rows = json::array();
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      json row = json::array();
      for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(mat(i, c).get_str());
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  return {{"quiver", m.quiver.to_string()}, {"field", m.field.name()}, {"dims", m.dims}, {"matrices", mats}};
}

Rep<RationalField> rep_from_json(const json& j) {
  try {
    if (j.at("field").get<std::string>() != "QQ") throw InputError("only QQ representations can be read");
    const RationalField k;
    auto m = zero_maps_rep(k, parse_quiver(j.at("quiver").get<std::string>()), size_vector(j.at("dims")));
    const auto& mats = j.at("matrices");
    if (mats.size() != m.maps.size()) throw InputError("wrong number of matrices");
    for (std::size_t a = 0; a < m.maps.size(); ++a) {
      auto& mat = m.maps[a];
      if (mats[a].size() != mat.rows()) throw InputError("matrix row count mismatch");
      for (std::size_t i = 0; i < mat.rows(); ++i) {
        if (mats[a][i].size() != mat.cols()) throw InputError("matrix column count mismatch");
        for (std::size_t c = 0; c < mat.cols(); ++c) mat(i, c) = parse_rational(mats[a][i][c].get<std::string>());
      }
    }
    validate_rep(m);
    return m;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed representation JSON: ") + e.what());
  }
}

}  // namespace quivercount
