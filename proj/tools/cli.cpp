#include "cli.hpp"

#include <CLI11.hpp>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quivercount/catalog.hpp"
#include "quivercount/catalog_cache.hpp"
#include "quivercount/errors.hpp"
#include "quivercount/json_io.hpp"
#include "quivercount/kac.hpp"
#include "quivercount/tree_modules.hpp"
#include "quivercount/verify.hpp"

namespace quivercount::cli {

namespace {

constexpr unsigned kTmTableGuard = 6;
constexpr long kKacDegreeGuard = 64;

struct Args {
  std::optional<unsigned> d;
  std::string quiver;
  std::optional<unsigned> dmax;
  std::optional<unsigned> g;
  std::string dim_vector;
  std::uint64_t seed = 1;
  std::optional<std::string> cache;
  std::string format = "text";
  bool force = false;
  std::optional<std::string> only;
};

// Every command fills all three renderings; the --format flag picks one.
struct Output {
  json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> text;
  int code = ok;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void render(const Output& o, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << o.doc.dump(2) << '\n';
  } else if (format == "csv") {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
      out << '\n';
    };
    line(o.header);
    for (const auto& r : o.rows) line(r);
  } else {
    for (const auto& l : o.text) out << l << '\n';
  }
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("malformed dimension vector '" + text + "'");
    }
    out.push_back(std::stoul(item));
  }
  if (out.empty()) throw InputError("empty dimension vector");
  return out;
}

unsigned require_d(const Args& a) {
  if (!a.d) throw InputError("missing d");
  return *a.d;
}

TMOptions tm_options(const Args& a) {
  TMOptions o;
  o.seed = a.seed;
  o.force = a.force;
  if (a.force) {
    o.brute_force_guard = std::numeric_limits<std::uint64_t>::max();
    o.max_morphisms = std::numeric_limits<std::uint64_t>::max();
  }
  return o;
}

std::vector<TreeQuiverEntry> load_catalog(const Args& a, unsigned d) {
  const auto cache = CatalogCache::from_environment(a.cache);
  return cache.load(d, a.force ? std::max(d, kDefaultMaxTreeVertices) : kDefaultMaxTreeVertices);
}

// ------------------------------------------------------------------ commands

Output cmd_trees(const Args& a) {
  const unsigned d = require_d(a);
  const auto entries = load_catalog(a, d);
  Output o;
  o.header = {"index", "quiver", "aut", "windings", "code"};
  json list = json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    list.push_back({{"quiver", e.quiver.to_string()}, {"aut", e.aut_order}, {"W", e.winding_counts},
                    {"code", e.canonical_code}});
    o.rows.push_back({std::to_string(i), e.quiver.to_string(), std::to_string(e.aut_order),
                      join(e.winding_counts, " "), e.canonical_code});
    o.text.push_back(std::to_string(i) + "  " + e.quiver.to_string() + "  aut=" + std::to_string(e.aut_order) +
                     "  W=" + join(e.winding_counts) + "  " + e.canonical_code);
  }
  o.text.push_back(std::to_string(entries.size()) + " tree quivers on " + std::to_string(d) + " vertices");
  o.doc = {{"d", d}, {"count", entries.size()}, {"entries", list}};
  return o;
}

Output cmd_orbit_poly(const Args& a) {
  const unsigned d = require_d(a);
  const auto entries = load_catalog(a, d);
  Output o;
  o.header = {"index", "quiver", "aut", "orbit_poly"};
  json list = json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const auto p = orbit_count_poly(e);
    list.push_back({{"quiver", e.quiver.to_string()}, {"aut", e.aut_order}, {"basis", "binomial"},
                    {"coeffs", binomial_poly_to_json(p)}});
    o.rows.push_back({std::to_string(i), e.quiver.to_string(), std::to_string(e.aut_order), p.to_string()});
    o.text.push_back(e.quiver.to_string() + "  " + p.to_string());
  }
  o.doc = {{"d", d}, {"entries", list}};
  return o;
}

Output cmd_tm_table(const Args& a) {
  const unsigned dmax = a.dmax.value_or(kTmTableGuard);
  if (dmax > kTmTableGuard && !a.force) {
    throw ResourceError("tm-table beyond d=" + std::to_string(kTmTableGuard) + " needs --force");
  }
  const auto options = tm_options(a);
  Output o;
  o.header = {"d"};
  for (unsigned k = 0; k < std::max(dmax, 1u); ++k) o.header.push_back("C(g," + std::to_string(k) + ")");
  json rows = json::array();
  for (unsigned d = 1; d <= dmax; ++d) {
    const auto p = *tm_sg(d, options).polynomial;
    rows.push_back({{"d", d}, {"basis", "binomial"}, {"coeffs", binomial_poly_to_json(p)}});
    std::vector<std::string> row{std::to_string(d)};
    for (unsigned k = 0; k < std::max(dmax, 1u); ++k) row.push_back(p.coefficient(k).get_str());
    o.rows.push_back(row);
    o.text.push_back("d=" + std::to_string(d) + ": " + p.to_string());
  }
  o.doc = {{"quiver", "S_g"}, {"rows", rows}};
  return o;
}

Output tm_output(const TMReport& r) {
  Output o;
  o.doc = tm_report_to_json(r);
  o.header = {"index", "dim_vector", "tree", "labels"};
  const std::string total = r.count ? r.count->get_str() : std::to_string(r.classes.size());
  o.text.push_back("quiver " + r.quiver + ", d=" + std::to_string(r.d) +
                   (r.dim_vector ? ", dim vector " + join(*r.dim_vector) : std::string()) +
                   (r.g ? ", g=" + std::to_string(*r.g) : std::string()) + ": " + total + " tree modules");
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const auto& c = r.classes[i];
    o.rows.push_back({std::to_string(i), join(c.dim_vector, " "), c.tree.to_string(), join(c.structure.arrow_map, " ")});
    o.text.push_back("  [" + join(c.dim_vector) + "]  " + c.tree.to_string() + "  labels " +
                     join(c.structure.arrow_map));
  }
  for (const auto& an : r.anomalies) o.text.push_back("  anomaly: " + an);
  if (!r.anomalies.empty()) o.code = check_failure;
  return o;
}

Output cmd_tm_count(const Args& a) {
  const auto q = parse_quiver(a.quiver);
  const auto options = tm_options(a);
  if (!a.dim_vector.empty()) return tm_output(tm_count_vector(q, parse_dims(a.dim_vector), options));
  return tm_output(tm_count(q, require_d(a), options));
}

Output cmd_tm_brute(const Args& a) {
  if (!a.g) throw InputError("tm-brute needs --g");
  return tm_output(tm_sg_bruteforce(*a.g, require_d(a), tm_options(a)));
}

KacResult guarded_kac(const Args& a, const Quiver& q, const std::vector<std::size_t>& dims) {
  if (dims.size() != q.vertex_count()) throw InputError("dimension vector length does not match the quiver");
  const long degree = 1 - euler_form(q, dims, dims);
  if (degree > kKacDegreeGuard && !a.force) {
    throw ResourceError("Kac polynomial degree bound " + std::to_string(degree) + " exceeds " +
                        std::to_string(kKacDegreeGuard) + "; use --force");
  }
  return kac_polynomial(q, dims);
}

Output cmd_kac(const Args& a) {
  const auto q = parse_quiver(a.quiver);
  std::vector<std::size_t> dims;
  if (!a.dim_vector.empty()) {
    dims = parse_dims(a.dim_vector);
  } else if (a.d && q.vertex_count() == 1) {
    dims = {*a.d};
  } else {
    throw InputError("kac needs --dim-vector (or d for a one-vertex quiver)");
  }
  const auto r = guarded_kac(a, q, dims);
  Output o;
  o.doc = kac_result_to_json(r);
  o.header = {"quiver", "dim_vector", "degree", "at_one", "polynomial"};
  o.rows.push_back({r.quiver.to_string(), join(r.dims, " "), std::to_string(r.degree), r.value_at_one.get_str(),
                    r.polynomial.to_string()});
  o.text.push_back("A(q) = " + r.polynomial.to_string());
  o.text.push_back("A(1) = " + r.value_at_one.get_str());
  if (!r.skip_chars.empty()) o.text.push_back("skipped characteristics: " + join(r.skip_chars));
  return o;
}

Output cmd_kac_table(const Args& a) {
  const unsigned g = a.g.value_or(2);
  const unsigned dmax = a.dmax.value_or(3);
  Output o;
  o.header = {"g", "d", "degree", "at_one", "polynomial"};
  json rows = json::array();
  const auto q = Quiver::loop_quiver(g);
  for (unsigned d = 1; d <= dmax; ++d) {
    const auto r = guarded_kac(a, q, {d});
    rows.push_back(kac_result_to_json(r));
    o.rows.push_back({std::to_string(g), std::to_string(d), std::to_string(r.degree), r.value_at_one.get_str(),
                      r.polynomial.to_string()});
    o.text.push_back("d=" + std::to_string(d) + ": " + r.polynomial.to_string() + "   A(1) = " +
                     r.value_at_one.get_str());
  }
  o.doc = {{"quiver", q.to_string()}, {"rows", rows}};
  return o;
}

Output cmd_compare(const Args& a) {
  const unsigned dmax = a.dmax.value_or(6);
  if (dmax > kTmTableGuard && !a.force) {
    throw ResourceError("compare beyond d=" + std::to_string(kTmTableGuard) + " needs --force");
  }
  const auto r = compare_report(dmax, a.g.value_or(4), a.seed);
  Output o;
  o.header = {"d", "g", "tm", "kac_at_one", "difference", "relation"};
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"d", row.d}, {"g", row.g}, {"tm", row.tm.get_str()}, {"kac_at_one", row.kac_at_one.get_str()},
                    {"difference", row.difference.get_str()}, {"relation", row.relation}});
    o.rows.push_back({std::to_string(row.d), std::to_string(row.g), row.tm.get_str(), row.kac_at_one.get_str(),
                      row.difference.get_str(), row.relation});
    o.text.push_back("d=" + std::to_string(row.d) + " g=" + std::to_string(row.g) + "  TM=" + row.tm.get_str() +
                     "  A(1)=" + row.kac_at_one.get_str() + "  diff=" + row.difference.get_str() + "  " +
                     row.relation);
  }
  json assertions = json::array();
  for (const auto& c : r.assertions) {
    assertions.push_back({{"item", c.item}, {"passed", c.passed}, {"detail", c.detail}});
    if (!c.passed) o.text.push_back("FAIL " + c.item + ": " + c.detail);
  }
  o.doc = {{"rows", rows}, {"assertions", assertions}, {"passed", r.all_passed()}};
  if (!r.all_passed()) o.code = check_failure;
  return o;
}

Output cmd_verify_all(const Args& a) {
  VerifyConfig config;
  config.seed = a.seed;
  config.dmax = a.dmax;
  config.only = a.only;
  config.cache = CatalogCache::from_environment(a.cache);
  const auto r = verify_all(config);
  Output o;
  o.doc = r.to_json();
  o.header = {"check", "item", "passed", "detail"};
  for (const auto& c : r.checks) {
    o.rows.push_back({c.name, c.item, c.passed ? "true" : "false", c.detail});
    o.text.push_back(std::string(c.passed ? "PASS " : "FAIL ") + c.name + " " + c.item +
                     (c.detail.empty() ? "" : ": " + c.detail));
  }
  for (const auto& t : r.tree_counts) {
    o.text.push_back("tree quivers d=" + std::to_string(t.d) + ": enumerated " + std::to_string(t.enumerated) +
                     (t.oracle ? ", oracle " + std::to_string(*t.oracle) : "") +
                     (t.published ? ", published " + std::to_string(*t.published) : ""));
  }
  for (const auto& n : r.notes) o.text.push_back("note: " + n);
  o.text.push_back(std::to_string(r.checks.size()) + " checks, " + std::to_string(r.failures()) + " failed");
  if (!r.all_passed()) o.code = check_failure;
  return o;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tree modules and Kac polynomials of quivers", "quivercount"};
  app.require_subcommand(1);
  Args a;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", a.seed, "Seed for randomized decisions");
    sub->add_option("--cache", a.cache, "Catalog cache directory (else $QUIVERCOUNT_CACHE)");
    sub->add_option("--format", a.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_flag("--force", a.force, "Ignore resource guards");
  };
  auto with_d = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("d", a.d, "Total dimension or vertex count");
    if (required) opt->required();
  };

  auto* trees = app.add_subcommand("trees", "List tree quivers on d vertices");
  with_d(trees, true);
  auto* orbit = app.add_subcommand("orbit-poly", "Orbit-count polynomial in g of each tree quiver on d vertices");
  with_d(orbit, true);
  auto* table = app.add_subcommand("tm-table", "TM of the g-loop quiver for d = 1..dmax");
  table->add_option("--dmax", a.dmax, "Largest d");
  auto* count = app.add_subcommand("tm-count", "Tree modules of a quiver by total dimension or dimension vector");
  count->add_option("quiver", a.quiver, "S<g>, A<n> or n:t>h,...")->required();
  with_d(count, false);
  count->add_option("--dim-vector", a.dim_vector, "Dimension vector a,b,c");
  auto* brute = app.add_subcommand("tm-brute", "Brute-force tree-module count for S_g");
  with_d(brute, true);
  brute->add_option("--g", a.g, "Number of loops")->required();
  auto* kac = app.add_subcommand("kac", "Kac polynomial of a quiver and dimension vector");
  kac->add_option("quiver", a.quiver, "S<g>, A<n> or n:t>h,...")->required();
  with_d(kac, false);
  kac->add_option("--dim-vector", a.dim_vector, "Dimension vector a,b,c");
  auto* kac_table = app.add_subcommand("kac-table", "Kac polynomials of S_g for d = 1..dmax");
  kac_table->add_option("--g", a.g, "Number of loops (default 2)");
  kac_table->add_option("--dmax", a.dmax, "Largest d (default 3)");
  auto* compare = app.add_subcommand("compare", "TM against the Kac polynomial at q = 1");
  compare->add_option("--dmax", a.dmax, "Largest d (default 6)");
  compare->add_option("--g", a.g, "Largest g (default 4)");
  auto* verify = app.add_subcommand("verify-all", "Run the cross-check suite");
  verify->add_option("--dmax", a.dmax, "Override the d range of the selected checks");
  verify->add_option("--only", a.only, "Run one named check");
  for (auto* sub : {trees, orbit, table, count, brute, kac, kac_table, compare, verify}) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : bad_input;
  }

  try {
    Output o;
    if (trees->parsed()) o = cmd_trees(a);
    else if (orbit->parsed()) o = cmd_orbit_poly(a);
    else if (table->parsed()) o = cmd_tm_table(a);
    else if (count->parsed()) o = cmd_tm_count(a);
    else if (brute->parsed()) o = cmd_tm_brute(a);
    else if (kac->parsed()) o = cmd_kac(a);
    else if (kac_table->parsed()) o = cmd_kac_table(a);
    else if (compare->parsed()) o = cmd_compare(a);
    else o = cmd_verify_all(a);
    render(o, a.format, out);
    return o.code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return bad_input;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return resource;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << '\n';
    return check_failure;
  }
}

}  // namespace quivercount::cli
