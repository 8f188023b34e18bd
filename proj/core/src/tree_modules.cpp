#include "quivercount/tree_modules.hpp"

#include <map>
#include <mutex>

#include "quivercount/errors.hpp"

namespace quivercount {

namespace {

const std::vector<TreeQuiverEntry>& catalog_for(unsigned d) {
  static std::mutex mutex;
  static std::map<unsigned, std::vector<TreeQuiverEntry>> memo;
  std::lock_guard lock(mutex);
  auto it = memo.find(d);
  if (it == memo.end()) it = memo.emplace(d, enumerate_tree_quivers(d)).first;
  return it->second;
}

// Advances a base-`base` odometer; false once it wraps around.
bool next_labeling(std::vector<std::size_t>& labels, std::size_t base) {
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
    if (++*it < base) return true;
    *it = 0;
  }
  return false;
}

}  // namespace

// ------------------------------------------------------------------ morphisms

void enumerate_morphisms(const Quiver& t, const Quiver& q, bool sincere,
                         const std::optional<std::vector<std::size_t>>& target_dims,
                         const std::function<bool(const QuiverMorphism&)>& visit) {
  if (!t.is_tree()) throw InputError("enumerate_morphisms: source is not a tree");
  if (target_dims && target_dims->size() != q.vertex_count()) {
    throw InputError("enumerate_morphisms: dimension vector length mismatch");
  }
  const std::size_t n = t.vertex_count();
  if (q.vertex_count() == 0) return;

  // Root-first order; conn[i] is the arrow joining order[i] to an earlier vertex.
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t a = 0; a < t.arrow_count(); ++a) {
    incident[t.arrow(a).tail].push_back(a);
    incident[t.arrow(a).head].push_back(a);
  }
  std::vector<std::size_t> order{0};
  std::vector<std::size_t> conn{0};
  std::vector<bool> placed(n, false);
  placed[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto a : incident[order[i]]) {
      const auto other = t.arrow(a).tail == order[i] ? t.arrow(a).head : t.arrow(a).tail;
      if (placed[other]) continue;
      placed[other] = true;
      order.push_back(other);
      conn.push_back(a);
    }
  }

  QuiverMorphism f{t, q, std::vector<std::size_t>(n, 0), std::vector<std::size_t>(t.arrow_count(), 0)};
  std::vector<std::size_t> fiber(q.vertex_count(), 0);
  std::size_t covered = 0;
  bool stop = false;

  auto fits = [&](std::size_t x) { return !target_dims || fiber[x] < (*target_dims)[x]; };

  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (stop) return;
    if (sincere && q.vertex_count() - covered > n - i) return;
    if (i == n) {
      if (target_dims && fiber != *target_dims) return;
      if (!visit(f)) stop = true;
      return;
    }
    const auto v = order[i];
    const auto a = conn[i];
    const bool outward = t.arrow(a).head == v;  // arrow points from the placed vertex to v
    const auto anchor = f.vertex_map[outward ? t.arrow(a).tail : t.arrow(a).head];
    for (std::size_t b = 0; b < q.arrow_count() && !stop; ++b) {
      const auto& qb = q.arrow(b);
      if ((outward ? qb.tail : qb.head) != anchor) continue;
      const auto x = outward ? qb.head : qb.tail;
      if (!fits(x)) continue;
      f.vertex_map[v] = x;
      f.arrow_map[a] = b;
      if (fiber[x]++ == 0) ++covered;
      place(i + 1);
      if (--fiber[x] == 0) --covered;
    }
  };

  for (std::size_t x = 0; x < q.vertex_count() && !stop; ++x) {
    if (!fits(x)) continue;
    f.vertex_map[order[0]] = x;
    fiber[x] = 1;
    covered = 1;
    place(1);
    fiber[x] = 0;
    covered = 0;
  }
}

std::vector<QuiverMorphism> enumerate_morphisms(const Quiver& t, const Quiver& q, bool sincere,
                                                const std::optional<std::vector<std::size_t>>& target_dims) {
  std::vector<QuiverMorphism> out;
  enumerate_morphisms(t, q, sincere, target_dims, [&](const QuiverMorphism& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

bool has_tree_sparsity(const RationalRep& m) {
  std::size_t nonzero = 0;
  for (const auto& mat : m.maps) {
    for (const auto& x : mat.data()) {
      if (sgn(x) == 0) continue;
      if (x != 1) return false;
      ++nonzero;
    }
  }
  return nonzero + 1 == m.total_dimension();
}

// ------------------------------------------------------------------ class reduction

ClassCollector::Fingerprint ClassCollector::fingerprint(const RationalRep& m, std::size_t end_dimension) const {
  const RationalField k;
  Fingerprint fp{m.dims, end_dimension, {}};
  const auto& q = m.quiver;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) fp.ranks.push_back(rank(k, m.maps[a]));
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    for (std::size_t b = 0; b < q.arrow_count(); ++b) {
      if (q.arrow(a).head != q.arrow(b).tail) continue;
      fp.ranks.push_back(rank(k, multiply(k, m.maps[b], m.maps[a])));
    }
  }
  return fp;
}

std::optional<std::size_t> ClassCollector::find(const RationalRep& m, std::size_t end_dimension) const {
  const RationalField k;
  const auto fp = fingerprint(m, end_dimension);
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (!(fingerprints_[i] == fp)) continue;
    if (is_isomorphic_robust(k, m, classes_[i].representative, options_.seed, options_.deciders).isomorphic()) {
      return i;
    }
  }
  return std::nullopt;
}

bool ClassCollector::offer(const Quiver& tree, const std::string& tree_code, const QuiverMorphism& f) {
  const RationalField k;
  return offer_rep(pushforward(k, f, all_ones_rep(k, tree)), tree, tree_code, f);
}

bool ClassCollector::offer_rep(RationalRep m, const Quiver& tree, const std::string& tree_code,
                               const QuiverMorphism& f) {
  const RationalField k;
  const auto end = end_space(k, m);
  const bool absolute = end.dimension() == 1 || semisimple_quotient_dimension(k, end) == 1;
  if (!absolute) {
    if (is_indecomposable(k, m, options_.seed, options_.deciders).indecomposable()) {
      anomalies_.push_back("indecomposable over QQ but not absolutely: tree " + tree_code + " into " +
                           m.quiver.to_string());
    }
    return false;
  }
  if (find(m, end.dimension())) return false;
  if (!has_tree_sparsity(m)) {
    anomalies_.push_back("sparsity violated by tree " + tree_code + " into " + m.quiver.to_string());
  }
  fingerprints_.push_back(fingerprint(m, end.dimension()));
  auto dims = m.dims;
  classes_.push_back({std::move(m), std::move(dims), tree, tree_code, f});
  return true;
}

// ------------------------------------------------------------------ counts

namespace {

TMReport count_with_target(const Quiver& q, unsigned d, const std::optional<std::vector<std::size_t>>& dims,
                           const TMOptions& options) {
  if (d == 0) throw InputError("dimension must be positive");
  TMReport report;
  report.quiver = q.to_string();
  report.d = d;
  report.dim_vector = dims;
  report.provenance = "enumeration";
  ClassCollector collector(options);
  // A sincere representation of dimension d needs at most d vertices.
  if (q.vertex_count() <= d) {
    std::uint64_t seen = 0;
    for (const auto& entry : catalog_for(d)) {
      enumerate_morphisms(entry.quiver, q, true, dims, [&](const QuiverMorphism& f) {
        if (++seen > options.max_morphisms) {
          throw ResourceError("morphism budget exhausted at tree " + entry.canonical_code + " after " +
                              std::to_string(seen - 1) + " morphisms into " + q.to_string());
        }
        collector.offer(entry.quiver, entry.canonical_code, f);
        return true;
      });
    }
  }
  report.anomalies = collector.anomalies();
  report.classes = collector.take_classes();
  report.count = Integer(static_cast<unsigned long>(report.classes.size()));
  return report;
}

}  // namespace

TMReport tm_count(const Quiver& q, unsigned d, const TMOptions& options) {
  return count_with_target(q, d, std::nullopt, options);
}

TMReport tm_count_vector(const Quiver& q, const std::vector<std::size_t>& dims, const TMOptions& options) {
  if (dims.size() != q.vertex_count()) throw InputError("dimension vector length mismatch");
  std::size_t d = 0;
  for (auto x : dims) {
    if (x == 0) throw InputError("dimension vector must be sincere");
    d += x;
  }
  auto report = count_with_target(q, static_cast<unsigned>(d), dims, options);
  return report;
}

TMReport tm_sg(unsigned d, const TMOptions& options) {
  if (d == 0) throw InputError("dimension must be positive");
  if (d > options.max_d && !options.force) {
    throw ResourceError("tm_sg(" + std::to_string(d) + ") exceeds the configured maximum " +
                        std::to_string(options.max_d));
  }
  TMReport report;
  report.quiver = "S_g";
  report.d = d;
  report.provenance = "formula";
  BinomialPolyG total;
  for (unsigned s = 1; s <= d; ++s) {
    for (const auto& entry : catalog_for(s)) {
      const auto tm = tm_count(entry.quiver, d, options);
      report.anomalies.insert(report.anomalies.end(), tm.anomalies.begin(), tm.anomalies.end());
      if (*tm.count == 0) continue;
      total += orbit_count_poly(entry) * Rational(*tm.count);
    }
  }
  report.polynomial = total;
  return report;
}

TMReport tm_sg_bruteforce(unsigned g, unsigned d, const TMOptions& options) {
  if (d == 0) throw InputError("dimension must be positive");
  const auto& trees = catalog_for(d);
  std::uint64_t work = trees.size();
  for (unsigned i = 0; i + 1 < d; ++i) {
    work *= g;
    if (work > options.brute_force_guard) {
      throw ResourceError("brute-force guard exceeded for g=" + std::to_string(g) + ", d=" + std::to_string(d));
    }
  }
  TMReport report;
  report.quiver = "S" + std::to_string(g);
  report.d = d;
  report.g = g;
  report.provenance = "brute-force";
  ClassCollector collector(options);
  for (const auto& entry : trees) {
    std::vector<std::size_t> labels(entry.quiver.arrow_count(), 0);
    if (g == 0 && !labels.empty()) continue;
    do {
      collector.offer(entry.quiver, entry.canonical_code, QuiverMorphism::to_loop_quiver(entry.quiver, g, labels));
    } while (next_labeling(labels, g));
  }
  report.anomalies = collector.anomalies();
  report.classes = collector.take_classes();
  report.count = Integer(static_cast<unsigned long>(report.classes.size()));
  return report;
}

TMReport tm_sg_via_cover(unsigned g, unsigned d, const TMOptions& options) {
  if (d == 0) throw InputError("dimension must be positive");
  const RationalField k;
  TMReport report;
  report.quiver = "S" + std::to_string(g);
  report.d = d;
  report.g = g;
  report.provenance = "formula";
  ClassCollector collector(options);
  for (unsigned s = 1; s <= d; ++s) {
    for (const auto& entry : catalog_for(s)) {
      const auto tm = tm_count(entry.quiver, d, options);
      report.anomalies.insert(report.anomalies.end(), tm.anomalies.begin(), tm.anomalies.end());
      if (tm.classes.empty()) continue;
      const auto conflicts = conflict_graph(entry.quiver);
      std::vector<std::size_t> winding(entry.quiver.arrow_count(), 0);
      if (g == 0 && !winding.empty()) continue;
      do {
        bool proper = true;
        for (const auto& [a, b] : conflicts.edges) proper = proper && winding[a] != winding[b];
        if (!proper) continue;
        const auto w = QuiverMorphism::to_loop_quiver(entry.quiver, g, winding);
        for (const auto& cls : tm.classes) {
          std::vector<std::size_t> labels;
          for (auto b : cls.structure.arrow_map) labels.push_back(winding[b]);
          collector.offer_rep(pushforward(k, w, cls.representative), cls.tree, cls.tree_code,
                              QuiverMorphism::to_loop_quiver(cls.tree, g, labels));
        }
      } while (next_labeling(winding, g));
    }
  }
  const auto& extra = collector.anomalies();
  report.anomalies.insert(report.anomalies.end(), extra.begin(), extra.end());
  report.classes = collector.take_classes();
  report.count = Integer(static_cast<unsigned long>(report.classes.size()));
  return report;
}

std::vector<std::optional<std::size_t>> match_classes(const TMReport& from, const TMReport& to,
                                                      const TMOptions& options) {
  const RationalField k;
  std::vector<std::optional<std::size_t>> out;
  for (const auto& c : from.classes) {
    std::optional<std::size_t> hit;
    for (std::size_t j = 0; j < to.classes.size() && !hit; ++j) {
      if (!(to.classes[j].representative.quiver == c.representative.quiver)) continue;
      if (to.classes[j].dim_vector != c.dim_vector) continue;
      if (is_isomorphic_robust(k, c.representative, to.classes[j].representative, options.seed, options.deciders)
              .isomorphic()) {
        hit = j;
      }
    }
    out.push_back(hit);
  }
  return out;
}

LeadingTermCheck leading_term_check(unsigned d, const std::optional<BinomialPolyG>& computed,
                                    const TMOptions& options) {
  if (d == 0) throw InputError("dimension must be positive");
  LeadingTermCheck out;
  out.d = d;
  out.formula_lead = Rational(power(Integer(2), d - 1)) * power(Rational(d), d - 1) / Rational(d) / Rational(d);
  for (const auto& entry : catalog_for(d)) {
    out.catalog_lead += Rational(factorial(d - 1)) / Rational(Integer(static_cast<unsigned long>(entry.aut_order)));
  }
  const auto poly = computed ? *computed : *tm_sg(d, options).polynomial;
  out.degree = poly.degree();
  out.enumerated_lead = poly.coefficient(d - 1);
  return out;
}

}  // namespace quivercount
