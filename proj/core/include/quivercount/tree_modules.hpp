#ifndef QUIVERCOUNT_TREE_MODULES_HPP
#define QUIVERCOUNT_TREE_MODULES_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quivercount/catalog.hpp"
#include "quivercount/exact.hpp"
#include "quivercount/polynomial.hpp"
#include "quivercount/quiver.hpp"
#include "quivercount/representation.hpp"

namespace quivercount {

using RationalRep = Rep<RationalField>;

/// One isomorphism class of tree modules together with a structure quiver (T, f).
struct TreeModuleClass {
  RationalRep representative;
  std::vector<std::size_t> dim_vector;
  Quiver tree;
  std::string tree_code;
  QuiverMorphism structure;
};

struct TMReport {
  /// Target quiver in text form ("S2", "3:1>0,..."), or "S_g" for the formula in g.
  std::string quiver;
  unsigned d = 0;
  std::optional<std::vector<std::size_t>> dim_vector;
  std::optional<unsigned> g;
  /// Integer count; for the formula in g this is empty and `polynomial` is set.
  std::optional<Integer> count;
  std::optional<BinomialPolyG> polynomial;
  std::vector<TreeModuleClass> classes;
  /// "enumeration", "formula" or "brute-force".
  std::string provenance;
  /// Convention recorded with every report: classes are kept when End/rad has
  /// dimension 1 over QQ.
  std::string field_convention = "absolutely indecomposable over QQ";
  /// Indecomposable-over-QQ-but-not-absolutely cases and similar; must stay empty.
  std::vector<std::string> anomalies;
};

struct TMOptions {
  std::uint64_t seed = 1;
  /// Total morphisms examined before ResourceError.
  std::uint64_t max_morphisms = 50'000'000;
  /// Largest d accepted by tm_sg without force.
  unsigned max_d = 6;
  bool force = false;
  /// Guard for the brute-force oracle: #trees * g^(d-1).
  std::uint64_t brute_force_guard = 1'000'000;
  DeciderOptions deciders;
};

/// Calls visit for every quiver morphism T -> Q (root-first backtracking from vertex 0 of T,
/// candidate arrows in index order). With `sincere` only vertex-surjective maps are
/// produced; with target_dims only those with |f^{-1}(x)| = target_dims[x].
/// visit returns false to stop early.
void enumerate_morphisms(const Quiver& t, const Quiver& q, bool sincere,
                         const std::optional<std::vector<std::size_t>>& target_dims,
                         const std::function<bool(const QuiverMorphism&)>& visit);

std::vector<QuiverMorphism> enumerate_morphisms(const Quiver& t, const Quiver& q, bool sincere,
                                                const std::optional<std::vector<std::size_t>>& target_dims = {});

/// Exactly (total dimension - 1) nonzero entries, each equal to 1.
bool has_tree_sparsity(const RationalRep& m);

/// Incremental isomorphism-class reduction used by every counting routine.
class ClassCollector {
 public:
  explicit ClassCollector(const TMOptions& options) : options_(options) {}

  /// Pushes 1_T along f; returns true when it is absolutely indecomposable and new.
  bool offer(const Quiver& tree, const std::string& tree_code, const QuiverMorphism& f);
  /// As above for a prepared representation.
  bool offer_rep(RationalRep m, const Quiver& tree, const std::string& tree_code, const QuiverMorphism& f);

  const std::vector<TreeModuleClass>& classes() const { return classes_; }
  std::vector<TreeModuleClass> take_classes() { return std::move(classes_); }
  const std::vector<std::string>& anomalies() const { return anomalies_; }
  /// Index of a stored class isomorphic to m, if any.
  std::optional<std::size_t> find(const RationalRep& m, std::size_t end_dimension) const;

 private:
  struct Fingerprint {
    std::vector<std::size_t> dims;
    std::size_t end_dimension = 0;
    std::vector<std::size_t> ranks;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  };
  Fingerprint fingerprint(const RationalRep& m, std::size_t end_dimension) const;

  TMOptions options_;
  std::vector<TreeModuleClass> classes_;
  std::vector<Fingerprint> fingerprints_;
  std::vector<std::string> anomalies_;
};

/// TM_Q(d): sincere tree modules of total dimension d, up to isomorphism.
TMReport tm_count(const Quiver& q, unsigned d, const TMOptions& options = {});
/// TM_Q(d) refined by dimension vector.
TMReport tm_count_vector(const Quiver& q, const std::vector<std::size_t>& dims, const TMOptions& options = {});

/// TM_{S_g}(d) in the binomial basis: sum over tree quivers Q with at most d vertices of
/// [Q : universal cover] * TM_Q(d). ResourceError when d > max_d unless forced.
TMReport tm_sg(unsigned d, const TMOptions& options = {});

/// Direct count for fixed g: every tree on d vertices with every labeling by {0..g-1}.
TMReport tm_sg_bruteforce(unsigned g, unsigned d, const TMOptions& options = {});

/// The classes counted by tm_sg(d) at a fixed g, materialized: each TM_Q(d) class is
/// pushed to S_g along every winding Q -> S_g, then reduced up to isomorphism.
TMReport tm_sg_via_cover(unsigned g, unsigned d, const TMOptions& options = {});

/// For every class of `from`, the index of an isomorphic class of `to` (nullopt if none).
std::vector<std::optional<std::size_t>> match_classes(const TMReport& from, const TMReport& to,
                                                      const TMOptions& options = {});

struct LeadingTermCheck {
  unsigned d = 0;
  /// degree in g of tm_sg(d); must be d - 1
  int degree = -1;
  /// 2^{d-1} d^{d-2} / d
  Rational formula_lead;
  /// sum over the catalog of (d-1)!/#Aut(Q)
  Rational catalog_lead;
  /// coefficient of C(g, d-1) in tm_sg(d)
  Rational enumerated_lead;
  bool ok() const {
    return degree == static_cast<int>(d) - 1 && formula_lead == catalog_lead && catalog_lead == enumerated_lead;
  }
};

/// Uses `computed` when given instead of recomputing tm_sg(d).
LeadingTermCheck leading_term_check(unsigned d, const std::optional<BinomialPolyG>& computed = {},
                                    const TMOptions& options = {});

}  // namespace quivercount

#endif  // QUIVERCOUNT_TREE_MODULES_HPP
