#ifndef QUIVERCOUNT_CATALOG_HPP
#define QUIVERCOUNT_CATALOG_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quivercount/exact.hpp"
#include "quivercount/polynomial.hpp"
#include "quivercount/quiver.hpp"

namespace quivercount {

inline constexpr unsigned kDefaultMaxTreeVertices = 8;

/// One isomorphism class of oriented trees (tree quivers).
struct TreeQuiverEntry {
  /// Representative, vertices numbered in canonical preorder from the (bi)center.
  Quiver quiver;
  std::string canonical_code;
  std::uint64_t aut_order = 1;
  /// W_Q(1..#arrows): surjective arrow labelings onto k labels with no two arrows
  /// sharing a tail or a head receiving the same label.
  std::vector<std::uint64_t> winding_counts;

  std::size_t vertex_count() const { return quiver.vertex_count(); }
};

struct CanonicalForm {
  std::string code;
  std::uint64_t aut_order = 1;
  /// The input tree relabeled in canonical preorder.
  Quiver relabeled;
  /// relabeled vertex i corresponds to input vertex original_vertex[i].
  std::vector<std::size_t> original_vertex;
};

/// AHU-style encoding rooted at the center (or the smaller of the two bicenter
/// encodings); each child edge carries '>' (parent -> child) or '<' (child -> parent).
/// Throws InputError if q is not a tree.
CanonicalForm canonicalize(const Quiver& q);
std::string canonical_code(const Quiver& q);
std::uint64_t aut_order(const Quiver& q);

/// All oriented trees on d vertices up to isomorphism, ascending by canonical code.
/// Throws ResourceError when d > max_d, InputError when d == 0.
std::vector<TreeQuiverEntry> enumerate_tree_quivers(unsigned d, unsigned max_d = kDefaultMaxTreeVertices);

/// Graph on arrow indices; alpha ~ beta iff they share a tail or share a head.
struct ConflictGraph {
  std::size_t node_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

ConflictGraph conflict_graph(const Quiver& q);

/// chi_H(g): number of proper colorings with g colors (deletion-contraction).
PolyQ chromatic_polynomial(const ConflictGraph& h);

/// W_Q(1..#arrows) by inclusion-exclusion over the chromatic polynomial.
std::vector<std::uint64_t> winding_counts(const Quiver& q);

/// [Q : universal cover of S_g] = sum_k W_Q(k)/#Aut(Q) * C(g,k). The single-vertex
/// quiver yields C(g,0) = 1. Throws ConsistencyError on a non-integral coefficient.
BinomialPolyG orbit_count_poly(const TreeQuiverEntry& entry);

struct CayleyCheck {
  Integer lhs;  ///< 2^{d-1} d^{d-2}
  Integer rhs;  ///< sum over the catalog of d!/#Aut(Q)
};

CayleyCheck cayley_identity_check(unsigned d, unsigned max_d = kDefaultMaxTreeVertices);

/// Independent census of oriented trees: every labeled tree (Pruefer) with every
/// orientation, quotiented by brute-force relabeling. Orbit sizes are per class.
struct LabeledOrbitCensus {
  std::uint64_t labeled_count = 0;
  std::vector<std::uint64_t> orbit_sizes;
  std::size_t class_count() const { return orbit_sizes.size(); }
};

/// Feasible for d <= 7. Throws ResourceError above that.
LabeledOrbitCensus labeled_orbit_census(unsigned d);

/// Decodes a Pruefer sequence over {0..n-1} (length n-2) into n-1 undirected edges.
std::vector<std::pair<std::size_t, std::size_t>> pruefer_decode(const std::vector<std::size_t>& seq);

}  // namespace quivercount

#endif  // QUIVERCOUNT_CATALOG_HPP
