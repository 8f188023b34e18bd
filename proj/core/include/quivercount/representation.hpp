#ifndef QUIVERCOUNT_REPRESENTATION_HPP
#define QUIVERCOUNT_REPRESENTATION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quivercount/errors.hpp"
#include "quivercount/field.hpp"
#include "quivercount/matrix.hpp"
#include "quivercount/quiver.hpp"
#include "quivercount/upoly.hpp"

namespace quivercount {

/// A representation: one vector space per vertex and one matrix per arrow,
/// maps[a] of shape dims[head(a)] x dims[tail(a)].
template <ExactField F>
struct Rep {
  Quiver quiver;
  FieldSpec field;
  std::vector<std::size_t> dims;
  std::vector<MatrixOver<F>> maps;

  std::size_t total_dimension() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }
  bool is_sincere() const {
    return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d > 0; });
  }
  friend bool operator==(const Rep&, const Rep&) = default;
};

/// Morphism of representations: one matrix per vertex, phi[x] of shape N_x x M_x.
template <ExactField F>
using VertexMaps = std::vector<MatrixOver<F>>;

template <ExactField F>
void validate_rep(const Rep<F>& m) {
  if (m.dims.size() != m.quiver.vertex_count() || m.maps.size() != m.quiver.arrow_count()) {
    throw InputError("representation does not match its quiver");
  }
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    const auto& arr = m.quiver.arrow(a);
    if (m.maps[a].rows() != m.dims[arr.head] || m.maps[a].cols() != m.dims[arr.tail]) {
      throw InputError("matrix shape of arrow " + std::to_string(a) + " does not match dimensions");
    }
  }
}

template <ExactField F>
Rep<F> zero_maps_rep(const F& k, const Quiver& q, std::vector<std::size_t> dims) {
  Rep<F> m{q, k.spec(), std::move(dims), {}};
  if (m.dims.size() != q.vertex_count()) throw InputError("dimension vector length mismatch");
  for (const auto& a : q.arrows()) m.maps.push_back(zeros(k, m.dims[a.head], m.dims[a.tail]));
  return m;
}

/// One-dimensional at every vertex, identity on every arrow (the tree module of a tree).
template <ExactField F>
Rep<F> all_ones_rep(const F& k, const Quiver& q) {
  auto m = zero_maps_rep(k, q, std::vector<std::size_t>(q.vertex_count(), 1));
  for (auto& mat : m.maps) mat(0, 0) = k.one();
  return m;
}

/// The tree module of a tree quiver; InputError if t is not a tree.
template <ExactField F>
Rep<F> tree_identity_rep(const F& k, const Quiver& t) {
  if (!t.is_tree()) throw InputError("tree_identity_rep: quiver is not a tree");
  return all_ones_rep(k, t);
}

template <ExactField F>
Rep<F> simple_rep(const F& k, const Quiver& q, std::size_t vertex) {
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  dims.at(vertex) = 1;
  return zero_maps_rep(k, q, std::move(dims));
}

template <ExactField F>
Rep<F> direct_sum(const F& k, const Rep<F>& m, const Rep<F>& n) {
  if (!(m.quiver == n.quiver) || !(m.field == n.field)) throw InputError("direct sum of unrelated representations");
  std::vector<std::size_t> dims(m.dims.size());
  for (std::size_t x = 0; x < dims.size(); ++x) dims[x] = m.dims[x] + n.dims[x];
  auto out = zero_maps_rep(k, m.quiver, dims);
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    const auto& ma = m.maps[a];
    const auto& na = n.maps[a];
    auto& o = out.maps[a];
    for (std::size_t i = 0; i < ma.rows(); ++i) {
      for (std::size_t j = 0; j < ma.cols(); ++j) o(i, j) = ma(i, j);
    }
    for (std::size_t i = 0; i < na.rows(); ++i) {
      for (std::size_t j = 0; j < na.cols(); ++j) o(ma.rows() + i, ma.cols() + j) = na(i, j);
    }
  }
  return out;
}

/// f_*(V): the space at x is the direct sum of V_y over the fiber of x, ordered by
/// ascending source vertex; arrow alpha carries the sum of V_beta over beta in f^{-1}(alpha).
template <ExactField F>
Rep<F> pushforward(const F& k, const QuiverMorphism& f, const Rep<F>& v) {
  f.validate();
  if (!(v.quiver == f.source)) throw InputError("pushforward: representation lives on a different quiver");
  const auto& tgt = f.target;
  std::vector<std::size_t> dims(tgt.vertex_count(), 0);
  std::vector<std::size_t> offset(f.source.vertex_count(), 0);
  for (std::size_t y = 0; y < f.source.vertex_count(); ++y) {
    offset[y] = dims[f.vertex_map[y]];
    dims[f.vertex_map[y]] += v.dims[y];
  }
  auto out = zero_maps_rep(k, tgt, dims);
  out.field = v.field;
  for (std::size_t b = 0; b < f.source.arrow_count(); ++b) {
    const auto& beta = f.source.arrow(b);
    auto& target_map = out.maps[f.arrow_map[b]];
    const auto& block = v.maps[b];
    for (std::size_t i = 0; i < block.rows(); ++i) {
      for (std::size_t j = 0; j < block.cols(); ++j) {
        auto& cell = target_map(offset[beta.head] + i, offset[beta.tail] + j);
        cell = k.add(cell, block(i, j));
      }
    }
  }
  return out;
}

/// f^*(W): W_{f(x)} at x and W_{f(alpha)} on alpha.
template <ExactField F>
Rep<F> pullback(const F& k, const QuiverMorphism& f, const Rep<F>& w) {
  (void)k;
  f.validate();
  if (!(w.quiver == f.target)) throw InputError("pullback: representation lives on a different quiver");
  Rep<F> out{f.source, w.field, {}, {}};
  for (std::size_t x = 0; x < f.source.vertex_count(); ++x) out.dims.push_back(w.dims[f.vertex_map[x]]);
  for (std::size_t a = 0; a < f.source.arrow_count(); ++a) out.maps.push_back(w.maps[f.arrow_map[a]]);
  return out;
}

/// M' with M'_alpha = P_{h alpha} M_alpha P_{t alpha}^{-1}; P must be invertible at every vertex.
template <ExactField F>
Rep<F> base_change(const F& k, const Rep<F>& m, const VertexMaps<F>& p) {
  Rep<F> out = m;
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    const auto& arr = m.quiver.arrow(a);
    auto inv = inverse(k, p[arr.tail]);
    if (!inv) throw InputError("base change matrix is singular");
    out.maps[a] = multiply(k, multiply(k, p[arr.head], m.maps[a]), *inv);
  }
  return out;
}

// ------------------------------------------------------------------ Hom spaces

template <ExactField F>
struct HomBasis {
  std::vector<VertexMaps<F>> basis;
  std::size_t dimension() const { return basis.size(); }
};

template <ExactField F>
bool is_homomorphism(const F& k, const Rep<F>& m, const Rep<F>& n, const VertexMaps<F>& phi) {
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    const auto& arr = m.quiver.arrow(a);
    auto lhs = multiply(k, phi[arr.head], m.maps[a]);
    auto rhs = multiply(k, n.maps[a], phi[arr.tail]);
    if (!(lhs == rhs)) {
      // Rational entries compare canonically; this also covers finite fields.
      if (!is_zero_matrix(k, subtract(k, lhs, rhs))) return false;
    }
  }
  return true;
}

template <ExactField F>
VertexMaps<F> compose(const F& k, const VertexMaps<F>& psi, const VertexMaps<F>& phi) {
  VertexMaps<F> out;
  for (std::size_t x = 0; x < phi.size(); ++x) out.push_back(multiply(k, psi[x], phi[x]));
  return out;
}

template <ExactField F>
VertexMaps<F> identity_maps(const F& k, const Rep<F>& m) {
  VertexMaps<F> out;
  for (auto d : m.dims) out.push_back(identity(k, d));
  return out;
}

template <ExactField F>
VertexMaps<F> combine(const F& k, const HomBasis<F>& hom, const std::vector<typename F::Element>& coeffs,
                      const Rep<F>& m, const Rep<F>& n) {
  VertexMaps<F> out;
  for (std::size_t x = 0; x < m.dims.size(); ++x) out.push_back(zeros(k, n.dims[x], m.dims[x]));
  for (std::size_t i = 0; i < hom.basis.size(); ++i) {
    if (k.is_zero(coeffs[i])) continue;
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = add(k, out[x], scale(k, coeffs[i], hom.basis[i][x]));
  }
  return out;
}

/// Basis of Hom(M, N): solutions of phi_{h a} M_a = N_a phi_{t a} for every arrow a.
template <ExactField F>
HomBasis<F> hom_space(const F& k, const Rep<F>& m, const Rep<F>& n) {
  if (!(m.field == n.field) || !(m.field == k.spec())) throw InputError("hom_space: field mismatch");
  if (!(m.quiver == n.quiver)) throw InputError("hom_space: representations of different quivers");
  const std::size_t nv = m.quiver.vertex_count();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t x = 0; x < nv; ++x) offset[x + 1] = offset[x] + n.dims[x] * m.dims[x];
  const std::size_t unknowns = offset[nv];
  std::size_t equations = 0;
  for (const auto& a : m.quiver.arrows()) equations += n.dims[a.head] * m.dims[a.tail];

  auto system = zeros(k, equations, unknowns);
  std::size_t row = 0;
  // variable (x, r, c) is phi_x(r, c) at offset[x] + r * m.dims[x] + c
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    const auto& arr = m.quiver.arrow(a);
    const auto h = arr.head;
    const auto t = arr.tail;
    for (std::size_t i = 0; i < n.dims[h]; ++i) {
      for (std::size_t j = 0; j < m.dims[t]; ++j, ++row) {
        for (std::size_t l = 0; l < m.dims[h]; ++l) {
          const auto& c = m.maps[a](l, j);
          if (k.is_zero(c)) continue;
          auto& cell = system(row, offset[h] + i * m.dims[h] + l);
          cell = k.add(cell, c);
        }
        for (std::size_t l = 0; l < n.dims[t]; ++l) {
          const auto& c = n.maps[a](i, l);
          if (k.is_zero(c)) continue;
          auto& cell = system(row, offset[t] + l * m.dims[t] + j);
          cell = k.sub(cell, c);
        }
      }
    }
  }
  HomBasis<F> out;
  for (const auto& v : nullspace(k, system)) {
    VertexMaps<F> phi;
    for (std::size_t x = 0; x < nv; ++x) {
      auto mat = zeros(k, n.dims[x], m.dims[x]);
      for (std::size_t r = 0; r < n.dims[x]; ++r) {
        for (std::size_t c = 0; c < m.dims[x]; ++c) mat(r, c) = v[offset[x] + r * m.dims[x] + c];
      }
      phi.push_back(std::move(mat));
    }
    out.basis.push_back(std::move(phi));
  }
  return out;
}

template <ExactField F>
HomBasis<F> end_space(const F& k, const Rep<F>& m) {
  return hom_space(k, m, m);
}

// ------------------------------------------------------------------ endomorphism helpers

template <ExactField F>
bool is_invertible_maps(const F& k, const VertexMaps<F>& phi) {
  return std::all_of(phi.begin(), phi.end(), [&](const auto& mat) { return is_invertible(k, mat); });
}

template <ExactField F>
bool is_nilpotent_maps(const F& k, const VertexMaps<F>& e) {
  for (const auto& mat : e) {
    auto p = mat;
    for (std::size_t i = 1; i < mat.rows(); ++i) p = multiply(k, p, mat);
    if (mat.rows() > 0 && !is_zero_matrix(k, p)) return false;
  }
  return true;
}

template <class E>
std::vector<E> flatten(const std::vector<Matrix<E>>& e) {
  std::vector<E> v;
  for (const auto& m : e) v.insert(v.end(), m.data().begin(), m.data().end());
  return v;
}

/// Monic minimal polynomial of an endomorphism (Krylov sequence of powers).
template <ExactField F>
UPoly<F> minimal_polynomial(const F& k, const VertexMaps<F>& e) {
  std::size_t total = 0;
  for (const auto& m : e) total += m.rows();
  std::vector<std::vector<typename F::Element>> powers;
  VertexMaps<F> current;
  for (const auto& m : e) current.push_back(identity(k, m.rows()));
  for (std::size_t deg = 0; deg <= total; ++deg) {
    powers.push_back(flatten(current));
    const auto mat = from_columns(k, powers[0].size(), powers);
    auto kernel = nullspace(k, mat);
    if (!kernel.empty()) {
      // A dependency among I, e, ..., e^deg appears first at deg, so it involves e^deg.
      return make_monic(k, kernel.front());
    }
    current = compose(k, e, current);
  }
  throw ConsistencyError("minimal polynomial search exceeded the dimension bound");
}

template <ExactField F>
VertexMaps<F> evaluate_poly(const F& k, const UPoly<F>& p, const VertexMaps<F>& e) {
  VertexMaps<F> acc;
  for (const auto& m : e) acc.push_back(zeros(k, m.rows(), m.cols()));
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = compose(k, e, acc);
    for (std::size_t x = 0; x < acc.size(); ++x) {
      for (std::size_t d = 0; d < acc[x].rows(); ++d) acc[x](d, d) = k.add(acc[x](d, d), p[i]);
    }
  }
  return acc;
}

/// Fitting decomposition of an endomorphism u: for N = dim, V = ker u^N (+) im u^N.
/// Returns the projection onto im u^N along ker u^N when both summands are nonzero.
template <ExactField F>
std::optional<VertexMaps<F>> fitting_idempotent(const F& k, const VertexMaps<F>& u) {
  std::size_t total = 0;
  for (const auto& m : u) total += m.rows();
  VertexMaps<F> power = u;
  for (std::size_t i = 1; i < total; ++i) power = compose(k, u, power);
  std::size_t kernel_total = 0;
  std::size_t image_total = 0;
  VertexMaps<F> projection;
  for (const auto& p : power) {
    const auto image = column_space(k, p);
    const auto kernel = nullspace(k, p);
    kernel_total += kernel.size();
    image_total += image.size();
    auto basis_cols = image;
    basis_cols.insert(basis_cols.end(), kernel.begin(), kernel.end());
    const auto basis = from_columns(k, p.rows(), basis_cols);
    auto keep = zeros(k, p.rows(), p.rows());
    for (std::size_t i = 0; i < image.size(); ++i) keep(i, i) = k.one();
    if (p.rows() == 0) {
      projection.push_back(keep);
      continue;
    }
    auto inv = inverse(k, basis);
    if (!inv) throw ConsistencyError("Fitting summands are not complementary");
    projection.push_back(multiply(k, multiply(k, basis, keep), *inv));
  }
  if (kernel_total == 0 || image_total == 0) return std::nullopt;
  return projection;
}

// ------------------------------------------------------------------ deciders

struct DeciderOptions {
  /// Finite fields: exhaustive searches when |field|^dim stays below this.
  std::uint64_t exhaustive_limit = 1'000'000;
  /// Fitting trials (basis elements first, then seeded random combinations).
  unsigned fitting_trials = 24;
  /// Random invertibility trials per widening round in the isomorphism test.
  unsigned iso_trials_per_round = 4;
};

enum class IndecomposabilityVerdict { decomposable, indecomposable_certified, indecomposable_probabilistic };

template <ExactField F>
struct IndecomposabilityResult {
  IndecomposabilityVerdict verdict = IndecomposabilityVerdict::indecomposable_probabilistic;
  /// Idempotent endomorphism e not in {0, 1} when decomposable.
  std::optional<VertexMaps<F>> witness;
  bool indecomposable() const { return verdict != IndecomposabilityVerdict::decomposable; }
};

enum class IsoVerdict { yes, no_certified, no_probabilistic };

template <ExactField F>
struct IsoResult {
  IsoVerdict verdict = IsoVerdict::no_probabilistic;
  /// Invertible homomorphism M -> N when yes.
  std::optional<VertexMaps<F>> witness;
  /// Upper bound on the probability that an isomorphism exists but was missed.
  double failure_bound = 0.0;
  std::string reason;
  bool isomorphic() const { return verdict == IsoVerdict::yes; }
};

/// dim End(M) / rad End(M), computed over QQ as the rank of the trace form
/// (x, y) -> tr(x y) on End(M); valid in characteristic zero only.
std::size_t semisimple_quotient_dimension(const RationalField& k, const HomBasis<RationalField>& end);

namespace detail {

template <ExactField F>
typename F::Element random_scalar(const F& k, std::mt19937_64& rng, long range) {
  if constexpr (std::is_same_v<F, FiniteField>) {
    (void)range;
    std::uniform_int_distribution<std::uint32_t> dist(0, k.order() - 1);
    return static_cast<typename F::Element>(dist(rng));
  } else {
    std::uniform_int_distribution<long> dist(-range, range);
    return k.from_int(dist(rng));
  }
}

// Calls fn(coeffs) for every coefficient vector over a finite field; stops when fn returns true.
template <class Fn>
bool for_each_vector(const FiniteField& k, std::size_t length, Fn&& fn) {
  std::vector<FiniteField::Element> c(length, 0);
  while (true) {
    if (fn(c)) return true;
    std::size_t i = 0;
    while (i < length && ++c[i] == k.order()) c[i++] = 0;
    if (i == length) return false;
  }
}

inline bool below_limit(std::uint64_t base, std::size_t exponent, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    v *= base;
    if (v > limit) return false;
  }
  return true;
}

template <ExactField F>
bool is_idempotent_nontrivial(const F& k, const VertexMaps<F>& e) {
  const auto sq = compose(k, e, e);
  bool zero = true;
  bool one = true;
  for (std::size_t x = 0; x < e.size(); ++x) {
    if (!is_zero_matrix(k, subtract(k, sq[x], e[x]))) return false;
    zero = zero && is_zero_matrix(k, e[x]);
    one = one && is_zero_matrix(k, subtract(k, e[x], identity(k, e[x].rows())));
  }
  return !zero && !one;
}

}  // namespace detail

/// Fitting-based indecomposability test (see DeciderOptions for the search budgets).
template <ExactField F>
IndecomposabilityResult<F> is_indecomposable(const F& k, const Rep<F>& m, std::uint64_t seed,
                                             const DeciderOptions& opt = {}) {
  if (m.total_dimension() == 0) throw InputError("indecomposability of the zero representation");
  const auto end = end_space(k, m);
  IndecomposabilityResult<F> out;
  if (end.dimension() == 1) {
    out.verdict = IndecomposabilityVerdict::indecomposable_certified;
    return out;
  }
  if constexpr (std::is_same_v<F, RationalField>) {
    if (semisimple_quotient_dimension(k, end) == 1) {
      out.verdict = IndecomposabilityVerdict::indecomposable_certified;
      return out;
    }
  } else {
    if (detail::below_limit(k.order(), end.dimension(), opt.exhaustive_limit)) {
      VertexMaps<F> found;
      const bool hit = detail::for_each_vector(k, end.dimension(), [&](const auto& c) {
        auto e = combine(k, end, c, m, m);
        if (!detail::is_idempotent_nontrivial(k, e)) return false;
        found = std::move(e);
        return true;
      });
      if (hit) {
        out.verdict = IndecomposabilityVerdict::decomposable;
        out.witness = std::move(found);
      } else {
        out.verdict = IndecomposabilityVerdict::indecomposable_certified;
      }
      return out;
    }
  }
  std::mt19937_64 rng(seed);
  for (unsigned trial = 0; trial < opt.fitting_trials; ++trial) {
    std::vector<typename F::Element> coeffs(end.dimension(), k.zero());
    if (trial < end.dimension()) {
      coeffs[trial] = k.one();
    } else {
      for (auto& c : coeffs) c = detail::random_scalar(k, rng, 2);
    }
    const auto e = combine(k, end, coeffs, m, m);
    const auto minpoly = minimal_polynomial(k, e);
    const auto sqf = squarefree_part(k, minpoly);
    // A nilpotent-plus-scalar endomorphism carries no splitting information.
    if (degree<F>(sqf) < 2) continue;
    auto fr = find_factor(k, sqf);
    if (fr.status != FactorSearch::found) continue;
    if (auto idem = fitting_idempotent(k, evaluate_poly(k, fr.factor, e))) {
      out.verdict = IndecomposabilityVerdict::decomposable;
      out.witness = std::move(*idem);
      return out;
    }
  }
  out.verdict = IndecomposabilityVerdict::indecomposable_probabilistic;
  return out;
}

/// Over QQ: End/rad has dimension 1. Over GF(q): the nilpotent endomorphisms form a
/// subspace of codimension 1 (checked exhaustively; ResourceError beyond the limit).
template <ExactField F>
bool is_absolutely_indecomposable(const F& k, const Rep<F>& m, const DeciderOptions& opt = {}) {
  if (m.total_dimension() == 0) return false;
  const auto end = end_space(k, m);
  if (end.dimension() == 1) return true;
  if constexpr (std::is_same_v<F, RationalField>) {
    (void)opt;
    return semisimple_quotient_dimension(k, end) == 1;
  } else {
    if (!detail::below_limit(k.order(), end.dimension(), opt.exhaustive_limit)) {
      throw ResourceError("End(M) too large for exhaustive nilpotency census");
    }
    std::vector<std::vector<FiniteField::Element>> nilpotents;
    detail::for_each_vector(k, end.dimension(), [&](const auto& c) {
      if (is_nilpotent_maps(k, combine(k, end, c, m, m))) nilpotents.push_back(c);
      return false;
    });
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i + 1 < end.dimension(); ++i) expected *= k.order();
    if (nilpotents.size() != expected) return false;
    // q^(m-1) nilpotents spanning only an (m-1)-space means they fill that subspace.
    const auto span_rank = rank(k, from_columns(k, end.dimension(), nilpotents));
    return span_rank + 1 == end.dimension();
  }
}

/// Randomized isomorphism test; see IsoResult for the meaning of each verdict.
template <ExactField F>
IsoResult<F> is_isomorphic(const F& k, const Rep<F>& m, const Rep<F>& n, std::uint64_t seed,
                           const DeciderOptions& opt = {}) {
  if (!(m.field == n.field) || !(m.field == k.spec())) throw InputError("is_isomorphic: field mismatch");
  if (!(m.quiver == n.quiver)) throw InputError("is_isomorphic: different quivers");
  IsoResult<F> out;
  if (m.dims != n.dims) {
    out.verdict = IsoVerdict::no_certified;
    out.reason = "dimension vectors differ";
    return out;
  }
  const auto mn = hom_space(k, m, n);
  const auto nm = hom_space(k, n, m);
  const auto mm = end_space(k, m);
  const auto nn = end_space(k, n);
  if (mn.dimension() != nm.dimension() || mm.dimension() != nn.dimension() ||
      mn.dimension() != mm.dimension()) {
    out.verdict = IsoVerdict::no_certified;
    out.reason = "Hom/End dimensions differ";
    return out;
  }
  if (m.total_dimension() == 0) {
    out.verdict = IsoVerdict::yes;
    out.witness = identity_maps(k, m);
    return out;
  }
  if constexpr (std::is_same_v<F, FiniteField>) {
    if (detail::below_limit(k.order(), mn.dimension(), opt.exhaustive_limit)) {
      VertexMaps<F> found;
      const bool hit = detail::for_each_vector(k, mn.dimension(), [&](const auto& c) {
        auto phi = combine(k, mn, c, m, n);
        if (!is_invertible_maps(k, phi)) return false;
        found = std::move(phi);
        return true;
      });
      if (hit) {
        out.verdict = IsoVerdict::yes;
        out.witness = std::move(found);
      } else {
        out.verdict = IsoVerdict::no_certified;
        out.reason = "exhaustive search of Hom(M,N) found no invertible element";
      }
      return out;
    }
  }
  std::mt19937_64 rng(seed);
  const long ranges[] = {1, 8, 1L << 10, 1L << 30};
  double bound = 1.0;
  const double degree_bound = static_cast<double>(m.total_dimension());
  for (long range : ranges) {
    for (unsigned t = 0; t < opt.iso_trials_per_round; ++t) {
      std::vector<typename F::Element> coeffs(mn.dimension());
      for (auto& c : coeffs) c = detail::random_scalar(k, rng, range);
      auto phi = combine(k, mn, coeffs, m, n);
      if (is_invertible_maps(k, phi)) {
        out.verdict = IsoVerdict::yes;
        out.witness = std::move(phi);
        return out;
      }
      double sample_size;
      if constexpr (std::is_same_v<F, FiniteField>) {
        sample_size = static_cast<double>(k.order());
      } else {
        sample_size = static_cast<double>(2 * range + 1);
      }
      bound *= std::min(1.0, degree_bound / sample_size);
    }
  }
  out.verdict = IsoVerdict::no_probabilistic;
  out.failure_bound = bound;
  out.reason = "no invertible element among random samples of Hom(M,N)";
  return out;
}

/// Reruns a probabilistic negative with two further seeds before accepting it.
template <ExactField F>
IsoResult<F> is_isomorphic_robust(const F& k, const Rep<F>& m, const Rep<F>& n, std::uint64_t seed,
                                  const DeciderOptions& opt = {}) {
  IsoResult<F> last;
  double bound = 1.0;
  for (std::uint64_t s = 0; s < 3; ++s) {
    last = is_isomorphic(k, m, n, seed + 0x9e3779b97f4a7c15ULL * s, opt);
    if (last.verdict != IsoVerdict::no_probabilistic) return last;
    bound *= last.failure_bound;
  }
  last.failure_bound = bound;
  return last;
}

}  // namespace quivercount

#endif  // QUIVERCOUNT_REPRESENTATION_HPP
