#ifndef QUIVERCOUNT_KAC_HPP
#define QUIVERCOUNT_KAC_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quivercount/exact.hpp"
#include "quivercount/field.hpp"
#include "quivercount/polynomial.hpp"
#include "quivercount/quiver.hpp"

namespace quivercount {

/// Euler form <d, e> = sum_i d_i e_i - sum_a d_{ta} e_{ha}.
long euler_form(const Quiver& q, const std::vector<std::size_t>& d, const std::vector<std::size_t>& e);

/// Truncated power series in one variable per vertex, indexed by exponent vectors e <= bound.
class MultiSeries {
 public:
  explicit MultiSeries(std::vector<std::size_t> bound);

  const std::vector<std::size_t>& bound() const { return bound_; }
  std::size_t size() const { return coeffs_.size(); }
  Rational& operator[](const std::vector<std::size_t>& e) { return coeffs_[index(e)]; }
  const Rational& operator[](const std::vector<std::size_t>& e) const { return coeffs_[index(e)]; }
  Rational& at_index(std::size_t i) { return coeffs_[i]; }
  const Rational& at_index(std::size_t i) const { return coeffs_[i]; }
  std::size_t index(const std::vector<std::size_t>& e) const;
  std::vector<std::size_t> exponent(std::size_t index) const;

  /// Formal logarithm; requires constant term 1.
  MultiSeries log() const;

 private:
  std::vector<std::size_t> bound_;
  std::vector<std::size_t> stride_;
  std::vector<Rational> coeffs_;
};

/// Hua's generating series at the integer q0 >= 2, truncated at `bound`: the coefficient
/// of X^e sums, over multipartitions with |lambda^i| = e_i,
///   prod_a q0^<lambda^{ta}, lambda^{ha}> / prod_i q0^<lambda^i, lambda^i> b_{lambda^i}(1/q0).
/// InputError for q0 in {-1, 0, 1}.
MultiSeries hua_series_at(const Quiver& q, const std::vector<std::size_t>& bound, const Integer& q0);

/// Where the factor (q - 1) sits in the plethystic logarithm.
enum class HuaRecipe {
  /// A(q) = (q - 1) [X^d] sum_k mu(k)/k (log P)(X^k, q^k)
  primary,
  /// A(q) = [X^d] sum_k mu(k)/k (q^k - 1) (log P)(X^k, q^k)
  alternate,
};

std::string to_string(HuaRecipe r);

/// A_Q(d, q0) for one integer q0 >= 2.
Rational hua_value_at(const Quiver& q, const std::vector<std::size_t>& d, const Integer& q0, HuaRecipe recipe);

struct KacOptions {
  /// Largest polynomial degree attempted (after doubling) before ResourceError.
  long max_degree = 4096;
  /// Recipe to use; empty means the one selected by the pinned-value gate.
  std::optional<HuaRecipe> recipe;
};

struct KacResult {
  Quiver quiver;
  std::vector<std::size_t> dims;
  PolyQ polynomial;
  Rational value_at_one;
  int degree = -1;
  /// Characteristics on the documented skip-list for this instance.
  std::vector<std::uint32_t> skip_chars;
  HuaRecipe recipe = HuaRecipe::primary;
};

/// Interpolates A_Q(d, q) from the abscissas 2, 3, ..., with one extra point checking the
/// Euler-form degree bound (raised by doubling on mismatch). ConsistencyError unless the
/// result has integer coefficients and is monic (or zero).
KacResult kac_polynomial(const Quiver& q, const std::vector<std::size_t>& d, const KacOptions& options = {});

/// The recipe that reproduces both pinned polynomials, primary first.
/// ConsistencyError if neither does.
HuaRecipe validated_recipe();

/// A_{S_g}(d, 1) as a polynomial in g of degree d - 1, fitted on g = 0..d-1 (or the given
/// values) and checked at one extra g. ConsistencyError if the check fails.
BinomialPolyG kac_at_one_in_g(unsigned d, const std::vector<unsigned>& g_values = {},
                              const KacOptions& options = {});

struct AtOneLeadingCheck {
  unsigned d = 0;
  /// 2^{d-1} d^{d-2} / d!
  Rational expected;
  /// leading monomial coefficient of kac_at_one_in_g(d)
  Rational computed;
  int degree = -1;
  bool ok() const { return expected == computed && degree == static_cast<int>(d) - 1; }
};

AtOneLeadingCheck at_one_leading_check(unsigned d, const std::optional<BinomialPolyG>& at_one = {},
                                      const KacOptions& options = {});

/// Known bad characteristics: (quiver up to isomorphism, dimension vector) -> characteristics.
struct BadCharacteristic {
  Quiver quiver;
  std::vector<std::size_t> dims;
  std::vector<std::uint32_t> characteristics;
  std::string note;
};

const std::vector<BadCharacteristic>& bad_characteristic_list();
std::vector<std::uint32_t> skipped_characteristics(const Quiver& q, const std::vector<std::size_t>& d);

/// True if some vertex permutation carries (a, da) onto (b, db), arrows as multisets.
bool same_quiver_and_dims(const Quiver& a, const std::vector<std::size_t>& da, const Quiver& b,
                          const std::vector<std::size_t>& db);

/// The three-vertex quiver with two parallel arrows 1 -> 0 and one arrow 2 -> 1.
Quiver two_two_one_quiver();

// ------------------------------------------------------------------ finite-field oracle

struct FFOracleOptions {
  /// Guard on |field|^(sum_a d_ta d_ha).
  std::uint64_t max_states = 10'000'000;
};

struct FFCount {
  std::uint64_t representations = 0;
  std::uint64_t orbits = 0;
  std::uint64_t absolutely_indecomposable = 0;
};

/// Enumerates every representation of dimension d over k, splits them into orbits of
/// prod_i GL(d_i) by closure under generators, and counts the absolutely indecomposable
/// orbits (orbit representative = smallest row-major index). ResourceError past the guard.
FFCount count_abs_indec_ff(const Quiver& q, const std::vector<std::size_t>& d, const FiniteField& k,
                           const FFOracleOptions& options = {});

}  // namespace quivercount

#endif  // QUIVERCOUNT_KAC_HPP
