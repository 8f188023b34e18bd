#ifndef QUIVERCOUNT_UPOLY_HPP
#define QUIVERCOUNT_UPOLY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "quivercount/field.hpp"

namespace quivercount {

/// Dense univariate polynomial over a field, low degree first, no trailing zeros.
template <ExactField F>
using UPoly = std::vector<typename F::Element>;

template <ExactField F>
void trim(const F& k, UPoly<F>& p) {
  while (!p.empty() && k.is_zero(p.back())) p.pop_back();
}

template <ExactField F>
int degree(const UPoly<F>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <ExactField F>
UPoly<F> make_monic(const F& k, UPoly<F> p) {
  trim(k, p);
  if (p.empty()) return p;
  const auto inv = k.inv(p.back());
  for (auto& c : p) c = k.mul(c, inv);
  return p;
}

/// Remainder of a by b (b nonzero); the quotient is written to `quotient` when given.
template <ExactField F>
UPoly<F> poly_mod(const F& k, UPoly<F> a, const UPoly<F>& b, UPoly<F>* quotient = nullptr) {
  trim(k, a);
  const int db = degree<F>(b);
  if (quotient) quotient->assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, k.zero());
  const auto lead_inv = k.inv(b.back());
  while (degree<F>(a) >= db) {
    const auto shift = static_cast<std::size_t>(degree<F>(a) - db);
    const auto c = k.mul(a.back(), lead_inv);
    if (quotient) (*quotient)[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = k.sub(a[shift + i], k.mul(c, b[i]));
    trim(k, a);
  }
  if (quotient) trim(k, *quotient);
  return a;
}

template <ExactField F>
UPoly<F> poly_gcd(const F& k, UPoly<F> a, UPoly<F> b) {
  trim(k, a);
  trim(k, b);
  while (!b.empty()) {
    auto r = poly_mod(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(k, std::move(a));
}

template <ExactField F>
UPoly<F> poly_derivative(const F& k, const UPoly<F>& p) {
  UPoly<F> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(k.mul(k.from_int(static_cast<long>(i)), p[i]));
  trim(k, d);
  return d;
}

/// Product of the distinct irreducible factors. When p' vanishes identically
/// (p a polynomial in x^char) the monic input is returned unchanged.
template <ExactField F>
UPoly<F> squarefree_part(const F& k, const UPoly<F>& p) {
  auto monic = make_monic(k, p);
  auto d = poly_derivative(k, monic);
  if (d.empty()) return monic;
  auto g = poly_gcd(k, monic, d);
  UPoly<F> q;
  poly_mod(k, monic, g, &q);
  return make_monic(k, q);
}

enum class FactorSearch { found, irreducible, unknown };

template <ExactField F>
struct FactorResult {
  FactorSearch status = FactorSearch::unknown;
  UPoly<F> factor;
};

class FiniteField;
class RationalField;

/// Looks for a nontrivial monic factor of a squarefree polynomial.
/// Over GF(q): trial division by every monic polynomial of degree <= deg/2 (bounded work).
FactorResult<FiniteField> find_factor(const FiniteField& k, const UPoly<FiniteField>& p,
                                      std::uint64_t budget = 200000);
/// Over QQ: rational roots, then Kronecker's method on the primitive integer form.
FactorResult<RationalField> find_factor(const RationalField& k, const UPoly<RationalField>& p,
                                        std::uint64_t budget = 200000);

}  // namespace quivercount

#endif  // QUIVERCOUNT_UPOLY_HPP
