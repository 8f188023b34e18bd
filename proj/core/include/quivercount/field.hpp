#ifndef QUIVERCOUNT_FIELD_HPP
#define QUIVERCOUNT_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "quivercount/exact.hpp"

namespace quivercount {

/// Describes the scalar field of a representation: the rationals
/// (characteristic 0) or GF(p^r) = F_p[x]/(modulus).
struct FieldSpec {
  std::uint32_t characteristic = 0;
  /// Monic irreducible modulus over F_p, low degree first; empty for the rationals.
  std::vector<std::uint32_t> modulus;

  static FieldSpec rationals() { return {}; }
  bool is_rational() const { return characteristic == 0; }
  std::uint32_t degree() const {
    return modulus.empty() ? 1u : static_cast<std::uint32_t>(modulus.size() - 1);
  }
  /// "QQ" or "GF(9)".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

template <class F>
concept ExactField = requires(const F& k, const typename F::Element& a, long n) {
  { k.zero() } -> std::convertible_to<typename F::Element>;
  { k.one() } -> std::convertible_to<typename F::Element>;
  { k.from_int(n) } -> std::convertible_to<typename F::Element>;
  { k.add(a, a) } -> std::convertible_to<typename F::Element>;
  { k.sub(a, a) } -> std::convertible_to<typename F::Element>;
  { k.mul(a, a) } -> std::convertible_to<typename F::Element>;
  { k.neg(a) } -> std::convertible_to<typename F::Element>;
  { k.inv(a) } -> std::convertible_to<typename F::Element>;
  { k.is_zero(a) } -> std::convertible_to<bool>;
  { k.to_string(a) } -> std::convertible_to<std::string>;
  { k.spec() } -> std::convertible_to<FieldSpec>;
};

class RationalField {
 public:
  using Element = Rational;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long n) const { return n; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const { return 1 / a; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  std::string to_string(const Element& a) const { return a.get_str(); }
  FieldSpec spec() const { return FieldSpec::rationals(); }
};

/// GF(q) for q = p^r <= 256, with full addition and multiplication tables.
/// Elements are encoded 0..q-1 by the base-p digits of their coefficient vector.
class FiniteField {
 public:
  using Element = std::uint16_t;

  /// Throws InputError unless q is a prime power in [2, 256].
  /// The modulus is the lexicographically smallest monic irreducible of degree r.
  static FiniteField of_order(std::uint32_t q);
  /// Throws InputError if p is not prime or the modulus is not monic irreducible.
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long n) const {
    long r = n % static_cast<long>(p_);
    return static_cast<Element>(r < 0 ? r + static_cast<long>(p_) : r);
  }
  Element add(Element a, Element b) const { return add_[a * q_ + b]; }
  Element sub(Element a, Element b) const { return add_[a * q_ + neg_[b]]; }
  Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element inv(Element a) const { return inv_[a]; }
  bool is_zero(Element a) const { return a == 0; }
  std::string to_string(Element a) const { return std::to_string(a); }
  FieldSpec spec() const { return {p_, modulus_}; }

  /// A generator of the multiplicative group.
  Element primitive_element() const { return primitive_; }

 private:
  std::uint32_t p_ = 2;
  std::uint32_t q_ = 2;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> add_, mul_, neg_, inv_;
  Element primitive_ = 1;
};

static_assert(ExactField<RationalField>);
static_assert(ExactField<FiniteField>);

bool is_prime(std::uint32_t n);

}  // namespace quivercount

#endif  // QUIVERCOUNT_FIELD_HPP
