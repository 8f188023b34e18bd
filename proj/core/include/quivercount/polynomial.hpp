#ifndef QUIVERCOUNT_POLYNOMIAL_HPP
#define QUIVERCOUNT_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quivercount/exact.hpp"

namespace quivercount {

/// Univariate polynomial with exact rational coefficients, stored low degree first.
/// Used both for polynomials in q (Kac polynomials) and in g (monomial basis).
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coefficients);
  PolyQ(std::initializer_list<Rational> coefficients)
      : PolyQ(std::vector<Rational>(coefficients)) {}

  static PolyQ constant(const Rational& c);
  static PolyQ monomial(const Rational& c, std::size_t power);
  /// The polynomial x.
  static PolyQ variable();

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const;
  /// Zero for the zero polynomial.
  Rational leading() const;

  Rational operator()(const Rational& x) const;

  bool has_integer_coefficients() const;
  bool is_monic() const;

  PolyQ& operator+=(const PolyQ& other);
  PolyQ& operator-=(const PolyQ& other);
  PolyQ& operator*=(const PolyQ& other);
  PolyQ& operator*=(const Rational& c);

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(PolyQ a, const PolyQ& b) { return a *= b; }
  friend PolyQ operator*(PolyQ a, const Rational& c) { return a *= c; }
  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }

  /// e.g. "q^5 + q^3" or "2/3*g^4 - 2*g^3 + ..."
  std::string to_string(std::string_view var = "q") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Polynomial in g written as sum_k c_k * C(g, k).
class BinomialPolyG {
 public:
  BinomialPolyG() = default;
  explicit BinomialPolyG(std::map<unsigned, Rational> coefficients);
  BinomialPolyG(std::initializer_list<std::pair<const unsigned, Rational>> coefficients)
      : BinomialPolyG(std::map<unsigned, Rational>(coefficients)) {}

  /// Nonzero coefficients only, keyed by k.
  const std::map<unsigned, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(unsigned k) const;
  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool has_integer_coefficients() const;

  /// Evaluates at any rational g (C(g,k) as a falling factorial over k!).
  Rational operator()(const Rational& g) const;

  BinomialPolyG& operator+=(const BinomialPolyG& other);
  BinomialPolyG& operator-=(const BinomialPolyG& other);
  BinomialPolyG& operator*=(const Rational& c);

  friend BinomialPolyG operator+(BinomialPolyG a, const BinomialPolyG& b) { return a += b; }
  friend BinomialPolyG operator-(BinomialPolyG a, const BinomialPolyG& b) { return a -= b; }
  friend BinomialPolyG operator*(BinomialPolyG a, const Rational& c) { return a *= c; }
  friend bool operator==(const BinomialPolyG& a, const BinomialPolyG& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Highest-k first: "6912*C(g,5) + 10656*C(g,4) + ... + C(g,1)"; "0" when zero.
  std::string to_string() const;

 private:
  void normalize();
  std::map<unsigned, Rational> coeffs_;
};

/// C(g, k) for rational g.
Rational binomial_at(const Rational& g, unsigned k);

PolyQ binomial_to_monomial(const BinomialPolyG& p);
/// Inverse conversion via forward differences at g = 0..deg.
BinomialPolyG monomial_to_binomial(const PolyQ& p);

/// Points with pairwise distinct abscissas.
class InterpolationTable {
 public:
  InterpolationTable() = default;
  /// Throws InputError on a repeated abscissa.
  explicit InterpolationTable(std::vector<std::pair<Rational, Rational>> points);

  void add(const Rational& x, const Rational& y);
  const std::vector<std::pair<Rational, Rational>>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  std::vector<std::pair<Rational, Rational>> points_;
};

/// Unique polynomial of degree < #points through the table (Newton divided differences).
/// Throws InputError on an empty table.
PolyQ lagrange_interpolate(const InterpolationTable& table);

}  // namespace quivercount

#endif  // QUIVERCOUNT_POLYNOMIAL_HPP
