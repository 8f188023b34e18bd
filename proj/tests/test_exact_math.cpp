#include <gtest/gtest.h>

#include <random>
#include <set>

#include "quivercount/errors.hpp"
#include "quivercount/exact.hpp"
#include "quivercount/field.hpp"
#include "quivercount/matrix.hpp"
#include "quivercount/partition.hpp"
#include "quivercount/polynomial.hpp"

using namespace quivercount;

namespace {

// p(n) with parts at most k.
unsigned long count_partitions(unsigned n, unsigned k) {
  if (n == 0) return 1;
  if (k == 0) return 0;
  return count_partitions(n, k - 1) + (k <= n ? count_partitions(n - k, k) : 0);
}

int mobius_by_trial_division(unsigned long n) {
  int sign = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

}  // namespace

TEST(Mobius, MatchesTrialDivision) {
  for (unsigned long n = 1; n <= 500; ++n) EXPECT_EQ(mobius(n), mobius_by_trial_division(n)) << n;
}

TEST(Partitions, CountsMatchRecursion) {
  for (unsigned n = 0; n <= 18; ++n) EXPECT_EQ(partitions_of(n).size(), count_partitions(n, n)) << n;
}

TEST(Partitions, CountsMatchPentagonalRecurrence) {
  std::vector<long> p{1};
  for (long n = 1; n <= 20; ++n) {
    long s = 0;
    for (long k = 1;; ++k) {
      const long a = k * (3 * k - 1) / 2;
      const long b = k * (3 * k + 1) / 2;
      if (a > n) break;
      const long sign = (k % 2) ? 1 : -1;
      s += sign * p[n - a];
      if (b <= n) s += sign * p[n - b];
    }
    p.push_back(s);
    EXPECT_EQ(partitions_of(static_cast<unsigned>(n)).size(), static_cast<std::size_t>(s));
  }
}

TEST(Partitions, OrderAndShape) {
  const auto four = partitions_of(4);
  ASSERT_EQ(four.size(), 5u);
  EXPECT_EQ(four[0], Partition({4}));
  EXPECT_EQ(four[1], Partition({3, 1}));
  EXPECT_EQ(four[4], Partition({1, 1, 1, 1}));
  for (unsigned n = 1; n <= 9; ++n) {
    for (const auto& lam : partitions_of(n)) {
      EXPECT_EQ(lam.size(), n);
      EXPECT_EQ(lam.conjugate().conjugate(), lam);
      EXPECT_EQ(lam.conjugate().size(), n);
    }
  }
  EXPECT_THROW(Partition({1, 2}), InputError);
  EXPECT_THROW(Partition({2, 0}), InputError);
}

TEST(Partitions, PairingCountsCellPairs) {
  // <lam, mu> = sum_j lam'_j mu'_j counted directly from the row lengths.
  for (unsigned n = 1; n <= 6; ++n) {
    for (const auto& lam : partitions_of(n)) {
      for (const auto& mu : partitions_of(n)) {
        unsigned long direct = 0;
        for (unsigned col = 1; col <= n; ++col) {
          unsigned long a = 0;
          unsigned long b = 0;
          for (auto x : lam.parts()) a += x >= col;
          for (auto x : mu.parts()) b += x >= col;
          direct += a * b;
        }
        EXPECT_EQ(partition_pairing(lam, mu), direct);
      }
    }
  }
}

TEST(Partitions, BPolynomial) {
  // (2,1,1): parts 2 (mult 1) and 1 (mult 2) -> (1-t)(1-t)(1-t^2)
  const Partition lam({2, 1, 1});
  const Rational t(1, 3);
  EXPECT_EQ(b_poly_at(lam, t), (1 - t) * (1 - t) * (1 - t * t));
  EXPECT_EQ(b_poly_at(Partition{}, t), 1);
}

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("17"), 17);
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("x"), InputError);
}

TEST(PolyQ, ArithmeticAndPrinting) {
  const PolyQ q = PolyQ::variable();
  const auto p = q * q * q + PolyQ::monomial(1, 5);
  EXPECT_EQ(p.to_string(), "q^5 + q^3");
  EXPECT_TRUE(p.is_monic());
  EXPECT_EQ(p.degree(), 5);
  EXPECT_EQ(p(Rational(2)), 40);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
}

TEST(Interpolation, RecoversRandomPolynomials) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coeff(-50, 50);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c;
    const int deg = trial % 9;
    for (int i = 0; i <= deg; ++i) {
      c.emplace_back(coeff(rng), 1 + (i % 4));
      c.back().canonicalize();
    }
    const PolyQ p(c);
    InterpolationTable table;
    for (int x = 0; x <= deg; ++x) table.add(Rational(2 * x - 3), p(Rational(2 * x - 3)));
    EXPECT_EQ(lagrange_interpolate(table), p);
  }
  EXPECT_THROW(InterpolationTable({{1, 2}, {1, 3}}), InputError);
  EXPECT_THROW(lagrange_interpolate(InterpolationTable{}), InputError);
}

TEST(BinomialBasis, RoundTripAndEvaluation) {
  const BinomialPolyG p{{5, 6912}, {4, 10656}, {3, 4524}, {2, 448}, {1, 1}};
  EXPECT_EQ(monomial_to_binomial(binomial_to_monomial(p)), p);
  for (unsigned g = 0; g <= 9; ++g) {
    Rational direct = 0;
    for (const auto& [k, c] : p.coefficients()) direct += c * Rational(binomial(g, k));
    EXPECT_EQ(p(Rational(g)), direct);
    EXPECT_EQ(binomial_to_monomial(p)(Rational(g)), direct);
  }
  EXPECT_EQ(binomial_at(Rational(-1), 3), -1);
  EXPECT_EQ(p.to_string(), "6912*C(g,5) + 10656*C(g,4) + 4524*C(g,3) + 448*C(g,2) + C(g,1)");
  EXPECT_EQ(BinomialPolyG{}.to_string(), "0");
}

TEST(FiniteField, AxiomsOnSmallFields) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u, 16u}) {
    const auto k = FiniteField::of_order(q);
    EXPECT_EQ(k.order(), q);
    std::set<FiniteField::Element> powers;
    FiniteField::Element x = k.one();
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
      powers.insert(x);
      x = k.mul(x, k.primitive_element());
    }
    EXPECT_EQ(powers.size(), q - 1) << "primitive element of GF(" << q << ")";
    for (FiniteField::Element a = 0; a < q; ++a) {
      EXPECT_TRUE(k.is_zero(k.add(a, k.neg(a))));
      if (a) EXPECT_EQ(k.mul(a, k.inv(a)), k.one());
      for (FiniteField::Element b = 0; b < q; ++b) {
        EXPECT_EQ(k.add(a, b), k.add(b, a));
        for (FiniteField::Element c = 0; c < q; c += 3) {
          EXPECT_EQ(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
        }
      }
    }
  }
  EXPECT_THROW(FiniteField::of_order(6), InputError);
  EXPECT_THROW(FiniteField::of_order(1), InputError);
}

TEST(Matrix, RankAndNullspace) {
  const RationalField k;
  auto m = zeros(k, 3, 4);
  const long entries[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = entries[i][j];
  }
  EXPECT_EQ(rank(k, m), 2u);
  const auto ns = nullspace(k, m);
  EXPECT_EQ(ns.size(), 2u);
  for (const auto& v : ns) {
    for (std::size_t i = 0; i < 3; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < 4; ++j) s += m(i, j) * v[j];
      EXPECT_EQ(s, 0);
    }
  }
  EXPECT_EQ(rank(k, identity(k, 5)), 5u);

  const auto f = FiniteField::of_order(2);
  auto a = zeros(f, 2, 2);
  a(0, 0) = 1;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 1;
  EXPECT_EQ(rank(f, a), 1u);
}
