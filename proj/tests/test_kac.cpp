#include <gtest/gtest.h>

#include "quivercount/errors.hpp"
#include "quivercount/kac.hpp"
#include "quivercount/tree_modules.hpp"

using namespace quivercount;

namespace {

PolyQ q_power(std::size_t n) { return PolyQ::monomial(1, n); }

}  // namespace

TEST(Kac, EulerForm) {
  const auto kron = parse_quiver("2:0>1,0>1");
  EXPECT_EQ(euler_form(kron, {1, 1}, {1, 1}), 0);
  EXPECT_EQ(euler_form(Quiver::loop_quiver(2), {2}, {2}), -4);
  EXPECT_EQ(euler_form(parse_quiver("A2"), {1, 0}, {0, 1}), -1);
}

TEST(Kac, PinnedPolynomials) {
  EXPECT_EQ(kac_polynomial(Quiver::loop_quiver(2), {2}).polynomial, q_power(5) + q_power(3));
  const auto r = kac_polynomial(two_two_one_quiver(), {2, 2, 1});
  EXPECT_EQ(r.polynomial, (PolyQ{2, 2, 1}));
  EXPECT_EQ(r.value_at_one, 5);
  EXPECT_EQ(r.skip_chars, (std::vector<std::uint32_t>{2}));
}

TEST(Kac, ClassicalFamilies) {
  // Roots of Dynkin quivers: A = 1; the Kronecker imaginary root: q + 1; one loop: q.
  EXPECT_EQ(kac_polynomial(parse_quiver("A3"), {1, 1, 1}).polynomial, PolyQ{1});
  EXPECT_TRUE(kac_polynomial(parse_quiver("A3"), {1, 0, 1}).polynomial.is_zero());
  const auto kron = parse_quiver("2:0>1,0>1");
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(kac_polynomial(kron, {n, n}).polynomial, (PolyQ{1, 1}));
  EXPECT_EQ(kac_polynomial(kron, {1, 2}).polynomial, PolyQ{1});
  for (std::size_t d = 1; d <= 4; ++d) EXPECT_EQ(kac_polynomial(Quiver::loop_quiver(1), {d}).polynomial, q_power(1));
  for (unsigned g = 0; g <= 4; ++g) EXPECT_EQ(kac_polynomial(Quiver::loop_quiver(g), {1}).polynomial, q_power(g));
  // Four-subspace quiver at its null root: q + 4.
  EXPECT_EQ(kac_polynomial(parse_quiver("5:1>0,2>0,3>0,4>0"), {2, 1, 1, 1, 1}).polynomial, (PolyQ{4, 1}));
}

TEST(Kac, MonicIntegerAndDegree) {
  for (unsigned g = 2; g <= 3; ++g) {
    for (std::size_t d = 1; d <= 3; ++d) {
      const auto r = kac_polynomial(Quiver::loop_quiver(g), {d});
      EXPECT_TRUE(r.polynomial.is_monic());
      EXPECT_TRUE(r.polynomial.has_integer_coefficients());
      EXPECT_EQ(r.degree, static_cast<int>(1 + (g - 1) * d * d));
    }
  }
}

TEST(Kac, FiniteFieldOracle) {
  EXPECT_EQ(count_abs_indec_ff(Quiver::loop_quiver(2), {2}, FiniteField::of_order(2)).absolutely_indecomposable, 40u);
  EXPECT_EQ(count_abs_indec_ff(Quiver::loop_quiver(1), {2}, FiniteField::of_order(3)).absolutely_indecomposable, 3u);
  const auto kron = parse_quiver("2:0>1,0>1");
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const auto c = count_abs_indec_ff(kron, {1, 1}, FiniteField::of_order(q));
    EXPECT_EQ(c.absolutely_indecomposable, q + 1);
    EXPECT_EQ(c.representations, std::uint64_t{q} * q);
  }
  FFOracleOptions tight;
  tight.max_states = 100;
  EXPECT_THROW(count_abs_indec_ff(Quiver::loop_quiver(2), {2}, FiniteField::of_order(2), tight), ResourceError);
}

TEST(Kac, SkipList) {
  EXPECT_EQ(skipped_characteristics(two_two_one_quiver(), {2, 2, 1}), (std::vector<std::uint32_t>{2}));
  // The same quiver with its vertices renumbered is recognized.
  const Quiver renumbered(3, {{0, 2}, {0, 2}, {1, 0}});
  EXPECT_EQ(skipped_characteristics(renumbered, {2, 1, 2}), (std::vector<std::uint32_t>{2}));
  EXPECT_TRUE(skipped_characteristics(Quiver::loop_quiver(2), {2}).empty());
}

TEST(Kac, AtOneInG) {
  for (unsigned d = 1; d <= 5; ++d) EXPECT_EQ(kac_at_one_in_g(d), *tm_sg(d).polynomial) << d;
  EXPECT_EQ(kac_at_one_in_g(2), (BinomialPolyG{{1, 1}}));
}

TEST(Kac, AtOneLeadingCoefficient) {
  for (unsigned d = 2; d <= 5; ++d) {
    const auto c = at_one_leading_check(d);
    EXPECT_TRUE(c.ok()) << d;
    Rational want(power(Integer(2), d - 1) * power(Integer(d), d - 2), factorial(d));
    want.canonicalize();
    EXPECT_EQ(c.expected, want);
  }
}

TEST(Kac, RecipeGate) {
  EXPECT_EQ(validated_recipe(), HuaRecipe::primary);
  const auto s2 = Quiver::loop_quiver(2);
  EXPECT_EQ(hua_value_at(s2, {2}, Integer(2), HuaRecipe::primary), 40);
  EXPECT_EQ(hua_value_at(s2, {2}, Integer(3), HuaRecipe::primary), 270);
}

TEST(Kac, Errors) {
  EXPECT_THROW(kac_polynomial(parse_quiver("A2"), {1}), InputError);
  EXPECT_THROW(count_abs_indec_ff(parse_quiver("A2"), {1}, FiniteField::of_order(2)), InputError);
}
