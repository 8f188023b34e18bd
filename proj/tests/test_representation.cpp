#include <gtest/gtest.h>

#include "quivercount/errors.hpp"
#include "quivercount/representation.hpp"

using namespace quivercount;

namespace {

const RationalField QQ;

// Jordan block J_n(lambda) on the one-loop quiver.
Rep<RationalField> jordan(std::size_t n, long lambda) {
  auto m = zero_maps_rep(QQ, Quiver::loop_quiver(1), {n});
  for (std::size_t i = 0; i < n; ++i) {
    m.maps[0](i, i) = lambda;
    if (i + 1 < n) m.maps[0](i, i + 1) = 1;
  }
  return m;
}

Rep<RationalField> rotation() {
  auto m = zero_maps_rep(QQ, Quiver::loop_quiver(1), {2});
  m.maps[0](0, 1) = -1;
  m.maps[0](1, 0) = 1;
  return m;
}

template <class F>
std::uint64_t count_homs_by_exhaustion(const F& k, const Rep<F>& m, const Rep<F>& n) {
  std::size_t entries = 0;
  for (std::size_t x = 0; x < m.dims.size(); ++x) entries += m.dims[x] * n.dims[x];
  std::uint64_t count = 0;
  std::uint64_t hit = 0;
  detail::for_each_vector(k, entries, [&](const auto& c) {
    VertexMaps<F> phi;
    std::size_t i = 0;
    for (std::size_t x = 0; x < m.dims.size(); ++x) {
      auto mat = zeros(k, n.dims[x], m.dims[x]);
      for (auto& e : mat.data()) e = c[i++];
      phi.push_back(mat);
    }
    ++count;
    hit += is_homomorphism(k, m, n, phi);
    return false;
  });
  return hit;
}

}  // namespace

TEST(Representation, PushforwardAddsFibers) {
  // A3 folded onto S_1: every arrow goes to the loop.
  const auto a3 = parse_quiver("A3");
  const auto f = QuiverMorphism::to_loop_quiver(a3, 1, {0, 0});
  const auto m = pushforward(QQ, f, all_ones_rep(QQ, a3));
  EXPECT_EQ(m.dims, (std::vector<std::size_t>{3}));
  // Nilpotent of rank 2: the 3x3 Jordan block with eigenvalue 0.
  EXPECT_TRUE(is_isomorphic_robust(QQ, m, jordan(3, 0), 1).isomorphic());
  EXPECT_TRUE(is_nilpotent_maps(QQ, m.maps));
}

TEST(Representation, PullbackOfPushforwardRestrictsFibers) {
  const auto t = parse_quiver("A2");
  const auto f = QuiverMorphism::to_loop_quiver(t, 1, {0});
  const auto back = pullback(QQ, f, pushforward(QQ, f, all_ones_rep(QQ, t)));
  EXPECT_EQ(back.dims, (std::vector<std::size_t>{2, 2}));
}

TEST(Representation, HomDimensionsMatchExhaustionOverGF2) {
  const auto k = FiniteField::of_order(2);
  const auto kron = parse_quiver("2:0>1,0>1");
  std::vector<Rep<FiniteField>> reps;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      auto m = zero_maps_rep(k, kron, {1, 2});
      m.maps[0](a, 0) = 1;
      m.maps[1](b, 0) = 1;
      reps.push_back(m);
    }
  }
  reps.push_back(zero_maps_rep(k, kron, {1, 1}));
  for (const auto& m : reps) {
    for (const auto& n : reps) {
      const auto hom = hom_space(k, m, n);
      EXPECT_EQ(count_homs_by_exhaustion(k, m, n), std::uint64_t{1} << hom.dimension());
      for (std::size_t i = 0; i < hom.dimension(); ++i) EXPECT_TRUE(is_homomorphism(k, m, n, hom.basis[i]));
    }
  }
}

TEST(Representation, JordanBlocksAreIndecomposable) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto j = jordan(n, 2);
    EXPECT_EQ(end_space(QQ, j).dimension(), n);
    EXPECT_EQ(is_indecomposable(QQ, j, 1).verdict, IndecomposabilityVerdict::indecomposable_certified);
    EXPECT_TRUE(is_absolutely_indecomposable(QQ, j));
  }
}

TEST(Representation, DirectSumsSplitWithWitness) {
  const auto m = direct_sum(QQ, jordan(2, 0), jordan(1, 0));
  const auto r = is_indecomposable(QQ, m, 1);
  ASSERT_EQ(r.verdict, IndecomposabilityVerdict::decomposable);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(is_homomorphism(QQ, m, m, *r.witness));
  EXPECT_TRUE(detail::is_idempotent_nontrivial(QQ, *r.witness));
  EXPECT_FALSE(is_absolutely_indecomposable(QQ, m));

  // Different eigenvalues split through a rational factor of the minimal polynomial.
  const auto mixed = direct_sum(QQ, jordan(2, 1), jordan(1, -3));
  EXPECT_EQ(is_indecomposable(QQ, mixed, 5).verdict, IndecomposabilityVerdict::decomposable);
}

TEST(Representation, RotationIsIndecomposableButNotAbsolutely) {
  const auto m = rotation();
  EXPECT_EQ(end_space(QQ, m).dimension(), 2u);
  EXPECT_EQ(semisimple_quotient_dimension(QQ, end_space(QQ, m)), 2u);
  EXPECT_TRUE(is_indecomposable(QQ, m, 1).indecomposable());
  EXPECT_FALSE(is_absolutely_indecomposable(QQ, m));

  // Over GF(3) x^2 + 1 stays irreducible; over GF(5) it splits.
  const auto f3 = FiniteField::of_order(3);
  auto m3 = zero_maps_rep(f3, Quiver::loop_quiver(1), {2});
  m3.maps[0](0, 1) = f3.from_int(-1);
  m3.maps[0](1, 0) = 1;
  EXPECT_EQ(is_indecomposable(f3, m3, 1).verdict, IndecomposabilityVerdict::indecomposable_certified);
  EXPECT_FALSE(is_absolutely_indecomposable(f3, m3));
  const auto f5 = FiniteField::of_order(5);
  auto m5 = zero_maps_rep(f5, Quiver::loop_quiver(1), {2});
  m5.maps[0](0, 1) = f5.from_int(-1);
  m5.maps[0](1, 0) = 1;
  EXPECT_EQ(is_indecomposable(f5, m5, 1).verdict, IndecomposabilityVerdict::decomposable);
}

TEST(Representation, IsomorphismOfConjugates) {
  const auto m = direct_sum(QQ, jordan(2, 1), rotation());
  auto p = identity(QQ, 4);
  p(0, 3) = 2;
  p(2, 1) = -1;
  p(3, 0) = 1;
  const auto n = base_change(QQ, m, {p});
  const auto r = is_isomorphic_robust(QQ, m, n, 9);
  ASSERT_TRUE(r.isomorphic());
  EXPECT_TRUE(is_homomorphism(QQ, m, n, *r.witness));
  EXPECT_TRUE(is_invertible_maps(QQ, *r.witness));
}

TEST(Representation, NonIsomorphicJordanTypes) {
  const auto a = jordan(2, 0);
  const auto b = direct_sum(QQ, jordan(1, 0), jordan(1, 0));
  const auto r = is_isomorphic(QQ, a, b, 1);
  EXPECT_EQ(r.verdict, IsoVerdict::no_certified);
  EXPECT_EQ(is_isomorphic(QQ, jordan(2, 0), jordan(2, 1), 1).verdict, IsoVerdict::no_certified);
  EXPECT_EQ(is_isomorphic(QQ, jordan(2, 0), jordan(3, 0), 1).reason, "dimension vectors differ");
}

TEST(Representation, MinimalPolynomialAndFitting) {
  const auto j = direct_sum(QQ, jordan(2, 3), jordan(1, 3));
  const auto mp = minimal_polynomial(QQ, j.maps);
  EXPECT_EQ(degree<RationalField>(mp), 2);
  // (x - 3)^2 applied to the map vanishes.
  EXPECT_TRUE(is_zero_matrix(QQ, evaluate_poly(QQ, mp, j.maps)[0]));
  EXPECT_FALSE(fitting_idempotent(QQ, jordan(3, 0).maps));
  auto u = direct_sum(QQ, jordan(1, 0), jordan(1, 1));
  const auto e = fitting_idempotent(QQ, u.maps);
  ASSERT_TRUE(e);
  EXPECT_TRUE(detail::is_idempotent_nontrivial(QQ, *e));
}

TEST(Representation, ValidationErrors) {
  auto m = zero_maps_rep(QQ, parse_quiver("A2"), {1, 2});
  m.maps[0] = zeros(QQ, 1, 1);
  EXPECT_THROW(validate_rep(m), InputError);
  EXPECT_THROW(tree_identity_rep(QQ, Quiver::loop_quiver(1)), InputError);
  EXPECT_THROW(is_indecomposable(QQ, zero_maps_rep(QQ, parse_quiver("A2"), {0, 0}), 1), InputError);
}

TEST(Representation, SimpleAndSincere) {
  const auto s = simple_rep(QQ, parse_quiver("A3"), 1);
  EXPECT_EQ(s.dims, (std::vector<std::size_t>{0, 1, 0}));
  EXPECT_FALSE(s.is_sincere());
  EXPECT_TRUE(all_ones_rep(QQ, parse_quiver("A3")).is_sincere());
}
