#include <gtest/gtest.h>

#include "quivercount/cover.hpp"
#include "quivercount/errors.hpp"
#include "quivercount/representation.hpp"

using namespace quivercount;

TEST(FreeWord, ReductionAndGroupLaws) {
  const FreeWord a({1});
  const FreeWord b({2});
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(FreeWord({1, 2, -2, -1, 2}), b);
  EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
  EXPECT_EQ(((a * b) * a), (a * (b * a)));
  EXPECT_EQ(FreeWord({1, -2}).to_string(), "a1 a2^-1");
  EXPECT_EQ(FreeWord::identity().to_string(), "e");
  EXPECT_THROW(FreeWord({0}), InputError);
}

TEST(Cover, CollapseOfTwoArrowsWithEqualLabelIntoOneSink) {
  // 0 -> 2 -> 4 <- 3 <- 1, with the two arrows into 4 both labelled 2.
  const Quiver t(5, {{0, 2}, {1, 3}, {2, 4}, {3, 4}});
  const auto lift = lift_to_cover(t, 3, {0, 1, 2, 2}, 4);
  EXPECT_EQ(lift.vertex_words[2], lift.vertex_words[3]);
  EXPECT_NE(lift.vertex_words[0], lift.vertex_words[1]);
  EXPECT_TRUE(lift.vertex_words[4].is_identity());
  EXPECT_EQ(lift.image_vertices.size(), 4u);
  EXPECT_EQ(lift.projection.source.arrow_count(), 3u);
  EXPECT_TRUE(lift_commutes(lift, {0, 1, 2, 2}));

  const RationalField k;
  const auto image = pushforward(k, lift.to_image, all_ones_rep(k, t));
  std::vector<std::size_t> dims = image.dims;
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 1, 1, 2}));
}

TEST(Cover, WindingsEmbed) {
  // A labeling with distinct labels at every tail and every head lifts injectively.
  const Quiver t(4, {{0, 1}, {0, 2}, {3, 0}});
  const auto lift = lift_to_cover(t, 3, {0, 1, 0});
  EXPECT_EQ(lift.image_vertices.size(), 4u);
  EXPECT_TRUE(lift_commutes(lift, {0, 1, 0}));
}

TEST(Cover, ArrowDirectionGivesLeftMultiplication) {
  const Quiver t(2, {{0, 1}});
  const auto lift = lift_to_cover(t, 2, {1});
  EXPECT_TRUE(lift.vertex_words[0].is_identity());
  EXPECT_EQ(lift.vertex_words[1], FreeWord::generator(1));
  const auto back = lift_to_cover(t, 2, {1}, 1);
  EXPECT_EQ(back.vertex_words[0], FreeWord::generator(1).inverse());
}

TEST(Cover, Errors) {
  EXPECT_THROW(lift_to_cover(Quiver::loop_quiver(1), 1, {0}), InputError);
  EXPECT_THROW(lift_to_cover(parse_quiver("A2"), 1, {1}), InputError);
}
