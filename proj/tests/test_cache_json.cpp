#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "quivercount/catalog_cache.hpp"
#include "quivercount/errors.hpp"
#include "quivercount/json_io.hpp"

using namespace quivercount;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("quivercount-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

std::vector<std::string> codes(const std::vector<TreeQuiverEntry>& entries) {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(e.canonical_code);
  return out;
}

}  // namespace

TEST(Base64, KnownVectorsAndRoundTrip) {
  EXPECT_EQ(base64_encode(""), "");
  EXPECT_EQ(base64_encode("f"), "Zg==");
  EXPECT_EQ(base64_encode("fo"), "Zm8=");
  EXPECT_EQ(base64_encode("foobar"), "Zm9vYmFy");
  for (const std::string s : std::vector<std::string>{"(<()>())", "a", "ab", "abc", std::string("\0\xff", 2)}) {
    EXPECT_EQ(base64_decode(base64_encode(s)), s);
  }
  EXPECT_THROW(base64_decode("abc"), InputError);
  EXPECT_THROW(base64_decode("ab!="), InputError);
}

TEST(JsonIo, BigIntegersBecomeStrings) {
  const Integer big = power(Integer(10), 30);
  EXPECT_TRUE(integer_to_json(big).is_string());
  EXPECT_EQ(integer_from_json(integer_to_json(big)), big);
  EXPECT_TRUE(integer_to_json(Integer(-42)).is_number_integer());
  EXPECT_EQ(integer_from_json(json(-42)), -42);
  EXPECT_THROW(integer_from_json(json("12x")), InputError);
}

TEST(JsonIo, CatalogRoundTripAndTamperDetection) {
  const auto entries = enumerate_tree_quivers(5);
  const auto j = catalog_to_json(5, entries);
  const auto back = catalog_from_json(j, 5);
  ASSERT_TRUE(back);
  EXPECT_EQ(codes(*back), codes(entries));
  EXPECT_FALSE(catalog_from_json(j, 4));
  auto wrong_aut = j;
  wrong_aut["entries"][0]["aut"] = 7;
  EXPECT_FALSE(catalog_from_json(wrong_aut, 5));
  auto wrong_w = j;
  wrong_w["entries"][3]["W"][0] = wrong_w["entries"][3]["W"][0].get<int>() + 5;
  EXPECT_FALSE(catalog_from_json(wrong_w, 5));
  auto swapped = j;
  std::swap(swapped["entries"][0], swapped["entries"][1]);
  EXPECT_FALSE(catalog_from_json(swapped, 5));
}

TEST(JsonIo, RepresentationRoundTrip) {
  const RationalField k;
  auto m = zero_maps_rep(k, parse_quiver("2:0>1,0>1"), {1, 2});
  m.maps[0](0, 0) = Rational(-3, 7);
  m.maps[1](1, 0) = 5;
  const auto back = rep_from_json(rep_to_json(m));
  EXPECT_EQ(back.maps, m.maps);
  EXPECT_EQ(back.dims, m.dims);
  auto bad = rep_to_json(m);
  bad["matrices"][0].push_back(json::array({"1"}));
  EXPECT_THROW(rep_from_json(bad), InputError);
}

TEST(JsonIo, ReportKeys) {
  const auto j = tm_report_to_json(tm_sg(3));
  for (const char* key : {"quiver", "d", "basis", "coeffs", "classes", "provenance", "field_convention", "anomalies"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["coeffs"]["2"], 4);
  const auto kac = kac_result_to_json(kac_polynomial(Quiver::loop_quiver(2), {2}));
  EXPECT_EQ(kac["coeffs"], json::parse("[0,0,0,1,0,1]"));
  EXPECT_EQ(kac["at_one"], 2);
}

TEST(Cache, MissThenHit) {
  const auto dir = fresh_dir("hit");
  const CatalogCache cache(dir);
  CacheOutcome outcome{};
  const auto first = cache.load(5, 8, &outcome);
  EXPECT_EQ(outcome, CacheOutcome::miss);
  EXPECT_TRUE(fs::exists(cache.path_for(5)));
  const auto second = cache.load(5, 8, &outcome);
  EXPECT_EQ(outcome, CacheOutcome::hit);
  EXPECT_EQ(codes(first), codes(second));
  fs::remove_all(dir);
}

TEST(Cache, CorruptFilesAreRebuilt) {
  const auto dir = fresh_dir("corrupt");
  const CatalogCache cache(dir);
  const auto expected = codes(enumerate_tree_quivers(6));
  fs::create_directories(dir);

  const std::vector<std::string> payloads{
      "not json at all",
      "{\"d\": 6, \"entries\": []}",
      catalog_to_json(6, enumerate_tree_quivers(5)).dump(),
  };
  // A complete-looking file with one entry dropped fails the orbit-size sum.
  auto truncated = catalog_to_json(6, enumerate_tree_quivers(6));
  truncated["entries"].erase(truncated["entries"].begin() + 10);
  std::vector<std::string> all = payloads;
  all.push_back(truncated.dump());

  for (const auto& text : all) {
    write_file(cache.path_for(6), text);
    CacheOutcome outcome{};
    EXPECT_EQ(codes(cache.load(6, 8, &outcome)), expected);
    EXPECT_EQ(outcome, CacheOutcome::rebuilt_corrupt);
    cache.load(6, 8, &outcome);
    EXPECT_EQ(outcome, CacheOutcome::hit);
  }
  fs::remove_all(dir);
}

TEST(Cache, DisabledAndGuards) {
  const CatalogCache none;
  CacheOutcome outcome{};
  EXPECT_EQ(none.load(4, 8, &outcome).size(), 8u);
  EXPECT_EQ(outcome, CacheOutcome::disabled);
  EXPECT_THROW(none.load(9), ResourceError);
  EXPECT_THROW(none.path_for(3), InputError);
}

TEST(Cache, FlagBeatsEnvironment) {
  ::setenv("QUIVERCOUNT_CACHE", "/tmp/from-env", 1);
  EXPECT_EQ(*CatalogCache::from_environment(std::nullopt).directory(), fs::path("/tmp/from-env"));
  EXPECT_EQ(*CatalogCache::from_environment(fs::path("/tmp/from-flag")).directory(), fs::path("/tmp/from-flag"));
  ::unsetenv("QUIVERCOUNT_CACHE");
  EXPECT_FALSE(CatalogCache::from_environment(std::nullopt).directory());
}
