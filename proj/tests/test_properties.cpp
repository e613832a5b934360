#include <gtest/gtest.h>

#include "flexsr/experiments.hpp"
#include "helpers.hpp"
#include "properties.hpp"

namespace {

void expect_ok(const properties::Result& r) {
  for (const auto& f : r.failures) ADD_FAILURE() << f;
}

TEST(PropertyTest, SpfMatchesBruteForce) {
  auto r = properties::spf_matches_oracle(1, 200);
  expect_ok(r);
  EXPECT_GT(r.exercised, 200u);
}

TEST(PropertyTest, ForwardedPathsRespectConstraints) {
  auto r = properties::exclusion_soundness(2, 10000);
  expect_ok(r);
  EXPECT_EQ(r.exercised, 10000u);
}

TEST(PropertyTest, CodecRoundTrip) {
  auto r = properties::codec_round_trip(3, 10000);
  expect_ok(r);
  EXPECT_EQ(r.exercised, 10000u);
}

TEST(PropertyTest, InvariantCheckerCatchesViolations) {
  flexsr::Session session(flexsr::testing::paper());
  session.execute({"traceroute", "GOLD", "20.10.4.4"});
  session.execute({"flows", "GOLD", "20.10.1.0/24", "20.10.4.0/24", "10"});
  EXPECT_TRUE(properties::golden_invariants(session).ok());
}

TEST(PropertyTest, DifferentSeedsStillAgree) {
  for (std::uint64_t seed = 100; seed < 105; ++seed) {
    expect_ok(properties::spf_matches_oracle(seed, 20));
  }
}

}  // namespace
