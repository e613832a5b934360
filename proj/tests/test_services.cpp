#include <gtest/gtest.h>

#include "flexsr/services.hpp"
#include "flexsr/simulator.hpp"
#include "helpers.hpp"

namespace flexsr {
namespace {

using testing::expect_code;
using testing::paper;

TEST(ServiceTableTest, CreateAndAttach) {
  ServiceTable t;
  const Vrf& gold = t.create_vrf("GOLD", "1:1", 10);
  EXPECT_EQ(gold.ordinal, 1u);
  t.create_vrf("SILVER", "1:2", 20);
  t.attach("GOLD", {4}, Ipv4Prefix::parse("20.10.4.0/24"));
  EXPECT_EQ(t.vrf("GOLD").attachments[0].interface_name, "Gi0/0/0/5");
  EXPECT_EQ(vpn_label(t.vrf("GOLD"), {4}), 24002u);
  EXPECT_EQ(t.vrf_by_color(20)->name, "SILVER");
  EXPECT_EQ(t.vrf_by_color(30), nullptr);
  expect_code(ErrorCode::DuplicateVrf, [&] { t.create_vrf("GOLD", "1:9", 90); });
  expect_code(ErrorCode::DuplicateRd, [&] { t.create_vrf("X", "1:1", 90); });
  expect_code(ErrorCode::DuplicateColor, [&] { t.create_vrf("X", "1:9", 10); });
  expect_code(ErrorCode::NotAttached, [&] { vpn_label(t.vrf("GOLD"), {1}); });
  expect_code(ErrorCode::UnknownVrf, [&] { t.attach("NOPE", {1}, Ipv4Prefix::parse("1.0.0.0/8")); });
}

TEST(ServiceTableTest, LongestPrefixMatch) {
  ServiceTable t;
  t.create_vrf("V", "1:1", 1);
  t.attach("V", {1}, Ipv4Prefix::parse("10.0.0.0/8"));
  t.attach("V", {2}, Ipv4Prefix::parse("10.1.0.0/16"));
  EXPECT_EQ(egress_for(t.vrf("V"), Ipv4Addr::parse("10.1.2.3")), NodeId{2});
  EXPECT_EQ(egress_for(t.vrf("V"), Ipv4Addr::parse("10.2.2.3")), NodeId{1});
  expect_code(ErrorCode::NoRoute, [&] { egress_for(t.vrf("V"), Ipv4Addr::parse("11.0.0.1")); });
}

TEST(OdnTest, PaperBindings) {
  Simulator sim = paper();
  EXPECT_EQ(sim.services().binding(10), std::optional<AlgoId>{128});
  EXPECT_EQ(sim.services().binding(40), std::optional<AlgoId>{131});
  EXPECT_FALSE(sim.services().binding(50).has_value());
}

TEST(OdnTest, RebindChangesTransportLabel) {
  Simulator sim = paper();
  EXPECT_EQ(bind_odn(sim, 50, 129).algo, 129u);
  EXPECT_EQ(ingress_lookup(sim, {1}, "CUSTOM", Ipv4Addr::parse("20.50.4.1")).stack,
            (LabelStack{20024, 24006}));
  bind_odn(sim, 50, 131);
  EXPECT_EQ(ingress_lookup(sim, {1}, "CUSTOM", Ipv4Addr::parse("20.50.4.1")).stack,
            (LabelStack{20044, 24006}));
  // Algorithm 0 has no FAD, so it cannot be bound.
  expect_code(ErrorCode::InactiveAlgo, [&] { bind_odn(sim, 50, 0); });
}

TEST(OdnTest, Errors) {
  Simulator sim = paper();
  Simulator before = sim;
  expect_code(ErrorCode::UnknownColor, [&] { bind_odn(sim, 99, 128); });
  expect_code(ErrorCode::InactiveAlgo, [&] { bind_odn(sim, 50, 200); });
  EXPECT_EQ(sim, before);
}

}  // namespace
}  // namespace flexsr
