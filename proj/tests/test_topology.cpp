#include <gtest/gtest.h>

#include "flexsr/topology.hpp"
#include "helpers.hpp"

namespace flexsr {
namespace {

using testing::expect_code;

Topology two_nodes() {
  Topology t;
  t.add_node({1}, Ipv4Addr::parse("1.1.1.1"));
  t.add_node({2}, Ipv4Addr::parse("2.2.2.2"));
  return t;
}

TEST(AdminGroupTest, BitsAndWireOrder) {
  AdminGroup g;
  g.set(0);
  g.set(10);
  g.set(255);
  EXPECT_TRUE(g.test(10));
  EXPECT_FALSE(g.test(11));
  EXPECT_EQ(g.popcount(), 3);
  auto bytes = g.to_bytes();
  EXPECT_EQ(bytes[0], 0x01);
  EXPECT_EQ(bytes[1], 0x04);  // bit 10 -> byte 1, bit 2
  EXPECT_EQ(bytes[31], 0x80);
  EXPECT_EQ(AdminGroup::from_bytes(bytes), g);
  EXPECT_EQ(g.bits(), (std::vector<std::size_t>{0, 10, 255}));
}

TEST(AdminGroupTest, SetLogic) {
  AdminGroup a, b;
  a.set(1);
  a.set(2);
  b.set(2);
  EXPECT_TRUE(a.intersects(b));
  EXPECT_TRUE(a.contains_all(b));
  EXPECT_FALSE(b.contains_all(a));
  EXPECT_TRUE(AdminGroup{}.none());
  EXPECT_FALSE(AdminGroup{}.intersects(a));
}

TEST(AffinityMapTest, ResolvesAndRejectsDuplicates) {
  AffinityMap m;
  m.add("blue", 10);
  m.add("red", 20);
  EXPECT_EQ(m.bit_of("red"), 20u);
  expect_code(ErrorCode::DuplicateColor, [&] { m.add("red", 21); });
  expect_code(ErrorCode::DuplicateColor, [&] { m.add("green", 10); });
  expect_code(ErrorCode::UnknownColor, [&] { m.bit_of("green"); });
  expect_code(ErrorCode::InvalidArgument, [&] { m.add("huge", 256); });

  auto mask = resolve_admin_group(m, {"blue", "red"});
  EXPECT_EQ(mask.bits(), (std::vector<std::size_t>{10, 20}));
  EXPECT_EQ(m.colors_of(mask), (std::vector<std::string>{"blue", "red"}));
  expect_code(ErrorCode::UnknownColor, [&] { resolve_admin_group(m, {"green"}); });
}

TEST(TopologyTest, AddLinkCreatesBothDirections) {
  Topology t = two_nodes();
  LinkAttributes attrs;
  attrs.subnet = Ipv4Prefix::parse("10.0.12.0/24");
  attrs.te_metric = 5;
  auto [fwd, rev] = t.add_link({1}, {2}, attrs);
  EXPECT_EQ(fwd, (AdjacencyId{{1}, {2}}));
  EXPECT_EQ(rev, fwd.reverse());
  const Adjacency& a = t.adjacency(fwd);
  EXPECT_EQ(a.interface_name, "Gi0/0/0/0");
  EXPECT_EQ(a.local_address.str(), "10.0.12.1");
  EXPECT_EQ(a.peer_address.str(), "10.0.12.2");
  EXPECT_EQ(t.adjacency(rev).local_address.str(), "10.0.12.2");
  EXPECT_EQ(a.te_metric, 5u);
  EXPECT_EQ(t.outgoing({1}), std::vector<AdjacencyId>{fwd});
}

TEST(TopologyTest, DefaultSubnetFromNodeIds) {
  Topology t = two_nodes();
  auto [fwd, rev] = t.add_link({2}, {1}, {});
  EXPECT_EQ(t.adjacency(fwd).subnet.str(), "10.1.2.0/24");
  EXPECT_EQ(t.adjacency(fwd).local_address.str(), "10.1.2.2");
  EXPECT_EQ(t.adjacency(rev).local_address.str(), "10.1.2.1");
}

TEST(TopologyTest, Errors) {
  Topology t = two_nodes();
  expect_code(ErrorCode::DuplicateNode, [&] { t.add_node({1}, Ipv4Addr::parse("9.9.9.9")); });
  expect_code(ErrorCode::DuplicateNode, [&] { t.add_node({3}, Ipv4Addr::parse("1.1.1.1")); });
  expect_code(ErrorCode::UnknownNode, [&] { t.add_link({1}, {7}, {}); });
  expect_code(ErrorCode::SelfLoop, [&] { t.add_link({1}, {1}, {}); });
  t.add_link({1}, {2}, {});
  expect_code(ErrorCode::DuplicateLink, [&] { t.add_link({2}, {1}, {}); });
  LinkAttributes zero_delay;
  zero_delay.delay_us = 0;
  t.add_node({3}, Ipv4Addr::parse("3.3.3.3"));
  expect_code(ErrorCode::InvalidDelay, [&] { t.add_link({1}, {3}, zero_delay); });
  expect_code(ErrorCode::UnknownLink, [&] { t.adjacency({{1}, {3}}); });
}

TEST(TopologyTest, SetLinkDelayIsOneWay) {
  Topology t = two_nodes();
  LinkAttributes attrs;
  attrs.delay_us = 100;
  auto [fwd, rev] = t.add_link({1}, {2}, attrs);
  EXPECT_EQ(t.set_link_delay(fwd, 10).delay_us, 10u);
  EXPECT_EQ(t.adjacency(rev).delay_us, 100u);
  expect_code(ErrorCode::InvalidDelay, [&] { t.set_link_delay(fwd, 0); });
  expect_code(ErrorCode::InvalidDelay, [&] { t.set_link_delay(fwd, -5); });
  expect_code(ErrorCode::UnknownLink, [&] { t.set_link_delay({{1}, {3}}, 10); });
  EXPECT_EQ(t.adjacency(fwd).delay_us, 10u);
}

TEST(TopologyTest, Participation) {
  Topology t = two_nodes();
  t.set_participation({1}, 128);
  EXPECT_TRUE(t.node({1}).participates(128));
  EXPECT_TRUE(t.node({1}).participates(0));
  EXPECT_FALSE(t.node({2}).participates(128));
  expect_code(ErrorCode::InvalidArgument, [&] { t.set_participation({1}, 5); });
  expect_code(ErrorCode::UnknownNode, [&] { t.set_participation({9}, 128); });
}

TEST(IdentifierTest, ParseAndPrint) {
  EXPECT_EQ(parse_node_id("R3"), NodeId{3});
  EXPECT_EQ(parse_node_id("3"), NodeId{3});
  EXPECT_EQ(to_string(NodeId{4}), "R4");
  EXPECT_EQ(parse_adjacency_id("R2->R4"), (AdjacencyId{{2}, {4}}));
  EXPECT_EQ(parse_adjacency_id("R2-R4"), (AdjacencyId{{2}, {4}}));
  EXPECT_EQ(parse_adjacency_id("2-4"), (AdjacencyId{{2}, {4}}));
  EXPECT_EQ(to_string(AdjacencyId{{2}, {4}}), "R2->R4");
  expect_code(ErrorCode::InvalidArgument, [] { parse_node_id("X1"); });
  expect_code(ErrorCode::InvalidArgument, [] { parse_adjacency_id("R2"); });
}

TEST(Ipv4Test, ParseAndPrefixes) {
  EXPECT_EQ(Ipv4Addr::parse("20.10.4.4").str(), "20.10.4.4");
  auto p = Ipv4Prefix::parse("20.10.4.7/24");
  EXPECT_EQ(p.str(), "20.10.4.0/24");
  EXPECT_TRUE(p.contains(Ipv4Addr::parse("20.10.4.200")));
  EXPECT_FALSE(p.contains(Ipv4Addr::parse("20.10.5.1")));
  EXPECT_EQ(p.host(1).str(), "20.10.4.1");
  EXPECT_EQ(Ipv4Prefix::parse("0.0.0.0/0").mask(), 0u);
  expect_code(ErrorCode::InvalidArgument, [] { Ipv4Addr::parse("1.2.3"); });
  expect_code(ErrorCode::InvalidArgument, [] { Ipv4Addr::parse("1.2.3.256"); });
  expect_code(ErrorCode::InvalidArgument, [] { Ipv4Prefix::parse("1.2.3.0/33"); });
}

}  // namespace
}  // namespace flexsr
