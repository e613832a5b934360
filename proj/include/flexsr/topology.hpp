#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flexsr/common.hpp"
#include "flexsr/ipv4.hpp"

namespace flexsr {

/// 256-bit extended administrative group. Bit i is bit (i % 64) of word (i / 64).
class AdminGroup {
 public:
  static constexpr std::size_t kBits = 256;
  static constexpr std::size_t kBytes = kBits / 8;

  constexpr AdminGroup() = default;

  void set(std::size_t bit);
  bool test(std::size_t bit) const;
  bool none() const;
  int popcount() const;

  bool intersects(const AdminGroup& other) const;
  /// True when every bit of `other` is also set here.
  bool contains_all(const AdminGroup& other) const;

  AdminGroup operator|(const AdminGroup& other) const;
  AdminGroup operator&(const AdminGroup& other) const;
  bool operator==(const AdminGroup&) const = default;
  auto operator<=>(const AdminGroup&) const = default;

  /// Wire order: bit i lives in bit (i % 8) of byte (i / 8).
  std::array<std::uint8_t, kBytes> to_bytes() const;
  static AdminGroup from_bytes(std::span<const std::uint8_t, kBytes> bytes);

  std::vector<std::size_t> bits() const;

 private:
  std::array<std::uint64_t, 4> words_{};
};

/// Colour name to admin-group bit position. Both sides are unique.
class AffinityMap {
 public:
  void add(const std::string& color, std::size_t bit);

  std::size_t bit_of(const std::string& color) const;
  bool contains(const std::string& color) const { return by_color_.count(color) != 0; }

  /// Names of the mapped colours set in `mask`, sorted by name. Unmapped bits are ignored.
  std::vector<std::string> colors_of(const AdminGroup& mask) const;

  const std::map<std::string, std::size_t>& entries() const { return by_color_; }
  bool operator==(const AffinityMap&) const = default;

 private:
  std::map<std::string, std::size_t> by_color_;
  std::map<std::size_t, std::string> by_bit_;
};

/// Bitmask with exactly the bits of `colors` set. Throws UnknownColor.
AdminGroup resolve_admin_group(const AffinityMap& affinity,
                               const std::set<std::string>& colors);

/// Directed adjacency key. At most one link exists per node pair.
struct AdjacencyId {
  NodeId from;
  NodeId to;

  constexpr auto operator<=>(const AdjacencyId&) const = default;

  AdjacencyId reverse() const { return {to, from}; }
};

/// "R1->R2"
std::string to_string(AdjacencyId id);
/// Accepts "R1->R2", "R1-R2" or "1-2".
AdjacencyId parse_adjacency_id(std::string_view text);

struct Node {
  NodeId id;
  Ipv4Addr router_id;
  /// Flexible algorithms only; algorithm 0 is implicit.
  std::set<AlgoId> participation;

  bool participates(AlgoId algo) const {
    return algo == kDefaultAlgo || participation.count(algo) != 0;
  }
  bool operator==(const Node&) const = default;
};

struct LinkAttributes {
  std::optional<Ipv4Prefix> subnet;  // defaults to 10.<low>.<high>.0/24
  std::uint32_t igp_metric = 1;
  std::uint32_t te_metric = 1;
  std::uint32_t delay_us = 1;
  AdminGroup admin_group;
};

struct Adjacency {
  AdjacencyId id;
  std::string interface_name;
  Ipv4Prefix subnet;
  Ipv4Addr local_address;
  Ipv4Addr peer_address;
  std::uint32_t igp_metric = 1;
  std::uint32_t te_metric = 1;
  std::uint32_t delay_us = 1;
  AdminGroup admin_group;

  NodeId from() const { return id.from; }
  NodeId to() const { return id.to; }
  bool operator==(const Adjacency&) const = default;
};

class Topology {
 public:
  const Node& add_node(NodeId id, Ipv4Addr router_id);
  /// Creates both directions. The lower node id gets host .1 on the subnet, the higher .2.
  std::pair<AdjacencyId, AdjacencyId> add_link(NodeId a, NodeId b,
                                               const LinkAttributes& attrs);
  const Adjacency& set_link_delay(AdjacencyId link, std::int64_t delay_us);
  void set_participation(NodeId node, AlgoId algo);
  void add_affinity(const std::string& color, std::size_t bit) {
    affinity_.add(color, bit);
  }

  /// Replaces the metric/delay/admin-group attributes of one direction.
  void set_link_attributes(AdjacencyId link, std::uint32_t igp, std::uint32_t te,
                           std::uint32_t delay_us, const AdminGroup& admin_group);

  bool has_node(NodeId id) const { return nodes_.count(id) != 0; }
  bool has_adjacency(AdjacencyId id) const { return adjacencies_.count(id) != 0; }
  const Node& node(NodeId id) const;
  const Adjacency& adjacency(AdjacencyId id) const;
  std::optional<NodeId> find_by_router_id(Ipv4Addr router_id) const;

  const std::map<NodeId, Node>& nodes() const { return nodes_; }
  const std::map<AdjacencyId, Adjacency>& adjacencies() const { return adjacencies_; }
  const AffinityMap& affinity() const { return affinity_; }
  AffinityMap& affinity() { return affinity_; }

  /// Outgoing adjacencies of `node`, ordered by neighbour id.
  std::vector<AdjacencyId> outgoing(NodeId node) const;

  bool operator==(const Topology&) const = default;

 private:
  std::map<NodeId, Node> nodes_;
  std::map<AdjacencyId, Adjacency> adjacencies_;
  std::map<NodeId, unsigned> next_interface_;
  AffinityMap affinity_;
};

}  // namespace flexsr
