#include "flexsr/topology.hpp"

#include <algorithm>

namespace flexsr {

void AdminGroup::set(std::size_t bit) {
  if (bit >= kBits) {
    fail(ErrorCode::InvalidArgument,
         "admin-group bit " + std::to_string(bit) + " out of range");
  }
  words_[bit / 64] |= std::uint64_t{1} << (bit % 64);
}

bool AdminGroup::test(std::size_t bit) const {
  return bit < kBits && ((words_[bit / 64] >> (bit % 64)) & 1u) != 0;
}

bool AdminGroup::none() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

int AdminGroup::popcount() const {
  int n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

bool AdminGroup::intersects(const AdminGroup& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool AdminGroup::contains_all(const AdminGroup& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != other.words_[i]) return false;
  }
  return true;
}

AdminGroup AdminGroup::operator|(const AdminGroup& other) const {
  AdminGroup out;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | other.words_[i];
  return out;
}

AdminGroup AdminGroup::operator&(const AdminGroup& other) const {
  AdminGroup out;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
  return out;
}

std::array<std::uint8_t, AdminGroup::kBytes> AdminGroup::to_bytes() const {
  std::array<std::uint8_t, kBytes> out{};
  for (std::size_t i = 0; i < kBytes; ++i) {
    out[i] = static_cast<std::uint8_t>(words_[i / 8] >> (8 * (i % 8)));
  }
  return out;
}

AdminGroup AdminGroup::from_bytes(std::span<const std::uint8_t, kBytes> bytes) {
  AdminGroup out;
  for (std::size_t i = 0; i < kBytes; ++i) {
    out.words_[i / 8] |= std::uint64_t{bytes[i]} << (8 * (i % 8));
  }
  return out;
}

std::vector<std::size_t> AdminGroup::bits() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kBits; ++i) {
    if (test(i)) out.push_back(i);
  }
  return out;
}

void AffinityMap::add(const std::string& color, std::size_t bit) {
  if (bit >= AdminGroup::kBits) {
    fail(ErrorCode::InvalidArgument,
         "affinity bit " + std::to_string(bit) + " out of range 0-255");
  }
  if (by_color_.count(color) != 0) {
    fail(ErrorCode::DuplicateColor, "affinity colour '" + color + "' already mapped");
  }
  if (by_bit_.count(bit) != 0) {
    fail(ErrorCode::DuplicateColor, "affinity bit " + std::to_string(bit) +
                                        " already used by '" + by_bit_.at(bit) + "'");
  }
  by_color_.emplace(color, bit);
  by_bit_.emplace(bit, color);
}

std::size_t AffinityMap::bit_of(const std::string& color) const {
  auto it = by_color_.find(color);
  if (it == by_color_.end()) {
    fail(ErrorCode::UnknownColor, "unknown affinity colour '" + color + "'");
  }
  return it->second;
}

std::vector<std::string> AffinityMap::colors_of(const AdminGroup& mask) const {
  std::vector<std::string> out;
  for (const auto& [color, bit] : by_color_) {
    if (mask.test(bit)) out.push_back(color);
  }
  return out;
}

AdminGroup resolve_admin_group(const AffinityMap& affinity,
                               const std::set<std::string>& colors) {
  AdminGroup mask;
  for (const auto& color : colors) mask.set(affinity.bit_of(color));
  return mask;
}

std::string to_string(AdjacencyId id) {
  return to_string(id.from) + "->" + to_string(id.to);
}

AdjacencyId parse_adjacency_id(std::string_view text) {
  std::size_t sep = text.find("->");
  std::size_t skip = 2;
  if (sep == std::string_view::npos) {
    sep = text.find('-');
    skip = 1;
  }
  if (sep == std::string_view::npos) {
    fail(ErrorCode::InvalidArgument, "invalid link id '" + std::string(text) + "'");
  }
  return {parse_node_id(text.substr(0, sep)), parse_node_id(text.substr(sep + skip))};
}

const Node& Topology::add_node(NodeId id, Ipv4Addr router_id) {
  if (id.value == 0) fail(ErrorCode::InvalidArgument, "node ids start at 1");
  if (nodes_.count(id) != 0) {
    fail(ErrorCode::DuplicateNode, "node " + to_string(id) + " already exists");
  }
  if (find_by_router_id(router_id)) {
    fail(ErrorCode::DuplicateNode, "router id " + router_id.str() + " already in use");
  }
  return nodes_.emplace(id, Node{id, router_id, {}}).first->second;
}

std::pair<AdjacencyId, AdjacencyId> Topology::add_link(NodeId a, NodeId b,
                                                       const LinkAttributes& attrs) {
  if (!has_node(a)) fail(ErrorCode::UnknownNode, "unknown node " + to_string(a));
  if (!has_node(b)) fail(ErrorCode::UnknownNode, "unknown node " + to_string(b));
  if (a == b) fail(ErrorCode::SelfLoop, "link " + to_string(a) + " to itself");
  if (has_adjacency({a, b})) {
    fail(ErrorCode::DuplicateLink,
         "link " + to_string(a) + "-" + to_string(b) + " already exists");
  }
  if (attrs.delay_us < 1) fail(ErrorCode::InvalidDelay, "delay must be >= 1 us");
  if (attrs.igp_metric < 1 || attrs.te_metric < 1) {
    fail(ErrorCode::InvalidArgument, "metrics must be positive");
  }

  NodeId low = std::min(a, b);
  NodeId high = std::max(a, b);
  Ipv4Prefix subnet = attrs.subnet.value_or(Ipv4Prefix{
      Ipv4Addr{(10u << 24) | ((low.value & 0xff) << 16) | ((high.value & 0xff) << 8)},
      24});
  Ipv4Addr low_addr = subnet.host(1);
  Ipv4Addr high_addr = subnet.host(2);

  auto make = [&](NodeId from, NodeId to) {
    Adjacency adj;
    adj.id = {from, to};
    adj.interface_name = "Gi0/0/0/" + std::to_string(next_interface_[from]++);
    adj.subnet = subnet;
    adj.local_address = from == low ? low_addr : high_addr;
    adj.peer_address = to == low ? low_addr : high_addr;
    adj.igp_metric = attrs.igp_metric;
    adj.te_metric = attrs.te_metric;
    adj.delay_us = attrs.delay_us;
    adj.admin_group = attrs.admin_group;
    adjacencies_.emplace(adj.id, adj);
    return adj.id;
  };
  AdjacencyId forward = make(a, b);
  AdjacencyId backward = make(b, a);
  return {forward, backward};
}

const Adjacency& Topology::set_link_delay(AdjacencyId link, std::int64_t delay_us) {
  auto it = adjacencies_.find(link);
  if (it == adjacencies_.end()) {
    fail(ErrorCode::UnknownLink, "unknown link " + to_string(link));
  }
  if (delay_us < 1 || delay_us > UINT32_MAX) {
    fail(ErrorCode::InvalidDelay,
         "delay " + std::to_string(delay_us) + " us out of range");
  }
  it->second.delay_us = static_cast<std::uint32_t>(delay_us);
  return it->second;
}

void Topology::set_link_attributes(AdjacencyId link, std::uint32_t igp,
                                   std::uint32_t te, std::uint32_t delay_us,
                                   const AdminGroup& admin_group) {
  auto it = adjacencies_.find(link);
  if (it == adjacencies_.end()) {
    fail(ErrorCode::UnknownLink, "unknown link " + to_string(link));
  }
  it->second.igp_metric = igp;
  it->second.te_metric = te;
  it->second.delay_us = delay_us;
  it->second.admin_group = admin_group;
}

void Topology::set_participation(NodeId node, AlgoId algo) {
  auto it = nodes_.find(node);
  if (it == nodes_.end()) fail(ErrorCode::UnknownNode, "unknown node " + to_string(node));
  if (algo == kDefaultAlgo) return;
  if (!is_flex_algo(algo)) {
    fail(ErrorCode::InvalidArgument,
         "flex-algo " + std::to_string(algo) + " outside 128-255");
  }
  it->second.participation.insert(algo);
}

const Node& Topology::node(NodeId id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) fail(ErrorCode::UnknownNode, "unknown node " + to_string(id));
  return it->second;
}

const Adjacency& Topology::adjacency(AdjacencyId id) const {
  auto it = adjacencies_.find(id);
  if (it == adjacencies_.end()) fail(ErrorCode::UnknownLink, "unknown link " + to_string(id));
  return it->second;
}

std::optional<NodeId> Topology::find_by_router_id(Ipv4Addr router_id) const {
  for (const auto& [id, node] : nodes_) {
    if (node.router_id == router_id) return id;
  }
  return std::nullopt;
}

std::vector<AdjacencyId> Topology::outgoing(NodeId node) const {
  std::vector<AdjacencyId> out;
  // Map order on (from, to) already sorts by neighbour.
  for (auto it = adjacencies_.lower_bound({node, NodeId{0}});
       it != adjacencies_.end() && it->first.from == node; ++it) {
    out.push_back(it->first);
  }
  return out;
}

}  // namespace flexsr
