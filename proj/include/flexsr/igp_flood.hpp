#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "flexsr/fad.hpp"
#include "flexsr/topology.hpp"

namespace flexsr {

using FadAdvert = Fad;

/// Attributes of one direction of a link, as flooded by its head end.
struct LinkAttrAdvert {
  AdjacencyId link;
  std::uint32_t igp_metric = 1;
  std::uint32_t te_metric = 1;
  std::uint32_t delay_us = 1;
  AdminGroup admin_group;

  bool operator==(const LinkAttrAdvert&) const = default;
};

struct PrefixSidAdvert {
  NodeId node;
  Ipv4Addr prefix;  // loopback /32
  AlgoId algo = kDefaultAlgo;
  std::uint32_t sid_index = 0;

  bool operator==(const PrefixSidAdvert&) const = default;
};

using AdvertBody = std::variant<FadAdvert, LinkAttrAdvert, PrefixSidAdvert>;

enum class AdvertType : std::uint8_t { Fad = 1, LinkAttr = 2, PrefixSid = 3 };

struct Advertisement {
  NodeId origin;
  std::uint32_t seq = 0;
  AdvertBody body;

  bool operator==(const Advertisement&) const = default;
};

/// (origin, body key). FAD and Prefix-SID bodies are keyed by algo, link
/// attributes by the directed link.
struct AdvertKey {
  NodeId origin;
  AdvertType type = AdvertType::Fad;
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  auto operator<=>(const AdvertKey&) const = default;
};

AdvertType advert_type(const AdvertBody& body);
AdvertKey advert_key(NodeId origin, const AdvertBody& body);

/// One router's link-state database: at most one record per key, highest seq wins.
class Lsdb {
 public:
  Lsdb() = default;
  explicit Lsdb(NodeId owner) : owner_(owner) {}

  /// Returns true if the record was new or superseded an older one.
  bool install(const Advertisement& adv);

  NodeId owner() const { return owner_; }
  const std::map<AdvertKey, Advertisement>& records() const { return records_; }
  std::map<AdvertKey, Advertisement>& mutable_records() { return records_; }

  std::vector<std::pair<NodeId, FadAdvert>> fads(AlgoId algo) const;
  std::optional<PrefixSidAdvert> prefix_sid(NodeId node, AlgoId algo) const;
  std::optional<LinkAttrAdvert> link_attributes(AdjacencyId link) const;

  bool same_records(const Lsdb& other) const { return records_ == other.records_; }
  bool operator==(const Lsdb&) const = default;

 private:
  NodeId owner_;
  std::map<AdvertKey, Advertisement> records_;
};

/// Synchronous, loss-free flooding over every node of a topology.
class FloodDomain {
 public:
  /// Installs `body` with a fresh sequence number in every node's LSDB.
  /// Returns the number of LSDBs updated. Throws UnknownNode.
  std::size_t flood(const Topology& topology, NodeId origin, const AdvertBody& body);

  /// Creates empty LSDBs for nodes that have none yet.
  void sync_nodes(const Topology& topology);

  const Lsdb& lsdb(NodeId node) const;
  Lsdb& mutable_lsdb(NodeId node);
  const std::map<NodeId, Lsdb>& lsdbs() const { return lsdbs_; }

  /// True iff all LSDBs are key-by-key identical.
  bool consistent() const;

  bool operator==(const FloodDomain&) const = default;

 private:
  std::map<NodeId, Lsdb> lsdbs_;
  std::map<AdvertKey, std::uint32_t> last_seq_;
};

inline bool lsdb_consistent(const FloodDomain& domain) { return domain.consistent(); }

/// Self-describing TLV: [type u8][length u16 BE][payload]. The payload ends with
/// origin u32 BE and seq u32 BE.
std::vector<std::uint8_t> encode_advert(const Advertisement& adv);
/// Throws MalformedTlv.
Advertisement decode_advert(std::span<const std::uint8_t> bytes);

std::string to_hex(std::span<const std::uint8_t> bytes);

}  // namespace flexsr
