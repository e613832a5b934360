#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flexsr/common.hpp"
#include "flexsr/ipv4.hpp"
#include "flexsr/sr_mpls.hpp"

namespace flexsr {

class Simulator;

struct VrfAttachment {
  NodeId node;
  Ipv4Prefix prefix;
  std::string interface_name;

  bool operator==(const VrfAttachment&) const = default;
};

struct Vrf {
  std::string name;
  std::string rd;
  std::uint32_t color = 0;
  unsigned ordinal = 0;  // 1-based creation index
  std::vector<VrfAttachment> attachments;

  bool attached_at(NodeId node) const;
  std::vector<NodeId> nodes() const;
  bool operator==(const Vrf&) const = default;
};

struct OdnPolicy {
  std::uint32_t color = 0;
  AlgoId algo = kDefaultAlgo;

  bool operator==(const OdnPolicy&) const = default;
};

/// VRFs and colour -> algorithm bindings.
class ServiceTable {
 public:
  /// ordinal 0 means "next free". Throws DuplicateVrf, DuplicateRd, DuplicateColor.
  const Vrf& create_vrf(const std::string& name, const std::string& rd, std::uint32_t color,
                        unsigned ordinal = 0);
  void attach(const std::string& vrf, NodeId node, Ipv4Prefix prefix,
              std::string interface_name = {});

  const Vrf& vrf(const std::string& name) const;
  const Vrf* find_vrf(const std::string& name) const;
  const Vrf* vrf_by_color(std::uint32_t color) const;
  /// In creation order.
  const std::vector<Vrf>& vrfs() const { return vrfs_; }

  std::optional<AlgoId> binding(std::uint32_t color) const;
  const std::map<std::uint32_t, AlgoId>& bindings() const { return bindings_; }
  void set_binding(std::uint32_t color, AlgoId algo) { bindings_[color] = algo; }

  bool operator==(const ServiceTable&) const = default;

 private:
  Vrf& mutable_vrf(const std::string& name);

  std::vector<Vrf> vrfs_;
  std::map<std::uint32_t, AlgoId> bindings_;
};

inline constexpr Label kVpnLabelBase = 24001;

/// 24001 + ordinal on every node where the VRF is attached. Throws NotAttached.
Label vpn_label(const Vrf& vrf, NodeId node);

/// Binds `color` to `algo`, replacing any earlier binding, and rebuilds FIBs.
/// Throws UnknownColor (no VRF carries it) or InactiveAlgo (no FAD selected).
OdnPolicy bind_odn(Simulator& sim, std::uint32_t color, AlgoId algo);

/// Longest-prefix match of `dst` over the VRF's attachments, then the ingress stack.
/// Throws NoRoute, UnknownVrf and anything ingress_stack throws.
IngressRoute ingress_lookup(const Simulator& sim, NodeId ingress, const std::string& vrf,
                            Ipv4Addr dst);

/// Node where `dst` is attached in `vrf` (longest match). Throws NoRoute.
NodeId egress_for(const Vrf& vrf, Ipv4Addr dst);

}  // namespace flexsr
