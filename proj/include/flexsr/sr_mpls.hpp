#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "flexsr/flexalgo.hpp"
#include "flexsr/igp_flood.hpp"
#include "flexsr/topology.hpp"

namespace flexsr {

class Simulator;
class ServiceTable;
struct Vrf;

inline constexpr Label kMaxLabel = 1u << 20;

struct Srgb {
  Label base = 16000;
  Label size = 8000;

  bool contains(Label label) const { return label >= base && label < base + size; }
  bool operator==(const Srgb&) const = default;
};

/// Prefix-SID label plan: algo 0 -> 16000 + node, flex-algo a -> 20000 + 10*(a-127) + node.
/// Throws SidSpaceExceeded for node ids above 9 or labels outside the SRGB.
Label sid_label(const Srgb& srgb, NodeId node, AlgoId algo);

/// Floods one Prefix-SID per algorithm `node` participates in (including 0).
std::vector<PrefixSidAdvert> advertise_sids(const Topology& topo, FloodDomain& flooding,
                                            const Srgb& srgb, NodeId node);

struct FibAction {
  enum class Kind { Swap, PhpPop, PopAndDeliver };

  Kind kind = Kind::Swap;
  Label out_label = 0;   // Swap only
  AdjacencyId via;       // Swap / PhpPop
  Ipv4Addr next_hop;     // Swap / PhpPop
  std::string vrf;       // PopAndDeliver

  bool operator==(const FibAction&) const = default;
};

struct FibEntry {
  NodeId owner;
  Label in_label = 0;
  /// ECMP entries carry one action per next hop, ordered by neighbour id.
  std::vector<FibAction> actions;

  bool operator==(const FibEntry&) const = default;
};

using Fib = std::map<Label, FibEntry>;

/// Transport entries from the node's SPF results and flooded Prefix-SIDs, plus one
/// POP_AND_DELIVER per locally attached VRF.
Fib build_fib(const Topology& view, const Lsdb& lsdb,
              const std::map<AlgoId, SpfResult>& results, const Srgb& srgb,
              const ServiceTable& services, NodeId node);

/// `<node> <in_label> -> <ACTION> [out_label] via <adjacency> nh <ip>`, one line per action.
std::vector<std::string> format_fib(const Fib& fib);

/// Outermost label first.
using LabelStack = std::vector<Label>;

std::string to_string(const LabelStack& stack);

struct IngressRoute {
  NodeId egress;
  AlgoId algo = kDefaultAlgo;
  LabelStack stack;  // empty for local delivery
};

/// [transport SID of egress in the bound algo, VPN label of the VRF at egress].
/// Throws NoPath, UnboundColor, NotAttached.
IngressRoute ingress_stack(const Simulator& sim, NodeId ingress, const Vrf& vrf,
                           NodeId egress);

}  // namespace flexsr
