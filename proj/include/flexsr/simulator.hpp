#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "flexsr/flexalgo.hpp"
#include "flexsr/igp_flood.hpp"
#include "flexsr/services.hpp"
#include "flexsr/sr_mpls.hpp"
#include "flexsr/topology.hpp"

namespace flexsr {

struct NodeRouting {
  std::map<AlgoId, SpfResult> spf;
  Fib fib;

  bool operator==(const NodeRouting&) const = default;
};

/// Owns the whole simulated domain. A plain value: copying it yields an independent
/// snapshot, which the controller relies on for atomic updates.
class Simulator {
 public:
  Topology& topology() { return topology_; }
  const Topology& topology() const { return topology_; }
  FloodDomain& flooding() { return flooding_; }
  const FloodDomain& flooding() const { return flooding_; }
  ServiceTable& services() { return services_; }
  const ServiceTable& services() const { return services_; }
  Srgb& srgb() { return srgb_; }
  const Srgb& srgb() const { return srgb_; }

  /// Floods the current attributes of `link` from its head end.
  void flood_link_attributes(AdjacencyId link);
  void flood_all_link_attributes();
  std::size_t flood_fad(NodeId origin, const Fad& fad);
  std::vector<PrefixSidAdvert> advertise_sids(NodeId node);

  /// Rebuilds SPF results and FIBs on every node. Returns the algos whose SPF
  /// result changed (appeared, vanished or differs) on any node.
  std::set<AlgoId> recompute();
  /// FIB rebuild only, for binding/VRF changes that leave SPF untouched.
  void rebuild_fibs();

  const NodeRouting& routing(NodeId node) const;
  /// Throws UnknownAlgo when `node` has no result for `algo`.
  const SpfResult& spf_result(NodeId node, AlgoId algo) const;
  const Fib& fib(NodeId node) const { return routing(node).fib; }

  /// FAD selected for `algo` (LSDBs are consistent, so the lowest node's view is used).
  std::optional<Fad> active_fad(AlgoId algo) const;
  std::map<AlgoId, Fad> active_fads() const;
  /// Nodes configured to participate in `algo` (every node for algo 0).
  std::vector<NodeId> participants(AlgoId algo) const;

  bool operator==(const Simulator&) const = default;

 private:
  Topology topology_;
  FloodDomain flooding_;
  ServiceTable services_;
  Srgb srgb_;
  std::map<NodeId, NodeRouting> routing_;
};

}  // namespace flexsr
