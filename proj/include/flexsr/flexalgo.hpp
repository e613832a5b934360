#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "flexsr/fad.hpp"
#include "flexsr/igp_flood.hpp"
#include "flexsr/topology.hpp"

namespace flexsr {

/// FAD in use for `algo` according to `lsdb`: the advertisement from the highest
/// originating node wins. Empty when nobody advertises it.
std::optional<Fad> select_fad(const Lsdb& lsdb, AlgoId algo);

/// All algos that have at least one FAD in `lsdb`.
std::set<AlgoId> advertised_algos(const Lsdb& lsdb);

/// The base topology as seen from an LSDB: each adjacency takes the attributes of
/// its latest flooded link-attribute advertisement, if any.
Topology topology_view(const Topology& base, const Lsdb& lsdb);

struct PrunedTopology {
  const Topology* base = nullptr;
  std::set<AdjacencyId> admitted;
  AlgoId algo = kDefaultAlgo;
};

/// True if `adj` satisfies every constraint.
bool admits(const std::vector<Constraint>& constraints, const AdminGroup& link_mask);

PrunedTopology prune_topology(const Topology& topo, const Fad& fad);
/// Algorithm 0: nothing pruned.
PrunedTopology unpruned(const Topology& topo);

struct NextHop {
  AdjacencyId adjacency;
  NodeId neighbor;

  auto operator<=>(const NextHop&) const = default;
};

struct SpfRoute {
  std::uint64_t distance = 0;
  /// Sorted by neighbour id. Empty only for the source itself.
  std::vector<NextHop> next_hops;

  bool operator==(const SpfRoute&) const = default;
};

struct SpfResult {
  AlgoId algo = kDefaultAlgo;
  NodeId source;
  /// Reachable destinations only, including the source at distance 0.
  std::map<NodeId, SpfRoute> routes;

  const SpfRoute* route(NodeId dest) const {
    auto it = routes.find(dest);
    return it == routes.end() ? nullptr : &it->second;
  }
  bool operator==(const SpfResult&) const = default;
};

std::uint64_t link_weight(const Adjacency& adj, MetricType metric);

/// Dijkstra over admitted adjacencies, keeping every equal-cost first hop. Nodes that
/// do not participate in `pt.algo` are neither transit nor destination.
SpfResult spf(const PrunedTopology& pt, MetricType metric, NodeId source);

/// Results for algo 0 plus every flex-algo the node participates in and has a FAD for.
std::map<AlgoId, SpfResult> compute_all(const Topology& base, const Lsdb& lsdb, NodeId node);

}  // namespace flexsr
