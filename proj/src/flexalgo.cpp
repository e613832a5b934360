#include "flexsr/flexalgo.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace flexsr {

std::optional<Fad> select_fad(const Lsdb& lsdb, AlgoId algo) {
  std::optional<Fad> best;
  NodeId best_origin{0};
  for (const auto& [origin, fad] : lsdb.fads(algo)) {
    if (!best || origin > best_origin) {
      best = fad;
      best_origin = origin;
    }
  }
  return best;
}

std::set<AlgoId> advertised_algos(const Lsdb& lsdb) {
  std::set<AlgoId> out;
  for (const auto& [key, adv] : lsdb.records()) {
    if (key.type == AdvertType::Fad) out.insert(key.a);
  }
  return out;
}

Topology topology_view(const Topology& base, const Lsdb& lsdb) {
  Topology view = base;
  for (const auto& [id, adj] : base.adjacencies()) {
    if (auto attrs = lsdb.link_attributes(id)) {
      view.set_link_attributes(id, attrs->igp_metric, attrs->te_metric, attrs->delay_us,
                               attrs->admin_group);
    }
  }
  return view;
}

bool admits(const std::vector<Constraint>& constraints, const AdminGroup& link_mask) {
  for (const auto& c : constraints) {
    switch (c.op) {
      case ConstraintOp::ExcludeAny:
        if (link_mask.intersects(c.mask)) return false;
        break;
      case ConstraintOp::IncludeAny:
        if (!link_mask.intersects(c.mask)) return false;
        break;
      case ConstraintOp::IncludeAll:
        if (!link_mask.contains_all(c.mask)) return false;
        break;
    }
  }
  return true;
}

PrunedTopology prune_topology(const Topology& topo, const Fad& fad) {
  PrunedTopology pt{&topo, {}, fad.algo};
  for (const auto& [id, adj] : topo.adjacencies()) {
    if (admits(fad.constraints, adj.admin_group)) pt.admitted.insert(id);
  }
  return pt;
}

PrunedTopology unpruned(const Topology& topo) {
  PrunedTopology pt{&topo, {}, kDefaultAlgo};
  for (const auto& [id, adj] : topo.adjacencies()) pt.admitted.insert(id);
  return pt;
}

std::uint64_t link_weight(const Adjacency& adj, MetricType metric) {
  switch (metric) {
    case MetricType::Igp: return adj.igp_metric;
    case MetricType::TeDefault: return adj.te_metric;
    case MetricType::MinDelay: return adj.delay_us;
  }
  return adj.igp_metric;
}

SpfResult spf(const PrunedTopology& pt, MetricType metric, NodeId source) {
  const Topology& topo = *pt.base;
  SpfResult result;
  result.algo = pt.algo;
  result.source = source;
  if (!topo.has_node(source) || !topo.node(source).participates(pt.algo)) return result;

  constexpr auto kInf = std::numeric_limits<std::uint64_t>::max();
  std::map<NodeId, std::uint64_t> dist;
  std::map<NodeId, std::set<NextHop>> first_hops;
  std::set<NodeId> settled;
  using Item = std::pair<std::uint64_t, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;

  dist[source] = 0;
  queue.push({0, source});
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (settled.count(u) != 0 || d != dist[u]) continue;
    settled.insert(u);

    for (AdjacencyId link : topo.outgoing(u)) {
      if (pt.admitted.count(link) == 0) continue;
      const Adjacency& adj = topo.adjacency(link);
      NodeId v = adj.to();
      if (!topo.node(v).participates(pt.algo) || settled.count(v) != 0) continue;

      std::uint64_t candidate = d + link_weight(adj, metric);
      auto it = dist.find(v);
      std::uint64_t current = it == dist.end() ? kInf : it->second;
      if (candidate > current) continue;

      std::set<NextHop> hops;
      if (u == source) {
        hops.insert({link, v});
      } else {
        hops = first_hops[u];
      }
      if (candidate < current) {
        dist[v] = candidate;
        first_hops[v] = std::move(hops);
        queue.push({candidate, v});
      } else {
        first_hops[v].insert(hops.begin(), hops.end());
      }
    }
  }

  for (NodeId node : settled) {
    SpfRoute route;
    route.distance = dist[node];
    const auto& hops = first_hops[node];
    route.next_hops.assign(hops.begin(), hops.end());
    std::sort(route.next_hops.begin(), route.next_hops.end(),
              [](const NextHop& a, const NextHop& b) {
                return std::tie(a.neighbor, a.adjacency) < std::tie(b.neighbor, b.adjacency);
              });
    result.routes.emplace(node, std::move(route));
  }
  return result;
}

std::map<AlgoId, SpfResult> compute_all(const Topology& base, const Lsdb& lsdb, NodeId node) {
  Topology view = topology_view(base, lsdb);
  std::map<AlgoId, SpfResult> out;
  out.emplace(kDefaultAlgo, spf(unpruned(view), MetricType::Igp, node));
  for (AlgoId algo : view.node(node).participation) {
    auto fad = select_fad(lsdb, algo);
    if (!fad) continue;
    out.emplace(algo, spf(prune_topology(view, *fad), fad->metric, node));
  }
  return out;
}

}  // namespace flexsr
