#include "flexsr/simulator.hpp"

namespace flexsr {

void Simulator::flood_link_attributes(AdjacencyId link) {
  const Adjacency& adj = topology_.adjacency(link);
  flooding_.flood(topology_, adj.from(),
                  LinkAttrAdvert{link, adj.igp_metric, adj.te_metric, adj.delay_us,
                                 adj.admin_group});
}

void Simulator::flood_all_link_attributes() {
  for (const auto& [id, adj] : topology_.adjacencies()) flood_link_attributes(id);
}

std::size_t Simulator::flood_fad(NodeId origin, const Fad& fad) {
  return flooding_.flood(topology_, origin, fad);
}

std::vector<PrefixSidAdvert> Simulator::advertise_sids(NodeId node) {
  return flexsr::advertise_sids(topology_, flooding_, srgb_, node);
}

std::set<AlgoId> Simulator::recompute() {
  flooding_.sync_nodes(topology_);
  std::map<NodeId, NodeRouting> next;
  for (const auto& [id, node] : topology_.nodes()) {
    next[id].spf = compute_all(topology_, flooding_.lsdb(id), id);
  }

  std::set<AlgoId> changed;
  auto diff = [&](const std::map<AlgoId, SpfResult>& before,
                  const std::map<AlgoId, SpfResult>& after) {
    for (const auto& [algo, result] : before) {
      auto it = after.find(algo);
      if (it == after.end() || !(it->second == result)) changed.insert(algo);
    }
    for (const auto& [algo, result] : after) {
      if (before.count(algo) == 0) changed.insert(algo);
    }
  };
  static const std::map<AlgoId, SpfResult> kNone;
  for (const auto& [id, routing] : next) {
    auto it = routing_.find(id);
    diff(it == routing_.end() ? kNone : it->second.spf, routing.spf);
  }
  for (const auto& [id, routing] : routing_) {
    if (next.count(id) == 0) diff(routing.spf, kNone);
  }

  routing_ = std::move(next);
  rebuild_fibs();
  return changed;
}

void Simulator::rebuild_fibs() {
  for (auto& [id, routing] : routing_) {
    const Lsdb& lsdb = flooding_.lsdb(id);
    routing.fib = build_fib(topology_view(topology_, lsdb), lsdb, routing.spf, srgb_,
                            services_, id);
  }
}

const NodeRouting& Simulator::routing(NodeId node) const {
  auto it = routing_.find(node);
  if (it == routing_.end()) {
    fail(ErrorCode::UnknownNode, "no routing state for " + to_string(node));
  }
  return it->second;
}

const SpfResult& Simulator::spf_result(NodeId node, AlgoId algo) const {
  const NodeRouting& r = routing(node);
  auto it = r.spf.find(algo);
  if (it == r.spf.end()) {
    fail(ErrorCode::UnknownAlgo,
         "no algo " + std::to_string(algo) + " result on " + to_string(node));
  }
  return it->second;
}

std::optional<Fad> Simulator::active_fad(AlgoId algo) const {
  if (flooding_.lsdbs().empty()) return std::nullopt;
  return select_fad(flooding_.lsdbs().begin()->second, algo);
}

std::map<AlgoId, Fad> Simulator::active_fads() const {
  std::map<AlgoId, Fad> out;
  if (flooding_.lsdbs().empty()) return out;
  const Lsdb& lsdb = flooding_.lsdbs().begin()->second;
  for (AlgoId algo : advertised_algos(lsdb)) out.emplace(algo, *select_fad(lsdb, algo));
  return out;
}

std::vector<NodeId> Simulator::participants(AlgoId algo) const {
  std::vector<NodeId> out;
  for (const auto& [id, node] : topology_.nodes()) {
    if (node.participates(algo)) out.push_back(id);
  }
  return out;
}

}  // namespace flexsr
