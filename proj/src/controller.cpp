#include "flexsr/controller.hpp"

#include <algorithm>

namespace flexsr {

std::string_view to_string(FadOutcomeKind kind) {
  return kind == FadOutcomeKind::Reused ? "REUSED" : "CREATED";
}

FadOutcome request_custom_path(Simulator& sim, const FadRequest& request,
                               std::uint32_t target_color) {
  if (request.colors.empty() || request.colors.size() > kMaxConstraintColors) {
    fail(ErrorCode::InvalidArgument, "a request takes 1 to 10 colours");
  }
  const Constraint wanted{request.op,
                          resolve_admin_group(sim.topology().affinity(), request.colors)};
  if (sim.services().vrf_by_color(target_color) == nullptr) {
    fail(ErrorCode::UnknownTargetColor,
         "no VRF carries target colour " + std::to_string(target_color));
  }

  const auto fads = sim.active_fads();
  for (const auto& [algo, fad] : fads) {
    if (fad.metric == request.metric && fad.constraints == std::vector<Constraint>{wanted}) {
      Simulator next = sim;
      bind_odn(next, target_color, algo);
      sim = std::move(next);
      return {FadOutcomeKind::Reused, algo, target_color};
    }
  }

  AlgoId algo = fads.empty() ? kFirstFlexAlgo : fads.rbegin()->first + 1;
  if (algo > kLastFlexAlgo) {
    fail(ErrorCode::IdSpaceExhausted, "no flex-algo id left above " +
                                          std::to_string(fads.rbegin()->first));
  }
  if (sim.topology().nodes().empty()) fail(ErrorCode::UnknownNode, "topology has no nodes");

  Simulator next = sim;
  Topology& topo = next.topology();
  for (const auto& [id, node] : topo.nodes()) topo.set_participation(id, algo);
  next.flood_fad(topo.nodes().begin()->first, Fad{algo, 0, request.metric, {wanted}});
  for (const auto& [id, node] : topo.nodes()) next.advertise_sids(id);
  next.recompute();
  bind_odn(next, target_color, algo);
  sim = std::move(next);
  return {FadOutcomeKind::Created, algo, target_color};
}

std::string format_path(const NodePath& path) {
  std::string out;
  for (NodeId n : path) out += (out.empty() ? "" : "-") + to_string(n);
  return out;
}

std::map<std::string, std::set<NodePath>> vrf_path_sets(const Simulator& sim) {
  std::map<std::string, std::set<NodePath>> out;
  for (const auto& vrf : sim.services().vrfs()) {
    if (!sim.services().binding(vrf.color) || vrf.attachments.empty()) continue;
    NodeId far = vrf.nodes().back();
    auto it = std::find_if(vrf.attachments.begin(), vrf.attachments.end(),
                           [&](const VrfAttachment& a) { return a.node == far; });
    Ipv4Addr probe = it->prefix.host(1);
    try {
      out[vrf.name] = forwarding_paths(sim, default_ingress(sim, vrf.name, probe), vrf.name, probe);
    } catch (const Error&) {
      out[vrf.name] = {};
    }
  }
  return out;
}

EventReport set_link_delay(Simulator& sim, AdjacencyId link, std::int64_t delay_us) {
  Simulator next = sim;
  auto before = vrf_path_sets(next);
  next.topology().set_link_delay(link, delay_us);
  next.flood_link_attributes(link);

  EventReport report;
  report.changed_algos = next.recompute();
  for (auto& [vrf, paths] : vrf_path_sets(next)) {
    auto& old_paths = before[vrf];
    if (old_paths != paths) report.path_diffs[vrf] = {old_paths, paths};
  }
  sim = std::move(next);
  return report;
}

std::vector<FadSummary> list_fads(const Simulator& sim) {
  std::vector<FadSummary> out;
  for (const auto& [algo, fad] : sim.active_fads()) {
    FadSummary summary{algo, fad, describe_constraints(sim.topology().affinity(), fad.constraints),
                       sim.participants(algo), {}};
    for (NodeId source : summary.participants) {
      const auto& spf = sim.routing(source).spf;
      auto it = spf.find(algo);
      if (it == spf.end()) continue;
      for (const auto& [dest, route] : it->second.routes) {
        if (dest == source) continue;
        PathSummary p{source, dest, route.distance, {}};
        for (const auto& hop : route.next_hops) p.next_hops.push_back(hop.neighbor);
        summary.paths.push_back(std::move(p));
      }
    }
    out.push_back(std::move(summary));
  }
  return out;
}

const SpfResult& get_paths(const Simulator& sim, AlgoId algo, NodeId source) {
  if (!sim.topology().has_node(source)) {
    fail(ErrorCode::UnknownNode, "unknown node " + to_string(source));
  }
  return sim.spf_result(source, algo);
}

PathController::PathController(Simulator sim)
    : state_(std::make_shared<const State>(State{std::move(sim), {}})) {}

std::shared_ptr<const PathController::State> PathController::snapshot() const {
  std::lock_guard lock(publish_);
  return state_;
}

template <typename F>
auto PathController::mutate(F&& f) {
  std::lock_guard writer(writer_);
  auto next = std::make_shared<State>(*snapshot());
  auto result = f(*next);
  std::lock_guard lock(publish_);
  state_ = std::move(next);
  return result;
}

FadOutcome PathController::request_custom_path(const FadRequest& request,
                                               std::uint32_t target_color) {
  return mutate([&](State& s) { return flexsr::request_custom_path(s.sim, request, target_color); });
}

EventReport PathController::set_link_delay(AdjacencyId link, std::int64_t delay_us) {
  return mutate([&](State& s) { return flexsr::set_link_delay(s.sim, link, delay_us); });
}

LinkCounters PathController::run_flows(NodeId ingress, const std::string& vrf, Ipv4Prefix src,
                                       Ipv4Prefix dst, std::uint64_t n) {
  return mutate([&](State& s) {
    LinkCounters counters = flexsr::run_flows(s.sim, ingress, vrf, src, dst, n);
    for (const auto& [link, count] : counters) s.counters[link] += count;
    return counters;
  });
}

}  // namespace flexsr
