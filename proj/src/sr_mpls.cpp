#include "flexsr/sr_mpls.hpp"

#include <sstream>

#include "flexsr/services.hpp"
#include "flexsr/simulator.hpp"

namespace flexsr {

namespace {
constexpr Label kAlgo0Base = 16000;
constexpr Label kFlexAlgoBase = 20000;
constexpr std::uint32_t kMaxSchemeNode = 9;
}  // namespace

Label sid_label(const Srgb& srgb, NodeId node, AlgoId algo) {
  if (!is_valid_algo(algo)) {
    fail(ErrorCode::InvalidArgument, "algo " + std::to_string(algo) + " is not 0 or 128-255");
  }
  if (node.value == 0 || node.value > kMaxSchemeNode) {
    fail(ErrorCode::SidSpaceExceeded,
         "label plan covers node ids 1-9, got " + to_string(node));
  }
  Label label = algo == kDefaultAlgo ? kAlgo0Base + node.value
                                     : kFlexAlgoBase + 10 * (algo - 127) + node.value;
  if (!srgb.contains(label)) {
    fail(ErrorCode::SidSpaceExceeded, "label " + std::to_string(label) + " outside SRGB [" +
                                          std::to_string(srgb.base) + ", " +
                                          std::to_string(srgb.base + srgb.size) + ")");
  }
  return label;
}

std::vector<PrefixSidAdvert> advertise_sids(const Topology& topo, FloodDomain& flooding,
                                            const Srgb& srgb, NodeId node) {
  const Node& n = topo.node(node);
  std::vector<AlgoId> algos{kDefaultAlgo};
  algos.insert(algos.end(), n.participation.begin(), n.participation.end());

  // Compute every label first so a failure floods nothing.
  std::vector<PrefixSidAdvert> adverts;
  for (AlgoId algo : algos) {
    Label label = sid_label(srgb, node, algo);
    adverts.push_back({node, n.router_id, algo, label - srgb.base});
  }
  for (const auto& adv : adverts) flooding.flood(topo, node, adv);
  return adverts;
}

Fib build_fib(const Topology& view, const Lsdb& lsdb,
              const std::map<AlgoId, SpfResult>& results, const Srgb& srgb,
              const ServiceTable& services, NodeId node) {
  Fib fib;
  for (const auto& [algo, result] : results) {
    for (const auto& [dest, route] : result.routes) {
      if (dest == node) continue;
      auto sid = lsdb.prefix_sid(dest, algo);
      if (!sid) continue;
      Label label = srgb.base + sid->sid_index;

      FibEntry entry{node, label, {}};
      for (const auto& hop : route.next_hops) {
        FibAction action;
        action.via = hop.adjacency;
        action.next_hop = view.adjacency(hop.adjacency).peer_address;
        if (hop.neighbor == dest) {
          action.kind = FibAction::Kind::PhpPop;
        } else {
          action.kind = FibAction::Kind::Swap;
          action.out_label = label;
        }
        entry.actions.push_back(action);
      }
      fib.insert_or_assign(label, std::move(entry));
    }
  }
  for (const auto& vrf : services.vrfs()) {
    if (!vrf.attached_at(node)) continue;
    FibAction deliver;
    deliver.kind = FibAction::Kind::PopAndDeliver;
    deliver.vrf = vrf.name;
    Label label = vpn_label(vrf, node);
    fib.insert_or_assign(label, FibEntry{node, label, {deliver}});
  }
  return fib;
}

std::vector<std::string> format_fib(const Fib& fib) {
  std::vector<std::string> lines;
  for (const auto& [label, entry] : fib) {
    for (const auto& action : entry.actions) {
      std::ostringstream line;
      line << to_string(entry.owner) << ' ' << label << " -> ";
      switch (action.kind) {
        case FibAction::Kind::Swap:
          line << "SWAP " << action.out_label << " via " << to_string(action.via) << " nh "
               << action.next_hop.str();
          break;
        case FibAction::Kind::PhpPop:
          line << "PHP_POP via " << to_string(action.via) << " nh "
               << action.next_hop.str();
          break;
        case FibAction::Kind::PopAndDeliver:
          line << "POP_AND_DELIVER " << action.vrf;
          break;
      }
      lines.push_back(line.str());
    }
  }
  return lines;
}

std::string to_string(const LabelStack& stack) {
  std::string out = "[";
  for (std::size_t i = 0; i < stack.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(stack[i]);
  }
  return out + "]";
}

IngressRoute ingress_stack(const Simulator& sim, NodeId ingress, const Vrf& vrf,
                           NodeId egress) {
  Label vpn = vpn_label(vrf, egress);
  if (ingress == egress) return {egress, kDefaultAlgo, {}};

  auto algo = sim.services().binding(vrf.color);
  if (!algo) {
    fail(ErrorCode::UnboundColor,
         "colour " + std::to_string(vrf.color) + " of VRF " + vrf.name + " is not bound");
  }
  const NodeRouting& routing = sim.routing(ingress);
  auto result = routing.spf.find(*algo);
  if (result == routing.spf.end() || result->second.route(egress) == nullptr) {
    fail(ErrorCode::NoPath, "no algo " + std::to_string(*algo) + " path from " +
                                to_string(ingress) + " to " + to_string(egress));
  }
  auto sid = sim.flooding().lsdb(ingress).prefix_sid(egress, *algo);
  if (!sid) {
    fail(ErrorCode::NoPath, to_string(egress) + " advertises no Prefix-SID for algo " +
                                std::to_string(*algo));
  }
  return {egress, *algo, {sim.srgb().base + sid->sid_index, vpn}};
}

}  // namespace flexsr
