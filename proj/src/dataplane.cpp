#include "flexsr/dataplane.hpp"

#include <algorithm>
#include <functional>

namespace flexsr {

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

class Fnv1a {
 public:
  void byte(std::uint8_t b) {
    hash_ ^= b;
    hash_ *= kFnvPrime;
  }
  void be(std::uint64_t value, int bytes) {
    for (int i = bytes - 1; i >= 0; --i) byte(static_cast<std::uint8_t>(value >> (8 * i)));
  }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = kFnvOffset;
};

const FibEntry& lookup(const Simulator& sim, NodeId node, Label label) {
  const Fib& fib = sim.fib(node);
  auto it = fib.find(label);
  if (it == fib.end() || it->second.actions.empty()) {
    fail(ErrorCode::NoPath,
         to_string(node) + " has no forwarding entry for label " + std::to_string(label));
  }
  return it->second;
}

/// Applies `action` to `stack` in place and returns the adjacency the packet leaves on.
AdjacencyId apply(const FibAction& action, LabelStack& stack) {
  if (action.kind == FibAction::Kind::Swap) {
    stack.front() = action.out_label;
  } else {
    stack.erase(stack.begin());
  }
  return action.via;
}

}  // namespace

std::uint64_t flow_hash(const Flow& flow) {
  Fnv1a h;
  for (char c : flow.vrf) h.byte(static_cast<std::uint8_t>(c));
  h.byte(0);
  h.be(flow.src_ip.value, 4);
  h.be(flow.dst_ip.value, 4);
  h.byte(flow.protocol);
  h.be(flow.src_port, 2);
  h.be(flow.dst_port, 2);
  return h.value();
}

std::size_t ecmp_select(const Flow& flow, std::size_t count) {
  if (count == 0) fail(ErrorCode::InvalidArgument, "ECMP selection over zero next hops");
  return static_cast<std::size_t>(flow_hash(flow) % count);
}

ForwardResult forward_flow(const Simulator& sim, NodeId ingress, const Flow& flow,
                           std::uint64_t count, LinkCounters& counters) {
  IngressRoute route = ingress_lookup(sim, ingress, flow.vrf, flow.dst_ip);
  ForwardResult result;
  result.ingress = ingress;
  result.egress = route.egress;
  result.algo = route.algo;
  result.ingress_stack = route.stack;
  result.path.push_back(ingress);

  LabelStack stack = route.stack;
  NodeId current = ingress;
  std::set<NodeId> visited{ingress};
  LinkCounters traversed;
  while (!stack.empty()) {
    const FibEntry& entry = lookup(sim, current, stack.front());
    if (entry.actions.front().kind == FibAction::Kind::PopAndDeliver) {
      if (entry.actions.front().vrf != flow.vrf || current != route.egress) {
        fail(ErrorCode::NoPath, "label " + std::to_string(stack.front()) + " at " +
                                    to_string(current) + " delivers into the wrong VRF");
      }
      stack.clear();
      break;
    }
    const FibAction& action = entry.actions[ecmp_select(flow, entry.actions.size())];
    AdjacencyId via = apply(action, stack);
    traversed[via] += count;
    current = via.to;
    if (!visited.insert(current).second) {
      fail(ErrorCode::ForwardingLoop, "forwarding loop at " + to_string(current));
    }
    result.path.push_back(current);
    result.hops.push_back({current, via, stack});
  }
  if (current != route.egress) {
    fail(ErrorCode::NoPath, "packet ended at " + to_string(current) + " instead of " +
                                to_string(route.egress));
  }
  for (const auto& [link, n] : traversed) counters[link] += n;
  return result;
}

TraceResult traceroute(const Simulator& sim, NodeId ingress, const std::string& vrf,
                       Ipv4Addr dst) {
  Flow flow{vrf, sim.topology().node(ingress).router_id, dst, 1, 0, 0};
  LinkCounters scratch;
  return forward_flow(sim, ingress, flow, 1, scratch);
}

LinkCounters run_flows(const Simulator& sim, NodeId ingress, const std::string& vrf,
                       Ipv4Prefix src_prefix, Ipv4Prefix dst_prefix, std::uint64_t n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "flow count must be at least 1");
  LinkCounters counters;
  for (std::uint64_t i = 0; i < n; ++i) {
    auto host = static_cast<std::uint32_t>(1 + i % 254);
    Flow flow{vrf, src_prefix.host(host), dst_prefix.host(host), 6,
              static_cast<std::uint16_t>(1024 + i), 80};
    forward_flow(sim, ingress, flow, 1, counters);
  }
  return counters;
}

std::set<std::vector<NodeId>> forwarding_paths(const Simulator& sim, NodeId ingress,
                                               const std::string& vrf, Ipv4Addr dst) {
  IngressRoute route = ingress_lookup(sim, ingress, vrf, dst);
  std::set<std::vector<NodeId>> paths;
  std::vector<NodeId> path{ingress};

  std::function<void(NodeId, LabelStack)> walk = [&](NodeId node, LabelStack stack) {
    if (stack.empty()) {
      paths.insert(path);
      return;
    }
    const FibEntry& entry = lookup(sim, node, stack.front());
    if (entry.actions.front().kind == FibAction::Kind::PopAndDeliver) {
      paths.insert(path);
      return;
    }
    for (const auto& action : entry.actions) {
      LabelStack next = stack;
      NodeId to = apply(action, next).to;
      if (std::find(path.begin(), path.end(), to) != path.end()) {
        fail(ErrorCode::ForwardingLoop, "forwarding loop at " + to_string(to));
      }
      path.push_back(to);
      walk(to, std::move(next));
      path.pop_back();
    }
  };
  walk(ingress, route.stack);
  return paths;
}

NodeId default_ingress(const Simulator& sim, const std::string& vrf_name, Ipv4Addr dst) {
  const Vrf& vrf = sim.services().vrf(vrf_name);
  NodeId egress = egress_for(vrf, dst);
  for (NodeId node : vrf.nodes()) {
    if (node != egress) return node;
  }
  return egress;
}

std::vector<std::string> format_counters(const Topology& topo, const LinkCounters& counters) {
  std::vector<std::string> lines;
  for (const auto& [id, adj] : topo.adjacencies()) {
    auto it = counters.find(id);
    lines.push_back(to_string(id) + " " +
                    std::to_string(it == counters.end() ? 0 : it->second));
  }
  return lines;
}

}  // namespace flexsr
