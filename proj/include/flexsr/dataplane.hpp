#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "flexsr/services.hpp"
#include "flexsr/simulator.hpp"

namespace flexsr {

struct Flow {
  std::string vrf;
  Ipv4Addr src_ip;
  Ipv4Addr dst_ip;
  std::uint8_t protocol = 6;
  std::uint16_t src_port = 0;
  std::uint16_t dst_port = 0;
};

/// FNV-1a 64 over vrf bytes, a 0x00 separator, src, dst (big endian), protocol,
/// src_port, dst_port (big endian).
std::uint64_t flow_hash(const Flow& flow);

/// flow_hash(flow) mod count. `count` must be non-zero.
std::size_t ecmp_select(const Flow& flow, std::size_t count);

using LinkCounters = std::map<AdjacencyId, std::uint64_t>;

struct WireHop {
  NodeId node;       // receiving node
  AdjacencyId via;   // link the packet arrived on
  LabelStack stack;  // labels on the wire arriving at `node`
};

struct ForwardResult {
  NodeId ingress;
  NodeId egress;
  AlgoId algo = kDefaultAlgo;
  LabelStack ingress_stack;
  std::vector<NodeId> path;  // ingress first
  std::vector<WireHop> hops;
};

using TraceResult = ForwardResult;

/// Forwards `count` packets of `flow` hop by hop through the installed FIBs.
/// Throws NoRoute/NoPath from the ingress lookup and ForwardingLoop.
ForwardResult forward_flow(const Simulator& sim, NodeId ingress, const Flow& flow,
                           std::uint64_t count, LinkCounters& counters);

/// Path of the flow (vrf, ingress router id -> dst, ICMP, ports 0).
TraceResult traceroute(const Simulator& sim, NodeId ingress, const std::string& vrf,
                       Ipv4Addr dst);

/// n flows, flow i: src = src_prefix + 1 + (i mod 254), dst likewise, TCP 1024+i -> 80.
LinkCounters run_flows(const Simulator& sim, NodeId ingress, const std::string& vrf,
                       Ipv4Prefix src_prefix, Ipv4Prefix dst_prefix, std::uint64_t n);

/// Every node path the FIBs can take for traffic of `vrf` to `dst` (all ECMP branches).
std::set<std::vector<NodeId>> forwarding_paths(const Simulator& sim, NodeId ingress,
                                               const std::string& vrf, Ipv4Addr dst);

/// Lowest-id node where `vrf` is attached, other than the egress of `dst` when possible.
NodeId default_ingress(const Simulator& sim, const std::string& vrf, Ipv4Addr dst);

/// Every adjacency of the topology with its count, zeros included, sorted.
std::vector<std::string> format_counters(const Topology& topo, const LinkCounters& counters);

}  // namespace flexsr
