#include "flexsr/services.hpp"

#include <algorithm>

#include "flexsr/simulator.hpp"

namespace flexsr {

bool Vrf::attached_at(NodeId node) const {
  return std::any_of(attachments.begin(), attachments.end(),
                     [&](const VrfAttachment& a) { return a.node == node; });
}

std::vector<NodeId> Vrf::nodes() const {
  std::vector<NodeId> out;
  for (const auto& a : attachments) out.push_back(a.node);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const Vrf& ServiceTable::create_vrf(const std::string& name, const std::string& rd,
                                    std::uint32_t color, unsigned ordinal) {
  if (name.empty()) fail(ErrorCode::InvalidArgument, "VRF name must not be empty");
  if (ordinal == 0) {
    for (const auto& v : vrfs_) ordinal = std::max(ordinal, v.ordinal);
    ++ordinal;
  }
  for (const auto& v : vrfs_) {
    if (v.name == name) fail(ErrorCode::DuplicateVrf, "VRF " + name + " already exists");
    if (v.rd == rd) fail(ErrorCode::DuplicateRd, "RD " + rd + " already used by " + v.name);
    if (v.color == color) {
      fail(ErrorCode::DuplicateColor,
           "colour " + std::to_string(color) + " already used by " + v.name);
    }
    if (v.ordinal == ordinal) {
      fail(ErrorCode::DuplicateVrf,
           "VRF ordinal " + std::to_string(ordinal) + " already used by " + v.name);
    }
  }
  vrfs_.push_back(Vrf{name, rd, color, ordinal, {}});
  std::sort(vrfs_.begin(), vrfs_.end(),
            [](const Vrf& a, const Vrf& b) { return a.ordinal < b.ordinal; });
  return vrf(name);
}

void ServiceTable::attach(const std::string& vrf_name, NodeId node, Ipv4Prefix prefix,
                          std::string interface_name) {
  Vrf& v = mutable_vrf(vrf_name);
  for (const auto& a : v.attachments) {
    if (a.prefix == prefix) {
      fail(ErrorCode::ValidationError,
           "prefix " + prefix.str() + " already attached in VRF " + vrf_name);
    }
  }
  if (interface_name.empty()) interface_name = "Gi0/0/0/" + std::to_string(4 + v.ordinal);
  v.attachments.push_back({node, prefix, std::move(interface_name)});
}

const Vrf& ServiceTable::vrf(const std::string& name) const {
  const Vrf* v = find_vrf(name);
  if (v == nullptr) fail(ErrorCode::UnknownVrf, "unknown VRF " + name);
  return *v;
}

Vrf& ServiceTable::mutable_vrf(const std::string& name) {
  for (auto& v : vrfs_) {
    if (v.name == name) return v;
  }
  fail(ErrorCode::UnknownVrf, "unknown VRF " + name);
}

const Vrf* ServiceTable::find_vrf(const std::string& name) const {
  for (const auto& v : vrfs_) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

const Vrf* ServiceTable::vrf_by_color(std::uint32_t color) const {
  for (const auto& v : vrfs_) {
    if (v.color == color) return &v;
  }
  return nullptr;
}

std::optional<AlgoId> ServiceTable::binding(std::uint32_t color) const {
  auto it = bindings_.find(color);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

Label vpn_label(const Vrf& vrf, NodeId node) {
  if (!vrf.attached_at(node)) {
    fail(ErrorCode::NotAttached, "VRF " + vrf.name + " is not attached at " + to_string(node));
  }
  return kVpnLabelBase + vrf.ordinal;
}

OdnPolicy bind_odn(Simulator& sim, std::uint32_t color, AlgoId algo) {
  if (sim.services().vrf_by_color(color) == nullptr) {
    fail(ErrorCode::UnknownColor, "no VRF carries colour " + std::to_string(color));
  }
  if (!sim.active_fad(algo)) {
    fail(ErrorCode::InactiveAlgo, "algo " + std::to_string(algo) + " has no selected FAD");
  }
  sim.services().set_binding(color, algo);
  sim.rebuild_fibs();
  return {color, algo};
}

NodeId egress_for(const Vrf& vrf, Ipv4Addr dst) {
  const VrfAttachment* best = nullptr;
  for (const auto& a : vrf.attachments) {
    if (a.prefix.contains(dst) && (best == nullptr || a.prefix.length > best->prefix.length)) {
      best = &a;
    }
  }
  if (best == nullptr) {
    fail(ErrorCode::NoRoute, "no route to " + dst.str() + " in VRF " + vrf.name);
  }
  return best->node;
}

IngressRoute ingress_lookup(const Simulator& sim, NodeId ingress, const std::string& vrf_name,
                            Ipv4Addr dst) {
  const Vrf& vrf = sim.services().vrf(vrf_name);
  if (!sim.topology().has_node(ingress)) {
    fail(ErrorCode::UnknownNode, "unknown ingress " + to_string(ingress));
  }
  return ingress_stack(sim, ingress, vrf, egress_for(vrf, dst));
}

}  // namespace flexsr
