#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "flexsr/fad.hpp"
#include "flexsr/simulator.hpp"

namespace flexsr {

// Scenario text format
// --------------------
// One statement per line, `<section>: <key> = <value>`; `#` starts a comment.
//
//   srgb: base = 16000                 srgb: size = 8000
//   affinity: red = 20                 (colour -> admin-group bit)
//   node: R1 = 1.1.1.1                 (router id / loopback)
//   link: R1-R2 = subnet 10.0.12.0/24 igp 1 te 1 delay 100 colors red,blue
//   direction: R2-R4 = delay 10        (one-way override of igp/te/delay/colors)
//   participate: R1 = 140 141          (participation without a FAD line)
//   fad: 128 = metric igp calc 0 exclude-any blue [participants R1 R2] [origin R1]
//   vrf: GOLD = rd 1:1 color 10 [ordinal 1]
//   attach: GOLD = R1 20.10.1.0/24 [interface Gi0/0/0/5]
//   odn: 10 = 128
//
// FAD participants default to every node; origins default to the participants.
// Statements may appear in any order; everything is validated before building.

struct ScenarioLinkAttrs {
  std::optional<std::uint32_t> igp;
  std::optional<std::uint32_t> te;
  std::optional<std::uint32_t> delay_us;
  std::optional<std::set<std::string>> colors;

  bool operator==(const ScenarioLinkAttrs&) const = default;
};

struct ScenarioLink {
  NodeId a;
  NodeId b;
  std::optional<Ipv4Prefix> subnet;
  ScenarioLinkAttrs attrs;
  int line = 0;
};

struct ScenarioDirection {
  AdjacencyId link;
  ScenarioLinkAttrs attrs;
  int line = 0;
};

struct ScenarioFad {
  AlgoId algo = kFirstFlexAlgo;
  std::uint8_t calc_type = 0;
  MetricType metric = MetricType::Igp;
  std::vector<ColorConstraint> constraints;
  std::vector<NodeId> participants;  // empty: all nodes
  std::vector<NodeId> origins;       // empty: participants
  int line = 0;
};

struct ScenarioVrf {
  std::string name;
  std::string rd;
  std::uint32_t color = 0;
  unsigned ordinal = 0;
  int line = 0;
};

struct ScenarioAttach {
  std::string vrf;
  NodeId node;
  Ipv4Prefix prefix;
  std::string interface_name;
  int line = 0;
};

struct Scenario {
  Srgb srgb;
  std::vector<std::pair<std::string, std::size_t>> affinity;
  std::vector<std::pair<NodeId, Ipv4Addr>> nodes;
  std::vector<ScenarioLink> links;
  std::vector<ScenarioDirection> directions;
  std::vector<std::pair<NodeId, AlgoId>> participation;
  std::vector<ScenarioFad> fads;
  std::vector<ScenarioVrf> vrfs;
  std::vector<ScenarioAttach> attachments;
  std::vector<std::pair<std::uint32_t, AlgoId>> odn;
};

/// Throws ParseError with "line L, column C" in the message.
Scenario parse_scenario(std::string_view text);
/// Throws ValidationError on dangling references, duplicates or broken caps.
void validate_scenario(const Scenario& scenario);
/// Builds topology, floods link attributes, FADs and Prefix-SIDs, computes routing
/// and applies ODN bindings.
Simulator build_simulator(const Scenario& scenario);
/// parse + validate + build.
Simulator load_scenario(std::string_view text);

/// Canonical scenario text describing the simulator's current state.
std::string export_scenario(const Simulator& sim);

/// The four-router reference scenario.
std::string_view paper_scenario_text();

}  // namespace flexsr
