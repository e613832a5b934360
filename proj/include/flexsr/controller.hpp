#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "flexsr/dataplane.hpp"
#include "flexsr/fad.hpp"
#include "flexsr/simulator.hpp"

namespace flexsr {

/// What a user may ask for: a metric and one admin-group rule. No algorithm id.
struct FadRequest {
  MetricType metric = MetricType::Igp;
  ConstraintOp op = ConstraintOp::ExcludeAny;
  std::set<std::string> colors;
};

enum class FadOutcomeKind { Reused, Created };
std::string_view to_string(FadOutcomeKind kind);

struct FadOutcome {
  FadOutcomeKind kind = FadOutcomeKind::Reused;
  AlgoId algo = kFirstFlexAlgo;
  std::uint32_t bound_color = 0;

  bool operator==(const FadOutcome&) const = default;
};

using NodePath = std::vector<NodeId>;

struct PathDiff {
  std::set<NodePath> before;
  std::set<NodePath> after;
};

struct EventReport {
  std::set<AlgoId> changed_algos;
  std::map<std::string, PathDiff> path_diffs;

  bool empty() const { return changed_algos.empty() && path_diffs.empty(); }
};

/// Reuses a FAD with the same metric and single constraint when one is selected,
/// otherwise floods a new one under the next free id. Either way binds
/// `target_color` to it. On error `sim` is left untouched.
/// Throws UnknownColor, UnknownTargetColor, IdSpaceExhausted, InvalidArgument.
FadOutcome request_custom_path(Simulator& sim, const FadRequest& request,
                               std::uint32_t target_color);

/// Sets one direction's delay, re-floods its attributes and recomputes.
/// Throws UnknownLink, InvalidDelay. On error `sim` is left untouched.
EventReport set_link_delay(Simulator& sim, AdjacencyId link, std::int64_t delay_us);

/// All forwarding paths per bound VRF, probed from the default ingress towards the
/// first prefix attached at the VRF's highest-id node. VRFs that cannot be probed
/// map to an empty set.
std::map<std::string, std::set<NodePath>> vrf_path_sets(const Simulator& sim);

std::string format_path(const NodePath& path);

struct PathSummary {
  NodeId source;
  NodeId dest;
  std::uint64_t distance = 0;
  std::vector<NodeId> next_hops;
};

struct FadSummary {
  AlgoId algo = kFirstFlexAlgo;
  Fad fad;
  std::vector<ColorConstraint> constraints;
  std::vector<NodeId> participants;
  std::vector<PathSummary> paths;
};

/// Selected FADs sorted by algo, with per-source reachability.
std::vector<FadSummary> list_fads(const Simulator& sim);

/// Throws UnknownAlgo (no result on `source`) and UnknownNode.
const SpfResult& get_paths(const Simulator& sim, AlgoId algo, NodeId source);

/// Serializes writers and hands out immutable snapshots to readers. A failed mutation
/// leaves the published state untouched.
class PathController {
 public:
  struct State {
    Simulator sim;
    LinkCounters counters;
  };

  explicit PathController(Simulator sim);

  std::shared_ptr<const State> snapshot() const;

  FadOutcome request_custom_path(const FadRequest& request, std::uint32_t target_color);
  EventReport set_link_delay(AdjacencyId link, std::int64_t delay_us);
  /// Runs flows and adds them to the cumulative counters.
  LinkCounters run_flows(NodeId ingress, const std::string& vrf, Ipv4Prefix src,
                         Ipv4Prefix dst, std::uint64_t n);

 private:
  template <typename F>
  auto mutate(F&& f);

  std::mutex writer_;
  mutable std::mutex publish_;
  std::shared_ptr<const State> state_;
};

}  // namespace flexsr
