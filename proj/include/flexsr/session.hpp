#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flexsr/controller.hpp"
#include "flexsr/dataplane.hpp"
#include "flexsr/simulator.hpp"

namespace flexsr {

std::vector<std::string> show_topology(const Simulator& sim);
std::vector<std::string> show_fads(const Simulator& sim);
std::vector<std::string> show_spf(const Simulator& sim, AlgoId algo, NodeId node);
std::vector<std::string> show_fib(const Simulator& sim, NodeId node);
/// One line per record: `<origin> seq <n> <FAD|LINK|SID> <hex of encode_advert>`.
std::vector<std::string> show_lsdb(const Simulator& sim, NodeId node);

std::vector<std::string> format_trace(const std::string& vrf, Ipv4Addr dst,
                                      const TraceResult& trace);
std::vector<std::string> format_report(const EventReport& report);

struct FlowRun {
  NodeId ingress;
  NodeId egress;
  std::uint64_t flows = 0;
  LinkCounters counters;
};

/// One loaded scenario plus the text command language shared by the CLI and the
/// experiment goldens:
///
///   show topology | fads | spf <algo> <node> | fib <node> | lsdb <node>
///   traceroute <vrf> <dst> [from <node>]
///   paths <vrf> <dst> [from <node>]
///   flows <vrf> <src_prefix> <dst_prefix> <n> [from <node>]
///   set-delay <link> <us>
///   request-path <metric> <op> <color[,color...]> <target_color>
///   export
class Session {
 public:
  explicit Session(Simulator sim) : sim_(std::move(sim)) {}

  /// Runs one command and returns its output lines. Throws Error.
  std::vector<std::string> execute(const std::vector<std::string>& words);

  const Simulator& simulator() const { return sim_; }
  /// Traces and flow runs performed so far, for invariant checks.
  const std::vector<TraceResult>& traces() const { return traces_; }
  const std::vector<FlowRun>& flow_runs() const { return flow_runs_; }

 private:
  Simulator sim_;
  std::vector<TraceResult> traces_;
  std::vector<FlowRun> flow_runs_;
};

std::vector<std::string> split_words(std::string_view line);

}  // namespace flexsr
