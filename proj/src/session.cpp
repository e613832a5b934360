#include "flexsr/session.hpp"

#include <charconv>
#include <sstream>

#include "flexsr/scenario.hpp"

namespace flexsr {

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string algo_list(const Node& node) {
  std::string out = "0";
  for (AlgoId a : node.participation) out += " " + std::to_string(a);
  return out;
}

std::uint64_t parse_number(const std::string& text, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(ErrorCode::InvalidArgument, "invalid " + std::string(what) + " '" + text + "'");
  }
  return value;
}

std::int64_t parse_signed(const std::string& text, std::string_view what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(ErrorCode::InvalidArgument, "invalid " + std::string(what) + " '" + text + "'");
  }
  return value;
}

std::set<std::string> parse_colors(const std::string& text) {
  std::set<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto name = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (name.empty()) fail(ErrorCode::InvalidArgument, "invalid colour list '" + text + "'");
    out.insert(name);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void expect_args(const std::vector<std::string>& words, std::size_t min, std::size_t max,
                 std::string_view usage) {
  if (words.size() < min || words.size() > max) {
    fail(ErrorCode::InvalidArgument, "usage: " + std::string(usage));
  }
}

/// Splits a trailing `from <node>` off `words`.
std::optional<NodeId> take_from(std::vector<std::string>& words) {
  if (words.size() >= 2 && words[words.size() - 2] == "from") {
    NodeId node = parse_node_id(words.back());
    words.resize(words.size() - 2);
    return node;
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::string> show_topology(const Simulator& sim) {
  const Topology& topo = sim.topology();
  std::vector<std::string> lines;
  std::vector<std::pair<std::size_t, std::string>> by_bit;
  for (const auto& [color, bit] : topo.affinity().entries()) by_bit.emplace_back(bit, color);
  std::sort(by_bit.begin(), by_bit.end());
  for (const auto& [bit, color] : by_bit) {
    lines.push_back("affinity " + color + " " + std::to_string(bit));
  }
  for (const auto& [id, node] : topo.nodes()) {
    lines.push_back("node " + to_string(id) + " " + node.router_id.str() + " algos " +
                    algo_list(node));
  }
  for (const auto& [id, adj] : topo.adjacencies()) {
    auto colors = topo.affinity().colors_of(adj.admin_group);
    lines.push_back("link " + to_string(id) + " " + adj.interface_name + " " +
                    adj.local_address.str() + " nh " + adj.peer_address.str() + " igp " +
                    std::to_string(adj.igp_metric) + " te " + std::to_string(adj.te_metric) +
                    " delay " + std::to_string(adj.delay_us) + " colors " +
                    (colors.empty() ? "-" : join(colors, ",")));
  }
  for (const auto& vrf : sim.services().vrfs()) {
    auto bound = sim.services().binding(vrf.color);
    lines.push_back("vrf " + vrf.name + " rd " + vrf.rd + " color " +
                    std::to_string(vrf.color) + " label " + std::to_string(kVpnLabelBase + vrf.ordinal) +
                    " algo " + (bound ? std::to_string(*bound) : std::string("-")));
    for (const auto& a : vrf.attachments) {
      lines.push_back("  attach " + to_string(a.node) + " " + a.prefix.str() + " " +
                      a.interface_name);
    }
  }
  return lines;
}

std::vector<std::string> show_fads(const Simulator& sim) {
  std::vector<std::string> lines;
  for (const auto& summary : list_fads(sim)) {
    std::string line = "fad " + std::to_string(summary.algo) + " metric " +
                       std::string(to_string(summary.fad.metric)) + " calc " +
                       std::to_string(summary.fad.calc_type);
    for (const auto& c : summary.constraints) {
      line += " " + std::string(to_string(c.op)) + " " +
              join(std::vector<std::string>(c.colors.begin(), c.colors.end()), ",");
    }
    line += " participants";
    for (NodeId n : summary.participants) line += " " + to_string(n);
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> show_spf(const Simulator& sim, AlgoId algo, NodeId node) {
  const SpfResult& result = get_paths(sim, algo, node);
  std::vector<std::string> lines;
  for (const auto& [dest, route] : result.routes) {
    std::string line = to_string(dest) + " " + sim.topology().node(dest).router_id.str() +
                       " dist " + std::to_string(route.distance);
    if (!route.next_hops.empty()) {
      line += " nh";
      for (const auto& hop : route.next_hops) line += " " + to_string(hop.neighbor);
    }
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> show_fib(const Simulator& sim, NodeId node) {
  sim.topology().node(node);
  return format_fib(sim.fib(node));
}

std::vector<std::string> show_lsdb(const Simulator& sim, NodeId node) {
  std::vector<std::string> lines;
  for (const auto& [key, adv] : sim.flooding().lsdb(node).records()) {
    static constexpr std::string_view kNames[] = {"FAD", "LINK", "SID"};
    lines.push_back(to_string(adv.origin) + " seq " + std::to_string(adv.seq) + " " +
                    std::string(kNames[static_cast<int>(key.type) - 1]) + " " +
                    to_hex(encode_advert(adv)));
  }
  return lines;
}

std::vector<std::string> format_trace(const std::string& vrf, Ipv4Addr dst,
                                      const TraceResult& trace) {
  std::vector<std::string> lines;
  lines.push_back("traceroute " + vrf + " " + dst.str() + " from " + to_string(trace.ingress) +
                  " algo " + std::to_string(trace.algo) + " egress " +
                  to_string(trace.egress) + " stack " + to_string(trace.ingress_stack));
  for (const auto& hop : trace.hops) {
    lines.push_back(to_string(hop.node) + " " + to_string(hop.stack));
  }
  return lines;
}

std::vector<std::string> format_report(const EventReport& report) {
  std::vector<std::string> lines;
  std::string changed = "changed-algos";
  if (report.changed_algos.empty()) changed += " none";
  for (AlgoId a : report.changed_algos) changed += " " + std::to_string(a);
  lines.push_back(changed);
  auto paths = [](const std::set<NodePath>& set) {
    std::vector<std::string> parts;
    for (const auto& p : set) parts.push_back(format_path(p));
    return parts.empty() ? std::string("-") : join(parts, ",");
  };
  for (const auto& [vrf, diff] : report.path_diffs) {
    lines.push_back("diff " + vrf + " " + paths(diff.before) + " -> " + paths(diff.after));
  }
  return lines;
}

std::vector<std::string> Session::execute(const std::vector<std::string>& input) {
  if (input.empty()) fail(ErrorCode::InvalidArgument, "empty command");
  std::vector<std::string> words = input;
  const std::string& cmd = words[0];

  if (cmd == "show") {
    if (words.size() < 2) fail(ErrorCode::InvalidArgument, "usage: show topology|fads|spf|fib|lsdb");
    const std::string& what = words[1];
    if (what == "topology") {
      expect_args(words, 2, 2, "show topology");
      return show_topology(sim_);
    }
    if (what == "fads") {
      expect_args(words, 2, 2, "show fads");
      return show_fads(sim_);
    }
    if (what == "spf") {
      expect_args(words, 4, 4, "show spf <algo> <node>");
      return show_spf(sim_, static_cast<AlgoId>(parse_number(words[2], "algo")),
                      parse_node_id(words[3]));
    }
    if (what == "fib") {
      expect_args(words, 3, 3, "show fib <node>");
      return show_fib(sim_, parse_node_id(words[2]));
    }
    if (what == "lsdb") {
      expect_args(words, 3, 3, "show lsdb <node>");
      return show_lsdb(sim_, parse_node_id(words[2]));
    }
    fail(ErrorCode::InvalidArgument, "unknown show target '" + what + "'");
  }
  if (cmd == "traceroute" || cmd == "paths") {
    auto from = take_from(words);
    expect_args(words, 3, 3, cmd + " <vrf> <dst> [from <node>]");
    Ipv4Addr dst = Ipv4Addr::parse(words[2]);
    NodeId ingress = from.value_or(default_ingress(sim_, words[1], dst));
    if (cmd == "paths") {
      std::vector<std::string> lines;
      for (const auto& p : forwarding_paths(sim_, ingress, words[1], dst)) {
        lines.push_back(format_path(p));
      }
      return lines;
    }
    TraceResult trace = traceroute(sim_, ingress, words[1], dst);
    traces_.push_back(trace);
    return format_trace(words[1], dst, trace);
  }
  if (cmd == "flows") {
    auto from = take_from(words);
    expect_args(words, 5, 5, "flows <vrf> <src_prefix> <dst_prefix> <n> [from <node>]");
    Ipv4Prefix src = Ipv4Prefix::parse(words[2]);
    Ipv4Prefix dst = Ipv4Prefix::parse(words[3]);
    NodeId ingress = from.value_or(default_ingress(sim_, words[1], dst.host(1)));
    std::uint64_t n = parse_number(words[4], "flow count");
    LinkCounters counters = run_flows(sim_, ingress, words[1], src, dst, n);
    NodeId egress = egress_for(sim_.services().vrf(words[1]), dst.host(1));
    flow_runs_.push_back({ingress, egress, n, counters});
    return format_counters(sim_.topology(), counters);
  }
  if (cmd == "set-delay") {
    expect_args(words, 3, 3, "set-delay <link> <us>");
    return format_report(
        set_link_delay(sim_, parse_adjacency_id(words[1]), parse_signed(words[2], "delay")));
  }
  if (cmd == "request-path") {
    expect_args(words, 5, 5, "request-path <metric> <op> <colors> <target_color>");
    FadRequest req{parse_metric_type(words[1]), parse_constraint_op(words[2]),
                   parse_colors(words[3])};
    auto color = static_cast<std::uint32_t>(parse_number(words[4], "colour"));
    FadOutcome outcome = request_custom_path(sim_, req, color);
    return {std::string(to_string(outcome.kind)) + " " + std::to_string(outcome.algo) +
            " color " + std::to_string(outcome.bound_color)};
  }
  if (cmd == "export") {
    expect_args(words, 1, 1, "export");
    std::vector<std::string> lines;
    std::istringstream in(export_scenario(sim_));
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
  }
  fail(ErrorCode::InvalidArgument, "unknown command '" + cmd + "'");
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace flexsr
