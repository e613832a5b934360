#include "flexsr/api.hpp"

#include <charconv>

#include "httplib.h"

namespace flexsr {

namespace {

using nlohmann::json;

json node_list(const std::vector<NodeId>& nodes) {
  json out = json::array();
  for (NodeId n : nodes) out.push_back(to_string(n));
  return out;
}

json topology_json(const Simulator& sim) {
  const Topology& topo = sim.topology();
  json nodes = json::array();
  for (const auto& [id, node] : topo.nodes()) {
    json algos = json::array({0});
    for (AlgoId a : node.participation) algos.push_back(a);
    nodes.push_back({{"id", to_string(id)}, {"router_id", node.router_id.str()}, {"algos", algos}});
  }
  json links = json::array();
  for (const auto& [id, adj] : topo.adjacencies()) {
    links.push_back({{"id", to_string(id)},
                     {"from", to_string(id.from)},
                     {"to", to_string(id.to)},
                     {"interface", adj.interface_name},
                     {"local_ip", adj.local_address.str()},
                     {"peer_ip", adj.peer_address.str()},
                     {"igp", adj.igp_metric},
                     {"te", adj.te_metric},
                     {"delay_us", adj.delay_us},
                     {"colors", topo.affinity().colors_of(adj.admin_group)}});
  }
  json affinity = json::object();
  for (const auto& [color, bit] : topo.affinity().entries()) affinity[color] = bit;
  json vrfs = json::array();
  for (const auto& vrf : sim.services().vrfs()) {
    auto bound = sim.services().binding(vrf.color);
    json attach = json::array();
    for (const auto& a : vrf.attachments) {
      attach.push_back({{"node", to_string(a.node)}, {"prefix", a.prefix.str()}});
    }
    vrfs.push_back({{"name", vrf.name},
                    {"rd", vrf.rd},
                    {"color", vrf.color},
                    {"algo", bound ? json(*bound) : json(nullptr)},
                    {"attachments", attach}});
  }
  return {{"nodes", nodes}, {"links", links}, {"affinity", affinity}, {"vrfs", vrfs}};
}

json fads_json(const Simulator& sim) {
  json out = json::array();
  for (const auto& s : list_fads(sim)) {
    json constraints = json::array();
    for (const auto& c : s.constraints) {
      constraints.push_back({{"op", to_string(c.op)}, {"colors", c.colors}});
    }
    out.push_back({{"algo", s.algo},
                   {"metric", to_string(s.fad.metric)},
                   {"calc", s.fad.calc_type},
                   {"constraints", constraints},
                   {"participants", node_list(s.participants)}});
  }
  return out;
}

json spf_json(const Simulator& sim, const SpfResult& result) {
  json routes = json::array();
  for (const auto& [dest, route] : result.routes) {
    json hops = json::array();
    for (const auto& h : route.next_hops) {
      hops.push_back({{"node", to_string(h.neighbor)}, {"link", to_string(h.adjacency)}});
    }
    routes.push_back({{"dest", to_string(dest)},
                      {"router_id", sim.topology().node(dest).router_id.str()},
                      {"distance", route.distance},
                      {"next_hops", hops}});
  }
  return {{"algo", result.algo}, {"source", to_string(result.source)}, {"routes", routes}};
}

json report_json(const EventReport& report) {
  json diffs = json::object();
  auto paths = [](const std::set<NodePath>& set) {
    json out = json::array();
    for (const auto& p : set) out.push_back(node_list(p));
    return out;
  };
  for (const auto& [vrf, d] : report.path_diffs) {
    diffs[vrf] = {{"before", paths(d.before)}, {"after", paths(d.after)}};
  }
  return {{"changed_algos", report.changed_algos}, {"path_diffs", diffs}};
}

json counters_json(const Topology& topo, const LinkCounters& counters) {
  json out = json::array();
  for (const auto& [id, adj] : topo.adjacencies()) {
    auto it = counters.find(id);
    out.push_back({{"link", to_string(id)}, {"count", it == counters.end() ? 0 : it->second}});
  }
  return out;
}

const json& field(const json& body, const char* name) {
  if (!body.is_object() || !body.contains(name)) {
    fail(ErrorCode::InvalidArgument, std::string("missing field '") + name + "'");
  }
  return body.at(name);
}

std::string string_field(const json& body, const char* name) {
  const json& v = field(body, name);
  if (!v.is_string()) fail(ErrorCode::InvalidArgument, std::string("'") + name + "' must be a string");
  return v.get<std::string>();
}

std::int64_t int_field(const json& body, const char* name) {
  const json& v = field(body, name);
  if (!v.is_number_integer()) {
    fail(ErrorCode::InvalidArgument, std::string("'") + name + "' must be an integer");
  }
  return v.get<std::int64_t>();
}

/// Accepts "R1", "1" or 1.
NodeId node_field(const json& v) {
  if (v.is_number_unsigned()) return NodeId{v.get<std::uint32_t>()};
  if (v.is_string()) return parse_node_id(v.get<std::string>());
  fail(ErrorCode::InvalidArgument, "node must be a string or a non-negative integer");
}

std::optional<NodeId> optional_node(const json& body, const char* name) {
  if (!body.contains(name) || body.at(name).is_null()) return std::nullopt;
  return node_field(body.at(name));
}

AlgoId parse_algo(std::string_view text) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(ErrorCode::InvalidArgument, "invalid algo '" + std::string(text) + "'");
  }
  return value;
}

ApiResponse error_response(int status, std::string_view code, const std::string& message) {
  return {status, {{"code", code}, {"message", message}}};
}

ApiResponse dispatch(PathController& controller, std::string_view method, std::string_view path,
                     const std::map<std::string, std::string>& query, const json& body) {
  auto snap = controller.snapshot();
  const Simulator& sim = snap->sim;
  bool get = method == "GET";
  bool post = method == "POST";

  if (path == "/topology" && get) return {200, topology_json(sim)};
  if (path == "/fads" && get) return {200, fads_json(sim)};
  if (path == "/counters" && get) return {200, {{"counters", counters_json(sim.topology(), snap->counters)}}};

  if (path == "/fads" && post) {
    FadRequest req;
    req.metric = parse_metric_type(string_field(body, "metric"));
    req.op = parse_constraint_op(string_field(body, "op"));
    const json& colors = field(body, "colors");
    if (!colors.is_array()) fail(ErrorCode::InvalidArgument, "'colors' must be an array");
    for (const auto& c : colors) {
      if (!c.is_string()) fail(ErrorCode::InvalidArgument, "colours must be strings");
      req.colors.insert(c.get<std::string>());
    }
    std::int64_t color = int_field(body, "target_color");
    if (color < 0 || color > UINT32_MAX) fail(ErrorCode::UnknownTargetColor, "colour out of range");
    FadOutcome out = controller.request_custom_path(req, static_cast<std::uint32_t>(color));
    return {200, {{"kind", to_string(out.kind)}, {"algo", out.algo}, {"bound_color", out.bound_color}}};
  }

  constexpr std::string_view kLinks = "/links/";
  constexpr std::string_view kDelay = "/delay";
  if (post && path.starts_with(kLinks) && path.ends_with(kDelay) &&
      path.size() > kLinks.size() + kDelay.size()) {
    auto id = path.substr(kLinks.size(), path.size() - kLinks.size() - kDelay.size());
    AdjacencyId link = parse_adjacency_id(id);
    return {200, report_json(controller.set_link_delay(link, int_field(body, "delay_us")))};
  }

  constexpr std::string_view kPaths = "/paths/";
  if (get && path.starts_with(kPaths)) {
    AlgoId algo = parse_algo(path.substr(kPaths.size()));
    auto it = query.find("source");
    if (it == query.end()) fail(ErrorCode::InvalidArgument, "missing query parameter 'source'");
    return {200, spf_json(sim, get_paths(sim, algo, parse_node_id(it->second)))};
  }

  if (path == "/traceroute" && post) {
    std::string vrf = string_field(body, "vrf");
    Ipv4Addr dst = Ipv4Addr::parse(string_field(body, "dst_ip"));
    NodeId ingress = optional_node(body, "ingress").value_or(default_ingress(sim, vrf, dst));
    TraceResult t = traceroute(sim, ingress, vrf, dst);
    json hops = json::array();
    for (const auto& h : t.hops) hops.push_back({{"node", to_string(h.node)}, {"labels", h.stack}});
    return {200,
            {{"ingress", to_string(t.ingress)},
             {"egress", to_string(t.egress)},
             {"algo", t.algo},
             {"labels", t.ingress_stack},
             {"path", node_list(t.path)},
             {"hops", hops}}};
  }

  if (path == "/flows" && post) {
    std::string vrf = string_field(body, "vrf");
    Ipv4Prefix src = Ipv4Prefix::parse(string_field(body, "src_prefix"));
    Ipv4Prefix dst = Ipv4Prefix::parse(string_field(body, "dst_prefix"));
    std::int64_t n = int_field(body, "n");
    if (n < 0) fail(ErrorCode::InvalidArgument, "'n' must not be negative");
    NodeId ingress = optional_node(body, "ingress").value_or(default_ingress(sim, vrf, dst.host(1)));
    LinkCounters c = controller.run_flows(ingress, vrf, src, dst, static_cast<std::uint64_t>(n));
    return {200, {{"counters", counters_json(sim.topology(), c)}}};
  }

  return error_response(404, "NotFound", std::string(method) + " " + std::string(path));
}

}  // namespace

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownAlgo:
    case ErrorCode::UnknownLink:
    case ErrorCode::UnknownNode:
    case ErrorCode::UnknownVrf:
      return 404;
    case ErrorCode::IdSpaceExhausted:
      return 409;
    default:
      return 400;
  }
}

ApiResponse handle_api(PathController& controller, std::string_view method,
                       std::string_view path, const std::map<std::string, std::string>& query,
                       std::string_view body) {
  json parsed = json::object();
  if (!body.empty()) {
    parsed = json::parse(body, nullptr, false);
    if (parsed.is_discarded()) return error_response(400, "InvalidArgument", "malformed JSON body");
  }
  try {
    return dispatch(controller, method, path, query, parsed);
  } catch (const Error& e) {
    return error_response(http_status(e.code()), to_string(e.code()), e.what());
  } catch (const json::exception& e) {
    return error_response(400, "InvalidArgument", e.what());
  }
}

bool serve(PathController& controller, const std::string& host, int port,
           const std::string& ui_dir) {
  httplib::Server server;
  auto handler = [&controller](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query(req.params.begin(), req.params.end());
    std::string path = req.path.substr(4);  // strip "/api"
    ApiResponse out = handle_api(controller, req.method, path, query, req.body);
    res.status = out.status;
    res.set_content(out.body.dump(), "application/json");
  };
  server.Get(R"(/api/.*)", handler);
  server.Post(R"(/api/.*)", handler);
  if (!ui_dir.empty() && !server.set_mount_point("/", ui_dir)) return false;
  return server.listen(host, port);
}

}  // namespace flexsr
