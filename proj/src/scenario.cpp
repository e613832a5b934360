#include "flexsr/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace flexsr {

namespace {

struct Token {
  std::string text;
  int column = 0;
};

class LineParser {
 public:
  LineParser(int line, std::vector<Token> tokens, int end_column)
      : line_(line), tokens_(std::move(tokens)), end_column_(end_column) {}

  [[noreturn]] void error(int column, const std::string& what) const {
    fail(ErrorCode::ParseError,
         "line " + std::to_string(line_) + ", column " + std::to_string(column) + ": " + what);
  }

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek() const {
    if (done()) error(end_column_, "unexpected end of line");
    return tokens_[pos_];
  }
  const Token& next() {
    const Token& t = peek();
    ++pos_;
    return t;
  }

  std::uint32_t number(std::uint64_t max = UINT32_MAX) {
    const Token& t = next();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size() || value > max) {
      error(t.column, "expected a number, got '" + t.text + "'");
    }
    return static_cast<std::uint32_t>(value);
  }

  template <typename F>
  auto convert(F&& f) -> decltype(f(std::string_view{})) {
    const Token& t = next();
    try {
      return f(t.text);
    } catch (const Error& e) {
      error(t.column, e.what());
    }
  }

  NodeId node() { return convert([](std::string_view s) { return parse_node_id(s); }); }
  Ipv4Addr address() { return convert([](std::string_view s) { return Ipv4Addr::parse(s); }); }
  Ipv4Prefix prefix() {
    return convert([](std::string_view s) { return Ipv4Prefix::parse(s); });
  }

  std::set<std::string> colors() {
    const Token& t = next();
    std::set<std::string> out;
    if (t.text == "-") return out;
    std::string_view rest = t.text;
    while (!rest.empty()) {
      auto comma = rest.find(',');
      auto name = rest.substr(0, comma);
      if (name.empty()) error(t.column, "empty colour name in '" + t.text + "'");
      out.emplace(name);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
      if (rest.empty()) error(t.column, "trailing comma in '" + t.text + "'");
    }
    return out;
  }

  /// Node ids until the next keyword (anything not shaped like R<n>).
  std::vector<NodeId> node_list() {
    std::vector<NodeId> out;
    while (!done() && peek().text.size() > 1 && peek().text[0] == 'R') out.push_back(node());
    if (out.empty()) error(done() ? end_column_ : peek().column, "expected node ids");
    return out;
  }

  int line() const { return line_; }

 private:
  int line_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int end_column_;
};

std::vector<Token> tokenize(std::string_view text, int column_offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    if (i > start) {
      out.push_back({std::string(text.substr(start, i - start)),
                     column_offset + static_cast<int>(start) + 1});
    }
  }
  return out;
}

ScenarioLinkAttrs parse_link_attrs(LineParser& p, std::optional<Ipv4Prefix>* subnet) {
  ScenarioLinkAttrs attrs;
  while (!p.done()) {
    const Token& key = p.next();
    if (key.text == "igp") {
      attrs.igp = p.number();
    } else if (key.text == "te") {
      attrs.te = p.number();
    } else if (key.text == "delay") {
      attrs.delay_us = p.number();
    } else if (key.text == "colors") {
      attrs.colors = p.colors();
    } else if (key.text == "subnet" && subnet != nullptr) {
      *subnet = p.prefix();
    } else {
      p.error(key.column, "unknown link attribute '" + key.text + "'");
    }
  }
  return attrs;
}

void parse_statement(Scenario& sc, const std::string& section, const Token& key,
                     LineParser& p) {
  const int line = p.line();
  auto key_parser = [&] { return LineParser(line, {key}, key.column); };

  if (section == "srgb") {
    std::uint32_t value = p.number(kMaxLabel);
    if (key.text == "base") {
      sc.srgb.base = value;
    } else if (key.text == "size") {
      sc.srgb.size = value;
    } else {
      p.error(key.column, "unknown srgb key '" + key.text + "'");
    }
  } else if (section == "affinity") {
    sc.affinity.emplace_back(key.text, p.number(AdminGroup::kBits - 1));
  } else if (section == "node") {
    auto kp = key_parser();
    sc.nodes.emplace_back(kp.node(), p.address());
  } else if (section == "link") {
    auto kp = key_parser();
    auto id = kp.convert([](std::string_view s) { return parse_adjacency_id(s); });
    ScenarioLink link{id.from, id.to, std::nullopt, {}, line};
    link.attrs = parse_link_attrs(p, &link.subnet);
    sc.links.push_back(std::move(link));
  } else if (section == "direction") {
    auto kp = key_parser();
    auto id = kp.convert([](std::string_view s) { return parse_adjacency_id(s); });
    sc.directions.push_back({id, parse_link_attrs(p, nullptr), line});
  } else if (section == "participate") {
    auto kp = key_parser();
    NodeId node = kp.node();
    while (!p.done()) sc.participation.emplace_back(node, p.number(kLastFlexAlgo));
  } else if (section == "fad") {
    auto kp = key_parser();
    ScenarioFad fad;
    fad.line = line;
    fad.algo = kp.number(kLastFlexAlgo);
    bool have_metric = false;
    while (!p.done()) {
      const Token& word = p.next();
      if (word.text == "metric") {
        fad.metric = p.convert([](std::string_view s) { return parse_metric_type(s); });
        have_metric = true;
      } else if (word.text == "calc") {
        fad.calc_type = static_cast<std::uint8_t>(p.number(1));
      } else if (word.text == "exclude-any" || word.text == "include-any" ||
                 word.text == "include-all") {
        fad.constraints.push_back({parse_constraint_op(word.text), p.colors()});
      } else if (word.text == "participants") {
        fad.participants = p.node_list();
      } else if (word.text == "origin") {
        fad.origins = p.node_list();
      } else {
        p.error(word.column, "unknown fad attribute '" + word.text + "'");
      }
    }
    if (!have_metric) p.error(key.column, "fad " + key.text + " needs a metric");
    sc.fads.push_back(std::move(fad));
  } else if (section == "vrf") {
    ScenarioVrf vrf{key.text, {}, 0, 0, line};
    bool have_rd = false, have_color = false;
    while (!p.done()) {
      const Token& word = p.next();
      if (word.text == "rd") {
        vrf.rd = p.next().text;
        have_rd = true;
      } else if (word.text == "color") {
        vrf.color = p.number();
        have_color = true;
      } else if (word.text == "ordinal") {
        vrf.ordinal = p.number();
      } else {
        p.error(word.column, "unknown vrf attribute '" + word.text + "'");
      }
    }
    if (!have_rd || !have_color) p.error(key.column, "vrf " + key.text + " needs rd and color");
    sc.vrfs.push_back(std::move(vrf));
  } else if (section == "attach") {
    ScenarioAttach attach{key.text, p.node(), p.prefix(), {}, line};
    if (!p.done()) {
      const Token& word = p.next();
      if (word.text != "interface") p.error(word.column, "expected 'interface'");
      attach.interface_name = p.next().text;
    }
    sc.attachments.push_back(std::move(attach));
  } else if (section == "odn") {
    auto kp = key_parser();
    sc.odn.emplace_back(kp.number(), p.number(kLastFlexAlgo));
  } else {
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ", column 1: unknown section '" +
                                    section + "'");
  }
  if (!p.done()) p.error(p.peek().column, "unexpected '" + p.peek().text + "'");
}

[[noreturn]] void invalid(int line, const std::string& what) {
  fail(ErrorCode::ValidationError,
       (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + what);
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  Scenario sc;
  int line_no = 0;
  bool any = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                         : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    any = true;

    auto colon = line.find(':');
    auto equals = line.find('=');
    if (colon == std::string_view::npos) {
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                      ", column 1: expected '<section>: <key> = <value>'");
    }
    if (equals == std::string_view::npos || equals < colon) {
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ", column " +
                                      std::to_string(colon + 2) + ": expected '='");
    }
    auto section_tokens = tokenize(line.substr(0, colon), 0);
    auto key_tokens = tokenize(line.substr(colon + 1, equals - colon - 1),
                               static_cast<int>(colon) + 1);
    auto value_tokens = tokenize(line.substr(equals + 1), static_cast<int>(equals) + 1);
    if (section_tokens.size() != 1) {
      fail(ErrorCode::ParseError,
           "line " + std::to_string(line_no) + ", column 1: expected one section name");
    }
    if (key_tokens.size() != 1) {
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ", column " +
                                      std::to_string(colon + 2) + ": expected one key");
    }
    LineParser p(line_no, std::move(value_tokens), static_cast<int>(line.size()) + 1);
    parse_statement(sc, section_tokens[0].text, key_tokens[0], p);
  }
  if (!any) fail(ErrorCode::ParseError, "line 1, column 1: empty scenario");
  return sc;
}

void validate_scenario(const Scenario& sc) {
  if (sc.srgb.size == 0 || sc.srgb.base + sc.srgb.size > kMaxLabel) {
    invalid(0, "SRGB must be non-empty and fit the 20-bit label space");
  }

  AffinityMap affinity;
  for (const auto& [color, bit] : sc.affinity) {
    try {
      affinity.add(color, bit);
    } catch (const Error& e) {
      invalid(0, e.what());
    }
  }
  auto check_colors = [&](const std::set<std::string>& colors, int line) {
    for (const auto& c : colors) {
      if (!affinity.contains(c)) invalid(line, "unknown colour '" + c + "'");
    }
  };

  std::set<NodeId> nodes;
  std::set<Ipv4Addr> router_ids;
  for (const auto& [id, rid] : sc.nodes) {
    if (!nodes.insert(id).second) invalid(0, "duplicate node " + to_string(id));
    if (!router_ids.insert(rid).second) invalid(0, "duplicate router id " + rid.str());
  }
  auto check_node = [&](NodeId id, int line) {
    if (nodes.count(id) == 0) invalid(line, "unknown node " + to_string(id));
  };

  std::set<AdjacencyId> adjacencies;
  for (const auto& link : sc.links) {
    check_node(link.a, link.line);
    check_node(link.b, link.line);
    if (link.a == link.b) invalid(link.line, "self loop on " + to_string(link.a));
    if (!adjacencies.insert({link.a, link.b}).second ||
        !adjacencies.insert({link.b, link.a}).second) {
      invalid(link.line, "duplicate link " + to_string(link.a) + "-" + to_string(link.b));
    }
    if (link.attrs.colors) check_colors(*link.attrs.colors, link.line);
    if (link.attrs.delay_us && *link.attrs.delay_us < 1) invalid(link.line, "delay must be >= 1");
    if ((link.attrs.igp && *link.attrs.igp < 1) || (link.attrs.te && *link.attrs.te < 1)) {
      invalid(link.line, "metrics must be positive");
    }
  }
  for (const auto& dir : sc.directions) {
    if (adjacencies.count(dir.link) == 0) invalid(dir.line, "unknown link " + to_string(dir.link));
    if (dir.attrs.colors) check_colors(*dir.attrs.colors, dir.line);
    if (dir.attrs.delay_us && *dir.attrs.delay_us < 1) invalid(dir.line, "delay must be >= 1");
    if ((dir.attrs.igp && *dir.attrs.igp < 1) || (dir.attrs.te && *dir.attrs.te < 1)) {
      invalid(dir.line, "metrics must be positive");
    }
  }
  for (const auto& [node, algo] : sc.participation) {
    check_node(node, 0);
    if (!is_flex_algo(algo)) invalid(0, "participation in algo " + std::to_string(algo));
  }

  std::set<std::pair<AlgoId, NodeId>> fad_origins;
  std::set<AlgoId> fad_algos;
  for (const auto& fad : sc.fads) {
    if (!is_flex_algo(fad.algo)) {
      invalid(fad.line, "flex-algo " + std::to_string(fad.algo) + " outside 128-255");
    }
    for (const auto& c : fad.constraints) {
      if (c.colors.empty() || c.colors.size() > kMaxConstraintColors) {
        invalid(fad.line, std::string(to_string(c.op)) + " takes 1 to 10 colours, got " +
                              std::to_string(c.colors.size()));
      }
      check_colors(c.colors, fad.line);
    }
    if (fad.constraints.size() > kMaxConstraintColors) {
      invalid(fad.line, "more than 10 constraints");
    }
    for (NodeId n : fad.participants) check_node(n, fad.line);
    const auto& origins = fad.origins.empty()
                              ? (fad.participants.empty() ? std::vector<NodeId>(nodes.begin(), nodes.end())
                                                          : fad.participants)
                              : fad.origins;
    if (origins.empty()) invalid(fad.line, "fad " + std::to_string(fad.algo) + " has no origin");
    for (NodeId n : origins) {
      check_node(n, fad.line);
      if (!fad_origins.insert({fad.algo, n}).second) {
        invalid(fad.line, "fad " + std::to_string(fad.algo) + " defined twice by " + to_string(n));
      }
    }
    fad_algos.insert(fad.algo);
  }
  for (const auto& [id, rid] : sc.nodes) {
    if (id.value > 9) invalid(0, "Prefix-SID label plan supports node ids 1-9, got " + to_string(id));
  }

  std::set<std::string> vrf_names, rds;
  std::set<std::uint32_t> colors;
  std::set<unsigned> ordinals;
  for (const auto& vrf : sc.vrfs) {
    if (!vrf_names.insert(vrf.name).second) invalid(vrf.line, "duplicate VRF " + vrf.name);
    if (!rds.insert(vrf.rd).second) invalid(vrf.line, "duplicate RD " + vrf.rd);
    if (!colors.insert(vrf.color).second) {
      invalid(vrf.line, "duplicate colour " + std::to_string(vrf.color));
    }
    if (vrf.ordinal != 0 && !ordinals.insert(vrf.ordinal).second) {
      invalid(vrf.line, "duplicate ordinal " + std::to_string(vrf.ordinal));
    }
  }
  std::set<std::pair<std::string, Ipv4Prefix>> attached;
  for (const auto& a : sc.attachments) {
    if (vrf_names.count(a.vrf) == 0) invalid(a.line, "unknown VRF " + a.vrf);
    check_node(a.node, a.line);
    if (!attached.insert({a.vrf, a.prefix}).second) {
      invalid(a.line, "prefix " + a.prefix.str() + " attached twice in " + a.vrf);
    }
  }
  std::set<std::uint32_t> bound;
  for (const auto& [color, algo] : sc.odn) {
    if (colors.count(color) == 0) invalid(0, "odn colour " + std::to_string(color) + " has no VRF");
    if (fad_algos.count(algo) == 0) {
      invalid(0, "odn colour " + std::to_string(color) + " bound to algo " +
                     std::to_string(algo) + " without a FAD");
    }
    if (!bound.insert(color).second) invalid(0, "colour " + std::to_string(color) + " bound twice");
  }
}

Simulator build_simulator(const Scenario& sc) {
  validate_scenario(sc);
  Simulator sim;
  sim.srgb() = sc.srgb;
  Topology& topo = sim.topology();
  for (const auto& [color, bit] : sc.affinity) topo.add_affinity(color, bit);
  for (const auto& [id, rid] : sc.nodes) topo.add_node(id, rid);

  auto mask_of = [&](const std::optional<std::set<std::string>>& colors) {
    return colors ? resolve_admin_group(topo.affinity(), *colors) : AdminGroup{};
  };
  for (const auto& link : sc.links) {
    LinkAttributes attrs;
    attrs.subnet = link.subnet;
    attrs.igp_metric = link.attrs.igp.value_or(1);
    attrs.te_metric = link.attrs.te.value_or(1);
    attrs.delay_us = link.attrs.delay_us.value_or(1);
    attrs.admin_group = mask_of(link.attrs.colors);
    topo.add_link(link.a, link.b, attrs);
  }
  for (const auto& dir : sc.directions) {
    const Adjacency& adj = topo.adjacency(dir.link);
    topo.set_link_attributes(dir.link, dir.attrs.igp.value_or(adj.igp_metric),
                             dir.attrs.te.value_or(adj.te_metric),
                             dir.attrs.delay_us.value_or(adj.delay_us),
                             dir.attrs.colors ? mask_of(dir.attrs.colors) : adj.admin_group);
  }
  for (const auto& [node, algo] : sc.participation) topo.set_participation(node, algo);

  std::vector<std::pair<NodeId, Fad>> fad_floods;
  for (const auto& sf : sc.fads) {
    std::vector<NodeId> participants = sf.participants;
    if (participants.empty()) {
      for (const auto& [id, rid] : sc.nodes) participants.push_back(id);
    }
    for (NodeId n : participants) topo.set_participation(n, sf.algo);
    Fad fad{sf.algo, sf.calc_type, sf.metric,
            resolve_constraints(topo.affinity(), sf.constraints)};
    for (NodeId origin : sf.origins.empty() ? participants : sf.origins) {
      fad_floods.emplace_back(origin, fad);
    }
  }

  sim.flooding().sync_nodes(topo);
  sim.flood_all_link_attributes();
  for (const auto& [origin, fad] : fad_floods) sim.flood_fad(origin, fad);
  for (const auto& [id, node] : topo.nodes()) sim.advertise_sids(id);

  for (const auto& vrf : sc.vrfs) {
    sim.services().create_vrf(vrf.name, vrf.rd, vrf.color, vrf.ordinal);
  }
  for (const auto& a : sc.attachments) {
    sim.services().attach(a.vrf, a.node, a.prefix, a.interface_name);
  }
  for (const auto& [color, algo] : sc.odn) sim.services().set_binding(color, algo);
  sim.recompute();
  return sim;
}

Simulator load_scenario(std::string_view text) {
  Scenario sc = parse_scenario(text);
  try {
    return build_simulator(sc);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ValidationError) throw;
    fail(ErrorCode::ValidationError, e.what());
  }
}

namespace {

std::string join_colors(const std::vector<std::string>& colors) {
  std::string out;
  for (const auto& c : colors) out += (out.empty() ? "" : ",") + c;
  return out;
}

/// `colors -` spells an explicitly empty set, needed when a one-way override clears them.
std::string attr_text(const Adjacency& adj, const AffinityMap& affinity, bool explicit_empty) {
  std::string out = "igp " + std::to_string(adj.igp_metric) + " te " +
                    std::to_string(adj.te_metric) + " delay " + std::to_string(adj.delay_us);
  auto colors = affinity.colors_of(adj.admin_group);
  if (!colors.empty()) {
    out += " colors " + join_colors(colors);
  } else if (explicit_empty) {
    out += " colors -";
  }
  return out;
}

std::string node_list(const std::vector<NodeId>& nodes) {
  std::string out;
  for (NodeId n : nodes) out += " " + to_string(n);
  return out;
}

}  // namespace

std::string export_scenario(const Simulator& sim) {
  const Topology& topo = sim.topology();
  const AffinityMap& affinity = topo.affinity();
  std::ostringstream out;
  out << "srgb: base = " << sim.srgb().base << "\n";
  out << "srgb: size = " << sim.srgb().size << "\n";
  std::vector<std::pair<std::size_t, std::string>> by_bit;
  for (const auto& [color, bit] : affinity.entries()) by_bit.emplace_back(bit, color);
  std::sort(by_bit.begin(), by_bit.end());
  for (const auto& [bit, color] : by_bit) out << "affinity: " << color << " = " << bit << "\n";
  for (const auto& [id, node] : topo.nodes()) {
    out << "node: " << to_string(id) << " = " << node.router_id.str() << "\n";
  }

  // Links are written in creation order of their interface numbering so that the
  // rebuilt topology assigns the same interface names.
  std::vector<const Adjacency*> forward;
  for (const auto& [id, adj] : topo.adjacencies()) {
    if (id.from < id.to) forward.push_back(&adj);
  }
  auto if_index = [](const Adjacency& adj) {
    return std::stoul(adj.interface_name.substr(adj.interface_name.rfind('/') + 1));
  };
  std::vector<const Adjacency*> ordered;
  {
    // Replay creation: repeatedly take the link whose both interface numbers are next.
    std::map<NodeId, unsigned long> next_if;
    std::vector<const Adjacency*> pending = forward;
    while (!pending.empty()) {
      auto it = std::find_if(pending.begin(), pending.end(), [&](const Adjacency* a) {
        const Adjacency& back = topo.adjacency(a->id.reverse());
        return if_index(*a) == next_if[a->from()] && if_index(back) == next_if[a->to()];
      });
      if (it == pending.end()) it = pending.begin();
      ++next_if[(*it)->from()];
      ++next_if[(*it)->to()];
      ordered.push_back(*it);
      pending.erase(it);
    }
  }
  std::vector<std::string> directions;
  for (const Adjacency* adj : ordered) {
    out << "link: " << to_string(adj->from()) << "-" << to_string(adj->to())
        << " = subnet " << adj->subnet.str() << " " << attr_text(*adj, affinity, false)
        << "\n";
    const Adjacency& back = topo.adjacency(adj->id.reverse());
    if (attr_text(back, affinity, true) != attr_text(*adj, affinity, true)) {
      directions.push_back("direction: " + to_string(back.from()) + "-" + to_string(back.to()) +
                           " = " + attr_text(back, affinity, true));
    }
  }
  for (const auto& d : directions) out << d << "\n";

  const auto fads = sim.active_fads();
  std::map<AlgoId, std::vector<std::pair<NodeId, Fad>>> fad_adverts;
  if (!sim.flooding().lsdbs().empty()) {
    const Lsdb& lsdb = sim.flooding().lsdbs().begin()->second;
    for (const auto& [algo, fad] : fads) fad_adverts[algo] = lsdb.fads(algo);
  }
  for (const auto& [id, node] : topo.nodes()) {
    std::string extra;
    for (AlgoId algo : node.participation) {
      if (fads.count(algo) == 0) extra += " " + std::to_string(algo);
    }
    if (!extra.empty()) out << "participate: " << to_string(id) << " =" << extra << "\n";
  }
  for (const auto& [algo, adverts] : fad_adverts) {
    // One line per distinct definition, listing the nodes that originate it.
    std::vector<std::pair<Fad, std::vector<NodeId>>> groups;
    for (const auto& [origin, fad] : adverts) {
      auto it = std::find_if(groups.begin(), groups.end(),
                             [&](const auto& g) { return g.first == fad; });
      if (it == groups.end()) {
        groups.push_back({fad, {origin}});
      } else {
        it->second.push_back(origin);
      }
    }
    for (const auto& [fad, origins] : groups) {
      out << "fad: " << algo << " = metric " << to_string(fad.metric) << " calc "
          << static_cast<unsigned>(fad.calc_type);
      for (const auto& c : describe_constraints(affinity, fad.constraints)) {
        out << " " << to_string(c.op) << " "
            << join_colors(std::vector<std::string>(c.colors.begin(), c.colors.end()));
      }
      out << " participants" << node_list(sim.participants(algo)) << " origin"
          << node_list(origins) << "\n";
    }
  }
  for (const auto& vrf : sim.services().vrfs()) {
    out << "vrf: " << vrf.name << " = rd " << vrf.rd << " color " << vrf.color << " ordinal "
        << vrf.ordinal << "\n";
  }
  for (const auto& vrf : sim.services().vrfs()) {
    for (const auto& a : vrf.attachments) {
      out << "attach: " << vrf.name << " = " << to_string(a.node) << " " << a.prefix.str()
          << " interface " << a.interface_name << "\n";
    }
  }
  for (const auto& [color, algo] : sim.services().bindings()) {
    out << "odn: " << color << " = " << algo << "\n";
  }
  return out.str();
}

}  // namespace flexsr
