// One line per acceptance criterion; exits non-zero if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "flexsr/controller.hpp"
#include "flexsr/experiments.hpp"
#include "flexsr/scenario.hpp"
#include "properties.hpp"

using namespace flexsr;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  std::vector<std::string> problems;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) problems.push_back(what);
  }
};

std::string read_golden(const std::string& id) {
  std::ifstream in(default_golden_dir() + "/" + golden_file_name(id));
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Runs a golden on a fresh paper scenario and folds its report and the
/// conservation/PHP invariants into `c`. Returns the session for further checks.
Session run_golden_checked(const std::string& id, Check& c) {
  Session session(load_scenario(paper_scenario_text()));
  auto report = run_golden(session, id, read_golden(id));
  if (!report.passed()) {
    for (const auto& l : report.lines()) c.problems.push_back(l);
  }
  auto inv = properties::golden_invariants(session);
  for (const auto& f : inv.failures) c.problems.push_back("invariant: " + f);
  return session;
}

std::vector<unsigned> hop_nodes(const TraceResult& t) {
  std::vector<unsigned> out;
  for (const auto& h : t.hops) out.push_back(h.node.value);
  return out;
}

int failures = 0;

void report(const std::string& name, const std::function<void(Check&)>& body,
            double limit_seconds = 0) {
  Check c;
  auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.problems.push_back(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    c.problems.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  bool ok = c.problems.empty();
  failures += ok ? 0 : 1;
  std::ostringstream t;
  t.precision(3);
  t << std::fixed << secs;
  std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << t.str() << " s)\n";
  for (const auto& n : c.notes) std::cout << "     " << n << "\n";
  for (const auto& p : c.problems) std::cout << "     " << p << "\n";
}

}  // namespace

int main() {
  report("experiment 1: GOLD via R2,R4 [20014 24002], PHP to [24002]; SILVER via R3,R4", [](Check& c) {
    Session s = run_golden_checked("1", c);
    const Simulator& sim = s.simulator();
    auto gold = traceroute(sim, {1}, "GOLD", Ipv4Addr::parse("20.10.4.4"));
    c.expect(hop_nodes(gold) == std::vector<unsigned>{2, 4}, "GOLD hops");
    c.expect(gold.ingress_stack == LabelStack{20014, 24002}, "GOLD ingress stack");
    c.expect(gold.hops.size() == 2 && gold.hops[1].stack == LabelStack{24002}, "GOLD R2->R4 wire stack");
    auto silver = traceroute(sim, {1}, "SILVER", Ipv4Addr::parse("20.20.4.4"));
    c.expect(hop_nodes(silver) == std::vector<unsigned>{3, 4}, "SILVER hops");
  }, 1.0);

  report("fib: R1 20013 -> SWAP 20013 nh 10.0.12.2", [](Check& c) {
    Simulator sim = load_scenario(paper_scenario_text());
    const auto& fib = sim.fib({1});
    auto it = fib.find(20013);
    c.expect(it != fib.end() && it->second.actions.size() == 1, "single entry for 20013");
    if (it == fib.end() || it->second.actions.empty()) return;
    const FibAction& a = it->second.actions[0];
    c.expect(a.kind == FibAction::Kind::Swap && a.out_label == 20013, "SWAP 20013");
    c.expect(a.next_hop.str() == "10.0.12.2", "next hop 10.0.12.2");
    auto lines = format_fib(fib);
    c.expect(std::find(lines.begin(), lines.end(), "R1 20013 -> SWAP 20013 via R1->R2 nh 10.0.12.2") != lines.end(),
             "formatted line");
  });

  report("experiment 2: BRONZE ECMP at 200 us, set-delay R2->R4 10 changes {130}, then R2,R4", [](Check& c) {
    run_golden_checked("2", c);
    Simulator sim = load_scenario(paper_scenario_text());
    const SpfRoute* r = sim.spf_result({1}, 130).route({4});
    c.expect(r && r->distance == 200 && r->next_hops.size() == 2, "pre-change two next hops at 200");
    auto paths = forwarding_paths(sim, {1}, "BRONZE", Ipv4Addr::parse("20.30.4.4"));
    c.expect(paths.size() == 2, "pre-change two forwarding paths");
    auto ev = set_link_delay(sim, {{2}, {4}}, 10);
    c.expect(ev.changed_algos == std::set<AlgoId>{130}, "changed set {130}");
    auto t = traceroute(sim, {1}, "BRONZE", Ipv4Addr::parse("20.30.4.4"));
    c.expect(hop_nodes(t) == std::vector<unsigned>{2, 4}, "post-change hops R2,R4");
    c.expect(forwarding_paths(sim, {1}, "BRONZE", Ipv4Addr::parse("20.30.4.4")).size() == 1,
             "post-change path is unique");
  });

  report("experiment 3: algo 131 distance 3 over two next hops, 200 flows >= 70 each way, [20044 24005]", [](Check& c) {
    run_golden_checked("3", c);
    Simulator sim = load_scenario(paper_scenario_text());
    const SpfRoute* r = sim.spf_result({1}, 131).route({4});
    c.expect(r && r->distance == 3 && r->next_hops.size() == 2, "distance 3 with two next hops");
    auto counters = run_flows(sim, {1}, "PLATINUM", Ipv4Prefix::parse("20.40.1.0/24"),
                              Ipv4Prefix::parse("20.30.4.0/24"), 200);
    auto via2 = counters[{{1}, {2}}], via3 = counters[{{1}, {3}}];
    c.expect(via2 >= 70 && via3 >= 70 && via2 + via3 == 200,
             "split " + std::to_string(via2) + "/" + std::to_string(via3));
    c.notes.push_back("R1->R2 " + std::to_string(via2) + ", R1->R3 " + std::to_string(via3));
    auto t = traceroute(sim, {1}, "PLATINUM", Ipv4Addr::parse("20.30.4.4"));
    c.expect(t.ingress_stack == LabelStack{20044, 24005}, "labels 20044/24005");
  }, 2.0);

  report("controller: (igp, exclude-any, blue) REUSED 128; (te-metric, include-all, red) CREATED 132", [](Check& c) {
    run_golden_checked("controller", c);
    Simulator sim = load_scenario(paper_scenario_text());
    auto a = request_custom_path(sim, {MetricType::Igp, ConstraintOp::ExcludeAny, {"blue"}}, 50);
    c.expect(a == FadOutcome{FadOutcomeKind::Reused, 128, 50}, "first request");
    c.expect(traceroute(sim, {1}, "CUSTOM", Ipv4Addr::parse("20.50.4.4")).ingress_stack.front() == 20014,
             "CUSTOM uses 20014");
    auto b = request_custom_path(sim, {MetricType::TeDefault, ConstraintOp::IncludeAll, {"red"}}, 50);
    c.expect(b == FadOutcome{FadOutcomeKind::Created, 132, 50}, "second request");
    c.expect(traceroute(sim, {1}, "CUSTOM", Ipv4Addr::parse("20.50.4.4")).ingress_stack.front() == 20054,
             "CUSTOM uses 20054");
  });

  report("properties: SPF vs brute force (200 topologies), exclusion (10^4), codec (10^4), golden invariants", [](Check& c) {
    auto fold = [&](const char* name, const properties::Result& r) {
      c.notes.push_back(std::string(name) + ": " + std::to_string(r.checked) + " cases, " +
                        std::to_string(r.exercised) + " non-trivial");
      for (const auto& f : r.failures) c.problems.push_back(std::string(name) + ": " + f);
    };
    auto spf = properties::spf_matches_oracle(1, 200);
    fold("spf", spf);
    auto excl = properties::exclusion_soundness(2, 10000);
    fold("exclusion", excl);
    c.expect(excl.exercised == 10000, "exclusion forwarded-trial count");
    auto codec = properties::codec_round_trip(3, 10000);
    fold("codec", codec);
    c.expect(codec.exercised == 10000, "codec count");
    for (const char* id : {"1", "2", "3", "controller"}) {
      Check g;
      Session s = run_golden_checked(id, g);
      c.expect(!s.traces().empty(), std::string("golden ") + id + " recorded traces");
      for (const auto& p : g.problems) c.problems.push_back(std::string("golden ") + id + ": " + p);
    }
  }, 60.0);

  return failures == 0 ? 0 : 1;
}
