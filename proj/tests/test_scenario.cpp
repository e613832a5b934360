#include <gtest/gtest.h>

#include "flexsr/scenario.hpp"
#include "flexsr/session.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

namespace flexsr {
namespace {

using testing::expect_code;
using testing::paper;

std::string error_message(ErrorCode code, std::string_view text) {
  try {
    load_scenario(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "scenario loaded";
  return {};
}

std::vector<std::string> all_show(const Simulator& sim) {
  std::vector<std::string> out;
  auto add = [&](std::vector<std::string> lines) { out.insert(out.end(), lines.begin(), lines.end()); };
  add(show_topology(sim));
  add(show_fads(sim));
  for (const auto& [id, node] : sim.topology().nodes()) {
    add(show_fib(sim, id));
    add(show_lsdb(sim, id));
    for (const auto& [algo, r] : sim.routing(id).spf) add(show_spf(sim, algo, id));
  }
  return out;
}

TEST(PaperScenarioTest, Inventory) {
  Simulator sim = paper();
  EXPECT_EQ(sim.topology().nodes().size(), 4u);
  EXPECT_EQ(sim.topology().adjacencies().size(), 10u);
  EXPECT_EQ(sim.services().vrfs().size(), 5u);
  EXPECT_EQ(sim.active_fads().size(), 4u);
  EXPECT_EQ(sim.active_fads().begin()->first, 128u);
  EXPECT_TRUE(lsdb_consistent(sim.flooding()));
  for (const auto& [id, node] : sim.topology().nodes()) {
    EXPECT_EQ(node.participation, (std::set<AlgoId>{128, 129, 130, 131}));
  }
}

TEST(ScenarioParseTest, EmptyIsParseError) {
  expect_code(ErrorCode::ParseError, [] { load_scenario(""); });
  expect_code(ErrorCode::ParseError, [] { load_scenario("# only a comment\n\n"); });
}

TEST(ScenarioParseTest, ErrorsCarryLineAndColumn) {
  auto msg = error_message(ErrorCode::ParseError, "node: R1 = 1.1.1.1\nlink: R1-R2 = igp x\n");
  EXPECT_NE(msg.find("line 2, column 19"), std::string::npos) << msg;
  msg = error_message(ErrorCode::ParseError, "bogus: a = b\n");
  EXPECT_NE(msg.find("line 1"), std::string::npos) << msg;
  error_message(ErrorCode::ParseError, "node R1 1.1.1.1\n");
  error_message(ErrorCode::ParseError, "node: R1 = 1.1.1\n");
}

TEST(ScenarioValidateTest, DanglingAndDuplicates) {
  const std::string base = "affinity: red = 1\nnode: R1 = 1.1.1.1\nnode: R2 = 2.2.2.2\n";
  error_message(ErrorCode::ValidationError, base + "link: R1-R3 = igp 1\n");
  error_message(ErrorCode::ValidationError, base + "link: R1-R2 = igp 1\nlink: R2-R1 = igp 1\n");
  error_message(ErrorCode::ValidationError, base + "link: R1-R2 = colors green\n");
  error_message(ErrorCode::ValidationError, base + "node: R1 = 9.9.9.9\n");
  error_message(ErrorCode::ValidationError, base + "vrf: A = rd 1:1 color 1\nattach: B = R1 1.0.0.0/8\n");
  error_message(ErrorCode::ValidationError, base + "vrf: A = rd 1:1 color 1\nodn: 1 = 128\n");
  error_message(ErrorCode::ValidationError, "node: R10 = 1.1.1.1\n");
}

TEST(ScenarioValidateTest, ColourCap) {
  std::string text = "node: R1 = 1.1.1.1\n";
  std::string colors;
  for (int i = 0; i < 11; ++i) {
    text += "affinity: c" + std::to_string(i) + " = " + std::to_string(i) + "\n";
    colors += (i ? "," : "") + std::string("c") + std::to_string(i);
  }
  error_message(ErrorCode::ValidationError, text + "fad: 128 = metric igp calc 0 exclude-any " + colors + "\n");
  // Ten is fine.
  colors = colors.substr(0, colors.rfind(','));
  EXPECT_NO_THROW(load_scenario(text + "fad: 128 = metric igp calc 0 exclude-any " + colors + "\n"));
}

TEST(ScenarioTest, Deterministic) {
  auto a = load_scenario(paper_scenario_text());
  auto b = load_scenario(paper_scenario_text());
  EXPECT_EQ(a, b);
  EXPECT_EQ(all_show(a), all_show(b));
}

TEST(ScenarioTest, ExportRoundTripPaper) {
  Simulator sim = paper();
  Simulator again = load_scenario(export_scenario(sim));
  EXPECT_EQ(all_show(again), all_show(sim));
  EXPECT_EQ(export_scenario(again), export_scenario(sim));
}

TEST(ScenarioTest, ExportRoundTripAfterChanges) {
  Session session(paper());
  session.execute({"set-delay", "R2->R4", "10"});
  session.execute({"request-path", "te-metric", "include-all", "red", "50"});
  Simulator again = load_scenario(export_scenario(session.simulator()));
  EXPECT_EQ(show_topology(again), show_topology(session.simulator()));
  EXPECT_EQ(show_fads(again), show_fads(session.simulator()));
  EXPECT_EQ(show_fib(again, {1}), show_fib(session.simulator(), {1}));
  EXPECT_EQ(show_spf(again, 132, {1}), show_spf(session.simulator(), 132, {1}));
}

TEST(ScenarioTest, ExportRoundTripRandom) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto rs = oracle::random_scenario(rng, 7);
    Simulator sim = load_scenario(rs.text);
    Simulator again = load_scenario(export_scenario(sim));
    ASSERT_EQ(all_show(again), all_show(sim)) << rs.text;
  }
}

TEST(ScenarioTest, DirectionOverrideCanClearColours) {
  const std::string text =
      "affinity: red = 1\nnode: R1 = 1.1.1.1\nnode: R2 = 2.2.2.2\n"
      "link: R1-R2 = igp 1 colors red\ndirection: R2-R1 = colors -\n";
  Simulator sim = load_scenario(text);
  EXPECT_FALSE(sim.topology().adjacency({{1}, {2}}).admin_group.none());
  EXPECT_TRUE(sim.topology().adjacency({{2}, {1}}).admin_group.none());
  EXPECT_EQ(show_topology(load_scenario(export_scenario(sim))), show_topology(sim));
}

}  // namespace
}  // namespace flexsr
