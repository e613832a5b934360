#include <gtest/gtest.h>

#include "flexsr/api.hpp"
#include "helpers.hpp"

namespace flexsr {
namespace {

using nlohmann::json;
using testing::paper;

class ApiTest : public ::testing::Test {
 protected:
  ApiResponse get(std::string_view path, std::map<std::string, std::string> query = {}) {
    return handle_api(pc_, "GET", path, query, "");
  }
  ApiResponse post(std::string_view path, const json& body) {
    return handle_api(pc_, "POST", path, {}, body.dump());
  }

  PathController pc_{paper()};
};

TEST_F(ApiTest, Topology) {
  auto r = get("/topology");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["nodes"].size(), 4u);
  EXPECT_EQ(r.body["nodes"][0]["router_id"], "1.1.1.1");
  EXPECT_EQ(r.body["links"].size(), 10u);
  EXPECT_EQ(r.body["links"][0]["id"], "R1->R2");
  EXPECT_EQ(r.body["links"][0]["colors"], json::array({"red"}));
  EXPECT_EQ(r.body["affinity"]["blue"], 10);
}

TEST_F(ApiTest, FadsAndRequests) {
  auto r = get("/fads");
  ASSERT_EQ(r.body.size(), 4u);
  EXPECT_EQ(r.body[0]["algo"], 128);
  EXPECT_EQ(r.body[0]["constraints"][0]["op"], "exclude-any");

  r = post("/fads", {{"metric", "igp"}, {"op", "exclude-any"}, {"colors", {"blue"}}, {"target_color", 50}});
  ASSERT_EQ(r.status, 200) << r.body;
  EXPECT_EQ(r.body, (json{{"kind", "REUSED"}, {"algo", 128}, {"bound_color", 50}}));

  r = post("/fads", {{"metric", "te-metric"}, {"op", "include-all"}, {"colors", {"red"}}, {"target_color", 50}});
  EXPECT_EQ(r.body["kind"], "CREATED");
  EXPECT_EQ(r.body["algo"], 132);
  EXPECT_EQ(get("/fads").body.size(), 5u);
}

TEST_F(ApiTest, ErrorStatuses) {
  auto r = post("/fads", {{"metric", "igp"}, {"op", "exclude-any"}, {"colors", {"green"}}, {"target_color", 50}});
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["code"], "UnknownColor");
  EXPECT_EQ(get("/paths/200", {{"source", "R1"}}).status, 404);
  EXPECT_EQ(post("/links/R1->R4/delay", {{"delay_us", 5}}).status, 404);
  r = post("/links/R1->R2/delay", {{"delay_us", 0}});
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["code"], "InvalidDelay");
  EXPECT_EQ(handle_api(pc_, "POST", "/fads", {}, "{not json").status, 400);
  EXPECT_EQ(get("/nowhere").status, 404);
  EXPECT_EQ(http_status(ErrorCode::IdSpaceExhausted), 409);
}

TEST_F(ApiTest, IdSpaceExhaustedIsConflict) {
  Simulator sim = paper();
  sim.flood_fad({1}, Fad{255, 0, MetricType::Igp, {}});
  sim.recompute();
  PathController full(sim);
  auto r = handle_api(full, "POST", "/fads", {},
                      json{{"metric", "te-metric"}, {"op", "include-all"}, {"colors", {"red"}}, {"target_color", 50}}.dump());
  EXPECT_EQ(r.status, 409);
  EXPECT_EQ(r.body["code"], "IdSpaceExhausted");
}

TEST_F(ApiTest, DelayEvent) {
  auto r = post("/links/R2->R4/delay", {{"delay_us", 10}});
  ASSERT_EQ(r.status, 200) << r.body;
  EXPECT_EQ(r.body["changed_algos"], json::array({130}));
  EXPECT_EQ(r.body["path_diffs"]["BRONZE"]["after"], json::array({json::array({"R1", "R2", "R4"})}));
  r = post("/links/R2-R4/delay", {{"delay_us", 10}});
  EXPECT_EQ(r.body["changed_algos"], json::array());
}

TEST_F(ApiTest, Paths) {
  auto r = get("/paths/131", {{"source", "R1"}});
  ASSERT_EQ(r.status, 200);
  const json& r4 = r.body["routes"][3];
  EXPECT_EQ(r4["router_id"], "4.4.4.4");
  EXPECT_EQ(r4["distance"], 3);
  EXPECT_EQ(r4["next_hops"].size(), 2u);
  EXPECT_EQ(get("/paths/131").status, 400);
}

TEST_F(ApiTest, TracerouteAndFlows) {
  auto r = post("/traceroute", {{"ingress", "R1"}, {"vrf", "GOLD"}, {"dst_ip", "20.10.4.4"}});
  ASSERT_EQ(r.status, 200) << r.body;
  EXPECT_EQ(r.body["hops"][0], (json{{"node", "R2"}, {"labels", {20014, 24002}}}));
  EXPECT_EQ(r.body["hops"][1], (json{{"node", "R4"}, {"labels", {24002}}}));

  r = post("/flows", {{"ingress", 1}, {"vrf", "PLATINUM"}, {"src_prefix", "20.40.1.0/24"},
                      {"dst_prefix", "20.30.4.0/24"}, {"n", 200}});
  ASSERT_EQ(r.status, 200) << r.body;
  EXPECT_EQ(r.body["counters"].size(), 10u);
  EXPECT_EQ(get("/counters").body["counters"][0]["count"], r.body["counters"][0]["count"]);
}

}  // namespace
}  // namespace flexsr
