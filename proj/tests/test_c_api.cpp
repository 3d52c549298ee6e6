#include <string>

#include "doctest.h"
#include "json.hpp"
#include "linehyp/linehyp.h"

using nlohmann::json;

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  lh_string_free(s);
  return out;
}

lh_scene* incircles(int n, int seed) {
  lh_scene* s = nullptr;
  const std::string spec = R"({"kind":"incircleFamily","n":)" + std::to_string(n) + R"(,"seed":)" +
                           std::to_string(seed) + "}";
  REQUIRE(lh_generate(spec.c_str(), &s) == LH_OK);
  return s;
}

}  // namespace

TEST_CASE("generate, round trip and free") {
  lh_scene* s = incircles(5, 1);
  CHECK(lh_scene_line_count(s) == 5);
  CHECK(lh_scene_shape_count(s) == 10);
  char* text = nullptr;
  REQUIRE(lh_scene_to_json(s, &text) == LH_OK);
  const std::string json_text = take(text);
  lh_scene* back = nullptr;
  REQUIRE(lh_scene_from_json(json_text.c_str(), &back) == LH_OK);
  char* again = nullptr;
  REQUIRE(lh_scene_to_json(back, &again) == LH_OK);
  CHECK(take(again) == json_text);
  lh_scene_free(back);
  lh_scene_free(s);
  lh_scene_free(nullptr);
}

TEST_CASE("errors set a status and a message") {
  lh_scene* s = nullptr;
  CHECK(lh_scene_from_json("{not json", &s) == LH_ERR_PARSE);
  CHECK(s == nullptr);
  CHECK(std::string(lh_last_error()).find("ParseError") != std::string::npos);
  CHECK(lh_scene_from_json(nullptr, &s) == LH_ERR_INVALID_ARGUMENT);
  CHECK(lh_scene_load("/nonexistent/scene.json", &s) == LH_ERR_IO);
  CHECK(lh_generate(R"({"kind":"disjointDiscGrid","n":8,"t":3})", &s) == LH_ERR_PARAMETER_MISMATCH);
  CHECK(std::string(lh_status_name(LH_ERR_TOO_FEW_LINES)) == "TooFewLines");
  CHECK(std::string(lh_status_name(LH_OK)) == "Ok");
}

TEST_CASE("validate") {
  lh_scene* good = incircles(5, 1);
  char* report = nullptr;
  CHECK(lh_validate(good, &report) == LH_OK);
  CHECK(json::parse(take(report))["valid"] == true);
  lh_scene_free(good);

  lh_scene* bad = nullptr;
  REQUIRE(lh_scene_from_json(R"({"lines":[{"id":0,"a":1,"b":0,"c":0},{"id":1,"a":0,"b":1,"c":0},
      {"id":2,"a":1,"b":1,"c":0}]})", &bad) == LH_OK);
  CHECK(lh_validate(bad, &report) == LH_VERIFICATION_FAILED);
  CHECK(json::parse(take(report))["valid"] == false);
  lh_hypergraph* h = nullptr;
  CHECK(lh_hypergraph_build(bad, 1, &h) == LH_ERR_VALIDATION_FAILED);
  CHECK(lh_hypergraph_build(bad, 0, &h) == LH_OK);
  lh_hypergraph_free(h);
  lh_scene_free(bad);
}

TEST_CASE("arrangement and zone") {
  lh_scene* s = nullptr;
  REQUIRE(lh_generate(R"({"kind":"randomLines","n":10,"seed":3})", &s) == LH_OK);
  lh_arrangement* arr = nullptr;
  REQUIRE(lh_arrangement_build(s, &arr) == LH_OK);
  char* stats = nullptr;
  REQUIRE(lh_arrangement_stats(arr, &stats) == LH_OK);
  const json j = json::parse(take(stats));
  CHECK(j["vertices"] == 45);
  CHECK(j["segments"] == 100);
  CHECK(j["faces"] == 56);
  lh_arrangement_free(arr);

  char* z = nullptr;
  REQUIRE(lh_zone(s, 0.6, 0.8, 0.1, 2, &z) == LH_OK);
  const json zj = json::parse(take(z));
  CHECK(zj["layers"].size() == 2);
  CHECK(zj["layers"][0].size() == 11);
  CHECK(lh_zone(s, 0, 0, 0, 1, &z) == LH_ERR_INVALID_ARGUMENT);
  CHECK(lh_zone(s, 0.6, 0.8, 0.1, 0, &z) == LH_ERR_INVALID_ARGUMENT);
  lh_scene_free(s);
}

TEST_CASE("hypergraph queries") {
  lh_scene* s = incircles(6, 2);
  lh_hypergraph* h = nullptr;
  REQUIRE(lh_hypergraph_build(s, 1, &h) == LH_OK);
  CHECK(lh_hypergraph_edge_count(h) == 20);
  char* counts = nullptr;
  REQUIRE(lh_count_by_size(h, &counts) == LH_OK);
  const json c = json::parse(take(counts));
  CHECK(c["histogram"] == json{{"3", 10}, {"4", 6}, {"5", 3}, {"6", 1}});
  CHECK(c["total"] == 20);

  long long total = 0;
  for (int l = 0; l < 6; ++l) {
    long long d = -1;
    REQUIRE(lh_degree(h, l, 3, &d) == LH_OK);
    total += d;
  }
  CHECK(total == 30);
  long long d = 0;
  CHECK(lh_degree(h, 17, 3, &d) == LH_ERR_UNKNOWN_VERTEX);

  char* del = nullptr;
  CHECK(lh_delaunay(h, &del) == LH_OK);
  CHECK(json::parse(take(del))["edges"].empty());

  char* vc = nullptr;
  REQUIRE(lh_vc(h, 6, 0, &vc) == LH_OK);
  CHECK(json::parse(take(vc))["inequality_holds"] == true);
  CHECK(lh_vc(h, 0, 0, &vc) == LH_ERR_INVALID_ARGUMENT);
  CHECK(lh_vc(h, 1, 0, &vc) == LH_ERR_CAP_EXCEEDED);
  CHECK(json::parse(take(vc))["cap_exceeded"] == true);

  char* cg = nullptr;
  REQUIRE(lh_cell_graph(s, 0, &cg) == LH_OK);
  long long d0 = 0;
  REQUIRE(lh_degree(h, 0, 3, &d0) == LH_OK);
  CHECK(json::parse(take(cg))["edge_count"] == d0);

  char* hj = nullptr;
  REQUIRE(lh_hypergraph_to_json(h, &hj) == LH_OK);
  CHECK(json::parse(take(hj))["edges"].size() == 20);
  lh_hypergraph_free(h);
  lh_scene_free(s);
}

TEST_CASE("shrink and audit") {
  lh_scene* s = nullptr;
  REQUIRE(lh_generate(R"({"kind":"randomDiscs","n":6,"m":18,"seed":4})", &s) == LH_OK);
  char* audit = nullptr;
  CHECK(lh_audit(s, &audit) == LH_ERR_UNATTRIBUTED_EDGE);
  lh_scene* shrunk = nullptr;
  char* report = nullptr;
  REQUIRE(lh_shrink(s, &shrunk, &report) == LH_OK);
  lh_string_free(report);
  REQUIRE(lh_audit(shrunk, &audit) == LH_OK);
  CHECK(json::parse(take(audit))["pass"] == true);
  lh_scene_free(shrunk);
  lh_scene_free(s);
}

TEST_CASE("verification and growth") {
  char* out = nullptr;
  REQUIRE(lh_verify_aronov(4, 6, 2, 0, &out) == LH_OK);
  CHECK(json::parse(take(out))["pass"] == true);
  REQUIRE(lh_verify_zone(10, 11, 2, 0, 2, &out) == LH_OK);
  lh_string_free(out);
  REQUIRE(lh_verify_sweep(4, 5, 2, 0, &out) == LH_OK);
  lh_string_free(out);
  CHECK(lh_verify_aronov(6, 4, 2, 0, &out) == LH_ERR_INVALID_ARGUMENT);

  const int sizes[] = {6, 8, 10, 12};
  char* csv = nullptr;
  REQUIRE(lh_growth("totalEdgeCount", R"({"kind":"incircleFamily"})", sizes, 4, 2, &out, &csv) == LH_OK);
  const json g = json::parse(take(out));
  CHECK(g["log_log_slope"].get<double>() > 2.0);
  CHECK(take(csv).rfind("metric,n,seed,value,error", 0) == 0);
  CHECK(lh_growth("noSuchMetric", R"({"kind":"incircleFamily"})", sizes, 4, 2, &out, nullptr) ==
        LH_ERR_INVALID_ARGUMENT);
}

TEST_CASE("render") {
  lh_scene* s = incircles(4, 0);
  char* svg = nullptr;
  REQUIRE(lh_render_svg(s, nullptr, &svg) == LH_OK);
  CHECK(take(svg).rfind("<svg", 0) == 0);
  REQUIRE(lh_render_svg(s, R"({"arrangementEdges":true,"zoneQuery":{"a":0.3,"b":0.95,"c":0.05}})", &svg) == LH_OK);
  CHECK(take(svg).find("class=\"zone\"") != std::string::npos);
  CHECK(lh_render_svg(s, R"({"bogus":1})", &svg) == LH_ERR_PARSE);
  lh_scene_free(s);
}
