// linehyp command-line front end. Talks to the library only through linehyp.h.
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "linehyp/linehyp.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct CString {
  char* p = nullptr;
  ~CString() { lh_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct SceneHandle {
  lh_scene* p = nullptr;
  ~SceneHandle() { lh_scene_free(p); }
};

struct HypergraphHandle {
  lh_hypergraph* p = nullptr;
  ~HypergraphHandle() { lh_hypergraph_free(p); }
};

struct ArrangementHandle {
  lh_arrangement* p = nullptr;
  ~ArrangementHandle() { lh_arrangement_free(p); }
};

// Thrown to leave a subcommand with a given exit code after printing diagnostics.
struct Exit {
  int code;
};

void diagnose(const std::string& kind, const std::string& message) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

void check(lh_status s) {
  if (s == LH_OK || s == LH_VERIFICATION_FAILED) return;
  diagnose(lh_status_name(s), lh_last_error());
  throw Exit{kExitInput};
}

int status_exit(lh_status s) { return s == LH_VERIFICATION_FAILED ? kExitFailed : kExitOk; }

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    diagnose("IoError", "cannot write " + out);
    throw Exit{kExitInput};
  }
  f << text;
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  try {
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
      const int a = std::stoi(text.substr(0, dots));
      const int b = std::stoi(text.substr(dots + 2));
      for (int n = a; n <= b; ++n) sizes.push_back(n);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) sizes.push_back(std::stoi(item));
    }
  } catch (const std::exception&) {
    sizes.clear();
  }
  if (sizes.empty()) {
    diagnose("InvalidArgument", "--n expects a..b or a comma-separated list");
    throw Exit{kExitInput};
  }
  return sizes;
}

void load(const std::string& path, SceneHandle& scene) { check(lh_scene_load(path.c_str(), &scene.p)); }

std::array<double, 3> parse_query(const std::string& text) {
  std::array<double, 3> q{};
  std::stringstream ss(text);
  std::string item;
  int i = 0;
  try {
    while (std::getline(ss, item, ',')) {
      if (i >= 3) throw std::invalid_argument(text);
      q[i++] = std::stod(item);
    }
  } catch (const std::exception&) {
    i = -1;
  }
  if (i != 3) {
    diagnose("InvalidArgument", "--query expects a,b,c for the line a*x + b*y = c");
    throw Exit{kExitInput};
  }
  return q;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linehyp: line arrangements, zones and line/disc hypergraphs"};
  app.require_subcommand(1);

  std::string scene_path, out_path, kind = "random-lines", spec_path, n_text, metric, query_text;
  std::uint64_t seed = 0;
  int n = 10, m = 0, t = 3, zone_t = 1, grid_t = 2, seeds = 1, line = 0, cap = 6, queries = 5, width = 800;
  double radius_min = 0.05, radius_max = 0.4, tolerance = 0.3;
  std::optional<double> expect;
  bool as_csv = false, as_json = false, no_validate = false, edges = false, shrink_first = false;

  const auto scene_opt = [&](CLI::App* c) { c->add_option("--scene", scene_path, "scene JSON file")->required(); };
  const auto out_opt = [&](CLI::App* c) { c->add_option("--out", out_path, "output file (default stdout)"); };
  const auto format_opts = [&](CLI::App* c) {
    auto* j = c->add_flag("--json", as_json, "JSON output (default)");
    auto* v = c->add_flag("--csv", as_csv, "CSV output");
    j->excludes(v);
  };

  auto* gen = app.add_subcommand("gen", "generate a scene");
  gen->add_option("--kind", kind, "random-lines | grid-lines | random-discs | disjoint-disc-grid | incircle-family");
  gen->add_option("--spec", spec_path, "generator spec JSON file (overrides the other options)");
  gen->add_option("--n", n, "number of lines");
  gen->add_option("--m", m, "number of discs (random-discs)");
  gen->add_option("--t", grid_t, "bundle size (disjoint-disc-grid)");
  gen->add_option("--seed", seed);
  gen->add_option("--radius-min", radius_min);
  gen->add_option("--radius-max", radius_max);
  out_opt(gen);

  auto* validate = app.add_subcommand("validate", "check general position and the pseudo-disc property");
  scene_opt(validate);
  out_opt(validate);

  auto* arrange = app.add_subcommand("arrange", "arrangement statistics");
  scene_opt(arrange);
  format_opts(arrange);
  out_opt(arrange);

  auto* zone = app.add_subcommand("zone", "<=t-zone of a query line");
  scene_opt(zone);
  zone->add_option("--query", query_text, "a,b,c of the query line a*x + b*y = c")->required();
  zone->add_option("--t", zone_t, "zone depth");
  out_opt(zone);

  auto* count = app.add_subcommand("count", "hyperedge counts by size");
  scene_opt(count);
  count->add_flag("--no-validate", no_validate, "skip scene validation");
  format_opts(count);
  out_opt(count);

  auto* degree = app.add_subcommand("degree", "number of t-hyperedges containing a line");
  scene_opt(degree);
  degree->add_option("--line", line)->required();
  degree->add_option("--t", t);
  degree->add_flag("--no-validate", no_validate, "skip scene validation");

  auto* delaunay = app.add_subcommand("delaunay", "Delaunay graph and planarity");
  scene_opt(delaunay);
  delaunay->add_flag("--no-validate", no_validate, "skip scene validation");
  out_opt(delaunay);

  auto* vc = app.add_subcommand("vc", "VC-dimension and Delaunay constant");
  scene_opt(vc);
  vc->add_option("--cap", cap, "largest subset size tried");
  vc->add_option("--seed", seed, "sampling seed for large vertex sets");
  vc->add_flag("--no-validate", no_validate, "skip scene validation");
  out_opt(vc);

  auto* cellgraph = app.add_subcommand("cellgraph", "cell-pair graph of the 3-hyperedges through a line");
  scene_opt(cellgraph);
  cellgraph->add_option("--line", line, "pivot line")->required();
  out_opt(cellgraph);

  auto* incircles = app.add_subcommand("incircles", "scene of the incircles of all line triples");
  scene_opt(incircles);
  out_opt(incircles);

  auto* verify = app.add_subcommand("verify", "run a verification sweep over n and seeds");
  verify->require_subcommand(1);
  std::vector<CLI::App*> verifiers;
  for (const char* name : {"aronov", "zone", "sweep"}) {
    auto* v = verify->add_subcommand(name);
    v->add_option("--n", n_text, "range a..b")->required();
    v->add_option("--seeds", seeds, "seeds per n");
    v->add_option("--seed", seed, "first seed");
    if (std::string(name) == "zone") v->add_option("--queries", queries, "query lines per scene");
    out_opt(v);
    verifiers.push_back(v);
  }

  auto* shrink = app.add_subcommand("shrink", "shrink every disc to double tangency");
  scene_opt(shrink);
  out_opt(shrink);

  auto* audit = app.add_subcommand("audit", "attribute hyperedges to tangent pairs and wedges");
  scene_opt(audit);
  audit->add_flag("--shrink", shrink_first, "shrink the scene first");
  out_opt(audit);

  auto* growth = app.add_subcommand("growth", "fit the growth exponent of a metric");
  growth->add_option("--metric", metric, "tEdgeCount(t) | totalEdgeCount | maxLineDegree(t) | zoneComplexity | "
                                         "leqTZoneComplexity(t)")
      ->required();
  growth->add_option("--kind", kind, "generator kind");
  growth->add_option("--n", n_text, "sizes, a..b or a,b,c,...")->required();
  growth->add_option("--seeds", seeds);
  growth->add_option("--seed", seed, "first seed");
  growth->add_option("--m", m, "discs (random-discs; 0 means 3n)");
  growth->add_option("--expect", expect, "expected slope; exit 1 if off by more than --tolerance");
  growth->add_option("--tolerance", tolerance, "slope tolerance");
  format_opts(growth);
  out_opt(growth);

  auto* render = app.add_subcommand("render", "render the scene as SVG");
  scene_opt(render);
  render->add_flag("--edges", edges, "draw arrangement edges");
  render->add_option("--query", query_text, "zone overlay for the line a*x + b*y = c");
  render->add_option("--t", zone_t, "zone overlay depth");
  render->add_option("--width", width);
  out_opt(render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (gen->parsed()) {
      std::string spec;
      if (!spec_path.empty()) {
        std::ifstream in(spec_path);
        if (!in) {
          diagnose("IoError", "cannot read " + spec_path);
          return kExitInput;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        spec = buf.str();
      } else {
        spec = Json{{"kind", kind}, {"n", n}, {"m", m}, {"t", grid_t}, {"seed", seed},
                    {"radiusMin", radius_min}, {"radiusMax", radius_max}}
                   .dump();
      }
      SceneHandle scene;
      check(lh_generate(spec.c_str(), &scene.p));
      CString json;
      check(lh_scene_to_json(scene.p, &json.p));
      emit(json.str(), out_path);
      return kExitOk;
    }
    if (validate->parsed()) {
      SceneHandle scene;
      load(scene_path, scene);
      CString json;
      const lh_status s = lh_validate(scene.p, &json.p);
      check(s);
      emit(json.str(), out_path);
      return status_exit(s);
    }
    if (arrange->parsed()) {
      SceneHandle scene;
      load(scene_path, scene);
      ArrangementHandle arr;
      check(lh_arrangement_build(scene.p, &arr.p));
      CString json;
      check(lh_arrangement_stats(arr.p, &json.p));
      if (as_csv) {
        const Json j = Json::parse(json.str());
        std::ostringstream csv;
        csv << "n,vertices,segments,faces,euler_ok\n"
            << j["n"] << "," << j["vertices"] << "," << j["segments"] << "," << j["faces"] << ","
            << j["euler_ok"] << "\n";
        emit(csv.str(), out_path);
      } else {
        emit(json.str(), out_path);
      }
      return kExitOk;
    }
    if (zone->parsed()) {
      const auto q = parse_query(query_text);
      SceneHandle scene;
      load(scene_path, scene);
      CString json;
      check(lh_zone(scene.p, q[0], q[1], q[2], zone_t, &json.p));
      emit(json.str(), out_path);
      return kExitOk;
    }
    if (count->parsed() || degree->parsed() || delaunay->parsed() || vc->parsed()) {
      SceneHandle scene;
      load(scene_path, scene);
      HypergraphHandle h;
      check(lh_hypergraph_build(scene.p, no_validate ? 0 : 1, &h.p));
      if (count->parsed()) {
        CString json;
        check(lh_count_by_size(h.p, &json.p));
        if (as_csv) {
          const Json j = Json::parse(json.str());
          std::string csv = "t,count\n";
          for (const auto& [size, c] : j["histogram"].items()) csv += size + "," + c.dump() + "\n";
          emit(csv, out_path);
        } else {
          emit(json.str(), out_path);
        }
        return kExitOk;
      }
      if (degree->parsed()) {
        long long d = 0;
        check(lh_degree(h.p, line, t, &d));
        std::cout << Json{{"line", line}, {"t", t}, {"degree", d}}.dump(2) << "\n";
        return kExitOk;
      }
      CString json;
      lh_status s = delaunay->parsed() ? lh_delaunay(h.p, &json.p) : lh_vc(h.p, cap, seed, &json.p);
      if (s == LH_ERR_CAP_EXCEEDED) {
        diagnose("CapExceeded", "VC-dimension is at least the cap; reported value is a lower bound");
        s = LH_OK;
      }
      check(s);
      emit(json.str(), out_path);
      return status_exit(s);
    }
    if (cellgraph->parsed()) {
      SceneHandle scene;
      load(scene_path, scene);
      CString json;
      check(lh_cell_graph(scene.p, line, &json.p));
      emit(json.str(), out_path);
      return kExitOk;
    }
    if (incircles->parsed()) {
      SceneHandle scene, circles;
      load(scene_path, scene);
      check(lh_incircles(scene.p, &circles.p));
      CString json;
      check(lh_scene_to_json(circles.p, &json.p));
      emit(json.str(), out_path);
      return kExitOk;
    }
    for (auto* v : verifiers) {
      if (!v->parsed()) continue;
      const auto sizes = parse_sizes(n_text);
      const int lo = sizes.front();
      const int hi = sizes.back();
      CString json;
      lh_status s;
      if (v->get_name() == "aronov") {
        s = lh_verify_aronov(lo, hi, seeds, seed, &json.p);
      } else if (v->get_name() == "zone") {
        s = lh_verify_zone(lo, hi, seeds, seed, queries, &json.p);
      } else {
        s = lh_verify_sweep(lo, hi, seeds, seed, &json.p);
      }
      check(s);
      emit(json.str(), out_path);
      return status_exit(s);
    }
    if (shrink->parsed()) {
      SceneHandle scene, shrunk;
      load(scene_path, scene);
      CString report;
      check(lh_shrink(scene.p, &shrunk.p, &report.p));
      CString json;
      check(lh_scene_to_json(shrunk.p, &json.p));
      std::cerr << report.str();
      emit(json.str(), out_path);
      return kExitOk;
    }
    if (audit->parsed()) {
      SceneHandle scene, shrunk;
      load(scene_path, scene);
      const lh_scene* target = scene.p;
      if (shrink_first) {
        check(lh_shrink(scene.p, &shrunk.p, nullptr));
        target = shrunk.p;
      }
      CString json;
      const lh_status s = lh_audit(target, &json.p);
      check(s);
      emit(json.str(), out_path);
      return status_exit(s);
    }
    if (growth->parsed()) {
      const auto sizes = parse_sizes(n_text);
      const std::string spec = Json{{"kind", kind}, {"m", m}, {"seed", seed}}.dump();
      CString json, csv;
      check(lh_growth(metric.c_str(), spec.c_str(), sizes.data(), sizes.size(), seeds, &json.p, &csv.p));
      emit(as_csv ? csv.str() : json.str(), out_path);
      if (expect) {
        const double slope = Json::parse(json.str())["log_log_slope"].get<double>();
        if (std::abs(slope - *expect) > tolerance) {
          diagnose("VerificationFailed", "slope " + std::to_string(slope) + " outside " + std::to_string(*expect) +
                                             " +/- " + std::to_string(tolerance));
          return kExitFailed;
        }
      }
      return kExitOk;
    }
    if (render->parsed()) {
      SceneHandle scene;
      load(scene_path, scene);
      Json options{{"width", width}, {"arrangementEdges", edges}, {"zoneT", zone_t}};
      if (!query_text.empty()) {
        const auto q = parse_query(query_text);
        options["zoneQuery"] = {{"a", q[0]}, {"b", q[1]}, {"c", q[2]}};
      }
      CString svg;
      check(lh_render_svg(scene.p, options.dump().c_str(), &svg.p));
      emit(svg.str(), out_path);
      return kExitOk;
    }
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    diagnose("InternalError", e.what());
    return kExitInput;
  }
  return kExitInput;
}
