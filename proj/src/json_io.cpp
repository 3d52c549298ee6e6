#include "linehyp/json_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <set>

#include "json.hpp"

namespace linehyp {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorCode::kParse, msg); }

void require_object(const Json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) parse_error(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) parse_error("unknown field '" + key + "' in " + where);
  }
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) parse_error("missing field '" + std::string(key) + "' in " + where);
  return *it;
}

double number(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number()) parse_error("field '" + std::string(key) + "' in " + where + " must be a number");
  return v.get<double>();
}

int integer(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer()) parse_error("field '" + std::string(key) + "' in " + where + " must be an integer");
  return v.get<int>();
}

const Json& array(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_array()) parse_error("field '" + std::string(key) + "' in " + where + " must be an array");
  return v;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_error(e.what());
  }
}

Margins margins_from(const Json& j) {
  require_object(j, "margins", {"minAngle", "minSeparation", "tangencyTolerance"});
  Margins m;
  if (j.contains("minAngle")) m.min_angle = number(j, "minAngle", "margins");
  if (j.contains("minSeparation")) m.min_separation = number(j, "minSeparation", "margins");
  if (j.contains("tangencyTolerance")) m.tangency_tolerance = number(j, "tangencyTolerance", "margins");
  if (!(m.min_angle > 0.0) || !(m.min_separation > 0.0) || !(m.tangency_tolerance >= 0.0)) {
    parse_error("margins must be positive");
  }
  return m;
}

Json margins_json(const Margins& m) {
  return Json{{"minAngle", m.min_angle}, {"minSeparation", m.min_separation},
              {"tangencyTolerance", m.tangency_tolerance}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json point_json(Point p) { return Json::array({p.x, p.y}); }

}  // namespace

Scene scene_from_json(std::string_view text) {
  const Json j = parse(text);
  require_object(j, "scene", {"lines", "discs", "polygons", "margins"});
  Scene scene;
  if (j.contains("margins")) scene.margins = margins_from(j["margins"]);
  if (j.contains("lines")) {
    for (const Json& l : array(j, "lines", "scene")) {
      require_object(l, "line", {"id", "a", "b", "c"});
      const double a = number(l, "a", "line");
      const double b = number(l, "b", "line");
      if (a == 0.0 && b == 0.0) parse_error("line with a = b = 0");
      scene.lines.push_back(make_line(integer(l, "id", "line"), a, b, number(l, "c", "line")));
    }
  }
  std::sort(scene.lines.begin(), scene.lines.end(), [](const Line& x, const Line& y) { return x.id < y.id; });
  for (std::size_t i = 0; i < scene.lines.size(); ++i) {
    if (scene.lines[i].id != static_cast<LineId>(i)) parse_error("line ids must be dense from 0");
  }
  try {
    if (j.contains("discs")) {
      for (const Json& d : array(j, "discs", "scene")) {
        require_object(d, "disc", {"id", "cx", "cy", "r", "tangentTo"});
        std::vector<LineId> tangent;
        if (d.contains("tangentTo")) {
          for (const Json& t : array(d, "tangentTo", "disc")) {
            if (!t.is_number_integer()) parse_error("tangentTo entries must be line ids");
            tangent.push_back(t.get<int>());
          }
        }
        scene.shapes.emplace_back(make_disc(integer(d, "id", "disc"), {number(d, "cx", "disc"), number(d, "cy", "disc")},
                                            number(d, "r", "disc"), std::move(tangent)));
      }
    }
    if (j.contains("polygons")) {
      for (const Json& p : array(j, "polygons", "scene")) {
        require_object(p, "polygon", {"id", "vertices"});
        std::vector<Point> vertices;
        for (const Json& v : array(p, "vertices", "polygon")) {
          if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
            parse_error("polygon vertices must be [x, y] pairs");
          }
          vertices.push_back({v[0].get<double>(), v[1].get<double>()});
        }
        scene.shapes.emplace_back(make_convex_polygon(integer(p, "id", "polygon"), std::move(vertices)));
      }
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw;
    parse_error(e.what());
  }
  std::stable_sort(scene.shapes.begin(), scene.shapes.end(),
                   [](const PseudoDisc& x, const PseudoDisc& y) { return shape_id(x) < shape_id(y); });
  try {
    check_scene_invariants(scene);
  } catch (const Error& e) {
    parse_error(e.what());
  }
  return scene;
}

std::string scene_to_json(const Scene& scene) {
  Json lines = Json::array();
  for (const Line& l : scene.lines) lines.push_back({{"id", l.id}, {"a", l.a}, {"b", l.b}, {"c", l.c}});
  Json discs = Json::array();
  Json polygons = Json::array();
  for (const auto& s : scene.shapes) {
    if (const auto* d = std::get_if<Disc>(&s)) {
      Json dj{{"id", d->id}, {"cx", d->center.x}, {"cy", d->center.y}, {"r", d->radius}};
      if (!d->tangent_to.empty()) dj["tangentTo"] = d->tangent_to;
      discs.push_back(std::move(dj));
    } else {
      const auto& p = std::get<ConvexPolygon>(s);
      Json vs = Json::array();
      for (Point v : p.vertices) vs.push_back(point_json(v));
      polygons.push_back({{"id", p.id}, {"vertices", std::move(vs)}});
    }
  }
  return dump(Json{{"lines", std::move(lines)},
                   {"discs", std::move(discs)},
                   {"polygons", std::move(polygons)},
                   {"margins", margins_json(scene.margins)}});
}

GeneratorSpec generator_spec_from_json(std::string_view text) {
  const Json j = parse(text);
  const std::string where = "generator spec";
  require_object(j, where, {"kind", "n", "m", "t", "seed", "radiusMin", "radiusMax", "margins", "maxRetries"});
  GeneratorSpec spec;
  const Json& kind = field(j, "kind", where);
  if (!kind.is_string()) parse_error("kind must be a string");
  try {
    spec.kind = parse_generator_kind(kind.get<std::string>());
  } catch (const Error& e) {
    parse_error(e.what());
  }
  if (j.contains("n")) spec.n = integer(j, "n", where);
  if (j.contains("m")) spec.m = integer(j, "m", where);
  if (j.contains("t")) spec.t = integer(j, "t", where);
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) parse_error("seed must be a non-negative integer");
    spec.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("radiusMin")) spec.radius_min = number(j, "radiusMin", where);
  if (j.contains("radiusMax")) spec.radius_max = number(j, "radiusMax", where);
  if (j.contains("margins")) spec.margins = margins_from(j["margins"]);
  if (j.contains("maxRetries")) spec.max_retries = integer(j, "maxRetries", where);
  return spec;
}

std::string generator_spec_to_json(const GeneratorSpec& spec) {
  return dump(Json{{"kind", generator_kind_name(spec.kind)},
                   {"n", spec.n},
                   {"m", spec.m},
                   {"t", spec.t},
                   {"seed", spec.seed},
                   {"radiusMin", spec.radius_min},
                   {"radiusMax", spec.radius_max},
                   {"margins", margins_json(spec.margins)},
                   {"maxRetries", spec.max_retries}});
}

SvgOptions svg_options_from_json(std::string_view text) {
  const Json j = parse(text);
  require_object(j, "render options", {"width", "arrangementEdges", "zoneQuery", "zoneT"});
  SvgOptions o;
  if (j.contains("width")) o.width = integer(j, "width", "render options");
  if (j.contains("arrangementEdges")) {
    if (!j["arrangementEdges"].is_boolean()) parse_error("arrangementEdges must be a boolean");
    o.arrangement_edges = j["arrangementEdges"].get<bool>();
  }
  if (j.contains("zoneQuery")) {
    const Json& q = j["zoneQuery"];
    require_object(q, "zoneQuery", {"a", "b", "c"});
    o.zone_query = make_line(-1, number(q, "a", "zoneQuery"), number(q, "b", "zoneQuery"), number(q, "c", "zoneQuery"));
  }
  if (j.contains("zoneT")) o.zone_t = integer(j, "zoneT", "render options");
  if (o.width < 16 || o.zone_t < 1) parse_error("render options out of range");
  return o;
}

std::string to_json(const ArrangementStats& s) {
  return dump(Json{{"n", s.n}, {"vertices", s.vertices}, {"segments", s.segments}, {"faces", s.faces},
                   {"euler_ok", s.euler_ok}});
}

std::string to_json(const ZoneReport& z) {
  return dump(Json{{"query", {{"a", z.query.a}, {"b", z.query.b}, {"c", z.query.c}}},
                   {"t", z.t},
                   {"layers", z.layers},
                   {"complexity_per_layer", z.complexity_per_layer},
                   {"total_complexity", z.total_complexity}});
}

std::string to_json(const Hypergraph& h) {
  Json witnesses = Json::object();
  for (std::size_t i = 0; i < h.witnesses().size(); ++i) witnesses[std::to_string(i)] = h.witnesses()[i];
  Json histogram = Json::object();
  for (const auto& [t, c] : h.size_histogram()) histogram[std::to_string(t)] = c;
  return dump(Json{{"n", h.vertex_ids().size()},
                   {"edges", h.edges()},
                   {"witnesses", std::move(witnesses)},
                   {"histogram", std::move(histogram)}});
}

std::string histogram_to_json(const SizeHistogram& h) {
  Json histogram = Json::object();
  long long total = 0;
  for (const auto& [t, c] : h) {
    histogram[std::to_string(t)] = c;
    total += c;
  }
  return dump(Json{{"histogram", std::move(histogram)}, {"total", total}});
}

std::string to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  const bool planar = planarity_check(g);
  const long long v = static_cast<long long>(g.vertices.size());
  const long long e = static_cast<long long>(g.edges.size());
  return dump(Json{{"vertices", g.vertices},
                   {"edges", std::move(edges)},
                   {"planar", planar},
                   {"edge_bound_ok", v == 0 ? e == 0 : e < 3 * v}});
}

std::string to_json(const VcReport& r) {
  return dump(Json{{"vc_dimension", r.vc_dimension},
                   {"shattered_witness", r.shattered_witness},
                   {"cap_exceeded", r.cap_exceeded},
                   {"delaunay_constant", {{"numerator", r.delaunay_numerator}, {"denominator", r.delaunay_denominator}}},
                   {"delaunay_exact", r.delaunay_exact},
                   {"inequality_holds", r.inequality_holds()}});
}

std::string to_json(const CellPairGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"first", e.first},
                     {"second", e.second},
                     {"cell", e.cell},
                     {"hyperedge", e.hyperedge},
                     {"witness", e.witness}});
  }
  Json cells = Json::array();
  for (const auto& [f, sub] : g.per_cell) {
    cells.push_back({{"cell", f}, {"vertices", sub.vertices.size()}, {"edges", sub.edges.size()}});
  }
  return dump(Json{{"pivot", g.pivot},
                   {"vertices", g.vertices.size()},
                   {"edge_count", g.edges.size()},
                   {"edges", std::move(edges)},
                   {"cells", std::move(cells)},
                   {"zone_complexity", g.zone_complexity}});
}

std::string to_json(const GeneralPositionReport& gp, const FamilyReport& family) {
  Json crossings = Json::array();
  for (const auto& c : gp.through_boundary_crossing) {
    crossings.push_back({{"line", c.line}, {"first", c.first}, {"second", c.second}, {"at", point_json(c.crossing)}});
  }
  Json near = Json::array();
  for (const auto& c : gp.near_tangent) near.push_back({{"line", c.line}, {"shape", c.shape}});
  const auto pairs = [](const std::vector<ShapePair>& v) {
    Json out = Json::array();
    for (const auto& p : v) out.push_back({{"first", p.first}, {"second", p.second}, {"crossings", p.crossings}});
    return out;
  };
  return dump(Json{{"valid", gp.valid() && family.valid()},
                   {"general_position", {{"near_parallel", gp.near_parallel},
                                         {"concurrent", gp.concurrent},
                                         {"through_boundary_crossing", std::move(crossings)},
                                         {"near_tangent", std::move(near)}}},
                   {"pseudo_disc_family", {{"violations", pairs(family.violations)},
                                           {"degenerate", pairs(family.degenerate)}}}});
}

std::string to_json(const AronovReport& r) {
  Json observed = Json::object();
  for (const auto& [t, c] : r.observed) observed[std::to_string(t)] = c;
  Json expected = Json::object();
  for (const auto& [t, c] : r.expected) expected[std::to_string(t)] = c;
  return dump(Json{{"n", r.n},
                   {"observed", std::move(observed)},
                   {"expected", std::move(expected)},
                   {"total_observed", r.total_observed},
                   {"total_expected", r.total_expected},
                   {"distinct", r.distinct},
                   {"margins_ok", r.margins_ok},
                   {"pass", r.pass}});
}

std::string to_json(const AuditReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json wedges = Json::array();
    for (const auto& w : p.wedges) {
      wedges.push_back({{"quadrant", w.quadrant},
                        {"discs", w.discs},
                        {"distinct", w.distinct},
                        {"changes", w.changes},
                        {"interval_ok", w.interval_ok}});
    }
    pairs.push_back({{"l1", p.first}, {"l2", p.second}, {"wedges", std::move(wedges)}});
  }
  return dump(Json{{"pairs", std::move(pairs)},
                   {"covered_edges", r.covered_edges},
                   {"trivial_edges", r.trivial_edges},
                   {"total_edges", r.total_edges},
                   {"sum_of_pair_counts", r.sum_of_pair_counts},
                   {"interval_ok", r.interval_ok},
                   {"change_bound_ok", r.change_bound_ok},
                   {"distinct_bound_ok", r.distinct_bound_ok},
                   {"pass", r.ok()}});
}

std::string to_json(const ShrinkFamilyResult& r) {
  return dump(Json{{"passed_through", r.passed_through}, {"not_discs", r.not_discs}, {"ties", r.ties}});
}

std::string to_json(const GrowthReport& r) {
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    Json cj{{"n", c.n}, {"seed", c.seed}};
    cj["value"] = c.value ? Json(*c.value) : Json(nullptr);
    if (!c.error.empty()) cj["error"] = c.error;
    cells.push_back(std::move(cj));
  }
  return dump(Json{{"metric", r.metric_name},
                   {"generator", r.generator},
                   {"sizes", r.sizes},
                   {"means", r.means},
                   {"cells", std::move(cells)},
                   {"log_log_slope", r.fit.slope},
                   {"intercept", r.fit.intercept},
                   {"residual", r.fit.residual}});
}

std::string to_json(const VerifyReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json cj{{"n", c.n}, {"seed", c.seed}, {"pass", c.pass}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    cases.push_back(std::move(cj));
  }
  return dump(Json{{"check", r.check}, {"pass", r.pass}, {"cases", std::move(cases)}});
}

}  // namespace linehyp
