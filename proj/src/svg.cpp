#include "linehyp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "linehyp/arrangement.hpp"

namespace linehyp {

namespace {

const char* const kLayerColors[] = {"#f4a261", "#e9c46a", "#2a9d8f", "#8ab17d", "#b5838d"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

struct View {
  BoundingBox box;
  double scale = 1.0;

  double x(double wx) const { return (wx - box.xmin) * scale; }
  double y(double wy) const { return (box.ymax - wy) * scale; }
  std::string pt(Point p) const { return fmt(x(p.x)) + "," + fmt(y(p.y)); }
};

// Portion of the line inside the box, if any.
bool clip(const Line& l, const BoundingBox& b, Point& p, Point& q) {
  const Point o = l.anchor();
  const Point d = l.direction();
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  const auto slab = [&](double origin, double dir, double mn, double mx) {
    if (std::abs(dir) < 1e-15) return origin >= mn && origin <= mx;
    double t0 = (mn - origin) / dir;
    double t1 = (mx - origin) / dir;
    if (t0 > t1) std::swap(t0, t1);
    lo = std::max(lo, t0);
    hi = std::min(hi, t1);
    return true;
  };
  if (!slab(o.x, d.x, b.xmin, b.xmax) || !slab(o.y, d.y, b.ymin, b.ymax) || lo > hi) return false;
  p = o + lo * d;
  q = o + hi * d;
  return true;
}

}  // namespace

std::string render_svg(const Scene& scene, const SvgOptions& options) {
  std::vector<Point> extra;
  for (const auto& s : scene.shapes) {
    if (const auto* d = std::get_if<Disc>(&s)) {
      extra.push_back(d->center - Point{d->radius, d->radius});
      extra.push_back(d->center + Point{d->radius, d->radius});
    } else {
      const auto& v = std::get<ConvexPolygon>(s).vertices;
      extra.insert(extra.end(), v.begin(), v.end());
    }
  }
  if (options.zone_query) {
    const auto c = query_crossings(scene.lines, *options.zone_query, scene.margins.min_angle);
    extra.insert(extra.end(), c.begin(), c.end());
  }
  const Arrangement arr = Arrangement::build(scene.lines, extra, scene.margins);

  View view;
  view.box = arr.box();
  const double w = view.box.xmax - view.box.xmin;
  const double h = view.box.ymax - view.box.ymin;
  view.scale = options.width / w;
  const int height = static_cast<int>(std::lround(h * view.scale));

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(options.width) + "\" height=\"" +
         std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(options.width) + " " +
         std::to_string(height) + "\">\n";
  out += "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" + std::to_string(options.width) + "\" height=\"" +
         std::to_string(height) + "\" fill=\"white\"/>\n";

  if (options.zone_query) {
    const ZoneReport z = leq_t_zone(arr, *options.zone_query, options.zone_t);
    for (std::size_t layer = 0; layer < z.layers.size(); ++layer) {
      for (FaceId f : z.layers[layer]) {
        std::string pts;
        for (Point p : arr.polygon(f)) pts += (pts.empty() ? "" : " ") + view.pt(p);
        out += "<polygon class=\"zone\" data-face=\"" + std::to_string(f) + "\" data-layer=\"" +
               std::to_string(layer + 1) + "\" points=\"" + pts + "\" fill=\"" + kLayerColors[layer % 5] +
               "\" fill-opacity=\"0.5\" stroke=\"none\"/>\n";
      }
    }
  }

  // axes
  if (view.box.ymin < 0.0 && view.box.ymax > 0.0) {
    out += "<line class=\"axis\" x1=\"0\" y1=\"" + fmt(view.y(0.0)) + "\" x2=\"" + std::to_string(options.width) +
           "\" y2=\"" + fmt(view.y(0.0)) + "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  }
  if (view.box.xmin < 0.0 && view.box.xmax > 0.0) {
    out += "<line class=\"axis\" x1=\"" + fmt(view.x(0.0)) + "\" y1=\"0\" x2=\"" + fmt(view.x(0.0)) + "\" y2=\"" +
           std::to_string(height) + "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  }

  if (options.arrangement_edges) {
    for (std::size_t e = 0; e < arr.half_edges().size(); ++e) {
      const auto& he = arr.half_edges()[e];
      if (he.line == kBoxEdge || Arrangement::edge_key(he, static_cast<HalfEdgeId>(e)) != static_cast<HalfEdgeId>(e)) {
        continue;
      }
      const Point p = arr.origin_point(static_cast<HalfEdgeId>(e));
      const Point q = arr.target_point(static_cast<HalfEdgeId>(e));
      out += "<line class=\"edge\" data-line=\"" + std::to_string(he.line) + "\" x1=\"" + fmt(view.x(p.x)) +
             "\" y1=\"" + fmt(view.y(p.y)) + "\" x2=\"" + fmt(view.x(q.x)) + "\" y2=\"" + fmt(view.y(q.y)) +
             "\" stroke=\"#555555\" stroke-width=\"2\"/>\n";
    }
  }

  for (const Line& l : scene.lines) {
    Point p, q;
    if (!clip(l, view.box, p, q)) continue;
    out += "<line class=\"line\" data-id=\"" + std::to_string(l.id) + "\" x1=\"" + fmt(view.x(p.x)) + "\" y1=\"" +
           fmt(view.y(p.y)) + "\" x2=\"" + fmt(view.x(q.x)) + "\" y2=\"" + fmt(view.y(q.y)) +
           "\" stroke=\"#1d3557\" stroke-width=\"1\"/>\n";
  }
  if (options.zone_query) {
    Point p, q;
    if (clip(*options.zone_query, view.box, p, q)) {
      out += "<line class=\"query\" x1=\"" + fmt(view.x(p.x)) + "\" y1=\"" + fmt(view.y(p.y)) + "\" x2=\"" +
             fmt(view.x(q.x)) + "\" y2=\"" + fmt(view.y(q.y)) + "\" stroke=\"#e63946\" stroke-width=\"2\"/>\n";
    }
  }

  for (const auto& s : scene.shapes) {
    if (const auto* d = std::get_if<Disc>(&s)) {
      out += "<circle class=\"disc\" data-id=\"" + std::to_string(d->id) + "\" cx=\"" + fmt(view.x(d->center.x)) +
             "\" cy=\"" + fmt(view.y(d->center.y)) + "\" r=\"" + fmt(d->radius * view.scale) +
             "\" fill=\"#457b9d\" fill-opacity=\"0.2\" stroke=\"#457b9d\"/>\n";
    } else {
      const auto& p = std::get<ConvexPolygon>(s);
      std::string pts;
      for (Point v : p.vertices) pts += (pts.empty() ? "" : " ") + view.pt(v);
      out += "<polygon class=\"shape\" data-id=\"" + std::to_string(p.id) + "\" points=\"" + pts +
             "\" fill=\"#457b9d\" fill-opacity=\"0.2\" stroke=\"#457b9d\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace linehyp
