#include "linehyp/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace linehyp {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kNearParallel: return "NearParallel";
    case ErrorCode::kDegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::kDegenerateContact: return "DegenerateContact";
    case ErrorCode::kGeneralPositionViolation: return "GeneralPositionViolation";
    case ErrorCode::kQueryDegenerate: return "QueryDegenerate";
    case ErrorCode::kQueryOutsideBox: return "QueryOutsideBox";
    case ErrorCode::kValidationFailed: return "ValidationFailed";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kWitnessLocalizationFailed: return "WitnessLocalizationFailed";
    case ErrorCode::kGenerationRetriesExhausted: return "GenerationRetriesExhausted";
    case ErrorCode::kParameterMismatch: return "ParameterMismatch";
    case ErrorCode::kTooFewLines: return "TooFewLines";
    case ErrorCode::kOrderInconsistency: return "OrderInconsistency";
    case ErrorCode::kIntervalViolation: return "IntervalViolation";
    case ErrorCode::kUnattributedEdge: return "UnattributedEdge";
    case ErrorCode::kShrinkMismatch: return "ShrinkMismatch";
  }
  return "UnknownError";
}

double norm(Point p) { return std::hypot(p.x, p.y); }

namespace {

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Box {
  double xmin, ymin, xmax, ymax;

  bool overlaps(const Box& o, double pad) const {
    return xmin <= o.xmax + pad && o.xmin <= xmax + pad && ymin <= o.ymax + pad && o.ymin <= ymax + pad;
  }
};

Box bounds(const PseudoDisc& shape) {
  if (const auto* d = std::get_if<Disc>(&shape)) {
    return {d->center.x - d->radius, d->center.y - d->radius, d->center.x + d->radius,
            d->center.y + d->radius};
  }
  const auto& poly = std::get<ConvexPolygon>(shape);
  Box b{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
        -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const Point& v : poly.vertices) {
    b.xmin = std::min(b.xmin, v.x);
    b.ymin = std::min(b.ymin, v.y);
    b.xmax = std::max(b.xmax, v.x);
    b.ymax = std::max(b.ymax, v.y);
  }
  return b;
}

// Signed distance of p from the line through a and b (positive on the left).
double side_of(Point a, Point b, Point p) {
  const Point d = b - a;
  const double len = norm(d);
  return cross(d, p - a) / len;
}

double point_segment_distance(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  double u = len2 > 0.0 ? dot(p - a, d) / len2 : 0.0;
  u = std::clamp(u, 0.0, 1.0);
  return norm(p - (a + u * d));
}

std::vector<Point> circle_circle(const Disc& c1, const Disc& c2, double tol) {
  const Point delta = c2.center - c1.center;
  const double d = norm(delta);
  const double r1 = c1.radius;
  const double r2 = c2.radius;
  if (std::abs(d - (r1 + r2)) <= tol || std::abs(d - std::abs(r1 - r2)) <= tol) {
    throw Error(ErrorCode::kDegenerateContact, "discs " + std::to_string(c1.id) + " and " +
                                                   std::to_string(c2.id) + " touch tangentially");
  }
  if (d > r1 + r2 || d < std::abs(r1 - r2)) return {};
  const double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
  const double h = std::sqrt(std::max(0.0, r1 * r1 - a * a));
  const Point u = (1.0 / d) * delta;
  const Point base = c1.center + a * u;
  const Point perp{-u.y, u.x};
  return {base + h * perp, base - (h * perp)};
}

void segment_segment(Point p1, Point p2, Point q1, Point q2, double tol, std::vector<Point>& out) {
  const double d1 = side_of(q1, q2, p1);
  const double d2 = side_of(q1, q2, p2);
  const double d3 = side_of(p1, p2, q1);
  const double d4 = side_of(p1, p2, q2);
  const bool near = std::abs(d1) <= tol || std::abs(d2) <= tol || std::abs(d3) <= tol || std::abs(d4) <= tol;
  if (near) {
    if (point_segment_distance(p1, q1, q2) <= tol || point_segment_distance(p2, q1, q2) <= tol ||
        point_segment_distance(q1, p1, p2) <= tol || point_segment_distance(q2, p1, p2) <= tol) {
      throw Error(ErrorCode::kDegenerateContact, "polygon boundaries touch at a vertex");
    }
    return;
  }
  if ((d1 > 0) != (d2 > 0) && (d3 > 0) != (d4 > 0)) {
    const double u = d1 / (d1 - d2);
    out.push_back(p1 + u * (p2 - p1));
  }
}

void circle_segment(const Disc& c, Point p, Point q, double tol, std::vector<Point>& out) {
  if (std::abs(norm(p - c.center) - c.radius) <= tol) {
    throw Error(ErrorCode::kDegenerateContact, "polygon vertex lies on the boundary of disc " +
                                                   std::to_string(c.id));
  }
  const Point d = q - p;
  const Point f = p - c.center;
  const double len = norm(d);
  // Distance from the center to the supporting line, and the foot parameter.
  const double foot_u = -dot(f, d) / (len * len);
  const double line_dist = std::abs(cross(d, f)) / len;
  if (std::abs(line_dist - c.radius) <= tol && foot_u > 0.0 && foot_u < 1.0) {
    throw Error(ErrorCode::kDegenerateContact, "polygon edge is tangent to disc " + std::to_string(c.id));
  }
  if (line_dist > c.radius) return;
  const double half = std::sqrt(std::max(0.0, c.radius * c.radius - line_dist * line_dist)) / len;
  for (const double u : {foot_u - half, foot_u + half}) {
    if (u > 0.0 && u < 1.0) out.push_back(p + u * d);
  }
}

void circle_polygon(const Disc& c, const ConvexPolygon& poly, double tol, std::vector<Point>& out) {
  const auto& v = poly.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    circle_segment(c, v[i], v[(i + 1) % v.size()], tol, out);
  }
}

}  // namespace

// -- construction -----------------------------------------------------------

Line make_line(LineId id, double a, double b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw Error(ErrorCode::kInvalidArgument, "line " + std::to_string(id) + " has non-finite coefficients");
  }
  const double n = std::hypot(a, b);
  if (n == 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "line " + std::to_string(id) + " has a = b = 0");
  }
  // Leave already-normalized coefficients bit-identical.
  if (std::abs(n - 1.0) > 4.0 * std::numeric_limits<double>::epsilon()) {
    a /= n;
    b /= n;
    c /= n;
  }
  if (a < 0.0 || (a == 0.0 && b < 0.0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  // Drop negative zeros so that equal lines compare and print identically.
  return Line{id, a + 0.0, b + 0.0, c + 0.0};
}

Line normalized(const Line& l) { return make_line(l.id, l.a, l.b, l.c); }

Line line_through(LineId id, Point p, Point q) {
  const Point d = q - p;
  return make_line(id, -d.y, d.x, -d.y * p.x + d.x * p.y);
}

bool Disc::known_tangent(LineId line) const {
  return std::find(tangent_to.begin(), tangent_to.end(), line) != tangent_to.end();
}

Disc make_disc(ShapeId id, Point center, double radius, std::vector<LineId> tangent_to) {
  if (!finite(center) || !std::isfinite(radius) || radius <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "disc " + std::to_string(id) + " needs a finite center and radius > 0");
  }
  std::sort(tangent_to.begin(), tangent_to.end());
  tangent_to.erase(std::unique(tangent_to.begin(), tangent_to.end()), tangent_to.end());
  return Disc{id, center, radius, std::move(tangent_to)};
}

ConvexPolygon make_convex_polygon(ShapeId id, std::vector<Point> vertices) {
  const std::string name = "polygon " + std::to_string(id);
  if (vertices.size() < 3) throw Error(ErrorCode::kInvalidArgument, name + " needs at least 3 vertices");
  const std::size_t k = vertices.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (!finite(vertices[i])) throw Error(ErrorCode::kInvalidArgument, name + " has a non-finite vertex");
    const Point a = vertices[i];
    const Point b = vertices[(i + 1) % k];
    const Point c = vertices[(i + 2) % k];
    if (a == b) throw Error(ErrorCode::kInvalidArgument, name + " repeats a vertex");
    if (cross(b - a, c - b) <= 0.0) {
      throw Error(ErrorCode::kInvalidArgument, name + " is not strictly convex and counter-clockwise");
    }
  }
  // Consecutive left turns alone admit self-winding stars; total turning must be 2*pi.
  double turning = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const Point e1 = vertices[(i + 1) % k] - vertices[i];
    const Point e2 = vertices[(i + 2) % k] - vertices[(i + 1) % k];
    turning += std::atan2(cross(e1, e2), dot(e1, e2));
  }
  if (std::abs(turning - 2.0 * M_PI) > 1e-6) {
    throw Error(ErrorCode::kInvalidArgument, name + " winds more than once");
  }
  return ConvexPolygon{id, std::move(vertices)};
}

ShapeId shape_id(const PseudoDisc& shape) {
  return std::visit([](const auto& s) { return s.id; }, shape);
}

const Line& Scene::line(LineId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= lines.size() || lines[id].id != id) {
    throw Error(ErrorCode::kUnknownVertex, "no line with id " + std::to_string(id));
  }
  return lines[id];
}

std::vector<Disc> Scene::discs() const {
  std::vector<Disc> out;
  for (const auto& s : shapes) {
    if (const auto* d = std::get_if<Disc>(&s)) out.push_back(*d);
  }
  return out;
}

void check_scene_invariants(const Scene& scene) {
  for (std::size_t i = 0; i < scene.lines.size(); ++i) {
    if (scene.lines[i].id != static_cast<LineId>(i)) {
      throw Error(ErrorCode::kInvalidArgument, "line ids must be dense from 0 in order");
    }
  }
  std::set<ShapeId> ids;
  for (const auto& s : scene.shapes) {
    if (!ids.insert(shape_id(s)).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate pseudo-disc id " + std::to_string(shape_id(s)));
    }
    if (const auto* d = std::get_if<Disc>(&s)) {
      for (LineId t : d->tangent_to) {
        if (t < 0 || static_cast<std::size_t>(t) >= scene.lines.size()) {
          throw Error(ErrorCode::kInvalidArgument,
                      "disc " + std::to_string(d->id) + " is tangent to unknown line " + std::to_string(t));
        }
      }
    }
  }
}

// -- predicates -------------------------------------------------------------

Point line_line_intersection(const Line& l1, const Line& l2, double min_angle) {
  const double det = l1.a * l2.b - l2.a * l1.b;
  if (std::abs(det) <= std::sin(min_angle) || det == 0.0) {
    throw Error(ErrorCode::kNearParallel,
                "lines " + std::to_string(l1.id) + " and " + std::to_string(l2.id) + " are (near) parallel");
  }
  return {(l1.c * l2.b - l2.c * l1.b) / det, (l1.a * l2.c - l2.a * l1.c) / det};
}

double signed_distance(Point p, const Line& l) { return l.a * p.x + l.b * p.y - l.c; }

bool line_intersects_disc(const Line& l, const Disc& d, double tangency_tolerance) {
  if (d.known_tangent(l.id)) return true;
  return std::abs(signed_distance(d.center, l)) <= d.radius * (1.0 + tangency_tolerance);
}

bool line_intersects_polygon(const Line& l, const ConvexPolygon& p) {
  bool above = false;
  bool below = false;
  for (const Point& v : p.vertices) {
    const double s = signed_distance(v, l);
    if (s > 0.0) {
      above = true;
    } else if (s < 0.0) {
      below = true;
    } else {
      return true;
    }
  }
  return above && below;
}

bool line_intersects(const Line& l, const PseudoDisc& shape, const Margins& margins) {
  if (const auto* d = std::get_if<Disc>(&shape)) return line_intersects_disc(l, *d, margins.tangency_tolerance);
  return line_intersects_polygon(l, std::get<ConvexPolygon>(shape));
}

bool segment_intersects(const PseudoDisc& shape, Point p, Point q, const Margins& margins) {
  if (const auto* d = std::get_if<Disc>(&shape)) {
    return point_segment_distance(d->center, p, q) <= d->radius * (1.0 + margins.tangency_tolerance);
  }
  const auto& v = std::get<ConvexPolygon>(shape).vertices;
  // Separating axes: every polygon edge normal, then the segment normal.
  const auto separated = [&](Point axis) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const Point& w : v) {
      lo = std::min(lo, dot(axis, w));
      hi = std::max(hi, dot(axis, w));
    }
    const double s1 = dot(axis, p);
    const double s2 = dot(axis, q);
    return std::max(s1, s2) < lo || std::min(s1, s2) > hi;
  };
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point e = v[(i + 1) % v.size()] - v[i];
    if (separated({-e.y, e.x})) return false;
  }
  const Point s = q - p;
  return !separated({-s.y, s.x});
}

Disc incircle_of_triangle(const Line& l1, const Line& l2, const Line& l3, const Margins& margins, ShapeId id) {
  const auto vertex = [&](const Line& u, const Line& w) {
    try {
      return line_line_intersection(u, w, margins.min_angle);
    } catch (const Error& e) {
      throw Error(ErrorCode::kDegenerateTriangle, e.what());
    }
  };
  const Point a = vertex(l2, l3);  // opposite l1
  const Point b = vertex(l1, l3);  // opposite l2
  const Point c = vertex(l1, l2);  // opposite l3
  if (std::abs(signed_distance(c, l3)) < margins.min_separation) {
    throw Error(ErrorCode::kDegenerateTriangle, "lines " + std::to_string(l1.id) + ", " + std::to_string(l2.id) +
                                                    ", " + std::to_string(l3.id) + " are nearly concurrent");
  }
  const double side_a = norm(b - c);
  const double side_b = norm(a - c);
  const double side_c = norm(a - b);
  const double perimeter = side_a + side_b + side_c;
  const Point center = (1.0 / perimeter) * (side_a * a + side_b * b + side_c * c);
  const double area = 0.5 * std::abs(cross(b - a, c - a));
  return make_disc(id, center, area / (0.5 * perimeter), {l1.id, l2.id, l3.id});
}

std::vector<Point> boundary_intersection_points(const PseudoDisc& s1, const PseudoDisc& s2, double tolerance) {
  std::vector<Point> out;
  const auto* d1 = std::get_if<Disc>(&s1);
  const auto* d2 = std::get_if<Disc>(&s2);
  if (d1 && d2) return circle_circle(*d1, *d2, tolerance);
  if (d1) {
    circle_polygon(*d1, std::get<ConvexPolygon>(s2), tolerance, out);
    return out;
  }
  if (d2) {
    circle_polygon(*d2, std::get<ConvexPolygon>(s1), tolerance, out);
    return out;
  }
  const auto& p = std::get<ConvexPolygon>(s1).vertices;
  const auto& q = std::get<ConvexPolygon>(s2).vertices;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      segment_segment(p[i], p[(i + 1) % p.size()], q[j], q[(j + 1) % q.size()], tolerance, out);
    }
  }
  return out;
}

int boundary_crossings(const PseudoDisc& s1, const PseudoDisc& s2, double tolerance) {
  return static_cast<int>(boundary_intersection_points(s1, s2, tolerance).size());
}

// -- validation -------------------------------------------------------------

FamilyReport validate_pseudo_disc_family(std::span<const PseudoDisc> family, const Margins& margins) {
  FamilyReport report;
  std::vector<Box> boxes;
  boxes.reserve(family.size());
  for (const auto& s : family) boxes.push_back(bounds(s));
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!boxes[i].overlaps(boxes[j], margins.min_separation)) continue;
      const ShapeId a = shape_id(family[i]);
      const ShapeId b = shape_id(family[j]);
      try {
        const int k = boundary_crossings(family[i], family[j], margins.min_separation);
        if (k > 2) report.violations.push_back({a, b, k});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kDegenerateContact) throw;
        report.degenerate.push_back({a, b, -1});
      }
    }
  }
  return report;
}

namespace {

bool known_tangent_to(const PseudoDisc& s, LineId id) {
  const auto* d = std::get_if<Disc>(&s);
  return d != nullptr && d->known_tangent(id);
}

}  // namespace

GeneralPositionReport validate_general_position(const Scene& scene) {
  GeneralPositionReport report;
  const auto& lines = scene.lines;
  const Margins& m = scene.margins;
  const double sin_min = std::sin(m.min_angle);

  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const double det = lines[i].a * lines[j].b - lines[j].a * lines[i].b;
      if (std::abs(det) <= sin_min || det == 0.0) {
        report.near_parallel.push_back({lines[i].id, lines[j].id});
        continue;
      }
      const Point p = line_line_intersection(lines[i], lines[j], 0.0);
      for (std::size_t k = j + 1; k < lines.size(); ++k) {
        if (std::abs(signed_distance(p, lines[k])) < m.min_separation) {
          report.concurrent.push_back({lines[i].id, lines[j].id, lines[k].id});
        }
      }
    }
  }

  const auto& shapes = scene.shapes;
  std::vector<Box> boxes;
  boxes.reserve(shapes.size());
  for (const auto& s : shapes) boxes.push_back(bounds(s));
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    for (std::size_t j = i + 1; j < shapes.size(); ++j) {
      if (!boxes[i].overlaps(boxes[j], m.min_separation)) continue;
      std::vector<Point> crossings;
      try {
        crossings = boundary_intersection_points(shapes[i], shapes[j], m.min_separation);
      } catch (const Error& e) {
        // Tangential contacts are reported by the family validator.
        if (e.code() != ErrorCode::kDegenerateContact) throw;
        continue;
      }
      for (const Point& p : crossings) {
        for (const Line& l : lines) {
          // A boundary hugs its known tangent line near the contact point, so
          // crossings there are expected; membership is settled by metadata.
          if (known_tangent_to(shapes[i], l.id) || known_tangent_to(shapes[j], l.id)) continue;
          if (std::abs(signed_distance(p, l)) < m.min_separation) {
            report.through_boundary_crossing.push_back({l.id, shape_id(shapes[i]), shape_id(shapes[j]), p});
          }
        }
      }
    }
  }

  for (const Line& l : lines) {
    for (const auto& s : shapes) {
      if (const auto* d = std::get_if<Disc>(&s)) {
        if (d->known_tangent(l.id)) continue;
        if (std::abs(std::abs(signed_distance(d->center, l)) - d->radius) < m.min_separation * d->radius) {
          report.near_tangent.push_back({l.id, d->id});
        }
      } else {
        const auto& poly = std::get<ConvexPolygon>(s);
        for (const Point& v : poly.vertices) {
          if (std::abs(signed_distance(v, l)) < m.min_separation) {
            report.near_tangent.push_back({l.id, poly.id});
            break;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace linehyp
