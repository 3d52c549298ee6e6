#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "linehyp/error.hpp"

namespace linehyp {

using LineId = int;
using ShapeId = int;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
inline double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
double norm(Point p);

/// Line a*x + b*y = c. Instances built through make_line() are normalized:
/// a^2 + b^2 = 1 and the first nonzero of (a, b) is positive.
struct Line {
  LineId id = 0;
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;

  Point normal() const { return {a, b}; }
  /// Unit direction, the normal rotated by -90 degrees.
  Point direction() const { return {b, -a}; }
  /// The point of the line closest to the origin.
  Point anchor() const { return {a * c, b * c}; }

  friend bool operator==(const Line&, const Line&) = default;
};

Line make_line(LineId id, double a, double b, double c);
Line normalized(const Line& l);
/// Line through two distinct points.
Line line_through(LineId id, Point p, Point q);

struct Disc {
  ShapeId id = 0;
  Point center;
  double radius = 1.0;
  /// Lines this disc is known to be tangent to by construction. The
  /// intersection predicate reports these as intersecting regardless of
  /// floating-point jitter.
  std::vector<LineId> tangent_to;

  bool known_tangent(LineId line) const;

  friend bool operator==(const Disc&, const Disc&) = default;
};

Disc make_disc(ShapeId id, Point center, double radius, std::vector<LineId> tangent_to = {});

/// Strictly convex polygon, vertices counter-clockwise.
struct ConvexPolygon {
  ShapeId id = 0;
  std::vector<Point> vertices;

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;
};

ConvexPolygon make_convex_polygon(ShapeId id, std::vector<Point> vertices);

using PseudoDisc = std::variant<Disc, ConvexPolygon>;

ShapeId shape_id(const PseudoDisc& shape);

struct Margins {
  double min_angle = 1e-4;           // radians
  double min_separation = 1e-6;      // absolute length
  double tangency_tolerance = 1e-9;  // relative to the radius

  friend bool operator==(const Margins&, const Margins&) = default;
};

struct Scene {
  std::vector<Line> lines;
  std::vector<PseudoDisc> shapes;
  Margins margins;

  const Line& line(LineId id) const;
  std::vector<Disc> discs() const;

  friend bool operator==(const Scene&, const Scene&) = default;
};

/// Checks id uniqueness (lines dense from 0, shapes unique) and shape invariants.
void check_scene_invariants(const Scene& scene);

// -- predicates -------------------------------------------------------------

Point line_line_intersection(const Line& l1, const Line& l2, double min_angle = Margins{}.min_angle);

/// a*x + b*y - c; for a normalized line this is the signed Euclidean distance.
double signed_distance(Point p, const Line& l);

/// Closed-region semantics: tangency counts as intersection.
bool line_intersects_disc(const Line& l, const Disc& d,
                          double tangency_tolerance = Margins{}.tangency_tolerance);

bool line_intersects_polygon(const Line& l, const ConvexPolygon& p);

bool line_intersects(const Line& l, const PseudoDisc& shape, const Margins& margins = {});

/// Closed segment [p, q] against the closed region of the shape.
bool segment_intersects(const PseudoDisc& shape, Point p, Point q, const Margins& margins = {});

/// Incircle of the triangle bounded by three lines in general position; the
/// result carries the three line ids as known tangencies.
Disc incircle_of_triangle(const Line& l1, const Line& l2, const Line& l3, const Margins& margins = {},
                          ShapeId id = 0);

/// Transversal intersection points of the two boundaries. Throws
/// DegenerateContact for a near-tangential contact.
std::vector<Point> boundary_intersection_points(const PseudoDisc& s1, const PseudoDisc& s2,
                                                double tolerance = Margins{}.min_separation);

int boundary_crossings(const PseudoDisc& s1, const PseudoDisc& s2,
                       double tolerance = Margins{}.min_separation);

// -- validation -------------------------------------------------------------

struct ShapePair {
  ShapeId first = 0;
  ShapeId second = 0;
  int crossings = 0;
};

struct FamilyReport {
  std::vector<ShapePair> violations;  // pairs whose boundaries cross more than twice
  std::vector<ShapePair> degenerate;  // DegenerateContact warnings

  bool valid() const { return violations.empty(); }
};

FamilyReport validate_pseudo_disc_family(std::span<const PseudoDisc> family, const Margins& margins = {});

struct GeneralPositionReport {
  struct LineNearBoundaryCrossing {
    LineId line;
    ShapeId first;
    ShapeId second;
    Point crossing;
  };
  struct LineNearShape {
    LineId line;
    ShapeId shape;
  };

  std::vector<std::array<LineId, 2>> near_parallel;
  std::vector<std::array<LineId, 3>> concurrent;
  std::vector<LineNearBoundaryCrossing> through_boundary_crossing;
  /// Line/disc pairs within minSeparation of tangency that are not known tangencies,
  /// and lines within minSeparation of a polygon vertex.
  std::vector<LineNearShape> near_tangent;

  bool valid() const {
    return near_parallel.empty() && concurrent.empty() && through_boundary_crossing.empty() &&
           near_tangent.empty();
  }
};

GeneralPositionReport validate_general_position(const Scene& scene);

}  // namespace linehyp
