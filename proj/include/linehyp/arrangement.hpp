#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "linehyp/geom.hpp"

namespace linehyp {

using VertexId = std::int32_t;
using HalfEdgeId = std::int32_t;
using FaceId = std::int32_t;

inline constexpr LineId kBoxEdge = -1;
inline constexpr std::int32_t kNone = -1;

struct BoundingBox {
  double xmin = -1.0;
  double ymin = -1.0;
  double xmax = 1.0;
  double ymax = 1.0;

  bool contains(Point p, double pad = 0.0) const {
    return p.x > xmin + pad && p.x < xmax - pad && p.y > ymin + pad && p.y < ymax - pad;
  }
};

struct ArrangementStats {
  int n = 0;
  int vertices = 0;  // arrangement vertices, box corners and ray ends excluded
  int segments = 0;  // edges carried by lines
  int faces = 0;     // cells of the unclipped arrangement
  bool euler_ok = false;
};

/// Doubly-connected edge list of a line arrangement clipped to a bounding box.
///
/// Face 0 is the region outside the box. Every other face is a cell of the
/// arrangement; cells that reach the box are the clipped unbounded cells and
/// have bounded() == false. Half-edges along the box carry kBoxEdge as their
/// line. Immutable after construction.
class Arrangement {
 public:
  struct Vertex {
    Point point;
    HalfEdgeId incident = kNone;  // some half-edge leaving this vertex
    bool on_box = false;
  };
  struct HalfEdge {
    VertexId origin = kNone;
    HalfEdgeId twin = kNone;
    HalfEdgeId next = kNone;
    HalfEdgeId prev = kNone;
    FaceId face = kNone;
    LineId line = kBoxEdge;
  };
  struct Face {
    HalfEdgeId edge = kNone;
    bool bounded = false;
  };

  static constexpr FaceId kOuterFace = 0;

  /// Incremental insertion in input order; line ids must be unique. `extra_points` only enlarge the
  /// bounding box (used so that later query lines cross all lines inside it).
  static Arrangement build(std::span<const Line> lines, std::span<const Point> extra_points = {},
                           const Margins& margins = {});

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<HalfEdge>& half_edges() const { return half_edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Line>& lines() const { return lines_; }
  const Line& line_by_id(LineId id) const;
  const BoundingBox& box() const { return box_; }
  const Margins& margins() const { return margins_; }

  const HalfEdge& half_edge(HalfEdgeId e) const { return half_edges_[e]; }
  Point origin_point(HalfEdgeId e) const { return vertices_[half_edges_[e].origin].point; }
  Point target_point(HalfEdgeId e) const { return vertices_[half_edges_[half_edges_[e].twin].origin].point; }

  /// Cells of the arrangement (all faces except the outer one).
  std::vector<FaceId> cells() const;
  /// Half-edges bounding the face, in boundary order.
  std::vector<HalfEdgeId> boundary(FaceId f) const;
  /// Vertex positions of the face boundary in counter-clockwise order.
  std::vector<Point> polygon(FaceId f) const;
  /// Distinct line ids on the face boundary; box edges excluded.
  int cell_complexity(FaceId f) const;
  /// Cells sharing an arrangement edge with f, ascending and without duplicates.
  std::vector<FaceId> neighbors(FaceId f) const;
  /// Canonical undirected edge id: the smaller of the two half-edge ids.
  static HalfEdgeId edge_key(const HalfEdge& e, HalfEdgeId id) { return std::min(id, e.twin); }

  ArrangementStats stats() const;
  /// Structural self-check of the DCEL (twins, cycles, face assignment, Euler).
  bool check_invariants() const;

 private:
  VertexId add_vertex(Point p, bool on_box);
  HalfEdgeId split_edge(HalfEdgeId e, Point p);
  HalfEdgeId connect(HalfEdgeId a_in, HalfEdgeId b_in, LineId line);
  void insert_line(const Line& l);

  std::vector<Vertex> vertices_;
  std::vector<HalfEdge> half_edges_;
  std::vector<Face> faces_;
  std::vector<Line> lines_;
  std::unordered_map<LineId, int> index_of_;
  BoundingBox box_;
  Margins margins_;
};

Arrangement build_arrangement(std::span<const Line> lines, const Margins& margins = {});

int cell_complexity(const Arrangement& arr, FaceId f);

/// Faces per zone layer. layers[0] is the zone (1-zone) of the query line.
struct ZoneReport {
  Line query;
  int t = 1;
  std::vector<std::vector<FaceId>> layers;
  std::vector<long long> complexity_per_layer;
  long long total_complexity = 0;
};

/// Faces whose closed region meets `query`. Throws QueryDegenerate if the
/// query passes within minSeparation of a vertex, QueryOutsideBox if some of
/// its crossings with the arrangement lines lie outside the bounding box.
ZoneReport zone(const Arrangement& arr, const Line& query);

/// Layers 1..t; layer i holds the cells edge-adjacent to layer i-1 that are
/// in no earlier layer.
ZoneReport leq_t_zone(const Arrangement& arr, const Line& query, int t);

/// Points where `query` crosses each line, for building an arrangement whose
/// box admits the query.
std::vector<Point> query_crossings(std::span<const Line> lines, const Line& query, double min_angle);

/// Tight zone bound floor(9.5(n-1)) - 3 for n lines.
long long zone_bound(int n);

}  // namespace linehyp
