#include "linehyp/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

namespace linehyp {

namespace {

// Crossing of a line with an axis-parallel box half-edge, computed on the box
// side itself so the new vertex lies exactly on it.
Point box_crossing(const Line& l, Point u, Point v) {
  if (u.y == v.y) return {(l.c - l.b * u.y) / l.a, u.y};
  return {u.x, (l.c - l.a * u.x) / l.b};
}

}  // namespace

VertexId Arrangement::add_vertex(Point p, bool on_box) {
  vertices_.push_back({p, kNone, on_box});
  return static_cast<VertexId>(vertices_.size() - 1);
}

HalfEdgeId Arrangement::split_edge(HalfEdgeId e, Point p) {
  const HalfEdgeId t = half_edges_[e].twin;
  const VertexId w = add_vertex(p, half_edges_[e].line == kBoxEdge);

  const auto e1 = static_cast<HalfEdgeId>(half_edges_.size());
  const HalfEdgeId t1 = e1 + 1;
  half_edges_.push_back({w, t, kNone, e, half_edges_[e].face, half_edges_[e].line});
  half_edges_.push_back({w, e, kNone, t, half_edges_[t].face, half_edges_[t].line});

  half_edges_[e1].next = half_edges_[e].next;
  half_edges_[half_edges_[e].next].prev = e1;
  half_edges_[e].next = e1;

  half_edges_[t1].next = half_edges_[t].next;
  half_edges_[half_edges_[t].next].prev = t1;
  half_edges_[t].next = t1;

  half_edges_[e].twin = t1;
  half_edges_[t].twin = e1;
  vertices_[w].incident = e1;
  return e1;
}

HalfEdgeId Arrangement::connect(HalfEdgeId a_in, HalfEdgeId b_in, LineId line) {
  const VertexId p = half_edges_[half_edges_[a_in].next].origin;
  const VertexId q = half_edges_[half_edges_[b_in].next].origin;
  const HalfEdgeId a_out = half_edges_[a_in].next;
  const HalfEdgeId b_out = half_edges_[b_in].next;
  const FaceId f = half_edges_[a_in].face;

  const auto h1 = static_cast<HalfEdgeId>(half_edges_.size());
  const HalfEdgeId h2 = h1 + 1;
  half_edges_.push_back({p, h2, b_out, a_in, f, line});
  half_edges_.push_back({q, h1, a_out, b_in, kNone, line});
  half_edges_[a_in].next = h1;
  half_edges_[b_out].prev = h1;
  half_edges_[b_in].next = h2;
  half_edges_[a_out].prev = h2;

  faces_[f].edge = h1;
  const auto g = static_cast<FaceId>(faces_.size());
  faces_.push_back({h2, false});
  HalfEdgeId h = h2;
  do {
    half_edges_[h].face = g;
    h = half_edges_[h].next;
  } while (h != h2);
  return h1;
}

void Arrangement::insert_line(const Line& l) {
  const auto violation = [&](const std::string& what) {
    return Error(ErrorCode::kGeneralPositionViolation, "inserting line " + std::to_string(l.id) + ": " + what);
  };

  // Entry: the inner box half-edge crossed first along the line direction.
  HalfEdgeId entry = kNone;
  Point entry_point;
  double best = std::numeric_limits<double>::infinity();
  for (HalfEdgeId e = 0; e < static_cast<HalfEdgeId>(half_edges_.size()); ++e) {
    const HalfEdge& he = half_edges_[e];
    if (he.line != kBoxEdge || he.face == kOuterFace) continue;
    const Point u = origin_point(e);
    const Point v = target_point(e);
    const double su = signed_distance(u, l);
    const double sv = signed_distance(v, l);
    if (su == 0.0 || sv == 0.0) throw violation("passes through a box vertex");
    if ((su > 0.0) == (sv > 0.0)) continue;
    const Point p = box_crossing(l, u, v);
    const double key = dot(p, l.direction());
    if (key < best) {
      best = key;
      entry = e;
      entry_point = p;
    }
  }
  if (entry == kNone) throw violation("does not cross the bounding box");

  split_edge(entry, entry_point);
  HalfEdgeId a_in = entry;
  for (;;) {
    const HalfEdgeId start = half_edges_[a_in].next;
    HalfEdgeId exit = kNone;
    for (HalfEdgeId h = half_edges_[start].next; h != a_in; h = half_edges_[h].next) {
      const Vertex& vx = vertices_[half_edges_[h].origin];
      const double s_origin = signed_distance(vx.point, l);
      if (!vx.on_box && std::abs(s_origin) < margins_.min_separation) {
        throw violation("passes within minSeparation of an arrangement vertex");
      }
      const double s_target = signed_distance(target_point(h), l);
      if (s_origin != 0.0 && s_target != 0.0 && (s_origin > 0.0) != (s_target > 0.0)) {
        exit = h;
        break;
      }
    }
    if (exit == kNone) throw violation("lost the face walk");

    const bool leaves_box = half_edges_[exit].line == kBoxEdge;
    Point q;
    if (leaves_box) {
      q = box_crossing(l, origin_point(exit), target_point(exit));
    } else {
      try {
        q = line_line_intersection(l, line_by_id(half_edges_[exit].line), 0.0);
      } catch (const Error& e) {
        throw violation(e.what());
      }
    }
    const HalfEdgeId exit_rest = split_edge(exit, q);
    connect(a_in, exit, l.id);
    if (leaves_box) return;
    a_in = half_edges_[exit_rest].twin;
  }
}

Arrangement Arrangement::build(std::span<const Line> lines, std::span<const Point> extra_points,
                               const Margins& margins) {
  Arrangement arr;
  arr.lines_.assign(lines.begin(), lines.end());
  arr.margins_ = margins;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].id < 0 || !arr.index_of_.emplace(lines[i].id, static_cast<int>(i)).second) {
      throw Error(ErrorCode::kInvalidArgument, "line ids must be unique and non-negative");
    }
  }

  std::vector<Point> pts(extra_points.begin(), extra_points.end());
  pts.push_back({0.0, 0.0});
  for (std::size_t i = 0; i < lines.size(); ++i) {
    pts.push_back(lines[i].anchor());
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      try {
        pts.push_back(line_line_intersection(lines[i], lines[j], margins.min_angle));
      } catch (const Error& e) {
        throw Error(ErrorCode::kGeneralPositionViolation, e.what());
      }
    }
  }
  BoundingBox b{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
                -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const Point& p : pts) {
    b.xmin = std::min(b.xmin, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.xmax = std::max(b.xmax, p.x);
    b.ymax = std::max(b.ymax, p.y);
  }
  const double extent = std::max(b.xmax - b.xmin, b.ymax - b.ymin);
  double pad = std::max(1.0, 0.1 * extent);
  // Grow the padding until no line passes close to a box corner.
  for (int attempt = 0;; ++attempt) {
    arr.box_ = {b.xmin - pad, b.ymin - 1.173 * pad, b.xmax + 1.319 * pad, b.ymax + 1.091 * pad};
    const Point corners[] = {{arr.box_.xmin, arr.box_.ymin},
                             {arr.box_.xmax, arr.box_.ymin},
                             {arr.box_.xmax, arr.box_.ymax},
                             {arr.box_.xmin, arr.box_.ymax}};
    bool clear = true;
    for (const Line& l : lines) {
      for (const Point& c : corners) {
        if (std::abs(signed_distance(c, l)) < 1e-6 * pad) clear = false;
      }
    }
    if (clear) break;
    if (attempt > 32) throw Error(ErrorCode::kGeneralPositionViolation, "cannot place the bounding box");
    pad *= 1.37;
  }

  const BoundingBox& bx = arr.box_;
  arr.add_vertex({bx.xmin, bx.ymin}, true);
  arr.add_vertex({bx.xmax, bx.ymin}, true);
  arr.add_vertex({bx.xmax, bx.ymax}, true);
  arr.add_vertex({bx.xmin, bx.ymax}, true);
  // Inner counter-clockwise cycle gets face 1, its twins face 0.
  for (VertexId i = 0; i < 4; ++i) {
    const HalfEdgeId inner = 2 * i;
    const HalfEdgeId outer = 2 * i + 1;
    arr.half_edges_.push_back({i, outer, 2 * ((i + 1) % 4), 2 * ((i + 3) % 4), 1, kBoxEdge});
    arr.half_edges_.push_back({(i + 1) % 4, inner, 2 * ((i + 3) % 4) + 1, 2 * ((i + 1) % 4) + 1, 0, kBoxEdge});
    arr.vertices_[i].incident = inner;
  }
  arr.faces_.push_back({1, false});
  arr.faces_.push_back({0, true});

  for (const Line& l : lines) arr.insert_line(l);

  for (FaceId f = 1; f < static_cast<FaceId>(arr.faces_.size()); ++f) {
    bool bounded = true;
    for (HalfEdgeId h : arr.boundary(f)) {
      if (arr.half_edges_[h].line == kBoxEdge) bounded = false;
    }
    arr.faces_[f].bounded = bounded;
  }
  return arr;
}

Arrangement build_arrangement(std::span<const Line> lines, const Margins& margins) {
  return Arrangement::build(lines, {}, margins);
}

const Line& Arrangement::line_by_id(LineId id) const {
  const auto it = index_of_.find(id);
  if (it == index_of_.end()) throw Error(ErrorCode::kUnknownVertex, "no line with id " + std::to_string(id));
  return lines_[it->second];
}

std::vector<FaceId> Arrangement::cells() const {
  std::vector<FaceId> out;
  for (FaceId f = 1; f < static_cast<FaceId>(faces_.size()); ++f) out.push_back(f);
  return out;
}

std::vector<HalfEdgeId> Arrangement::boundary(FaceId f) const {
  std::vector<HalfEdgeId> out;
  const HalfEdgeId first = faces_.at(f).edge;
  HalfEdgeId h = first;
  do {
    out.push_back(h);
    h = half_edges_[h].next;
  } while (h != first);
  return out;
}

std::vector<Point> Arrangement::polygon(FaceId f) const {
  std::vector<Point> out;
  for (HalfEdgeId h : boundary(f)) out.push_back(origin_point(h));
  return out;
}

int Arrangement::cell_complexity(FaceId f) const {
  std::vector<LineId> ids;
  for (HalfEdgeId h : boundary(f)) {
    if (half_edges_[h].line != kBoxEdge) ids.push_back(half_edges_[h].line);
  }
  std::sort(ids.begin(), ids.end());
  return static_cast<int>(std::unique(ids.begin(), ids.end()) - ids.begin());
}

std::vector<FaceId> Arrangement::neighbors(FaceId f) const {
  std::vector<FaceId> out;
  for (HalfEdgeId h : boundary(f)) {
    if (half_edges_[h].line == kBoxEdge) continue;
    out.push_back(half_edges_[half_edges_[h].twin].face);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ArrangementStats Arrangement::stats() const {
  ArrangementStats s;
  s.n = static_cast<int>(lines_.size());
  for (const Vertex& v : vertices_) {
    if (!v.on_box) ++s.vertices;
  }
  for (const HalfEdge& h : half_edges_) {
    if (h.line != kBoxEdge) ++s.segments;
  }
  s.segments /= 2;
  s.faces = static_cast<int>(faces_.size()) - 1;
  const long long euler = static_cast<long long>(vertices_.size()) -
                          static_cast<long long>(half_edges_.size() / 2) + static_cast<long long>(faces_.size());
  s.euler_ok = euler == 2 && check_invariants();
  return s;
}

bool Arrangement::check_invariants() const {
  const auto count = static_cast<HalfEdgeId>(half_edges_.size());
  for (HalfEdgeId e = 0; e < count; ++e) {
    const HalfEdge& h = half_edges_[e];
    if (h.twin < 0 || h.twin >= count || half_edges_[h.twin].twin != e) return false;
    if (half_edges_[h.next].prev != e || half_edges_[h.prev].next != e) return false;
    if (half_edges_[h.next].face != h.face) return false;
    if (half_edges_[h.next].origin != half_edges_[h.twin].origin) return false;
    if (half_edges_[h.twin].line != h.line) return false;
    if ((h.line == kBoxEdge) != (h.face == kOuterFace || half_edges_[h.twin].face == kOuterFace)) return false;
  }
  std::size_t visited = 0;
  for (FaceId f = 0; f < static_cast<FaceId>(faces_.size()); ++f) {
    const auto b = boundary(f);
    visited += b.size();
    for (HalfEdgeId h : b) {
      if (half_edges_[h].face != f) return false;
    }
    if (f == kOuterFace) continue;
    const auto poly = polygon(f);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point a = poly[i];
      const Point m = poly[(i + 1) % poly.size()];
      const Point c = poly[(i + 2) % poly.size()];
      // Collinear triples appear where a ray meets a box side.
      if (cross(m - a, c - m) < -1e-9 * (norm(m - a) * norm(c - m))) return false;
    }
  }
  return visited == half_edges_.size();
}

int cell_complexity(const Arrangement& arr, FaceId f) { return arr.cell_complexity(f); }

std::vector<Point> query_crossings(std::span<const Line> lines, const Line& query, double min_angle) {
  std::vector<Point> out;
  out.reserve(lines.size());
  for (const Line& l : lines) {
    try {
      out.push_back(line_line_intersection(l, query, min_angle));
    } catch (const Error& e) {
      throw Error(ErrorCode::kQueryDegenerate, e.what());
    }
  }
  return out;
}

ZoneReport zone(const Arrangement& arr, const Line& query) {
  ZoneReport report;
  report.query = query;
  report.t = 1;
  const double min_sep = arr.margins().min_separation;

  for (const Point& p : query_crossings(arr.lines(), query, arr.margins().min_angle)) {
    if (!arr.box().contains(p)) {
      throw Error(ErrorCode::kQueryOutsideBox, "query crosses a line outside the bounding box");
    }
  }

  // Entry box half-edge, same rule as line insertion.
  HalfEdgeId h_in = kNone;
  double best = std::numeric_limits<double>::infinity();
  const auto& hes = arr.half_edges();
  for (HalfEdgeId e = 0; e < static_cast<HalfEdgeId>(hes.size()); ++e) {
    if (hes[e].line != kBoxEdge || hes[e].face == Arrangement::kOuterFace) continue;
    const Point u = arr.origin_point(e);
    const Point v = arr.target_point(e);
    const double su = signed_distance(u, query);
    const double sv = signed_distance(v, query);
    if (su == 0.0 || sv == 0.0 || (su > 0.0) == (sv > 0.0)) continue;
    const double key = dot(box_crossing(query, u, v), query.direction());
    if (key < best) {
      best = key;
      h_in = e;
    }
  }
  std::vector<FaceId> faces;
  if (h_in == kNone) {
    if (!arr.lines().empty()) throw Error(ErrorCode::kQueryOutsideBox, "query misses the bounding box");
    faces = arr.cells();
  } else {
    for (;;) {
      const FaceId f = hes[h_in].face;
      faces.push_back(f);
      HalfEdgeId exit = kNone;
      for (HalfEdgeId h : arr.boundary(f)) {
        const auto& vx = arr.vertices()[hes[h].origin];
        const double s = signed_distance(vx.point, query);
        if (!vx.on_box && std::abs(s) < min_sep) {
          throw Error(ErrorCode::kQueryDegenerate, "query passes within minSeparation of a vertex");
        }
        if (h == h_in) continue;
        const double st = signed_distance(arr.target_point(h), query);
        if (exit == kNone && s != 0.0 && st != 0.0 && (s > 0.0) != (st > 0.0)) exit = h;
      }
      if (exit == kNone) throw Error(ErrorCode::kQueryDegenerate, "zone walk lost the query line");
      if (hes[exit].line == kBoxEdge) break;
      h_in = hes[exit].twin;
    }
  }
  std::sort(faces.begin(), faces.end());
  long long complexity = 0;
  for (FaceId f : faces) complexity += arr.cell_complexity(f);
  report.layers.push_back(std::move(faces));
  report.complexity_per_layer.push_back(complexity);
  report.total_complexity = complexity;
  return report;
}

ZoneReport leq_t_zone(const Arrangement& arr, const Line& query, int t) {
  if (t < 1) throw Error(ErrorCode::kInvalidArgument, "t must be positive");
  ZoneReport report = zone(arr, query);
  report.t = t;
  std::vector<char> seen(arr.faces().size(), 0);
  for (FaceId f : report.layers[0]) seen[f] = 1;
  for (int i = 1; i < t; ++i) {
    std::vector<FaceId> next;
    for (FaceId f : report.layers.back()) {
      for (FaceId g : arr.neighbors(f)) {
        if (!seen[g]) {
          seen[g] = 1;
          next.push_back(g);
        }
      }
    }
    std::sort(next.begin(), next.end());
    long long complexity = 0;
    for (FaceId f : next) complexity += arr.cell_complexity(f);
    report.layers.push_back(std::move(next));
    report.complexity_per_layer.push_back(complexity);
    report.total_complexity += complexity;
  }
  return report;
}

long long zone_bound(int n) { return (19LL * (n - 1)) / 2 - 3; }

}  // namespace linehyp
