#include <algorithm>
#include <set>
#include <string>

#include "linehyp/hypergraph.hpp"

namespace linehyp {

namespace {

void extend_by_shape(std::vector<Point>& pts, const PseudoDisc& shape) {
  if (const auto* d = std::get_if<Disc>(&shape)) {
    pts.push_back({d->center.x - d->radius, d->center.y - d->radius});
    pts.push_back({d->center.x + d->radius, d->center.y + d->radius});
  } else {
    const auto& v = std::get<ConvexPolygon>(shape).vertices;
    pts.insert(pts.end(), v.begin(), v.end());
  }
}

}  // namespace

CellPairGraph three_hyperedge_cell_graph(const Scene& scene, LineId pivot) {
  const Line& pivot_line = scene.line(pivot);
  const Hypergraph h = build_hypergraph(scene);

  std::vector<Line> rest;
  for (const Line& l : scene.lines) {
    if (l.id != pivot) rest.push_back(l);
  }

  std::map<ShapeId, const PseudoDisc*> shapes;
  for (const auto& s : scene.shapes) shapes.emplace(shape_id(s), &s);

  // 3-hyperedges through the pivot, with their witnesses.
  std::vector<std::size_t> through;
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    const auto& e = h.edges()[i];
    if (e.size() == 3 && std::binary_search(e.begin(), e.end(), pivot)) through.push_back(i);
  }

  // The box must hold the pivot's crossings and every witness so that the
  // clipped edges are the full edges wherever a witness can touch them.
  std::vector<Point> extra = query_crossings(rest, pivot_line, scene.margins.min_angle);
  for (std::size_t i : through) {
    for (ShapeId w : h.witnesses()[i]) extend_by_shape(extra, *shapes.at(w));
  }
  const Arrangement arr = Arrangement::build(rest, extra, scene.margins);
  const ZoneReport z = leq_t_zone(arr, pivot_line, 2);

  CellPairGraph graph;
  graph.pivot = pivot;
  graph.zone_complexity = z.total_complexity;

  std::vector<FaceId> cells;
  for (const auto& layer : z.layers) cells.insert(cells.end(), layer.begin(), layer.end());
  std::sort(cells.begin(), cells.end());

  std::set<HalfEdgeId> vertex_set;
  std::map<FaceId, std::vector<std::pair<HalfEdgeId, LineId>>> cell_edges;
  for (FaceId f : cells) {
    auto& list = cell_edges[f];
    for (HalfEdgeId he : arr.boundary(f)) {
      const auto& e = arr.half_edge(he);
      if (e.line == kBoxEdge) continue;
      const HalfEdgeId key = Arrangement::edge_key(e, he);
      vertex_set.insert(key);
      list.emplace_back(he, e.line);
    }
    auto& sub = graph.per_cell[f];
    for (const auto& [he, line] : list) sub.vertices.push_back(Arrangement::edge_key(arr.half_edge(he), he));
    std::sort(sub.vertices.begin(), sub.vertices.end());
  }
  graph.vertices.assign(vertex_set.begin(), vertex_set.end());

  for (std::size_t i : through) {
    const auto& e = h.edges()[i];
    std::vector<LineId> others;
    for (LineId v : e) {
      if (v != pivot) others.push_back(v);
    }
    std::optional<CellPairGraph::PairEdge> chosen;
    for (ShapeId w : h.witnesses()[i]) {
      const PseudoDisc& shape = *shapes.at(w);
      std::optional<CellPairGraph::PairEdge> located;
      for (FaceId f : cells) {
        std::optional<std::pair<HalfEdgeId, HalfEdgeId>> best;
        std::vector<HalfEdgeId> on_first;
        std::vector<HalfEdgeId> on_second;
        for (const auto& [he, line] : cell_edges[f]) {
          if (line != others[0] && line != others[1]) continue;
          if (!segment_intersects(shape, arr.origin_point(he), arr.target_point(he), scene.margins)) continue;
          const HalfEdgeId key = Arrangement::edge_key(arr.half_edge(he), he);
          (line == others[0] ? on_first : on_second).push_back(key);
        }
        for (HalfEdgeId a : on_first) {
          for (HalfEdgeId b : on_second) {
            if (!best || std::make_pair(a, b) < *best) best = std::make_pair(a, b);
          }
        }
        if (best) {
          located = CellPairGraph::PairEdge{best->first, best->second, f, e, w};
          break;
        }
      }
      if (!located) {
        throw Error(ErrorCode::kWitnessLocalizationFailed,
                    "shape " + std::to_string(w) + " of hyperedge {" + std::to_string(e[0]) + "," +
                        std::to_string(e[1]) + "," + std::to_string(e[2]) +
                        "} meets no cell of the <=2-zone on both other lines");
      }
      if (!chosen) chosen = located;
    }
    graph.edges.push_back(*chosen);
    graph.per_cell[chosen->cell].edges.emplace_back(chosen->first, chosen->second);
  }
  for (auto& [f, sub] : graph.per_cell) std::sort(sub.edges.begin(), sub.edges.end());
  return graph;
}

}  // namespace linehyp
