#include "linehyp/hypergraph.hpp"

#include <algorithm>
#include <string>

namespace linehyp {

Hyperedge hyperedge_of(const PseudoDisc& shape, std::span<const Line> lines, const Margins& margins) {
  Hyperedge e;
  for (const Line& l : lines) {
    if (line_intersects(l, shape, margins)) e.push_back(l.id);
  }
  std::sort(e.begin(), e.end());
  return e;
}

Hypergraph::Hypergraph(std::vector<LineId> vertex_ids, const std::map<Hyperedge, std::vector<ShapeId>>& edges)
    : vertex_ids_(std::move(vertex_ids)) {
  std::sort(vertex_ids_.begin(), vertex_ids_.end());
  vertex_ids_.erase(std::unique(vertex_ids_.begin(), vertex_ids_.end()), vertex_ids_.end());
  edges_.reserve(edges.size());
  witnesses_.reserve(edges.size());
  for (const auto& [e, w] : edges) {
    if (e.empty()) continue;
    for (LineId v : e) {
      if (!has_vertex(v)) {
        throw Error(ErrorCode::kUnknownVertex, "hyperedge uses unknown line " + std::to_string(v));
      }
    }
    edges_.push_back(e);
    std::vector<ShapeId> ws = w;
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    witnesses_.push_back(std::move(ws));
  }
}

bool Hypergraph::has_vertex(LineId id) const {
  return std::binary_search(vertex_ids_.begin(), vertex_ids_.end(), id);
}

std::optional<std::size_t> Hypergraph::find(const Hyperedge& e) const {
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

SizeHistogram Hypergraph::size_histogram() const {
  SizeHistogram h;
  for (const auto& e : edges_) ++h[static_cast<int>(e.size())];
  return h;
}

Hypergraph build_hypergraph(const Scene& scene, const HypergraphOptions& options) {
  check_scene_invariants(scene);
  if (options.validate) {
    const auto gp = validate_general_position(scene);
    if (!gp.valid()) {
      throw Error(ErrorCode::kValidationFailed,
                  "scene is not in general position (" + std::to_string(gp.near_parallel.size()) + " near-parallel, " +
                      std::to_string(gp.concurrent.size()) + " concurrent, " +
                      std::to_string(gp.through_boundary_crossing.size()) + " through boundary crossings, " +
                      std::to_string(gp.near_tangent.size()) + " near tangencies)");
    }
    const auto family = validate_pseudo_disc_family(scene.shapes, scene.margins);
    if (!family.valid()) {
      throw Error(ErrorCode::kValidationFailed,
                  std::to_string(family.violations.size()) + " shape pairs cross more than twice");
    }
  }
  std::map<Hyperedge, std::vector<ShapeId>> edges;
  for (const auto& s : scene.shapes) {
    Hyperedge e = hyperedge_of(s, scene.lines, scene.margins);
    if (!e.empty()) edges[std::move(e)].push_back(shape_id(s));
  }
  std::vector<LineId> ids;
  for (const Line& l : scene.lines) ids.push_back(l.id);
  return Hypergraph(std::move(ids), edges);
}

SizeHistogram count_by_size(const Hypergraph& h) { return h.size_histogram(); }

long long degree_count(const Hypergraph& h, LineId line, int t) {
  if (!h.has_vertex(line)) throw Error(ErrorCode::kUnknownVertex, "no line with id " + std::to_string(line));
  long long count = 0;
  for (const auto& e : h.edges()) {
    if (static_cast<int>(e.size()) == t && std::binary_search(e.begin(), e.end(), line)) ++count;
  }
  return count;
}

Graph delaunay_graph(const Hypergraph& h) {
  Graph g;
  g.vertices.assign(h.vertex_ids().begin(), h.vertex_ids().end());
  for (const auto& e : h.edges()) {
    if (e.size() == 2) g.edges.emplace_back(e[0], e[1]);
  }
  return g;
}

Hypergraph induced_subhypergraph(const Hypergraph& h, std::span<const LineId> subset) {
  std::vector<LineId> keep(subset.begin(), subset.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (LineId v : keep) {
    if (!h.has_vertex(v)) throw Error(ErrorCode::kUnknownVertex, "no line with id " + std::to_string(v));
  }
  std::map<Hyperedge, std::vector<ShapeId>> edges;
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    Hyperedge trace;
    std::set_intersection(h.edges()[i].begin(), h.edges()[i].end(), keep.begin(), keep.end(),
                          std::back_inserter(trace));
    if (trace.empty()) continue;
    auto& w = edges[std::move(trace)];
    w.insert(w.end(), h.witnesses()[i].begin(), h.witnesses()[i].end());
  }
  return Hypergraph(std::move(keep), edges);
}

Hypergraph link_of_line(const Hypergraph& h, LineId line) {
  if (!h.has_vertex(line)) throw Error(ErrorCode::kUnknownVertex, "no line with id " + std::to_string(line));
  std::vector<LineId> rest;
  for (LineId v : h.vertex_ids()) {
    if (v != line) rest.push_back(v);
  }
  std::map<Hyperedge, std::vector<ShapeId>> edges;
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    const auto& e = h.edges()[i];
    if (!std::binary_search(e.begin(), e.end(), line)) continue;
    Hyperedge reduced;
    for (LineId v : e) {
      if (v != line) reduced.push_back(v);
    }
    if (reduced.empty()) continue;
    auto& w = edges[std::move(reduced)];
    w.insert(w.end(), h.witnesses()[i].begin(), h.witnesses()[i].end());
  }
  return Hypergraph(std::move(rest), edges);
}

}  // namespace linehyp
