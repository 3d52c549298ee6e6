#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "linehyp/arrangement.hpp"
#include "linehyp/geom.hpp"

namespace linehyp {

/// Sorted, duplicate-free set of line ids.
using Hyperedge = std::vector<LineId>;
using SizeHistogram = std::map<int, long long>;

/// Lines of `lines` meeting the closed shape, honoring known tangencies.
Hyperedge hyperedge_of(const PseudoDisc& shape, std::span<const Line> lines, const Margins& margins = {});

/// Hypergraph on line ids with deduplicated hyperedges. Edges are kept in
/// lexicographic order; witnesses[i] lists the shape ids realizing edges[i].
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::vector<LineId> vertex_ids, const std::map<Hyperedge, std::vector<ShapeId>>& edges);

  const std::vector<LineId>& vertex_ids() const { return vertex_ids_; }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const std::vector<std::vector<ShapeId>>& witnesses() const { return witnesses_; }

  bool has_vertex(LineId id) const;
  std::optional<std::size_t> find(const Hyperedge& e) const;
  SizeHistogram size_histogram() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::vector<LineId> vertex_ids_;
  std::vector<Hyperedge> edges_;
  std::vector<std::vector<ShapeId>> witnesses_;
};

struct HypergraphOptions {
  /// Run general-position and pseudo-disc-family validation first.
  bool validate = true;
};

Hypergraph build_hypergraph(const Scene& scene, const HypergraphOptions& options = {});

SizeHistogram count_by_size(const Hypergraph& h);

long long degree_count(const Hypergraph& h, LineId line, int t);

/// Simple undirected graph with arbitrary integer vertex labels.
struct Graph {
  std::vector<int> vertices;               // ascending
  std::vector<std::pair<int, int>> edges;  // first < second, ascending, no duplicates
};

/// The size-2 hyperedges as a graph on all vertices of h.
Graph delaunay_graph(const Hypergraph& h);

/// Exact planarity test.
bool planarity_check(const Graph& g);

Hypergraph induced_subhypergraph(const Hypergraph& h, std::span<const LineId> subset);

/// Vertex set without `line`, edges {e \ {line} : line in e}, empties dropped.
Hypergraph link_of_line(const Hypergraph& h, LineId line);

struct VcReport {
  int vc_dimension = 0;
  std::vector<LineId> shattered_witness;
  /// A shattered set of size `cap` exists; vc_dimension is then a lower bound.
  bool cap_exceeded = false;
  /// max |Delaunay edges of H[V']| / |V'| over nonempty V', as a fraction.
  long long delaunay_numerator = 0;
  long long delaunay_denominator = 1;
  /// True when every subset was enumerated; otherwise a sampled lower bound.
  bool delaunay_exact = false;

  double delaunay_constant() const {
    return static_cast<double>(delaunay_numerator) / static_cast<double>(delaunay_denominator);
  }
  /// d <= 2c + 1
  bool inequality_holds() const {
    return static_cast<long long>(vc_dimension) * delaunay_denominator <=
           2 * delaunay_numerator + delaunay_denominator;
  }
};

struct VcOptions {
  int cap = 6;
  /// Enumerate every vertex subset for the Delaunay constant up to this many vertices.
  int exhaustive_limit = 12;
  int sampled_subsets = 4096;
  std::uint64_t seed = 0;
};

/// Exact VC-dimension by increasing subset size (at most 64 vertices).
VcReport vc_dimension(const Hypergraph& h, const VcOptions& options = {});

/// True iff every subset of `subset` is the trace of some hyperedge.
bool is_shattered(const Hypergraph& h, std::span<const LineId> subset);

/// Graph on the arrangement edges of the <=2-zone of a pivot line in the
/// arrangement of the remaining lines; one graph edge per 3-hyperedge through
/// the pivot, joining two edges of a common cell met by a witness.
struct CellPairGraph {
  struct PairEdge {
    HalfEdgeId first;   // arrangement edge (edge_key) on the smaller line id
    HalfEdgeId second;  // arrangement edge on the larger line id
    FaceId cell;
    Hyperedge hyperedge;
    ShapeId witness;
  };
  struct CellSubgraph {
    std::vector<HalfEdgeId> vertices;
    std::vector<std::pair<HalfEdgeId, HalfEdgeId>> edges;
  };

  LineId pivot = 0;
  std::vector<HalfEdgeId> vertices;
  std::vector<PairEdge> edges;
  std::map<FaceId, CellSubgraph> per_cell;
  /// Complexity of the <=2-zone of the pivot.
  long long zone_complexity = 0;
};

CellPairGraph three_hyperedge_cell_graph(const Scene& scene, LineId pivot);

}  // namespace linehyp
