#pragma once

#include <array>
#include <span>
#include <vector>

#include "linehyp/geom.hpp"
#include "linehyp/hypergraph.hpp"

namespace linehyp {

/// One of the four wedges formed by two lines. `signs` holds the sign (+1/-1)
/// of each normalized line form inside the wedge; `quadrant` ranks the wedge
/// bisector angle (0..3) among the four wedges of the pair.
struct WedgeId {
  LineId first = 0;   // smaller line id
  LineId second = 0;  // larger line id
  int quadrant = 0;
  std::array<int, 2> signs{1, 1};

  friend bool operator==(const WedgeId&, const WedgeId&) = default;
};

WedgeId wedge_of(const Line& l1, const Line& l2, Point interior);

struct TangentDisc {
  Disc disc;
  std::array<LineId, 2> tangent_lines{};  // ascending
  Point on_first;                         // tangency point on tangent_lines[0]
  Point on_second;                        // tangency point on tangent_lines[1]
  WedgeId wedge;
};

struct ShrinkResult {
  TangentDisc tangent;
  /// Several lines became tangent at the same moment; the smallest id won.
  bool tie = false;
};

/// Shrinks about the center until the first tangency, then through the
/// internally tangent pencil at that tangency point until a second line
/// becomes tangent. The hyperedge over `lines` is unchanged.
ShrinkResult shrink_disc(const Disc& d, std::span<const Line> lines, const Margins& margins = {});

struct ShrinkFamilyResult {
  Scene scene;
  std::vector<ShapeId> passed_through;  // discs meeting at most one line, left as they were
  std::vector<ShapeId> not_discs;       // polygons, left as they were
  std::vector<ShapeId> ties;
};

/// Replaces every disc meeting at least two lines by its shrunk copy and
/// checks that the hypergraph is unchanged (ShrinkMismatch otherwise).
ShrinkFamilyResult shrink_family(const Scene& scene);

/// Discs sorted by nearness of their tangency chord to the wedge apex.
struct WedgeOrder {
  WedgeId wedge;
  std::vector<TangentDisc> ordered;
};

/// Discs of the scene tangent to both lines, grouped by wedge (ascending
/// quadrant) and ordered. Throws OrderInconsistency if the orders along the
/// two lines disagree.
std::vector<WedgeOrder> tangent_family(const Scene& scene, LineId l1, LineId l2);

struct IntervalReport {
  struct Violation {
    LineId line;
    std::vector<bool> hits;
  };
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

IntervalReport interval_property_check(const WedgeOrder& w, std::span<const Line> lines, const Margins& margins = {});

struct SweepCount {
  long long distinct = 0;
  long long changes = 0;
};

/// Walks the order comparing consecutive hyperedges. Throws IntervalViolation
/// if a line reappears after leaving.
SweepCount sweep_distinct_count(const WedgeOrder& w, std::span<const Line> lines, const Margins& margins = {});

struct AuditReport {
  struct WedgeEntry {
    int quadrant = 0;
    std::vector<ShapeId> discs;
    long long distinct = 0;
    long long changes = 0;
    bool interval_ok = true;
  };
  struct PairEntry {
    LineId first = 0;
    LineId second = 0;
    std::vector<WedgeEntry> wedges;
  };
  std::vector<PairEntry> pairs;
  long long covered_edges = 0;  // hyperedges of size >= 2 reached by some wedge sweep
  long long trivial_edges = 0;  // hyperedges of size <= 1, which need no tangent pair
  long long total_edges = 0;
  long long sum_of_pair_counts = 0;
  bool interval_ok = true;
  bool change_bound_ok = true;   // changes <= 2n per wedge
  bool distinct_bound_ok = true; // distinct <= 2n + 1 per wedge

  bool ok() const {
    return interval_ok && change_bound_ok && distinct_bound_ok && covered_edges + trivial_edges == total_edges &&
           sum_of_pair_counts >= covered_edges;
  }
};

/// Attributes every hyperedge of a shrunk scene to a (line pair, wedge) group.
AuditReport total_hyperedge_audit(const Scene& shrunk);

}  // namespace linehyp
