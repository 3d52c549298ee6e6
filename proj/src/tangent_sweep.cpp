#include "linehyp/tangent_sweep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

namespace linehyp {

namespace {

constexpr double kTieTolerance = 1e-9;

Point foot(Point p, const Line& l) { return p - signed_distance(p, l) * l.normal(); }

double distance_to(const Disc& d, const Line& l) {
  // Known tangencies are exact by construction.
  return d.known_tangent(l.id) ? d.radius : std::abs(signed_distance(d.center, l));
}

TangentDisc make_tangent_disc(const Disc& d, const Line& l1, const Line& l2) {
  const Line& a = l1.id < l2.id ? l1 : l2;
  const Line& b = l1.id < l2.id ? l2 : l1;
  TangentDisc td;
  td.disc = d;
  td.tangent_lines = {a.id, b.id};
  td.on_first = foot(d.center, a);
  td.on_second = foot(d.center, b);
  td.wedge = wedge_of(a, b, d.center);
  return td;
}

}  // namespace

WedgeId wedge_of(const Line& l1, const Line& l2, Point interior) {
  const Line& a = l1.id < l2.id ? l1 : l2;
  const Line& b = l1.id < l2.id ? l2 : l1;
  WedgeId w;
  w.first = a.id;
  w.second = b.id;
  w.signs = {signed_distance(interior, a) < 0.0 ? -1 : 1, signed_distance(interior, b) < 0.0 ? -1 : 1};
  const auto bisector_angle = [&](int s1, int s2) {
    const Point d = static_cast<double>(s1) * a.normal() + static_cast<double>(s2) * b.normal();
    const double t = std::atan2(d.y, d.x);
    return t < 0.0 ? t + 2.0 * M_PI : t;
  };
  const double mine = bisector_angle(w.signs[0], w.signs[1]);
  int rank = 0;
  for (int s1 : {-1, 1}) {
    for (int s2 : {-1, 1}) {
      if (bisector_angle(s1, s2) < mine) ++rank;
    }
  }
  w.quadrant = rank;
  return w;
}

ShrinkResult shrink_disc(const Disc& d, std::span<const Line> lines, const Margins& margins) {
  std::vector<const Line*> met;
  for (const Line& l : lines) {
    if (line_intersects_disc(l, d, margins.tangency_tolerance)) met.push_back(&l);
  }
  if (met.size() < 2) {
    throw Error(ErrorCode::kTooFewLines, "disc " + std::to_string(d.id) + " meets fewer than two lines");
  }
  ShrinkResult result;
  std::vector<LineId> tangent;

  // Phase 1: fixed center, radius down to the farthest met line.
  double r1 = 0.0;
  for (const Line* l : met) r1 = std::max(r1, distance_to(d, *l));
  if (r1 <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "disc " + std::to_string(d.id) + " is centered on every line it meets");
  }
  const Line* first = nullptr;
  for (const Line* l : met) {
    if (distance_to(d, *l) >= r1 * (1.0 - kTieTolerance)) {
      if (first == nullptr || l->id < first->id) first = l;
      tangent.push_back(l->id);
    }
  }
  if (tangent.size() > 1) result.tie = true;

  // Phase 2: circles tangent to `first` at the same point, on the same side.
  const double side = signed_distance(d.center, *first) < 0.0 ? -1.0 : 1.0;
  const Point inward = side * first->normal();
  const Point touch = d.center - r1 * inward;
  double s2 = 0.0;
  std::vector<std::pair<double, const Line*>> thresholds;
  for (const Line* l : met) {
    if (l == first) continue;
    // The pencil circle of radius s meets l iff |g(s)| <= s with g linear in s.
    const double g0 = signed_distance(touch, *l);
    const double k = dot(inward, l->normal());
    double threshold = 0.0;
    if (k < 1.0) threshold = std::max(threshold, g0 / (1.0 - k));
    if (k > -1.0) threshold = std::max(threshold, -g0 / (1.0 + k));
    if (d.known_tangent(l->id) && tangent.size() > 1 &&
        std::find(tangent.begin(), tangent.end(), l->id) != tangent.end()) {
      threshold = r1;
    }
    threshold = std::min(threshold, r1);
    thresholds.emplace_back(threshold, l);
    s2 = std::max(s2, threshold);
  }
  if (s2 <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "disc " + std::to_string(d.id) + " shrinks onto a vertex");
  }
  const Line* second = nullptr;
  int at_second = 0;
  for (const auto& [threshold, l] : thresholds) {
    if (threshold >= s2 * (1.0 - kTieTolerance)) {
      ++at_second;
      if (second == nullptr || l->id < second->id) second = l;
      tangent.push_back(l->id);
    }
  }
  if (at_second > 1) result.tie = true;

  const Disc shrunk = make_disc(d.id, touch + s2 * inward, s2, tangent);
  if (hyperedge_of(shrunk, lines, margins) != hyperedge_of(d, lines, margins)) {
    throw Error(ErrorCode::kShrinkMismatch, "shrinking disc " + std::to_string(d.id) + " changed its hyperedge");
  }
  result.tangent = make_tangent_disc(shrunk, *first, *second);
  return result;
}

ShrinkFamilyResult shrink_family(const Scene& scene) {
  check_scene_invariants(scene);
  ShrinkFamilyResult out;
  out.scene = scene;
  for (auto& shape : out.scene.shapes) {
    auto* d = std::get_if<Disc>(&shape);
    if (d == nullptr) {
      out.not_discs.push_back(shape_id(shape));
      continue;
    }
    if (hyperedge_of(shape, scene.lines, scene.margins).size() < 2) {
      out.passed_through.push_back(d->id);
      continue;
    }
    try {
      ShrinkResult r = shrink_disc(*d, scene.lines, scene.margins);
      if (r.tie) out.ties.push_back(d->id);
      *d = std::move(r.tangent.disc);
    } catch (const Error& e) {
      throw Error(e.code(), std::string("disc ") + std::to_string(d->id) + ": " + e.what());
    }
  }
  const Hypergraph before = build_hypergraph(scene, {.validate = false});
  const Hypergraph after = build_hypergraph(out.scene, {.validate = false});
  if (!(before == after)) throw Error(ErrorCode::kShrinkMismatch, "shrinking changed the hypergraph");
  return out;
}

std::vector<WedgeOrder> tangent_family(const Scene& scene, LineId l1, LineId l2) {
  if (l1 == l2) throw Error(ErrorCode::kInvalidArgument, "tangent family needs two distinct lines");
  const Line& a = scene.line(std::min(l1, l2));
  const Line& b = scene.line(std::max(l1, l2));
  const Point apex = line_line_intersection(a, b, 0.0);

  std::map<int, WedgeOrder> groups;
  for (const auto& shape : scene.shapes) {
    const auto* d = std::get_if<Disc>(&shape);
    if (d == nullptr || !d->known_tangent(a.id) || !d->known_tangent(b.id)) continue;
    TangentDisc td = make_tangent_disc(*d, a, b);
    auto& group = groups[td.wedge.quadrant];
    group.wedge = td.wedge;
    group.ordered.push_back(std::move(td));
  }
  std::vector<WedgeOrder> out;
  for (auto& [quadrant, group] : groups) {
    auto& v = group.ordered;
    std::sort(v.begin(), v.end(), [&](const TangentDisc& x, const TangentDisc& y) {
      const double kx = norm(x.on_first - apex);
      const double ky = norm(y.on_first - apex);
      return kx != ky ? kx < ky : x.disc.id < y.disc.id;
    });
    for (std::size_t i = 1; i < v.size(); ++i) {
      const double prev = norm(v[i - 1].on_second - apex);
      const double cur = norm(v[i].on_second - apex);
      if (cur < prev - 1e-12 * std::max(1.0, prev)) {
        throw Error(ErrorCode::kOrderInconsistency,
                    "discs " + std::to_string(v[i - 1].disc.id) + " and " + std::to_string(v[i].disc.id) +
                        " have crossing tangency chords");
      }
    }
    out.push_back(std::move(group));
  }
  return out;
}

IntervalReport interval_property_check(const WedgeOrder& w, std::span<const Line> lines, const Margins& margins) {
  IntervalReport report;
  for (const Line& l : lines) {
    std::vector<bool> hits;
    hits.reserve(w.ordered.size());
    for (const auto& td : w.ordered) hits.push_back(line_intersects_disc(l, td.disc, margins.tangency_tolerance));
    int runs = 0;
    for (std::size_t i = 0; i < hits.size(); ++i) {
      if (hits[i] && (i == 0 || !hits[i - 1])) ++runs;
    }
    if (runs > 1) report.violations.push_back({l.id, std::move(hits)});
  }
  return report;
}

SweepCount sweep_distinct_count(const WedgeOrder& w, std::span<const Line> lines, const Margins& margins) {
  SweepCount count;
  std::set<Hyperedge> seen;
  std::map<LineId, int> state;  // 1 present, 2 gone
  Hyperedge previous;
  for (std::size_t i = 0; i < w.ordered.size(); ++i) {
    const Hyperedge e = hyperedge_of(w.ordered[i].disc, lines, margins);
    for (const Line& l : lines) {
      const bool present = std::binary_search(e.begin(), e.end(), l.id);
      int& s = state[l.id];
      if (present && s == 2) {
        throw Error(ErrorCode::kIntervalViolation, "line " + std::to_string(l.id) + " reappears in the wedge order");
      }
      if (!present && s == 1) s = 2;
      if (present) s = 1;
    }
    if (i > 0 && e != previous) ++count.changes;
    seen.insert(e);
    previous = e;
  }
  count.distinct = static_cast<long long>(seen.size());
  return count;
}

AuditReport total_hyperedge_audit(const Scene& shrunk) {
  check_scene_invariants(shrunk);
  AuditReport report;
  const Hypergraph h = build_hypergraph(shrunk, {.validate = false});
  const long long n = static_cast<long long>(shrunk.lines.size());

  std::map<ShapeId, const Disc*> discs;
  std::set<std::pair<LineId, LineId>> pairs;
  for (const auto& s : shrunk.shapes) {
    const auto* d = std::get_if<Disc>(&s);
    if (d == nullptr) continue;
    discs.emplace(d->id, d);
    for (std::size_t i = 0; i < d->tangent_to.size(); ++i) {
      for (std::size_t j = i + 1; j < d->tangent_to.size(); ++j) pairs.emplace(d->tangent_to[i], d->tangent_to[j]);
    }
  }

  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    if (h.edges()[i].size() < 2) continue;
    bool attributed = false;
    for (ShapeId w : h.witnesses()[i]) {
      const auto it = discs.find(w);
      if (it != discs.end() && it->second->tangent_to.size() >= 2) attributed = true;
    }
    if (!attributed) {
      throw Error(ErrorCode::kUnattributedEdge,
                  "hyperedge " + std::to_string(i) + " has no witness tangent to two lines");
    }
  }

  std::set<Hyperedge> covered;
  for (const auto& [l1, l2] : pairs) {
    AuditReport::PairEntry entry{l1, l2, {}};
    for (const WedgeOrder& w : tangent_family(shrunk, l1, l2)) {
      AuditReport::WedgeEntry we;
      we.quadrant = w.wedge.quadrant;
      for (const auto& td : w.ordered) {
        we.discs.push_back(td.disc.id);
        covered.insert(hyperedge_of(td.disc, shrunk.lines, shrunk.margins));
      }
      we.interval_ok = interval_property_check(w, shrunk.lines, shrunk.margins).ok();
      if (we.interval_ok) {
        const SweepCount c = sweep_distinct_count(w, shrunk.lines, shrunk.margins);
        we.distinct = c.distinct;
        we.changes = c.changes;
      } else {
        report.interval_ok = false;
      }
      if (we.changes > 2 * n) report.change_bound_ok = false;
      if (we.distinct > 2 * n + 1) report.distinct_bound_ok = false;
      report.sum_of_pair_counts += we.distinct;
      entry.wedges.push_back(std::move(we));
    }
    report.pairs.push_back(std::move(entry));
  }

  report.total_edges = static_cast<long long>(h.edges().size());
  for (const auto& e : h.edges()) {
    if (e.size() <= 1) {
      ++report.trivial_edges;
    } else if (covered.count(e) != 0) {
      ++report.covered_edges;
    }
  }
  return report;
}

}  // namespace linehyp
