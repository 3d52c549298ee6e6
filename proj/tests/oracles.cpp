#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <variant>

namespace oracle {

namespace {

double side(const Line& l, Point p) { return l.a * p.x + l.b * p.y - l.c; }

// Cramer's rule on the raw coefficients.
Point cross_point(const Line& l1, const Line& l2) {
  const double det = l1.a * l2.b - l2.a * l1.b;
  return {(l1.c * l2.b - l2.c * l1.b) / det, (l1.a * l2.c - l2.a * l1.c) / det};
}

}  // namespace

SignVector sign_vector(const std::vector<Line>& lines, Point p) {
  SignVector s(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) s[i] = side(lines[i], p) > 0.0;
  return s;
}

std::set<SignVector> cells(const std::vector<Line>& lines) {
  std::set<SignVector> out;
  if (lines.empty()) {
    out.insert(SignVector{});
    return out;
  }
  if (lines.size() == 1) {
    const Point on{lines[0].a * lines[0].c, lines[0].b * lines[0].c};
    out.insert(sign_vector(lines, {on.x + lines[0].a, on.y + lines[0].b}));
    out.insert(sign_vector(lines, {on.x - lines[0].a, on.y - lines[0].b}));
    return out;
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Point v = cross_point(lines[i], lines[j]);
      double clearance = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < lines.size(); ++k) {
        if (k != i && k != j) clearance = std::min(clearance, std::abs(side(lines[k], v)));
      }
      for (int si : {-1, 1}) {
        for (int sj : {-1, 1}) {
          // offset w with n_i.w = si, n_j.w = sj, scaled to stay clear of other lines
          const Line ui{0, lines[i].a, lines[i].b, static_cast<double>(si)};
          const Line uj{0, lines[j].a, lines[j].b, static_cast<double>(sj)};
          Point w = cross_point(ui, uj);
          const double len = std::hypot(w.x, w.y);
          const double scale = std::min(1.0, 0.25 * clearance) / len;
          out.insert(sign_vector(lines, {v.x + scale * w.x, v.y + scale * w.y}));
        }
      }
    }
  }
  return out;
}

int vertex_count(const std::vector<Line>& lines) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) pts.push_back(cross_point(lines[i], lines[j]));
  }
  int distinct = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool seen = false;
    for (std::size_t j = 0; j < i && !seen; ++j) {
      seen = std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y) < 1e-9;
    }
    if (!seen) ++distinct;
  }
  return distinct;
}

int segment_count(const std::vector<Line>& lines) {
  int total = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::vector<double> params;
    const Point d{lines[i].b, -lines[i].a};
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (j == i) continue;
      const Point p = cross_point(lines[i], lines[j]);
      params.push_back(p.x * d.x + p.y * d.y);
    }
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                 params.end());
    total += static_cast<int>(params.size()) + 1;
  }
  return total;
}

int cell_complexity(const std::set<SignVector>& all, const SignVector& cell) {
  int count = 0;
  for (std::size_t i = 0; i < cell.size(); ++i) {
    SignVector f = cell;
    f[i] = !f[i];
    if (all.count(f) != 0) ++count;
  }
  return count;
}

std::set<SignVector> zone_cells(const std::vector<Line>& lines, const Line& query) {
  const Point o{query.a * query.c, query.b * query.c};
  const Point d{query.b, -query.a};
  std::vector<double> params;
  for (const Line& l : lines) {
    const Point p = cross_point(query, l);
    params.push_back((p.x - o.x) * d.x + (p.y - o.y) * d.y);
  }
  std::sort(params.begin(), params.end());
  std::vector<double> probes;
  if (params.empty()) {
    probes.push_back(0.0);
  } else {
    probes.push_back(params.front() - 1.0);
    for (std::size_t i = 1; i < params.size(); ++i) probes.push_back(0.5 * (params[i - 1] + params[i]));
    probes.push_back(params.back() + 1.0);
  }
  std::set<SignVector> out;
  for (double s : probes) out.insert(sign_vector(lines, {o.x + s * d.x, o.y + s * d.y}));
  return out;
}

std::vector<std::set<SignVector>> leq_t_zone(const std::vector<Line>& lines, const Line& query, int t) {
  const std::set<SignVector> all = cells(lines);
  std::vector<std::set<SignVector>> layers{zone_cells(lines, query)};
  std::set<SignVector> seen = layers[0];
  for (int i = 1; i < t; ++i) {
    std::set<SignVector> next;
    for (const SignVector& c : layers.back()) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        SignVector f = c;
        f[k] = !f[k];
        if (all.count(f) != 0 && seen.count(f) == 0) next.insert(f);
      }
    }
    seen.insert(next.begin(), next.end());
    layers.push_back(std::move(next));
  }
  return layers;
}

std::map<std::vector<int>, std::vector<int>> hyperedges(const linehyp::Scene& scene) {
  std::map<std::vector<int>, std::vector<int>> out;
  for (const auto& shape : scene.shapes) {
    std::vector<int> edge;
    int id = 0;
    if (const auto* d = std::get_if<linehyp::Disc>(&shape)) {
      id = d->id;
      for (const Line& l : scene.lines) {
        const bool tangent = std::find(d->tangent_to.begin(), d->tangent_to.end(), l.id) != d->tangent_to.end();
        const double dist = std::abs(side(l, d->center));
        if (tangent || dist <= d->radius * (1.0 + scene.margins.tangency_tolerance)) edge.push_back(l.id);
      }
    } else {
      const auto& p = std::get<linehyp::ConvexPolygon>(shape);
      id = p.id;
      for (const Line& l : scene.lines) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (Point v : p.vertices) {
          lo = std::min(lo, side(l, v));
          hi = std::max(hi, side(l, v));
        }
        if (lo <= 0.0 && hi >= 0.0) edge.push_back(l.id);
      }
    }
    std::sort(edge.begin(), edge.end());
    if (!edge.empty()) out[edge].push_back(id);
  }
  return out;
}

long long degree(const std::map<std::vector<int>, std::vector<int>>& edges, int line, int t) {
  long long n = 0;
  for (const auto& [e, w] : edges) {
    if (static_cast<int>(e.size()) == t && std::find(e.begin(), e.end(), line) != e.end()) ++n;
  }
  return n;
}

namespace {

using Adj = std::vector<std::uint32_t>;

Adj drop_vertex(const Adj& g, int v) {
  Adj out;
  for (int i = 0; i < static_cast<int>(g.size()); ++i) {
    if (i == v) continue;
    std::uint32_t m = 0;
    int k = 0;
    for (int j = 0; j < static_cast<int>(g.size()); ++j) {
      if (j == v) continue;
      if (g[i] >> j & 1u) m |= 1u << k;
      ++k;
    }
    out.push_back(m);
  }
  return out;
}

// Removes vertices of degree <= 1 and smooths degree-2 vertices; both keep planarity.
Adj reduce(Adj g) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < static_cast<int>(g.size()); ++v) {
      const int deg = __builtin_popcount(g[v]);
      if (deg <= 1) {
        g = drop_vertex(g, v);
        changed = true;
        break;
      }
      if (deg == 2) {
        const int a = __builtin_ctz(g[v]);
        const int b = 31 - __builtin_clz(g[v]);
        g[a] |= 1u << b;
        g[b] |= 1u << a;
        g = drop_vertex(g, v);
        changed = true;
        break;
      }
    }
  }
  return g;
}

bool has_k5(const Adj& g) {
  const int n = static_cast<int>(g.size());
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (__builtin_popcount(s) != 5) continue;
    bool all = true;
    for (int v = 0; v < n && all; ++v) {
      if (s >> v & 1u) all = __builtin_popcount(g[v] & s) == 4;
    }
    if (all) return true;
  }
  return false;
}

bool has_k33(const Adj& g) {
  const int n = static_cast<int>(g.size());
  for (std::uint32_t a = 0; a < (1u << n); ++a) {
    if (__builtin_popcount(a) != 3) continue;
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
      if ((a & b) != 0 || __builtin_popcount(b) != 3 || b < a) continue;
      bool all = true;
      for (int v = 0; v < n && all; ++v) {
        if (a >> v & 1u) all = (g[v] & b) == b;
      }
      if (all) return true;
    }
  }
  return false;
}

bool nonplanar(const Adj& raw, std::set<Adj>& planar_memo) {
  const Adj g = reduce(raw);
  const int n = static_cast<int>(g.size());
  if (n < 5) return false;
  if (planar_memo.count(g) != 0) return false;
  if (has_k5(g) || has_k33(g)) return true;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if ((g[u] >> v & 1u) == 0) continue;
      Adj del = g;
      del[u] &= ~(1u << v);
      del[v] &= ~(1u << u);
      if (nonplanar(del, planar_memo)) return true;
      Adj con = g;
      con[u] |= con[v];
      con[u] &= ~(1u << u) & ~(1u << v);
      for (int w = 0; w < n; ++w) {
        if (con[w] >> v & 1u) {
          con[w] &= ~(1u << v);
          if (w != u) con[w] |= 1u << u;
        }
      }
      if (nonplanar(drop_vertex(con, v), planar_memo)) return true;
    }
  }
  planar_memo.insert(g);
  return false;
}

}  // namespace

bool planar(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  Adj g(vertex_count, 0);
  for (auto [u, v] : edges) {
    g[u] |= 1u << v;
    g[v] |= 1u << u;
  }
  std::set<Adj> memo;
  return !nonplanar(g, memo);
}

int vc_dimension(const std::vector<int>& vertices, const std::vector<std::vector<int>>& edges) {
  const int n = static_cast<int>(vertices.size());
  std::vector<std::uint32_t> masks;
  for (const auto& e : edges) {
    std::uint32_t m = 0;
    for (int v : e) {
      const auto it = std::find(vertices.begin(), vertices.end(), v);
      m |= 1u << (it - vertices.begin());
    }
    masks.push_back(m);
  }
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const int k = __builtin_popcount(s);
    if (k <= best) continue;
    std::set<std::uint32_t> traces;
    for (auto m : masks) traces.insert(m & s);
    if (traces.size() == (std::size_t{1} << k)) best = k;
  }
  return best;
}

}  // namespace oracle
