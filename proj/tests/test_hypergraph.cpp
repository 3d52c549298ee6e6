#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "linehyp/constructions.hpp"
#include "linehyp/hypergraph.hpp"
#include "oracles.hpp"

using namespace linehyp;

namespace {

Hypergraph make_h(std::vector<LineId> vertices, const std::vector<Hyperedge>& edges) {
  std::map<Hyperedge, std::vector<ShapeId>> m;
  ShapeId w = 0;
  for (const auto& e : edges) m[e].push_back(w++);
  return Hypergraph(std::move(vertices), m);
}

Graph complete(int k) {
  Graph g;
  for (int i = 0; i < k; ++i) g.vertices.push_back(i);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) g.edges.push_back({i, j});
  }
  return g;
}

// Random lines plus random discs and a few random triangles, in general position.
Scene mixed_scene(int n, int m, std::uint64_t seed) {
  Scene s = gen_random_disc_scene(n, m, seed, 0.05, 0.5);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  ShapeId next = m;
  for (int tries = 0; tries < 50 && next < m + 3; ++tries) {
    const Point c{u(rng), u(rng)};
    const double r = 0.1 + 0.2 * std::abs(u(rng));
    std::vector<Point> tri;
    for (int k = 0; k < 3; ++k) {
      const double th = 2.0 * M_PI * k / 3 + u(rng) * 0.3;
      tri.push_back({c.x + r * std::cos(th), c.y + r * std::sin(th)});
    }
    Scene t = s;
    t.shapes.emplace_back(make_convex_polygon(next, tri));
    if (validate_general_position(t).valid() && validate_pseudo_disc_family(t.shapes).valid()) {
      s = t;
      ++next;
    }
  }
  return s;
}

}  // namespace

TEST_CASE("build_hypergraph examples") {
  Scene s;
  s.lines = {make_line(0, 0, 1, 0)};
  s.shapes = {make_disc(0, {0, 0.5}, 1)};
  auto h = build_hypergraph(s);
  REQUIRE(h.edges().size() == 1);
  CHECK(h.edges()[0] == Hyperedge{0});
  CHECK(h.size_histogram() == SizeHistogram{{1, 1}});

  s.lines.push_back(make_line(1, 1, 0, 0));
  s.shapes = {make_disc(0, {0.1, 0.2}, 0.5), make_disc(1, {-0.2, -0.1}, 0.4)};
  h = build_hypergraph(s);
  REQUIRE(h.edges().size() == 1);
  CHECK(h.witnesses()[0] == std::vector<ShapeId>{0, 1});

  // a disc meeting no line is not an edge
  s.shapes = {make_disc(0, {5, 5}, 0.5)};
  CHECK(build_hypergraph(s).edges().empty());
}

TEST_CASE("build_hypergraph rejects invalid scenes") {
  Scene s;
  s.lines = {make_line(0, 1, 0, 0), make_line(1, 0, 1, 0), make_line(2, 1, 1, 0)};
  try {
    build_hypergraph(s);
    FAIL("expected ValidationFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kValidationFailed);
  }
  CHECK_NOTHROW(build_hypergraph(s, {.validate = false}));
}

TEST_CASE("incircle families: counts for n = 4 and n = 5") {
  const Scene l4 = gen_random_lines(4, 1);
  CHECK(count_by_size(build_hypergraph(incircle_family(l4.lines))) == SizeHistogram{{3, 3}, {4, 1}});
  const Scene l5 = gen_random_lines(5, 2);
  const Hypergraph h5 = build_hypergraph(incircle_family(l5.lines));
  CHECK(count_by_size(h5) == SizeHistogram{{3, 6}, {4, 3}, {5, 1}});
  CHECK(h5.edges().size() == 10);
  const auto naive = oracle::hyperedges(incircle_family(l5.lines));
  for (LineId l = 0; l < 5; ++l) CHECK(degree_count(h5, l, 3) == oracle::degree(naive, l, 3));
}

TEST_CASE("count_by_size of the empty hypergraph") { CHECK(count_by_size(Hypergraph{}).empty()); }

TEST_CASE("hyperedges, witnesses and degrees match the naive enumerator") {
  for (int n = 1; n <= 8; ++n) {
    for (int m : {1, 6, 12}) {
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const Scene s = mixed_scene(n, m, 1000 * n + 10 * m + seed);
        const Hypergraph h = build_hypergraph(s);
        const auto naive = oracle::hyperedges(s);
        REQUIRE(h.edges().size() == naive.size());
        std::size_t i = 0;
        for (const auto& [e, w] : naive) {
          CHECK(h.edges()[i] == e);
          CHECK(h.witnesses()[i] == w);
          ++i;
        }
        for (int t = 1; t <= n; ++t) {
          for (LineId l = 0; l < n; ++l) CHECK(degree_count(h, l, t) == oracle::degree(naive, l, t));
        }
      }
    }
  }
}

TEST_CASE("double counting and link consistency") {
  const Scene s = incircle_family(gen_random_lines(7, 3).lines);
  const Hypergraph h = build_hypergraph(s);
  const auto hist = h.size_histogram();
  for (int t = 1; t <= 7; ++t) {
    long long sum = 0;
    for (LineId l = 0; l < 7; ++l) sum += degree_count(h, l, t);
    const auto it = hist.find(t);
    CHECK(sum == t * (it == hist.end() ? 0 : it->second));
  }
  for (LineId l = 0; l < 7; ++l) {
    const auto link = link_of_line(h, l).size_histogram();
    for (int t = 2; t <= 7; ++t) {
      const auto it = link.find(t - 1);
      CHECK((it == link.end() ? 0 : it->second) == degree_count(h, l, t));
    }
  }
}

TEST_CASE("degree_count and link_of_line edge cases") {
  const Hypergraph h = make_h({1, 2, 3, 4}, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(degree_count(h, 4, 2) == 0);
  CHECK(link_of_line(h, 4).edges().empty());
  const Hypergraph link = link_of_line(h, 1);
  CHECK(link.edges() == std::vector<Hyperedge>{{2}, {3}});
  CHECK(link.vertex_ids() == std::vector<LineId>{2, 3, 4});
  try {
    degree_count(h, 9, 2);
    FAIL("expected UnknownVertex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownVertex);
  }
  CHECK_THROWS_AS(link_of_line(h, 9), Error);
}

TEST_CASE("dedup soundness: rebuilding from witnesses gives the same edges") {
  const Scene s = mixed_scene(8, 12, 77);
  const Hypergraph h = build_hypergraph(s);
  std::map<Hyperedge, std::vector<ShapeId>> rebuilt;
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    for (ShapeId w : h.witnesses()[i]) {
      for (const auto& shape : s.shapes) {
        if (shape_id(shape) == w) rebuilt[hyperedge_of(shape, s.lines, s.margins)].push_back(w);
      }
    }
  }
  CHECK(Hypergraph(h.vertex_ids(), rebuilt) == h);
}

TEST_CASE("induced_subhypergraph") {
  const Scene s = mixed_scene(8, 12, 5);
  const Hypergraph h = build_hypergraph(s);
  CHECK(induced_subhypergraph(h, h.vertex_ids()).edges() == h.edges());
  CHECK(induced_subhypergraph(h, std::vector<LineId>{3}).edges().size() <= 1);
  CHECK_THROWS_AS(induced_subhypergraph(h, std::vector<LineId>{42}), Error);

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<LineId> v;
    for (LineId l : h.vertex_ids()) {
      if (rng() & 1) v.push_back(l);
    }
    std::set<Hyperedge> expected;
    for (const auto& e : h.edges()) {
      Hyperedge trace;
      for (LineId x : e) {
        if (std::find(v.begin(), v.end(), x) != v.end()) trace.push_back(x);
      }
      if (!trace.empty()) expected.insert(trace);
    }
    const auto sub = induced_subhypergraph(h, v);
    CHECK(std::set<Hyperedge>(sub.edges().begin(), sub.edges().end()) == expected);
  }
}

TEST_CASE("delaunay_graph") {
  const Hypergraph h = make_h({0, 1, 2, 3}, {{0, 1}, {1, 2}, {0, 1, 2}, {3}});
  const Graph g = delaunay_graph(h);
  CHECK(g.vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(delaunay_graph(make_h({0, 1, 2}, {{0, 1, 2}})).edges.empty());
}

TEST_CASE("planarity_check on Kuratowski graphs") {
  CHECK(planarity_check(complete(4)));
  CHECK_FALSE(planarity_check(complete(5)));
  Graph k33;
  k33.vertices = {0, 1, 2, 3, 4, 5};
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) k33.edges.push_back({a, b});
  }
  CHECK_FALSE(planarity_check(k33));
  // subdivided K5 stays nonplanar
  Graph sub = complete(5);
  sub.vertices.push_back(5);
  sub.edges.erase(sub.edges.begin());
  sub.edges.push_back({0, 5});
  sub.edges.push_back({1, 5});
  CHECK_FALSE(planarity_check(sub));
  CHECK(planarity_check(Graph{}));
}

TEST_CASE("planarity_check agrees with the exhaustive minor search") {
  std::mt19937_64 rng(17);
  int nonplanar = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 5);
    const double p = 0.3 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    Graph g;
    for (int i = 0; i < n; ++i) g.vertices.push_back(i);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (static_cast<double>(rng() % 1000) / 1000.0 < p) g.edges.push_back({i, j});
      }
    }
    const bool expected = oracle::planar(n, g.edges);
    if (!expected) ++nonplanar;
    CHECK(planarity_check(g) == expected);
  }
  CHECK(nonplanar > 20);
}

TEST_CASE("the Delaunay graph of lines with respect to discs can be K5") {
  // A tiny disc at each of the 10 vertices of 5 lines meets exactly the two
  // lines through that vertex, so every pair of lines is a 2-hyperedge.
  Scene s = gen_random_lines(5, 21);
  ShapeId id = 0;
  for (std::size_t i = 0; i < s.lines.size(); ++i) {
    for (std::size_t j = i + 1; j < s.lines.size(); ++j) {
      s.shapes.emplace_back(make_disc(id++, line_line_intersection(s.lines[i], s.lines[j]), 1e-3));
    }
  }
  REQUIRE(validate_general_position(s).valid());
  const Graph g = delaunay_graph(build_hypergraph(s));
  CHECK(g.edges.size() == 10);
  CHECK_FALSE(planarity_check(g));
  CHECK_FALSE(oracle::planar(5, g.edges));
}

TEST_CASE("vc_dimension examples") {
  CHECK(vc_dimension(make_h({1, 2}, {{1}, {2}, {1, 2}})).vc_dimension == 1);
  CHECK(vc_dimension(make_h({1, 2, 3}, {{1, 2, 3}})).vc_dimension == 0);
  CHECK(vc_dimension(Hypergraph{}).vc_dimension == 0);
  // the empty trace must come from an edge missing the subset
  CHECK_FALSE(is_shattered(make_h({0, 1}, {{0}, {1}, {0, 1}}), std::vector<LineId>{0, 1}));
  const Hypergraph all = make_h({0, 1, 2}, {{0}, {1}, {0, 1}, {2}});
  CHECK(is_shattered(all, std::vector<LineId>{0, 1}));
  CHECK(vc_dimension(all).vc_dimension == 2);
}

TEST_CASE("vc_dimension matches the shattering oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<LineId> vs;
    for (int i = 0; i < n; ++i) vs.push_back(i);
    std::vector<Hyperedge> edges;
    const int m = static_cast<int>(rng() % 40);
    for (int k = 0; k < m; ++k) {
      Hyperedge e;
      for (int i = 0; i < n; ++i) {
        if (rng() % 3 == 0) e.push_back(i);
      }
      if (!e.empty()) edges.push_back(e);
    }
    const Hypergraph h = make_h(vs, edges);
    const VcReport r = vc_dimension(h, {.cap = 8});
    CHECK(r.vc_dimension == oracle::vc_dimension(vs, h.edges()));
    if (!h.edges().empty()) CHECK(is_shattered(h, r.shattered_witness));
    CHECK(static_cast<int>(r.shattered_witness.size()) == r.vc_dimension);
  }
}

TEST_CASE("vc_dimension on scenes: Delaunay constant and inequality") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Scene s = gen_random_disc_scene(8, 20, seed, 0.05, 0.5);
    const Hypergraph h = build_hypergraph(s);
    const VcReport r = vc_dimension(h);
    CHECK(r.delaunay_exact);
    CHECK(r.inequality_holds());
    // brute-force Delaunay constant
    long long num = 0, den = 1;
    const auto& vs = h.vertex_ids();
    for (unsigned mask = 1; mask < (1u << vs.size()); ++mask) {
      std::vector<LineId> sub;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (mask >> i & 1u) sub.push_back(vs[i]);
      }
      std::set<Hyperedge> pairs;
      for (const auto& e : h.edges()) {
        Hyperedge trace;
        std::set_intersection(e.begin(), e.end(), sub.begin(), sub.end(), std::back_inserter(trace));
        if (trace.size() == 2) pairs.insert(trace);
      }
      const long long en = static_cast<long long>(pairs.size());
      const long long vn = static_cast<long long>(sub.size());
      if (en * den > num * vn) {
        num = en;
        den = vn;
      }
    }
    CHECK(r.delaunay_numerator * den == num * r.delaunay_denominator);
  }
}

TEST_CASE("vc_dimension reports the cap") {
  // all subsets of 3 vertices as edges: VC = 3
  std::vector<Hyperedge> edges;
  for (int mask = 1; mask < 8; ++mask) {
    Hyperedge e;
    for (int i = 0; i < 3; ++i) {
      if (mask >> i & 1) e.push_back(i);
    }
    edges.push_back(e);
  }
  edges.push_back({3});
  const Hypergraph h = make_h({0, 1, 2, 3}, edges);
  CHECK(vc_dimension(h).vc_dimension == 3);
  const VcReport capped = vc_dimension(h, {.cap = 2});
  CHECK(capped.cap_exceeded);
  CHECK(capped.vc_dimension == 2);
}

TEST_CASE("three_hyperedge_cell_graph") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Scene s = incircle_family(gen_random_lines(4, seed).lines);
    const Hypergraph h = build_hypergraph(s);
    for (LineId l = 0; l < 4; ++l) {
      const CellPairGraph g = three_hyperedge_cell_graph(s, l);
      CHECK(static_cast<long long>(g.edges.size()) == degree_count(h, l, 3));
      for (const auto& e : g.edges) {
        CHECK(e.hyperedge.size() == 3);
        CHECK(std::binary_search(e.hyperedge.begin(), e.hyperedge.end(), l));
      }
    }
  }
  Scene empty = gen_random_lines(4, 1);
  empty.shapes.emplace_back(make_disc(0, {9, 9}, 0.1));
  CHECK(three_hyperedge_cell_graph(empty, 0).edges.empty());
}

TEST_CASE("cell-pair graphs on random scenes") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Scene s = gen_random_disc_scene(8, 40, seed, 0.05, 0.4);
    const Hypergraph h = build_hypergraph(s);
    for (LineId l = 0; l < 8; ++l) {
      const CellPairGraph g = three_hyperedge_cell_graph(s, l);
      CHECK(static_cast<long long>(g.edges.size()) == degree_count(h, l, 3));
      for (const auto& [f, sub] : g.per_cell) {
        CHECK(sub.edges.size() < 3 * sub.vertices.size());
      }
    }
  }
}
