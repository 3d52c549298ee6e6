#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "linehyp/arrangement.hpp"
#include "linehyp/constructions.hpp"
#include "oracles.hpp"

using namespace linehyp;

namespace {

oracle::SignVector face_signs(const Arrangement& arr, FaceId f, const std::vector<Line>& lines) {
  const auto poly = arr.polygon(f);
  Point c{0, 0};
  for (Point p : poly) c = c + p;
  c = (1.0 / static_cast<double>(poly.size())) * c;
  return oracle::sign_vector(lines, c);
}

std::set<oracle::SignVector> face_set(const Arrangement& arr, const std::vector<FaceId>& faces,
                                      const std::vector<Line>& lines) {
  std::set<oracle::SignVector> out;
  for (FaceId f : faces) out.insert(face_signs(arr, f, lines));
  return out;
}

Arrangement with_query(const std::vector<Line>& lines, const Line& q) {
  const auto extra = query_crossings(lines, q, Margins{}.min_angle);
  return Arrangement::build(lines, extra);
}

}  // namespace

TEST_CASE("structural counts for small arrangements") {
  {
    const auto arr = build_arrangement(std::vector<Line>{make_line(0, 1, 0, 0)});
    const auto s = arr.stats();
    CHECK(s.vertices == 0);
    CHECK(s.segments == 1);
    CHECK(s.faces == 2);
    CHECK(s.euler_ok);
  }
  {
    const auto arr = build_arrangement(std::vector<Line>{make_line(0, 1, 0, 0), make_line(1, 0, 1, 0)});
    const auto s = arr.stats();
    CHECK(s.vertices == 1);
    CHECK(s.segments == 4);
    CHECK(s.faces == 4);
  }
  {
    const std::vector<Line> lines{make_line(0, 1, 0, 0), make_line(1, 0, 1, 0), make_line(2, 1, 1, 1)};
    const auto arr = build_arrangement(lines);
    const auto s = arr.stats();
    CHECK(s.vertices == 3);
    CHECK(s.segments == 9);
    CHECK(s.faces == 7);
    CHECK(arr.check_invariants());
    int triangles = 0;
    for (FaceId f : arr.cells()) {
      if (arr.faces()[f].bounded) {
        ++triangles;
        CHECK(cell_complexity(arr, f) == 3);
      }
    }
    CHECK(triangles == 1);
  }
  {
    const auto arr = build_arrangement(std::vector<Line>{});
    CHECK(arr.stats().faces == 1);
  }
}

TEST_CASE("2-line arrangement: every face has complexity 2") {
  const auto arr = build_arrangement(std::vector<Line>{make_line(0, 1, -1, 0), make_line(1, 1, 1, 0)});
  for (FaceId f : arr.cells()) CHECK(cell_complexity(arr, f) == 2);
}

TEST_CASE("structural counts for generated instances") {
  for (int n : {4, 8, 16, 32, 64}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const Scene s = gen_random_lines(n, seed);
      const auto arr = build_arrangement(s.lines);
      const auto st = arr.stats();
      CHECK(st.vertices == binomial(n, 2));
      CHECK(st.segments == n * n);
      CHECK(st.faces == 1 + n + binomial(n, 2));
      CHECK(st.euler_ok);
      CHECK(arr.check_invariants());
    }
  }
}

TEST_CASE("arrangement counts match the sign-vector oracle") {
  for (int n = 1; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Scene s = gen_random_lines(n, 100 + seed);
      const auto arr = build_arrangement(s.lines);
      const auto all = oracle::cells(s.lines);
      CHECK(arr.stats().vertices == oracle::vertex_count(s.lines));
      CHECK(arr.stats().segments == oracle::segment_count(s.lines));
      CHECK(static_cast<std::size_t>(arr.stats().faces) == all.size());
      // every DCEL cell is a distinct oracle cell with the same complexity
      std::set<oracle::SignVector> seen;
      for (FaceId f : arr.cells()) {
        const auto sv = face_signs(arr, f, s.lines);
        CHECK(all.count(sv) == 1);
        CHECK(seen.insert(sv).second);
        CHECK(cell_complexity(arr, f) == oracle::cell_complexity(all, sv));
      }
    }
  }
}

TEST_CASE("face adjacency is symmetric") {
  const Scene s = gen_random_lines(12, 4);
  const auto arr = build_arrangement(s.lines);
  for (FaceId f : arr.cells()) {
    for (FaceId g : arr.neighbors(f)) {
      const auto back = arr.neighbors(g);
      CHECK(std::binary_search(back.begin(), back.end(), f));
    }
  }
}

TEST_CASE("zone examples") {
  {
    const std::vector<Line> lines{make_line(0, 1, 0, 0)};
    const auto arr = with_query(lines, make_line(1, 0, 1, 0));
    const auto z = zone(arr, make_line(1, 0, 1, 0));
    CHECK(z.layers[0].size() == 2);
    CHECK(z.total_complexity == 2);
  }
  {
    const std::vector<Line> lines{make_line(0, 1, 0, 0), make_line(1, 0, 1, 0)};
    const Line q = make_line(2, 1, 1, 1);
    const auto z = zone(with_query(lines, q), q);
    CHECK(z.layers[0].size() == 3);
    CHECK(z.total_complexity == 6);
  }
}

TEST_CASE("zone rejects degenerate queries") {
  const std::vector<Line> lines{make_line(0, 1, 0, 0), make_line(1, 0, 1, 0)};
  const Line through_vertex = make_line(2, 1, 1, 0);
  try {
    zone(with_query(lines, through_vertex), through_vertex);
    FAIL("expected QueryDegenerate");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kQueryDegenerate);
  }
  const Line far = make_line(2, 1, 1, 1000);
  try {
    zone(build_arrangement(lines), far);
    FAIL("expected QueryOutsideBox");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kQueryOutsideBox);
  }
}

TEST_CASE("leq_t_zone on the triangle arrangement covers all faces at t = 2") {
  const std::vector<Line> lines{make_line(0, 1, 0, 0), make_line(1, 0, 1, 0), make_line(2, 1, 1, 1)};
  const Line q = make_line(3, 1, -1, 0.05);  // crosses the central triangle
  const auto arr = with_query(lines, q);
  const auto z1 = zone(arr, q);
  const auto z = leq_t_zone(arr, q, 2);
  CHECK(z.layers[0] == z1.layers[0]);
  std::set<FaceId> covered;
  for (const auto& layer : z.layers) covered.insert(layer.begin(), layer.end());
  CHECK(covered.size() == 7);
}

TEST_CASE("zone and <=t-zone face sets match the oracle") {
  for (int n = 2; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Scene s = gen_random_lines(n, 300 + seed);
      const Line q = make_line(n, std::cos(0.3 + seed), std::sin(0.3 + seed), 0.123 * static_cast<double>(seed));
      const auto arr = with_query(s.lines, q);
      const auto all = oracle::cells(s.lines);
      for (int t = 1; t <= 3; ++t) {
        const auto expected = oracle::leq_t_zone(s.lines, q, t);
        const auto z = leq_t_zone(arr, q, t);
        REQUIRE(z.layers.size() == expected.size());
        long long complexity = 0;
        for (std::size_t i = 0; i < expected.size(); ++i) {
          CHECK(face_set(arr, z.layers[i], s.lines) == expected[i]);
          for (const auto& c : expected[i]) complexity += oracle::cell_complexity(all, c);
        }
        CHECK(z.total_complexity == complexity);
      }
    }
  }
}

TEST_CASE("zone face ids do not depend on the box") {
  const Scene s = gen_random_lines(10, 8);
  const Line q = make_line(10, 0.6, 0.8, 0.2);
  const auto a = with_query(s.lines, q);
  std::vector<Point> extra = query_crossings(s.lines, q, Margins{}.min_angle);
  extra.push_back({50, 50});
  const auto b = Arrangement::build(s.lines, extra);
  CHECK(zone(a, q).layers == zone(b, q).layers);
}

TEST_CASE("<=t-zone complexity is non-decreasing in t and stabilizes") {
  const Scene s = gen_random_lines(9, 12);
  const Line q = make_line(9, 0.28, 0.96, -0.1);
  const auto arr = with_query(s.lines, q);
  long long previous = 0;
  long long last = -1;
  int stable = 0;
  for (int t = 1; t <= 12; ++t) {
    const auto z = leq_t_zone(arr, q, t);
    CHECK(z.total_complexity >= previous);
    if (z.total_complexity == last) ++stable;
    previous = last = z.total_complexity;
  }
  CHECK(stable > 0);
}

TEST_CASE("zone complexity stays within the envelope") {
  for (int n : {2, 3, 5, 10, 20, 40}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Scene s = gen_random_lines(n, seed);
      const Line q = make_line(n, std::cos(1.0 + seed), std::sin(1.0 + seed), 0.05);
      const auto z = zone(with_query(s.lines, q), q);
      CHECK(static_cast<double>(z.total_complexity) <= 9.5 * n);
      if (n >= 10) CHECK(z.total_complexity <= zone_bound(n));
    }
  }
}

TEST_CASE("zone_bound") {
  CHECK(zone_bound(10) == 82);
  CHECK(zone_bound(11) == 92);
  CHECK(zone_bound(50) == 462);
}
