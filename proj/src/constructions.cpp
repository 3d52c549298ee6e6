#include "linehyp/constructions.hpp"

#include <algorithm>
#include <cmath>

#include "linehyp/hypergraph.hpp"
#include "rng.hpp"

namespace linehyp {

using detail::Rng;

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

const char* generator_kind_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kRandomLines: return "random-lines";
    case GeneratorKind::kGridLines: return "grid-lines";
    case GeneratorKind::kRandomDiscs: return "random-discs";
    case GeneratorKind::kDisjointDiscGrid: return "disjoint-disc-grid";
    case GeneratorKind::kIncircleFamily: return "incircle-family";
  }
  return "?";
}

GeneratorKind parse_generator_kind(const std::string& name) {
  for (auto k : {GeneratorKind::kRandomLines, GeneratorKind::kGridLines, GeneratorKind::kRandomDiscs,
                 GeneratorKind::kDisjointDiscGrid, GeneratorKind::kIncircleFamily}) {
    if (name == generator_kind_name(k)) return k;
  }
  // camelCase spellings are accepted as well
  if (name == "randomLines") return GeneratorKind::kRandomLines;
  if (name == "gridLines") return GeneratorKind::kGridLines;
  if (name == "randomDiscs") return GeneratorKind::kRandomDiscs;
  if (name == "disjointDiscGrid") return GeneratorKind::kDisjointDiscGrid;
  if (name == "incircleFamily") return GeneratorKind::kIncircleFamily;
  throw Error(ErrorCode::kInvalidArgument, "unknown generator kind '" + name + "'");
}

Scene gen_random_lines(int n, std::uint64_t seed, const Margins& margins, int max_retries) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "need n >= 1 lines");
  Rng rng(seed);
  Scene scene;
  scene.margins = margins;
  std::vector<Point> vertices;
  const double sin_min = std::sin(margins.min_angle);
  for (int i = 0; i < n; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < max_retries && !placed; ++attempt) {
      const double theta = rng.uniform(0.0, M_PI);
      const double offset = rng.uniform(-1.0, 1.0);
      const Line cand = make_line(i, std::cos(theta), std::sin(theta), offset);
      bool ok = true;
      for (const Line& l : scene.lines) {
        const double det = l.a * cand.b - cand.a * l.b;
        if (std::abs(det) <= sin_min) {
          ok = false;
          break;
        }
      }
      for (std::size_t v = 0; ok && v < vertices.size(); ++v) {
        if (std::abs(signed_distance(vertices[v], cand)) < margins.min_separation) ok = false;
      }
      if (!ok) continue;
      for (const Line& l : scene.lines) vertices.push_back(line_line_intersection(l, cand, 0.0));
      scene.lines.push_back(cand);
      placed = true;
    }
    if (!placed) {
      throw Error(ErrorCode::kGenerationRetriesExhausted, "could not place line " + std::to_string(i));
    }
  }
  return scene;
}

namespace {

// Tilted grid: line i of each family passes near offset i, with slopes
// spread by 2*minAngle about the family direction so no two are parallel.
std::vector<Line> tilted_grid(int k, Rng& rng, const Margins& margins) {
  std::vector<Line> lines;
  const double mid = 0.5 * (k - 1);
  const double step = 2.0 * margins.min_angle;
  for (int family = 0; family < 2; ++family) {
    for (int i = 0; i < k; ++i) {
      const double tilt = (i - mid) * step + rng.uniform(-0.4, 0.4) * margins.min_angle;
      const double pos = i + rng.uniform(-0.01, 0.01);
      // family 0: near-vertical through (pos, mid); family 1: near-horizontal through (mid, pos).
      const Point through = family == 0 ? Point{pos, mid} : Point{mid, pos};
      const double angle = (family == 0 ? M_PI / 2.0 : 0.0) + tilt;
      const Point dir{std::cos(angle), std::sin(angle)};
      lines.push_back(line_through(family * k + i, through, through + dir));
    }
  }
  return lines;
}

}  // namespace

Scene gen_grid_lines(int n, std::uint64_t seed, const Margins& margins) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorCode::kParameterMismatch, "grid needs an even n >= 2");
  Rng rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Scene scene;
    scene.margins = margins;
    scene.lines = tilted_grid(n / 2, rng, margins);
    if (validate_general_position(scene).valid()) return scene;
  }
  throw Error(ErrorCode::kGenerationRetriesExhausted, "could not perturb the grid into general position");
}

std::vector<Disc> gen_random_discs(int m, std::uint64_t seed, double rmin, double rmax, const BoundingBox& placement,
                                   ShapeId first_id) {
  if (m < 0) throw Error(ErrorCode::kInvalidArgument, "need m >= 0 discs");
  if (!(rmin > 0.0) || rmax < rmin) throw Error(ErrorCode::kInvalidArgument, "need 0 < radius_min <= radius_max");
  Rng rng(seed);
  std::vector<Disc> out;
  out.reserve(m);
  for (int i = 0; i < m; ++i) {
    const double x = rng.uniform(placement.xmin, placement.xmax);
    const double y = rng.uniform(placement.ymin, placement.ymax);
    const double r = rng.uniform(rmin, rmax);
    out.push_back(make_disc(first_id + i, {x, y}, r));
  }
  return out;
}

Scene gen_random_disc_scene(int n, int m, std::uint64_t seed, double rmin, double rmax, const Margins& margins,
                            int max_retries) {
  Scene scene = gen_random_lines(n, seed, margins, max_retries);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    scene.shapes.clear();
    const std::uint64_t disc_seed = Rng::mix(seed ^ 0xd15c0000ULL) + static_cast<std::uint64_t>(attempt);
    for (Disc& d : gen_random_discs(m, disc_seed, rmin, rmax)) scene.shapes.emplace_back(std::move(d));
    if (validate_general_position(scene).valid()) return scene;
  }
  throw Error(ErrorCode::kGenerationRetriesExhausted, "could not place discs in general position");
}

Scene gen_disjoint_disc_grid(int n, int t, std::uint64_t seed, const Margins& margins) {
  if (t < 2 || t % 2 != 0 || n < t || n % t != 0) {
    throw Error(ErrorCode::kParameterMismatch, "disjoint disc grid needs an even t dividing n");
  }
  const int k = n / 2;
  const int b = t / 2;
  Rng rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Scene scene;
    scene.margins = margins;
    scene.lines = tilted_grid(k, rng, margins);
    const double radius = 0.5 * (b - 1) + 0.25;
    ShapeId id = 0;
    for (int bi = 0; bi < k / b; ++bi) {
      for (int bj = 0; bj < k / b; ++bj) {
        const Point c{bi * b + 0.5 * (b - 1), bj * b + 0.5 * (b - 1)};
        scene.shapes.emplace_back(make_disc(id++, c, radius));
      }
    }
    if (!validate_general_position(scene).valid()) continue;
    bool ok = true;
    for (const auto& s : scene.shapes) {
      if (static_cast<int>(hyperedge_of(s, scene.lines, margins).size()) != t) ok = false;
    }
    if (ok) return scene;
  }
  throw Error(ErrorCode::kGenerationRetriesExhausted, "grid tilt broke the bundle combinatorics; n too large");
}

Scene incircle_family(std::span<const Line> lines, const Margins& margins) {
  Scene scene;
  scene.margins = margins;
  scene.lines.assign(lines.begin(), lines.end());
  ShapeId id = 0;
  const auto n = lines.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        try {
          scene.shapes.emplace_back(incircle_of_triangle(lines[i], lines[j], lines[k], margins, id++));
        } catch (const Error& e) {
          throw Error(ErrorCode::kDegenerateTriangle, "triple (" + std::to_string(lines[i].id) + "," +
                                                          std::to_string(lines[j].id) + "," +
                                                          std::to_string(lines[k].id) + "): " + e.what());
        }
      }
    }
  }
  return scene;
}

AronovReport verify_aronov(std::span<const Line> lines, const Margins& margins) {
  AronovReport r;
  r.n = static_cast<int>(lines.size());
  const Scene scene = incircle_family(lines, margins);
  r.margins_ok = validate_general_position(scene).valid();
  const Hypergraph h = build_hypergraph(scene, {.validate = false});
  for (const auto& [size, count] : h.size_histogram()) r.observed[size] = count;
  for (int t = 3; t <= r.n; ++t) r.expected[t] = binomial(r.n - t + 2, 2);
  r.total_observed = static_cast<long long>(h.edges().size());
  r.total_expected = binomial(r.n, 3);
  r.distinct = h.edges().size() == scene.shapes.size();
  for (const auto& w : h.witnesses()) {
    if (w.size() != 1) r.distinct = false;
  }
  long long table_sum = 0;
  for (const auto& [t, c] : r.expected) table_sum += c;
  r.pass = r.margins_ok && r.distinct && r.observed == r.expected && r.total_observed == r.total_expected &&
           table_sum == r.total_expected;
  return r;
}

Scene generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::kRandomLines:
      return gen_random_lines(spec.n, spec.seed, spec.margins, spec.max_retries);
    case GeneratorKind::kGridLines:
      return gen_grid_lines(spec.n, spec.seed, spec.margins);
    case GeneratorKind::kRandomDiscs:
      return gen_random_disc_scene(spec.n, spec.m, spec.seed, spec.radius_min, spec.radius_max, spec.margins,
                                   spec.max_retries);
    case GeneratorKind::kDisjointDiscGrid:
      return gen_disjoint_disc_grid(spec.n, spec.t, spec.seed, spec.margins);
    case GeneratorKind::kIncircleFamily: {
      const Scene lines = gen_random_lines(spec.n, spec.seed, spec.margins, spec.max_retries);
      return incircle_family(lines.lines, spec.margins);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown generator kind");
}

}  // namespace linehyp
