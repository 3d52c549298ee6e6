#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "linehyp/arrangement.hpp"
#include "linehyp/geom.hpp"

namespace linehyp {

long long binomial(long long n, long long k);

enum class GeneratorKind { kRandomLines, kGridLines, kRandomDiscs, kDisjointDiscGrid, kIncircleFamily };

const char* generator_kind_name(GeneratorKind kind);
GeneratorKind parse_generator_kind(const std::string& name);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kRandomLines;
  int n = 1;  // lines
  int m = 0;  // discs (randomDiscs)
  int t = 2;  // bundle size (disjointDiscGrid)
  std::uint64_t seed = 0;
  double radius_min = 0.05;
  double radius_max = 0.4;
  Margins margins;
  int max_retries = 1000;

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

/// Pure function of the spec.
Scene generate(const GeneratorSpec& spec);

/// n pairwise non-parallel lines crossing [-1,1]^2, no three concurrent,
/// built line by line with up to `max_retries` redraws per line.
Scene gen_random_lines(int n, std::uint64_t seed, const Margins& margins = {}, int max_retries = 1000);

/// An (n/2) x (n/2) grid, tilted line by line so that no two lines are parallel.
Scene gen_grid_lines(int n, std::uint64_t seed, const Margins& margins = {});

/// Discs with centers uniform in `placement` and radii uniform in [rmin, rmax].
std::vector<Disc> gen_random_discs(int m, std::uint64_t seed, double rmin, double rmax,
                                   const BoundingBox& placement = {}, ShapeId first_id = 0);

/// Random lines plus random discs, redrawing the discs until the scene is in general position.
Scene gen_random_disc_scene(int n, int m, std::uint64_t seed, double rmin, double rmax,
                            const Margins& margins = {}, int max_retries = 1000);

/// Grid of n lines and (n/t)^2 pairwise disjoint discs, each meeting exactly
/// a (t/2) x (t/2) bundle of the grid.
Scene gen_disjoint_disc_grid(int n, int t, std::uint64_t seed, const Margins& margins = {});

/// One incircle per triple of lines, ids in lexicographic triple order.
Scene incircle_family(std::span<const Line> lines, const Margins& margins = {});

struct AronovReport {
  int n = 0;
  std::map<int, long long> observed;
  std::map<int, long long> expected;  // t -> C(n-t+2, 2) for t in 3..n
  long long total_observed = 0;
  long long total_expected = 0;       // C(n, 3)
  bool distinct = false;              // every disc yields its own hyperedge
  bool margins_ok = false;            // the family passed general-position validation
  bool pass = false;
};

AronovReport verify_aronov(std::span<const Line> lines, const Margins& margins = {});

}  // namespace linehyp
