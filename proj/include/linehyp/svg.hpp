#pragma once

#include <optional>
#include <string>

#include "linehyp/geom.hpp"

namespace linehyp {

struct SvgOptions {
  int width = 800;
  bool arrangement_edges = false;
  /// Draws the <=t-zone of this line, one polygon per face, colored by layer.
  std::optional<Line> zone_query;
  int zone_t = 1;
};

std::string render_svg(const Scene& scene, const SvgOptions& options = {});

}  // namespace linehyp
