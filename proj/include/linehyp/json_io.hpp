#pragma once

#include <string>
#include <string_view>

#include "linehyp/arrangement.hpp"
#include "linehyp/constructions.hpp"
#include "linehyp/experiment.hpp"
#include "linehyp/hypergraph.hpp"
#include "linehyp/svg.hpp"
#include "linehyp/tangent_sweep.hpp"

namespace linehyp {

// All writers produce deterministic, two-space indented JSON. Readers reject
// unknown fields and throw ParseError.

Scene scene_from_json(std::string_view text);
std::string scene_to_json(const Scene& scene);

GeneratorSpec generator_spec_from_json(std::string_view text);
std::string generator_spec_to_json(const GeneratorSpec& spec);

SvgOptions svg_options_from_json(std::string_view text);

std::string to_json(const ArrangementStats& s);
std::string to_json(const ZoneReport& z);
std::string to_json(const Hypergraph& h);
std::string histogram_to_json(const SizeHistogram& h);
std::string to_json(const Graph& g);
std::string to_json(const VcReport& r);
std::string to_json(const CellPairGraph& g);
std::string to_json(const GeneralPositionReport& gp, const FamilyReport& family);
std::string to_json(const AronovReport& r);
std::string to_json(const AuditReport& r);
std::string to_json(const ShrinkFamilyResult& r);
std::string to_json(const GrowthReport& r);
std::string to_json(const VerifyReport& r);

}  // namespace linehyp
