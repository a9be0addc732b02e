#pragma once

#include <string>

#include "phicoord/module.hpp"

namespace phicoord::cli {

nlohmann::json read_json_file(const std::string& path);

/// additive | phi:<n> | gen:<laurent> | star:<spec> | <file.json>
Associate parse_phi(const std::string& spec, int zorder);

/// poly:<m> | grassmann2 | <file.json>. Structure is not validated here.
DifferentialSuperalgebra parse_algebra(const std::string& spec);

/// adjoint | dual | <file.json>, where dual is the dual of the adjoint module.
ModuleInstance parse_module(const std::string& spec, const VertexStructure& v);

/// A power series f with f(0) = 0, truncated at order.
CoordinateChange parse_change(const std::string& text, int order);

std::string format_module(const ModuleInstance& w, const VertexStructure& v);

} // namespace phicoord::cli
