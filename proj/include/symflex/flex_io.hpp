#pragma once

#include "symflex/document.hpp"
#include "symflex/parametric.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace symflex {

/// A flex together with the graph it moves and the colouring used to draw it.
struct FlexDocument {
    GraphDocument graph;
    /// Edge key to colour; may be empty.
    std::map<std::string, Colour> colouring;
    ParametricFlex flex;
};

/// Step of the tabulated s(t) in a serialised flex.
inline constexpr double reparametrisation_step = 1e-3;

/// 17 significant digits, negative zero printed as 0. Parses back to the
/// same double.
std::string format_exact(double x);

std::string emit_flex(const FlexDocument& doc);

/// Errors carry ErrorCode::Schema and a JSON pointer as witness.
FlexDocument parse_flex(std::string_view text);

/// Header `t,vertex,x,y`, one row per vertex per sample.
std::string samples_csv(const Graph& g, const std::vector<FlexSample>& samples);

/// One SVG document per sample. All frames share the viewBox of the whole
/// motion; the mirror axis is dashed and vertices sharing a point with
/// another vertex are drawn as squares.
std::vector<std::string> samples_svg(const Graph& g, const std::map<std::string, Colour>& colouring,
    const std::vector<FlexSample>& samples);

} // namespace symflex
