#pragma once

#include "symflex/colourings.hpp"
#include "symflex/geometry.hpp"
#include "symflex/graph.hpp"

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace symflex {

/// On-disk graph description. Coordinates are kept as the decimal strings
/// they were written with so that documents round-trip byte for byte.
struct GraphDocument {
    std::string provenance;
    std::vector<VertexId> vertices;
    std::vector<std::pair<VertexId, VertexId>> edges;
    /// Missing entries are fixed points.
    std::map<VertexId, VertexId> sigma;
    std::map<VertexId, std::array<std::string, 2>> realisation;
    std::map<std::string, std::map<std::string, Colour>> colourings;

    bool operator==(const GraphDocument&) const = default;
};

/// Errors carry ErrorCode::Schema and a JSON pointer as witness.
GraphDocument parse_document(std::string_view text);

/// Canonical text: sorted keys, sorted vertices, edges as sorted (u < v)
/// pairs, two-space indent, trailing newline.
std::string emit_document(const GraphDocument& doc);

SymmetricGraph build_graph(const GraphDocument& doc);
bool has_realisation(const GraphDocument& doc);
std::vector<Vec2> build_realisation(const GraphDocument& doc, const Graph& g);
ThreeColouring build_colouring(const GraphDocument& doc, const Graph& g, const std::string& name);

GraphDocument make_document(const SymmetricGraph& g, std::string provenance);
void set_realisation(GraphDocument& doc, const Graph& g, const std::vector<Vec2>& p);
void set_colouring(GraphDocument& doc, const Graph& g, const std::string& name, const ThreeColouring& delta);

/// 12 significant digits, negative zero printed as 0.
std::string format_coordinate(double x);

/// JSON pointer with `~` and `/` escaped.
std::string json_pointer(std::initializer_list<std::string_view> tokens);

} // namespace symflex
