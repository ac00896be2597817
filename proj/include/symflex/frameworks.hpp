#pragma once

#include "symflex/colourings.hpp"
#include "symflex/document.hpp"
#include "symflex/parametric.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace symflex {

inline constexpr double default_geometric_tolerance = 1e-9;

/// Graph with a placement of its vertices; adjacent vertices never share a
/// point.
class Framework {
public:
    /// Throws InvalidArgument on a size mismatch or an edge of zero length.
    Framework(SymmetricGraph graph, std::vector<Vec2> p);

    const SymmetricGraph& graph() const { return graph_; }
    const std::vector<Vec2>& p() const { return p_; }
    Vec2 operator[](VertexIndex v) const { return p_[static_cast<std::size_t>(v)]; }

    double edge_length(EdgeIndex e) const;
    std::vector<double> edge_lengths() const;

    /// Max over v of |p(sigma v) - tau p(v)|.
    double symmetry_residual() const;
    bool is_symmetric(double tol = default_geometric_tolerance) const { return symmetry_residual() <= tol; }

private:
    SymmetricGraph graph_;
    std::vector<Vec2> p_;
};

/// Throws Schema when the document carries no realisation.
Framework build_framework(const GraphDocument& doc);

/// Edge classes of the closure of the triangle and 4-cycle relations.
struct ApcPartition {
    std::vector<int> class_of;
    /// Ordered by smallest edge, members ascending.
    std::vector<std::vector<EdgeIndex>> classes;
    /// Class of the sigma-image of each class.
    std::vector<int> image;

    std::size_t size() const { return classes.size(); }
    bool is_invariant(int c) const { return image[static_cast<std::size_t>(c)] == c; }
};

ApcPartition angle_preserving_classes(const SymmetricGraph& g);

/// 4-cycles as (v0, v1, v2, v3) with v0 the smallest vertex and v1 < v3;
/// each cycle subgraph is listed once.
std::vector<std::array<VertexIndex, 4>> four_cycles(const Graph& g);

enum class WalkFailure { None, NotInjective, Parallelogram, ClassSum };

struct WalkIndependence {
    bool ok = false;
    WalkFailure failure = WalkFailure::None;
    /// Coincident pair, offending 4-cycle, or basis cycle.
    std::vector<VertexIndex> witness;
    int witness_class = -1;
    explicit operator bool() const { return ok; }
};

std::string_view to_string(WalkFailure f);

WalkIndependence is_walk_independent(const Framework& fw, double tol = default_geometric_tolerance);

/// First class whose image is a different class.
std::optional<int> noninvariant_apc(const ApcPartition& apc);

/// Class r red, its image blue, everything else gold. Throws ClassInvariant
/// when r is its own image.
ThreeColouring cartesian_from_apc(const SymmetricGraph& g, const ApcPartition& apc, int r);

bool apc_pattern_check(const ThreeColouring& delta, const ApcPartition& apc);

enum class TpVerdict { Flexible, Rigid, NotApplicable };

std::string_view to_string(TpVerdict v);

struct TpDecision {
    TpVerdict verdict = TpVerdict::NotApplicable;
    std::string reason;
    std::optional<ThreeColouring> colouring;
    std::optional<ParametricFlex> flex;
    std::optional<FlexReport> report;
};

TpDecision decide_tp_flexibility(const Framework& fw, double tol = default_geometric_tolerance);

} // namespace symflex
