#pragma once

#include "symflex/colourings.hpp"
#include "symflex/frameworks.hpp"
#include "symflex/parametric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symflex {

/// Base point redraws after the first attempt before giving up.
inline constexpr int basepoint_retries = 16;

/// Grid construction for an RS-colouring without almost red-blue cycles.
/// Base points are drawn from `seed` and redrawn until the flex verifies
/// and p_0 only identifies vertex pairs the construction forces together.
/// Errors: NotRSNoCycle, DegenerateBasepoints.
ParametricFlex grid_flex(const SymmetricGraph& g, const ThreeColouring& delta, std::uint64_t seed = 0);

/// The 5-cycle (ubar, sigma ubar, sigma x, w, x) whose only gold edge is
/// ubar - sigma ubar.
struct FiveCycle {
    VertexIndex ubar = -1;
    VertexIndex x = -1;
};

struct DoubleConditions {
    bool pseudo_rs = false;
    /// Each colouring certifies every almost red-blue cycle of the other.
    bool certificates = false;
    bool same_gold = false;
    /// Normalised so that x lies in n_side.
    std::optional<FiveCycle> five_cycle;
    /// Neighbours of w forming N; empty when the partition is not unique.
    std::vector<VertexIndex> n_side;
    bool path_colours = false;
    std::optional<EdgeIndex> path_colours_witness;
    bool all_combinations = false;
    /// Cycle through w missing one of the five pair values.
    std::optional<Cycle> combination_witness;
    /// Some path or cycle search hit its cap.
    bool truncated = false;

    bool ok() const
    {
        return pseudo_rs && certificates && same_gold && five_cycle && !n_side.empty() && path_colours
            && all_combinations && !truncated;
    }
    /// Numbers (1-5) of the failing conditions; 0 stands for the pseudo-RS
    /// and mutual certificate preconditions.
    std::vector<int> failed() const;
};

/// Throws InvalidArgument when w is not invariant.
DoubleConditions check_double_conditions(const SymmetricGraph& g, const ThreeColouring& delta1,
    const ThreeColouring& delta2, VertexIndex w, std::size_t cap = default_path_cap);

/// g with w replaced by w~1 (adjacent to N) and w~2 (adjacent to sigma N).
struct SplitGraph {
    SymmetricGraph graph;
    /// Vertex of the split graph for each vertex of g; w maps to w~1.
    std::vector<VertexIndex> image;
    VertexIndex w1 = -1;
    VertexIndex w2 = -1;
    /// Edge of g each split edge comes from.
    std::vector<EdgeIndex> origin;
};

SplitGraph split_vertex(const SymmetricGraph& g, VertexIndex w, const std::vector<VertexIndex>& n_side);

struct DoubleOptions {
    std::uint64_t seed = 0;
    bool mirrored_branch = false;
    /// Skip the condition gate and the verification; for diagnosing why a
    /// graph is refused.
    bool force = false;
    std::size_t cap = default_path_cap;
};

/// Two-colouring construction around the invariant vertex w.
/// Errors: ConditionsFailed, Truncated, EmptyParameterDomain,
/// DegenerateBasepoints.
ParametricFlex double_flex(const SymmetricGraph& g, const ThreeColouring& delta1, const ThreeColouring& delta2,
    VertexIndex w, const DoubleOptions& options = {});

/// Flex of a walk-independent framework starting at its realisation. The
/// pivot defaults to the first invariant vertex, else vertex 0.
/// Errors: NotWalkIndependent, NotCartesian.
ParametricFlex walkindep_flex(const Framework& fw, const ThreeColouring& delta,
    std::optional<VertexIndex> pivot = std::nullopt, double tol = default_geometric_tolerance);

} // namespace symflex
