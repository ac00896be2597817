#pragma once

#include "symflex/colourings.hpp"

#include <optional>
#include <vector>

namespace symflex {

struct GoldCore {
    /// gold[e] is true when edge e is gold in every RS-colouring.
    std::vector<bool> gold;
    /// No RS-colouring exists, so every edge is vacuously gold.
    bool vacuous = false;
    std::size_t rs_count = 0;
};

/// Throws Truncated if any RS classification hits the cycle cap, since a
/// core computed from a partial listing would be unsound.
GoldCore gold_core(const SymmetricGraph& g, const EnumerateOptions& options = {});

struct GammaResult {
    /// Pairs (u, v) with u invariant, sorted.
    std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
    bool vacuous = false;
};

/// Pairs {u, v} with u invariant, v sigma(v) an edge of `original`, u and
/// v joined inside the gold core of `h`, and uv not an edge of `h`. Both
/// graphs must share the vertex set.
GammaResult gamma_pairs(const SymmetricGraph& h, const SymmetricGraph& original, const EnumerateOptions& options = {});
inline GammaResult gamma_pairs(const SymmetricGraph& g, const EnumerateOptions& options = {}) { return gamma_pairs(g, g, options); }

struct ClosureStage {
    SymmetricGraph graph;
    std::vector<std::pair<VertexId, VertexId>> added;
    bool vacuous = false;
};

struct ClosureTrace {
    /// stages.back() is the fixpoint and has no added pairs.
    std::vector<ClosureStage> stages;
    bool vacuous = false;

    const SymmetricGraph& final_graph() const { return stages.back().graph; }
};

ClosureTrace gold_closure(const SymmetricGraph& g, const EnumerateOptions& options = {});

/// Copy of g with extra edges, sigma carried over and revalidated.
SymmetricGraph with_edges(const SymmetricGraph& g, const std::vector<std::pair<VertexId, VertexId>>& extra);

/// delta restricted to the edges of `sub`, which must be a spanning
/// subgraph of `super` on the same vertex ids.
ThreeColouring restrict_colouring(const SymmetricGraph& super, const ThreeColouring& delta, const SymmetricGraph& sub);

enum class Necessity { NoRs, ClosureNoRs, HasRs };

std::string_view to_string(Necessity n);

struct NecessityVerdict {
    Necessity verdict = Necessity::NoRs;
    std::optional<ThreeColouring> sample;
    /// RS-colourings of g up to conjugation, in canonical order.
    std::vector<ThreeColouring> rs_colourings;
    /// Whether each entry of rs_colourings (or its conjugate) is the
    /// restriction of an RS-colouring of the closure.
    std::vector<bool> restriction_of_closure;
    ClosureTrace trace;
};

NecessityVerdict necessity_verdict(const SymmetricGraph& g, const EnumerateOptions& options = {});

} // namespace symflex
