#include "symflex/closure.hpp"

#include <algorithm>
#include <set>

namespace symflex {

namespace {

    std::size_t at(int i) { return static_cast<std::size_t>(i); }

    std::vector<ThreeColouring> rs_listing(const SymmetricGraph& g, EnumerateOptions options, bool quotient)
    {
        options.rs_only = true;
        options.quotient_conjugation = quotient;
        Enumeration e = enumerate_pseudo_rs(g, options);
        if (e.truncated) {
            throw Error(ErrorCode::Truncated, "RS classification hit the cycle cap; the gold core would be unsound");
        }
        return std::move(e.colourings);
    }

} // namespace

GoldCore gold_core(const SymmetricGraph& g, const EnumerateOptions& options)
{
    const std::vector<ThreeColouring> rs = rs_listing(g, options, false);
    GoldCore core;
    core.rs_count = rs.size();
    core.vacuous = rs.empty();
    core.gold.assign(g.edge_count(), true);
    for (const ThreeColouring& d : rs) {
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            core.gold[e] = core.gold[e] && d.colour[e] == Colour::Gold;
        }
    }
    return core;
}

GammaResult gamma_pairs(const SymmetricGraph& h, const SymmetricGraph& original, const EnumerateOptions& options)
{
    if (h.graph().vertices() != original.graph().vertices()) {
        throw Error(ErrorCode::InvalidArgument, "gamma_pairs needs graphs on the same vertex set");
    }
    const GoldCore core = gold_core(h, options);
    const Partition parts = components(h.graph(), [&](EdgeIndex e) { return core.gold[at(e)]; });
    GammaResult out;
    out.vacuous = core.vacuous;
    const Graph& og = original.graph();
    for (std::size_t u = 0; u < h.vertex_count(); ++u) {
        const auto ui = static_cast<VertexIndex>(u);
        if (!h.is_invariant_vertex(ui)) {
            continue;
        }
        for (std::size_t v = 0; v < h.vertex_count(); ++v) {
            const auto vi = static_cast<VertexIndex>(v);
            if (vi == ui || !og.find_edge(vi, original.sigma(vi)) || !parts.same(ui, vi) || h.graph().find_edge(ui, vi)) {
                continue;
            }
            out.pairs.emplace_back(ui, vi);
        }
    }
    const std::set<std::pair<VertexIndex, VertexIndex>> lookup(out.pairs.begin(), out.pairs.end());
    for (const auto& [u, v] : out.pairs) {
        if (!lookup.contains({ u, h.sigma(v) })) {
            throw std::logic_error("gamma pairs are not closed under sigma");
        }
    }
    return out;
}

SymmetricGraph with_edges(const SymmetricGraph& g, const std::vector<std::pair<VertexId, VertexId>>& extra)
{
    std::vector<std::pair<VertexId, VertexId>> edges = g.graph().edge_names();
    edges.insert(edges.end(), extra.begin(), extra.end());
    std::vector<std::pair<VertexId, VertexId>> sigma;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto idx = static_cast<VertexIndex>(v);
        sigma.emplace_back(g.graph().name(idx), g.graph().name(g.sigma(idx)));
    }
    return validate_symmetry(g.graph().vertices(), edges, sigma);
}

ClosureTrace gold_closure(const SymmetricGraph& g, const EnumerateOptions& options)
{
    ClosureTrace trace;
    SymmetricGraph current = g;
    const std::size_t guard = g.vertex_count() * g.vertex_count() + 1;
    for (std::size_t stage = 0;; ++stage) {
        if (stage > guard) {
            throw Error(ErrorCode::NonTermination, "gold closure exceeded |V|^2 stages");
        }
        const GammaResult gamma = gamma_pairs(current, g, options);
        ClosureStage s { current, {}, gamma.vacuous };
        for (const auto& [u, v] : gamma.pairs) {
            s.added.emplace_back(current.graph().name(u), current.graph().name(v));
        }
        trace.vacuous = trace.vacuous || gamma.vacuous;
        const bool done = s.added.empty();
        std::vector<std::pair<VertexId, VertexId>> added = s.added;
        trace.stages.push_back(std::move(s));
        if (done) {
            return trace;
        }
        current = with_edges(current, added);
    }
}

ThreeColouring restrict_colouring(const SymmetricGraph& super, const ThreeColouring& delta, const SymmetricGraph& sub)
{
    ThreeColouring out { std::vector<Colour>(sub.edge_count(), Colour::Gold) };
    for (std::size_t e = 0; e < sub.edge_count(); ++e) {
        const Edge& ed = sub.graph().edge(static_cast<EdgeIndex>(e));
        const auto se = super.graph().find_edge(super.graph().vertex_index(sub.graph().name(ed.u)),
            super.graph().vertex_index(sub.graph().name(ed.v)));
        if (!se) {
            throw Error(ErrorCode::InvalidArgument, "edge missing from supergraph", sub.graph().edge_key(static_cast<EdgeIndex>(e)));
        }
        out.colour[e] = delta[*se];
    }
    return out;
}

std::string_view to_string(Necessity n)
{
    switch (n) {
    case Necessity::NoRs: return "NoRS";
    case Necessity::ClosureNoRs: return "ClosureNoRS";
    case Necessity::HasRs: return "HasRS";
    }
    return "?";
}

NecessityVerdict necessity_verdict(const SymmetricGraph& g, const EnumerateOptions& options)
{
    NecessityVerdict v;
    v.rs_colourings = rs_listing(g, options, true);
    v.trace = gold_closure(g, options);
    if (v.rs_colourings.empty()) {
        v.verdict = Necessity::NoRs;
        v.restriction_of_closure.assign(0, false);
        return v;
    }
    const SymmetricGraph& closed = v.trace.final_graph();
    const std::vector<ThreeColouring> closure_rs = closed.edge_count() == g.edge_count()
        ? rs_listing(g, options, false)
        : rs_listing(closed, options, false);
    std::set<ThreeColouring> restrictions;
    for (const ThreeColouring& d : closure_rs) {
        const ThreeColouring r = restrict_colouring(closed, d, g);
        restrictions.insert(std::min(r, conjugate(g, r)));
    }
    for (const ThreeColouring& d : v.rs_colourings) {
        v.restriction_of_closure.push_back(restrictions.contains(d));
    }
    if (closure_rs.empty()) {
        v.verdict = Necessity::ClosureNoRs;
        return v;
    }
    v.verdict = Necessity::HasRs;
    v.sample = v.rs_colourings.front();
    return v;
}

} // namespace symflex
