#include "symflex/frameworks.hpp"

#include "symflex/detail/union_find.hpp"
#include "symflex/flexes.hpp"

#include <algorithm>
#include <map>

namespace symflex {

namespace {

    std::size_t at(int i) { return static_cast<std::size_t>(i); }

    Vec2 unit(Vec2 v)
    {
        const double n = norm(v);
        return n == 0.0 ? v : v * (1.0 / n);
    }

} // namespace

Framework::Framework(SymmetricGraph graph, std::vector<Vec2> p)
    : graph_(std::move(graph))
    , p_(std::move(p))
{
    if (p_.size() != graph_.vertex_count()) {
        throw Error(ErrorCode::InvalidArgument, "realisation has " + std::to_string(p_.size()) + " points for "
                + std::to_string(graph_.vertex_count()) + " vertices");
    }
    for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
        if (edge_length(static_cast<EdgeIndex>(e)) == 0.0) {
            const std::string key = graph_.graph().edge_key(static_cast<EdgeIndex>(e));
            throw Error(ErrorCode::InvalidArgument, "edge " + key + " has coincident endpoints", key);
        }
    }
}

double Framework::edge_length(EdgeIndex e) const
{
    const Edge& ed = graph_.graph().edge(e);
    return norm(p_[at(ed.v)] - p_[at(ed.u)]);
}

std::vector<double> Framework::edge_lengths() const
{
    std::vector<double> out(graph_.edge_count());
    for (std::size_t e = 0; e < out.size(); ++e) {
        out[e] = edge_length(static_cast<EdgeIndex>(e));
    }
    return out;
}

double Framework::symmetry_residual() const
{
    double worst = 0.0;
    for (std::size_t v = 0; v < p_.size(); ++v) {
        worst = std::max(worst, norm(p_[at(graph_.sigma(static_cast<VertexIndex>(v)))] - mirror(p_[v])));
    }
    return worst;
}

Framework build_framework(const GraphDocument& doc)
{
    if (!has_realisation(doc)) {
        throw Error(ErrorCode::Schema, "document has no realisation", "/realisation");
    }
    SymmetricGraph g = build_graph(doc);
    std::vector<Vec2> p = build_realisation(doc, g.graph());
    return Framework(std::move(g), std::move(p));
}

std::vector<std::array<VertexIndex, 4>> four_cycles(const Graph& g)
{
    std::vector<std::array<VertexIndex, 4>> out;
    const auto n = static_cast<VertexIndex>(g.vertex_count());
    for (VertexIndex u = 0; u < n; ++u) {
        for (const Incidence& iv : g.neighbours(u)) {
            if (iv.neighbour < u) {
                continue;
            }
            for (const Incidence& ix : g.neighbours(u)) {
                if (ix.neighbour <= iv.neighbour) {
                    continue;
                }
                for (const Incidence& iw : g.neighbours(iv.neighbour)) {
                    const VertexIndex w = iw.neighbour;
                    if (w > u && w != ix.neighbour && g.find_edge(w, ix.neighbour)) {
                        out.push_back({ u, iv.neighbour, w, ix.neighbour });
                    }
                }
            }
        }
    }
    return out;
}

ApcPartition angle_preserving_classes(const SymmetricGraph& g)
{
    const Graph& graph = g.graph();
    detail::UnionFind uf(g.edge_count());
    for (const Edge& ed : graph.edges()) {
        for (const Incidence& iw : graph.neighbours(ed.v)) {
            if (iw.neighbour <= ed.v) {
                continue;
            }
            if (const auto uw = graph.find_edge(ed.u, iw.neighbour)) {
                const EdgeIndex uv = *graph.find_edge(ed.u, ed.v);
                uf.unite(uv, iw.edge);
                uf.unite(uv, *uw);
            }
        }
    }
    for (const auto& c : four_cycles(graph)) {
        const auto edge = [&](int i) { return *graph.find_edge(c[at(i)], c[at((i + 1) % 4)]); };
        uf.unite(edge(0), edge(2));
        uf.unite(edge(1), edge(3));
    }

    ApcPartition out;
    out.class_of.assign(g.edge_count(), -1);
    std::map<int, int> id_of_root;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const int root = uf.find(static_cast<int>(e));
        const auto [it, fresh] = id_of_root.emplace(root, static_cast<int>(out.classes.size()));
        if (fresh) {
            out.classes.emplace_back();
        }
        out.class_of[e] = it->second;
        out.classes[at(it->second)].push_back(static_cast<EdgeIndex>(e));
    }
    out.image.resize(out.classes.size());
    for (std::size_t c = 0; c < out.classes.size(); ++c) {
        out.image[c] = out.class_of[at(g.mirror_edge(out.classes[c].front()))];
    }
    return out;
}

std::string_view to_string(WalkFailure f)
{
    switch (f) {
    case WalkFailure::None:
        return "none";
    case WalkFailure::NotInjective:
        return "not injective";
    case WalkFailure::Parallelogram:
        return "4-cycle is not a non-degenerate parallelogram";
    case WalkFailure::ClassSum:
        return "class vectors do not sum to zero around a cycle";
    }
    return "?";
}

WalkIndependence is_walk_independent(const Framework& fw, double tol)
{
    const Graph& g = fw.graph().graph();
    const auto n = static_cast<VertexIndex>(g.vertex_count());
    WalkIndependence out;
    for (VertexIndex u = 0; u < n; ++u) {
        for (VertexIndex v = u + 1; v < n; ++v) {
            if (norm(fw[u] - fw[v]) <= tol) {
                out.failure = WalkFailure::NotInjective;
                out.witness = { u, v };
                return out;
            }
        }
    }
    for (const auto& c : four_cycles(g)) {
        if (g.find_edge(c[0], c[2]) || g.find_edge(c[1], c[3])) {
            continue;
        }
        const Vec2 closing = fw[c[0]] - fw[c[1]] + fw[c[2]] - fw[c[3]];
        const double spread = std::abs(cross(unit(fw[c[1]] - fw[c[0]]), unit(fw[c[3]] - fw[c[0]])));
        if (norm(closing) > tol || spread < 1e-9) {
            out.failure = WalkFailure::Parallelogram;
            out.witness.assign(c.begin(), c.end());
            return out;
        }
    }
    const ApcPartition apc = angle_preserving_classes(fw.graph());
    for (const Cycle& cycle : cycle_basis(g)) {
        std::vector<Vec2> sums(apc.size());
        const std::size_t len = cycle.vertices.size();
        for (std::size_t i = 0; i < len; ++i) {
            const Vec2 step = fw[cycle.vertices[(i + 1) % len]] - fw[cycle.vertices[i]];
            sums[at(apc.class_of[at(cycle.edges[i])])] += step;
        }
        for (std::size_t r = 0; r < sums.size(); ++r) {
            if (norm(sums[r]) > tol * static_cast<double>(len)) {
                out.failure = WalkFailure::ClassSum;
                out.witness = cycle.vertices;
                out.witness_class = static_cast<int>(r);
                return out;
            }
        }
    }
    out.ok = true;
    return out;
}

std::optional<int> noninvariant_apc(const ApcPartition& apc)
{
    for (std::size_t c = 0; c < apc.size(); ++c) {
        if (!apc.is_invariant(static_cast<int>(c))) {
            return static_cast<int>(c);
        }
    }
    return std::nullopt;
}

ThreeColouring cartesian_from_apc(const SymmetricGraph& g, const ApcPartition& apc, int r)
{
    if (r < 0 || at(r) >= apc.size()) {
        throw Error(ErrorCode::InvalidArgument, "no angle-preserving class " + std::to_string(r));
    }
    if (apc.is_invariant(r)) {
        throw Error(ErrorCode::ClassInvariant, "class " + std::to_string(r) + " is its own mirror image",
            std::to_string(r));
    }
    ThreeColouring out { std::vector<Colour>(g.edge_count(), Colour::Gold) };
    for (const EdgeIndex e : apc.classes[at(r)]) {
        out.colour[at(e)] = Colour::Red;
    }
    for (const EdgeIndex e : apc.classes[at(apc.image[at(r)])]) {
        out.colour[at(e)] = Colour::Blue;
    }
    return out;
}

bool apc_pattern_check(const ThreeColouring& delta, const ApcPartition& apc)
{
    const bool has_red = std::ranges::count(delta.colour, Colour::Red) > 0;
    const bool has_blue = std::ranges::count(delta.colour, Colour::Blue) > 0;
    if (!has_red || !has_blue) {
        return false;
    }
    std::vector<Colour> colour_of(apc.size());
    for (std::size_t c = 0; c < apc.size(); ++c) {
        const auto& members = apc.classes[c];
        colour_of[c] = delta[members.front()];
        for (const EdgeIndex e : members) {
            if (delta[e] != colour_of[c]) {
                return false;
            }
        }
    }
    for (std::size_t c = 0; c < apc.size(); ++c) {
        const Colour own = colour_of[c];
        const Colour image = colour_of[at(apc.image[c])];
        if (apc.is_invariant(static_cast<int>(c)) ? own != Colour::Gold : image != swap_red_blue(own)) {
            return false;
        }
    }
    return true;
}

std::string_view to_string(TpVerdict v)
{
    switch (v) {
    case TpVerdict::Flexible:
        return "Flexible";
    case TpVerdict::Rigid:
        return "Rigid";
    case TpVerdict::NotApplicable:
        return "NotApplicable";
    }
    return "?";
}

TpDecision decide_tp_flexibility(const Framework& fw, double tol)
{
    TpDecision out;
    if (!fw.is_symmetric(tol)) {
        out.reason = "realisation is not reflection-symmetric";
        return out;
    }
    if (const WalkIndependence w = is_walk_independent(fw, tol); !w) {
        out.reason = "not walk-independent: " + std::string(to_string(w.failure));
        return out;
    }
    const ApcPartition apc = angle_preserving_classes(fw.graph());
    const std::optional<int> r = noninvariant_apc(apc);
    if (!r) {
        out.verdict = TpVerdict::Rigid;
        out.reason = "no non-invariant angle-preserving class";
        return out;
    }
    out.verdict = TpVerdict::Flexible;
    out.reason = "class " + std::to_string(*r) + " differs from its mirror image";
    out.colouring = cartesian_from_apc(fw.graph(), apc, *r);
    out.flex = walkindep_flex(fw, *out.colouring, std::nullopt, tol);
    out.report = verify_flex(fw.graph(), *out.flex);
    return out;
}

} // namespace symflex
