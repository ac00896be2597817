#include "symflex/flexes.hpp"

#include "symflex/detail/union_find.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace symflex {

namespace {

    std::size_t at(int i) { return static_cast<std::size_t>(i); }

    // Dyadic scale in [1/2, 3/2] so that base points stay exactly representable.
    double draw_unit(std::mt19937_64& rng) { return static_cast<double>(std::uniform_int_distribution<int>(32, 96)(rng)) / 64.0; }

    // Slot numbers 1..n; identity on the first attempt, shuffled afterwards.
    std::vector<int> slots(std::size_t n, int attempt, std::mt19937_64& rng)
    {
        std::vector<int> out(n);
        std::iota(out.begin(), out.end(), 1);
        if (attempt > 0) {
            std::shuffle(out.begin(), out.end(), rng);
        }
        return out;
    }

    Vec2 parabola(int i, double unit) { return Vec2 { static_cast<double>(i), static_cast<double>(i) * i } * unit; }

    // Points r_i on a parabola, one per component; `pinned` components keep
    // their given point.
    std::vector<Vec2> component_points(const Partition& parts, double unit, int attempt, std::mt19937_64& rng,
        const std::vector<std::pair<int, Vec2>>& pinned = {})
    {
        std::vector<Vec2> out(parts.size());
        std::vector<bool> fixed(parts.size(), false);
        for (const auto& [c, p] : pinned) {
            if (!fixed[at(c)]) {
                out[at(c)] = p;
                fixed[at(c)] = true;
            }
        }
        const std::vector<int> slot = slots(parts.size(), attempt, rng);
        for (std::size_t c = 0; c < parts.size(); ++c) {
            if (!fixed[c]) {
                out[c] = parabola(slot[c], unit);
            }
        }
        return out;
    }

    // Offsets z for the components of the gold-free subgraph: invariant
    // components on the y-axis, paired components at d and tau d.
    std::vector<Vec2> gold_offsets(const SymmetricGraph& g, const Partition& parts, double unit, int attempt,
        std::mt19937_64& rng, std::optional<std::pair<int, Vec2>> pinned = std::nullopt)
    {
        const std::size_t k = parts.size();
        std::vector<int> image(k);
        for (std::size_t c = 0; c < k; ++c) {
            image[c] = parts.component_of[at(g.sigma(parts.members[c].front()))];
        }
        std::vector<Vec2> out(k);
        std::vector<bool> done(k, false);
        if (pinned) {
            const auto [c, d] = *pinned;
            out[at(c)] = d;
            out[at(image[at(c)])] = mirror(d);
            done[at(c)] = done[at(image[at(c)])] = true;
        }
        std::size_t invariant = 0;
        std::size_t paired = 0;
        for (std::size_t c = 0; c < k; ++c) {
            if (!done[c]) {
                (image[c] == static_cast<int>(c) ? invariant : paired) += 1;
            }
        }
        const std::vector<int> bar = slots(invariant, attempt, rng);
        const std::vector<int> off = slots(paired / 2, attempt, rng);
        std::size_t next_bar = 0;
        std::size_t next_off = 0;
        for (std::size_t c = 0; c < k; ++c) {
            if (done[c]) {
                continue;
            }
            if (image[c] == static_cast<int>(c)) {
                out[c] = { 0.0, unit * bar[next_bar++] };
            } else {
                out[c] = parabola(off[next_off++] + 1, unit);
                out[at(image[c])] = mirror(out[c]);
                done[at(image[c])] = true;
            }
            done[c] = true;
        }
        return out;
    }

    std::string describe(const FlexReport& r)
    {
        std::ostringstream os;
        os << "length variation " << r.length_variation << ", symmetry residual " << r.symmetry_residual
           << ", min edge gap " << r.min_edge_gap << ", non-triviality " << r.nontriviality;
        return os.str();
    }

    int pair_colour(Colour c1, Colour c2) { return 3 * static_cast<int>(c1) + static_cast<int>(c2); }

    constexpr int blue_blue = 3 * 1 + 1;
    constexpr int blue_red = 3 * 1 + 0;
    constexpr int gold_gold = 3 * 2 + 2;

    ThreeColouring swapped(const ThreeColouring& d)
    {
        ThreeColouring out = d;
        for (Colour& c : out.colour) {
            c = swap_red_blue(c);
        }
        return out;
    }

    bool edge_is_coloured(const ThreeColouring& d1, const ThreeColouring& d2, std::optional<EdgeIndex> e)
    {
        return e && d1[*e] != Colour::Gold && d2[*e] != Colour::Gold;
    }

    std::optional<FiveCycle> find_five_cycle(const SymmetricGraph& g, const ThreeColouring& d1,
        const ThreeColouring& d2, VertexIndex w)
    {
        const Graph& graph = g.graph();
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = graph.edge(static_cast<EdgeIndex>(e));
            if (!g.is_invariant_edge(static_cast<EdgeIndex>(e)) || g.sigma(ed.u) != ed.v || ed.u == w || ed.v == w) {
                continue;
            }
            for (const VertexIndex ubar : { ed.u, ed.v }) {
                for (const Incidence& inc : graph.neighbours(ubar)) {
                    const VertexIndex x = inc.neighbour;
                    if (x == g.sigma(ubar) || x == w || g.is_invariant_vertex(x)) {
                        continue;
                    }
                    if (edge_is_coloured(d1, d2, inc.edge) && edge_is_coloured(d1, d2, graph.find_edge(x, w))) {
                        return FiveCycle { ubar, x };
                    }
                }
            }
        }
        return std::nullopt;
    }

    // Neighbours of w grouped by the components of g - w without gold
    // edges; N is defined when there are exactly two groups swapped by sigma.
    std::vector<VertexIndex> neighbour_partition(const SymmetricGraph& g, const std::vector<bool>& gold, VertexIndex w)
    {
        const Graph& graph = g.graph();
        const Partition parts = components(graph, [&](EdgeIndex e) {
            const Edge& ed = graph.edge(e);
            return !gold[at(e)] && ed.u != w && ed.v != w;
        });
        std::vector<std::vector<VertexIndex>> groups;
        std::vector<int> group_component;
        for (const Incidence& inc : graph.neighbours(w)) {
            const int c = parts.component_of[at(inc.neighbour)];
            const auto it = std::ranges::find(group_component, c);
            if (it == group_component.end()) {
                group_component.push_back(c);
                groups.push_back({ inc.neighbour });
            } else {
                groups[at(static_cast<int>(it - group_component.begin()))].push_back(inc.neighbour);
            }
        }
        if (groups.size() != 2) {
            return {};
        }
        std::vector<VertexIndex> image;
        for (const VertexIndex v : groups[0]) {
            image.push_back(g.sigma(v));
        }
        std::ranges::sort(image);
        return image == groups[1] ? groups[0] : std::vector<VertexIndex> {};
    }

    std::vector<int> pair_colours(const ThreeColouring& d1, const ThreeColouring& d2)
    {
        std::vector<int> out(d1.colour.size());
        for (std::size_t e = 0; e < out.size(); ++e) {
            out[e] = pair_colour(d1.colour[e], d2.colour[e]);
        }
        return out;
    }

    // In the split graph, the endpoints of every edge are separated once
    // the edges of its colour pair are removed.
    std::optional<EdgeIndex> path_colour_violation(const SplitGraph& split, const std::vector<int>& colour)
    {
        const Graph& sg = split.graph.graph();
        const auto colour_of = [&](std::size_t e) { return colour[at(split.origin[e])]; };
        for (const int c : std::set<int>(colour.begin(), colour.end())) {
            detail::UnionFind uf(sg.vertex_count());
            for (std::size_t e = 0; e < sg.edge_count(); ++e) {
                if (colour_of(e) != c) {
                    const Edge& ed = sg.edge(static_cast<EdgeIndex>(e));
                    uf.unite(ed.u, ed.v);
                }
            }
            for (std::size_t e = 0; e < sg.edge_count(); ++e) {
                const Edge& ed = sg.edge(static_cast<EdgeIndex>(e));
                if (colour_of(e) == c && uf.same(ed.u, ed.v)) {
                    return split.origin[e];
                }
            }
        }
        return std::nullopt;
    }

} // namespace

ParametricFlex grid_flex(const SymmetricGraph& g, const ThreeColouring& delta, std::uint64_t seed)
{
    const RsVerdict verdict = classify_rs(g, delta);
    if (verdict.status != RsStatus::RsNoCycle) {
        throw Error(ErrorCode::NotRsNoCycle,
            "grid construction needs an RS-colouring without almost red-blue cycles, got "
                + std::string(to_string(verdict.status)),
            std::string(to_string(verdict.status)));
    }
    const Graph& graph = g.graph();
    const Partition red = components(graph, [&](EdgeIndex e) { return delta[e] != Colour::Blue; });
    const Partition gold = components(graph, [&](EdgeIndex e) { return delta[e] != Colour::Gold; });
    const std::size_t n = g.vertex_count();
    const auto forced_equal = [&](VertexIndex u, VertexIndex v) {
        return red.same(u, v) && red.same(g.sigma(u), g.sigma(v)) && gold.same(u, v);
    };

    std::mt19937_64 rng(seed);
    FlexReport last;
    for (int attempt = 0; attempt <= basepoint_retries; ++attempt) {
        const std::vector<Vec2> r = component_points(red, draw_unit(rng), attempt, rng);
        const std::vector<Vec2> d = gold_offsets(g, gold, draw_unit(rng) / 4.0, attempt, rng);
        ParametricFlex flex;
        flex.kind = "grid";
        flex.a.resize(n);
        flex.a_mirror.resize(n);
        flex.z.resize(n);
        for (std::size_t v = 0; v < n; ++v) {
            const VertexIndex sv = g.sigma(static_cast<VertexIndex>(v));
            flex.a[v] = r[at(red.component_of[v])];
            flex.a_mirror[v] = r[at(red.component_of[at(sv)])];
            flex.z[v] = d[at(gold.component_of[v])];
        }
        last = verify_flex(g, flex);
        if (!last.passed()) {
            continue;
        }
        const std::vector<Vec2> p0 = flex.realisation(flex.t_min);
        bool accidental = false;
        for (std::size_t u = 0; u < n && !accidental; ++u) {
            for (std::size_t v = u + 1; v < n && !accidental; ++v) {
                accidental = norm(p0[u] - p0[v]) <= 1e-9
                    && !forced_equal(static_cast<VertexIndex>(u), static_cast<VertexIndex>(v));
            }
        }
        if (!accidental) {
            return flex;
        }
    }
    throw Error(ErrorCode::DegenerateBasepoints,
        "no generic base points after " + std::to_string(basepoint_retries) + " retries: " + describe(last));
}

std::vector<int> DoubleConditions::failed() const
{
    std::vector<int> out;
    if (!pseudo_rs || !certificates) {
        out.push_back(0);
    }
    const bool flags[] = { same_gold, five_cycle.has_value(), !n_side.empty(), path_colours, all_combinations };
    for (int i = 0; i < 5; ++i) {
        if (!flags[i]) {
            out.push_back(i + 1);
        }
    }
    return out;
}

SplitGraph split_vertex(const SymmetricGraph& g, VertexIndex w, const std::vector<VertexIndex>& n_side)
{
    const Graph& graph = g.graph();
    const VertexId w1 = graph.name(w) + "~1";
    const VertexId w2 = graph.name(w) + "~2";
    if (graph.find_vertex(w1) || graph.find_vertex(w2)) {
        throw Error(ErrorCode::InvalidArgument, "split vertex names collide with " + w1 + " or " + w2);
    }
    std::vector<VertexId> names;
    std::vector<std::pair<VertexId, VertexId>> sigma { { w1, w2 }, { w2, w1 } };
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto vi = static_cast<VertexIndex>(v);
        if (vi != w) {
            names.push_back(graph.name(vi));
            sigma.emplace_back(graph.name(vi), graph.name(g.sigma(vi)));
        }
    }
    names.push_back(w1);
    names.push_back(w2);
    const auto name_of = [&](VertexIndex v, VertexIndex neighbour) {
        if (v != w) {
            return graph.name(v);
        }
        return std::ranges::find(n_side, neighbour) != n_side.end() ? w1 : w2;
    };
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const Edge& ed : graph.edges()) {
        edges.emplace_back(name_of(ed.u, ed.v), name_of(ed.v, ed.u));
    }

    SplitGraph out { validate_symmetry(names, edges, sigma), {}, -1, -1, {} };
    const Graph& sg = out.graph.graph();
    out.w1 = sg.vertex_index(w1);
    out.w2 = sg.vertex_index(w2);
    out.image.resize(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto vi = static_cast<VertexIndex>(v);
        out.image[v] = vi == w ? out.w1 : sg.vertex_index(graph.name(vi));
    }
    out.origin.resize(sg.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = graph.edge(static_cast<EdgeIndex>(e));
        out.origin[at(sg.edge_index(name_of(ed.u, ed.v), name_of(ed.v, ed.u)))] = static_cast<EdgeIndex>(e);
    }
    return out;
}

DoubleConditions check_double_conditions(const SymmetricGraph& g, const ThreeColouring& delta1,
    const ThreeColouring& delta2, VertexIndex w, std::size_t cap)
{
    const Graph& graph = g.graph();
    if (w < 0 || at(w) >= g.vertex_count() || !g.is_invariant_vertex(w)) {
        throw Error(ErrorCode::InvalidArgument, "the split vertex must be invariant");
    }
    DoubleConditions out;
    out.pseudo_rs = is_pseudo_rs(g, delta1).ok && is_pseudo_rs(g, delta2).ok;
    if (out.pseudo_rs) {
        ClassifyOptions options;
        options.cycle_cap = cap;
        const std::vector<ThreeColouring> one { delta2 };
        const std::vector<ThreeColouring> two { delta1 };
        const RsVerdict v1 = classify_rs(g, delta1, &one, options);
        const RsVerdict v2 = classify_rs(g, delta2, &two, options);
        out.certificates = v1.is_rs() && v2.is_rs();
        out.truncated = v1.status == RsStatus::UnknownTruncated || v2.status == RsStatus::UnknownTruncated;
    }

    std::vector<bool> gold(g.edge_count());
    out.same_gold = true;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const bool g1 = delta1.colour[e] == Colour::Gold;
        const bool g2 = delta2.colour[e] == Colour::Gold;
        gold[e] = g1 || g2;
        out.same_gold = out.same_gold && g1 == g2;
    }

    out.n_side = neighbour_partition(g, gold, w);
    out.five_cycle = find_five_cycle(g, delta1, delta2, w);
    if (out.five_cycle && !out.n_side.empty() && std::ranges::find(out.n_side, out.five_cycle->x) == out.n_side.end()) {
        out.five_cycle = FiveCycle { g.sigma(out.five_cycle->ubar), g.sigma(out.five_cycle->x) };
    }
    if (out.n_side.empty()) {
        return out;
    }

    const std::vector<int> colour = pair_colours(delta1, delta2);
    const SplitGraph split = split_vertex(g, w, out.n_side);
    out.path_colours_witness = path_colour_violation(split, colour);
    out.path_colours = !out.path_colours_witness;

    out.all_combinations = true;
    const auto touches_w = [&](EdgeIndex e) {
        const Edge& ed = graph.edge(e);
        return ed.u == w || ed.v == w;
    };
    for (const Incidence& n1 : graph.neighbours(w)) {
        if (std::ranges::find(out.n_side, n1.neighbour) == out.n_side.end()) {
            continue;
        }
        for (const Incidence& n2 : graph.neighbours(w)) {
            if (std::ranges::find(out.n_side, n2.neighbour) != out.n_side.end()) {
                continue;
            }
            const PathList paths = simple_paths(graph, n1.neighbour, n2.neighbour, touches_w, cap);
            out.truncated = out.truncated || paths.truncated;
            for (const Path& path : paths.paths) {
                std::set<int> seen { colour[at(n1.edge)], colour[at(n2.edge)] };
                for (const EdgeIndex e : path.edges) {
                    seen.insert(colour[at(e)]);
                }
                if (seen.size() < 5 && out.all_combinations) {
                    out.all_combinations = false;
                    Cycle c { { w }, { n1.edge } };
                    c.vertices.insert(c.vertices.end(), path.vertices.begin(), path.vertices.end());
                    c.edges.insert(c.edges.end(), path.edges.begin(), path.edges.end());
                    c.edges.push_back(n2.edge);
                    out.combination_witness = std::move(c);
                }
            }
        }
    }
    return out;
}

ParametricFlex double_flex(const SymmetricGraph& g, const ThreeColouring& delta1, const ThreeColouring& delta2,
    VertexIndex w, const DoubleOptions& options)
{
    const DoubleConditions cond = check_double_conditions(g, delta1, delta2, w, options.cap);
    const auto failure = [&](const std::string& why) {
        std::string list;
        for (const int c : cond.failed()) {
            list += (list.empty() ? "" : ",") + std::to_string(c);
        }
        return Error(ErrorCode::ConditionsFailed, why, list);
    };
    if (!options.force) {
        if (cond.truncated) {
            throw Error(ErrorCode::Truncated, "condition check hit the path cap");
        }
        if (!cond.ok()) {
            throw failure("conditions for the two-colouring construction do not hold");
        }
    }
    if (!cond.five_cycle || cond.n_side.empty()) {
        throw failure("no invariant 5-cycle or neighbour partition to build on");
    }
    const Graph& graph = g.graph();
    const VertexIndex ubar = cond.five_cycle->ubar;
    const VertexIndex x = cond.five_cycle->x;
    const EdgeIndex ux = *graph.find_edge(ubar, x);
    const EdgeIndex xw = *graph.find_edge(x, w);

    std::optional<std::vector<int>> colour;
    for (int choice = 0; choice < 8 && !colour; ++choice) {
        ThreeColouring c1 = choice & 1 ? swapped(delta1) : delta1;
        ThreeColouring c2 = choice & 2 ? swapped(delta2) : delta2;
        if (choice & 4) {
            std::swap(c1, c2);
        }
        if (pair_colour(c1[ux], c2[ux]) == blue_blue && pair_colour(c1[xw], c2[xw]) == blue_red) {
            colour = pair_colours(c1, c2);
        }
    }
    if (!colour) {
        throw failure("the 5-cycle does not carry the four mixed colour pairs");
    }

    const SplitGraph split = split_vertex(g, w, cond.n_side);
    const SymmetricGraph& sg = split.graph;
    std::vector<int> split_colour(sg.edge_count());
    for (std::size_t e = 0; e < split_colour.size(); ++e) {
        split_colour[e] = (*colour)[at(split.origin[e])];
    }
    const Partition a_parts = components(sg.graph(), [&](EdgeIndex e) { return split_colour[at(e)] != blue_blue; });
    const Partition b_parts = components(sg.graph(), [&](EdgeIndex e) { return split_colour[at(e)] != blue_red; });
    const Partition z_parts = components(sg.graph(), [&](EdgeIndex e) { return split_colour[at(e)] != gold_gold; });
    const VertexIndex su = split.image[at(ubar)];
    const VertexIndex sx = split.image[at(x)];
    if (!options.force
        && (a_parts.same(su, sx) || b_parts.same(su, split.w1) || z_parts.same(su, sg.sigma(su)))) {
        throw failure("normalising components coincide");
    }

    std::mt19937_64 rng(options.seed);
    FlexReport last;
    for (int attempt = 0; attempt <= basepoint_retries; ++attempt) {
        const double alpha = std::uniform_real_distribution<double>(-M_PI / 3.0, M_PI / 3.0)(rng);
        const double beta = std::uniform_real_distribution<double>(-M_PI, M_PI)(rng);
        const Vec2 ax { 2.0 * std::cos(alpha), 2.0 * std::sin(alpha) };
        const Vec2 bw { 2.0 * std::cos(beta), 2.0 * std::sin(beta) };
        const std::vector<Vec2> a = component_points(a_parts, draw_unit(rng), attempt, rng,
            { { a_parts.component_of[at(su)], Vec2 {} }, { a_parts.component_of[at(sx)], ax } });
        const std::vector<Vec2> b = component_points(b_parts, draw_unit(rng), attempt, rng,
            { { b_parts.component_of[at(su)], Vec2 {} }, { b_parts.component_of[at(split.w1)], bw } });
        const std::vector<Vec2> z = gold_offsets(sg, z_parts, draw_unit(rng) / 4.0, attempt, rng,
            std::pair { z_parts.component_of[at(su)], Vec2 { 1.0, 0.0 } });

        ParametricFlex flex;
        flex.kind = "double";
        const std::size_t n = g.vertex_count();
        for (auto* field : { &flex.a, &flex.a_mirror, &flex.b, &flex.b_mirror, &flex.z }) {
            field->resize(n);
        }
        for (std::size_t v = 0; v < n; ++v) {
            const VertexIndex s = split.image[v];
            const VertexIndex t = sg.sigma(s);
            flex.a[v] = a[at(a_parts.component_of[at(s)])];
            flex.a_mirror[v] = a[at(a_parts.component_of[at(t)])];
            flex.b[v] = b[at(b_parts.component_of[at(s)])];
            flex.b_mirror[v] = b[at(b_parts.component_of[at(t)])];
            flex.z[v] = z[at(z_parts.component_of[at(s)])];
        }
        constexpr double eps = 1e-6;
        flex.t_min = M_PI / 3.0 - alpha + eps;
        flex.t_max = 5.0 * M_PI / 3.0 - alpha - eps;
        if (!(flex.t_min < flex.t_max)) {
            throw Error(ErrorCode::EmptyParameterDomain, "empty t-domain for alpha " + std::to_string(alpha));
        }
        flex.reparametrisation = Reparametrisation { alpha, beta, options.mirrored_branch };
        if (options.force) {
            return flex;
        }
        last = verify_flex(g, flex);
        double drift = 0.0;
        for (const double t : uniform_grid(flex.t_min, flex.t_max, 200)) {
            drift = std::max(drift, std::abs(flex.position(w, t).x));
        }
        if (last.passed() && drift <= 1e-9) {
            return flex;
        }
    }
    throw Error(ErrorCode::DegenerateBasepoints,
        "no valid base points after " + std::to_string(basepoint_retries) + " retries: " + describe(last));
}

ParametricFlex walkindep_flex(const Framework& fw, const ThreeColouring& delta, std::optional<VertexIndex> pivot,
    double tol)
{
    const SymmetricGraph& g = fw.graph();
    const Graph& graph = g.graph();
    if (const WalkIndependence wi = is_walk_independent(fw, tol); !wi) {
        throw Error(ErrorCode::NotWalkIndependent, "framework is not walk-independent: " + std::string(to_string(wi.failure)));
    }
    if (!fw.is_symmetric(tol)) {
        throw Error(ErrorCode::InvalidArgument, "realisation is not reflection-symmetric");
    }
    if (!is_pseudo_rs(g, delta).ok || !is_cartesian(g, delta).ok) {
        throw Error(ErrorCode::NotCartesian, "colouring is not a Cartesian pseudo-RS-colouring");
    }
    VertexIndex ubar = 0;
    if (pivot) {
        ubar = *pivot;
    } else {
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (g.is_invariant_vertex(static_cast<VertexIndex>(v))) {
                ubar = static_cast<VertexIndex>(v);
                break;
            }
        }
    }
    const Vec2 lift { 0.0, fw[ubar].y };

    // Per-colour sums of edge vectors along BFS tree paths from ubar.
    const std::size_t n = g.vertex_count();
    std::vector<std::array<Vec2, 3>> acc(n);
    std::vector<bool> seen(n, false);
    std::queue<VertexIndex> queue;
    queue.push(ubar);
    seen[at(ubar)] = true;
    while (!queue.empty()) {
        const VertexIndex u = queue.front();
        queue.pop();
        for (const Incidence& inc : graph.neighbours(u)) {
            if (seen[at(inc.neighbour)]) {
                continue;
            }
            seen[at(inc.neighbour)] = true;
            acc[at(inc.neighbour)] = acc[at(u)];
            acc[at(inc.neighbour)][static_cast<std::size_t>(delta[inc.edge])] += fw[inc.neighbour] - fw[u];
            queue.push(inc.neighbour);
        }
    }
    const std::size_t blue = static_cast<std::size_t>(Colour::Blue);
    const std::size_t gold = static_cast<std::size_t>(Colour::Gold);
    const std::array<Vec2, 3>& far = acc[at(g.sigma(ubar))];

    ParametricFlex flex;
    flex.kind = "walkindep";
    flex.a.resize(n);
    flex.a_mirror.resize(n);
    flex.z.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        flex.a[v] = acc[v][blue] - far[blue] * 0.5;
        flex.z[v] = acc[v][gold] - far[gold] * 0.5 + lift;
    }
    const std::vector<Vec2> raw_z = flex.z;
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t image = at(g.sigma(static_cast<VertexIndex>(v)));
        flex.a_mirror[v] = flex.a[image];
        // Exact z(sigma v) = tau z(v).
        flex.z[v] = (raw_z[v] + mirror(raw_z[image])) * 0.5;
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (norm(flex.position(static_cast<VertexIndex>(v), 0.0) - fw[static_cast<VertexIndex>(v)]) > tol) {
            throw Error(ErrorCode::NotWalkIndependent, "constructed flex does not start at the realisation",
                graph.name(static_cast<VertexIndex>(v)));
        }
    }
    return flex;
}

} // namespace symflex
