#include "symflex/colourings.hpp"

#include "symflex/detail/union_find.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace symflex {

namespace {

    std::size_t at(int i) { return static_cast<std::size_t>(i); }

    using detail::UnionFind;

    UnionFind union_of(const Graph& g, const std::vector<Colour>& colour, Colour a, Colour b)
    {
        UnionFind uf(g.vertex_count());
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (colour[e] == a || colour[e] == b) {
                uf.unite(g.edges()[e].u, g.edges()[e].v);
            }
        }
        return uf;
    }

    /// Component criterion for a colouring that may contain gold, with gold
    /// read as `gold_as`.
    bool nac_with_gold_as(const Graph& g, const std::vector<Colour>& colour, Colour gold_as)
    {
        const Colour other = swap_red_blue(gold_as);
        bool has_red = false;
        bool has_blue = false;
        for (Colour c : colour) {
            const Colour eff = c == Colour::Gold ? gold_as : c;
            has_red = has_red || eff == Colour::Red;
            has_blue = has_blue || eff == Colour::Blue;
        }
        if (!has_red || !has_blue) {
            return false;
        }
        UnionFind same_as_gold = union_of(g, colour, gold_as, Colour::Gold);
        UnionFind pure_other = union_of(g, colour, other, other);
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edges()[e];
            if (colour[e] == other ? same_as_gold.same(ed.u, ed.v) : pure_other.same(ed.u, ed.v)) {
                return false;
            }
        }
        return true;
    }

    bool swap_condition(const SymmetricGraph& g, const std::vector<Colour>& colour, EdgeIndex* witness)
    {
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            const Colour mirrored = colour[at(g.mirror_edge(static_cast<EdgeIndex>(e)))];
            if (colour[e] != swap_red_blue(mirrored)) {
                if (witness != nullptr) {
                    *witness = static_cast<EdgeIndex>(e);
                }
                return false;
            }
        }
        return true;
    }

    bool pseudo_rs_fast(const SymmetricGraph& g, const std::vector<Colour>& colour)
    {
        return swap_condition(g, colour, nullptr) && nac_with_gold_as(g.graph(), colour, Colour::Blue);
    }

    std::uint64_t power_saturating(std::uint64_t base, std::size_t exp)
    {
        std::uint64_t r = 1;
        for (std::size_t i = 0; i < exp; ++i) {
            if (r > std::numeric_limits<std::uint64_t>::max() / base) {
                return std::numeric_limits<std::uint64_t>::max();
            }
            r *= base;
        }
        return r;
    }

    constexpr std::array<std::array<Colour, 2>, 3> orbit_choices { {
        { Colour::Red, Colour::Blue },
        { Colour::Blue, Colour::Red },
        { Colour::Gold, Colour::Gold },
    } };

    constexpr auto unassigned = static_cast<Colour>(3);

    struct PrunedSearch {
        const SymmetricGraph& g;
        std::vector<EdgeOrbit> orbits;
        std::vector<Colour> colour;
        std::vector<ThreeColouring>& out;
        std::uint64_t& leaves;

        /// A partial assignment is dead once an assigned edge closes a cycle
        /// that no later choice can repair in either gold substitution.
        bool consistent() const
        {
            const Graph& gr = g.graph();
            UnionFind red(gr.vertex_count());
            UnionFind blue(gr.vertex_count());
            UnionFind red_gold(gr.vertex_count());
            UnionFind blue_gold(gr.vertex_count());
            for (std::size_t e = 0; e < gr.edge_count(); ++e) {
                const Edge& ed = gr.edges()[e];
                switch (colour[e]) {
                case Colour::Red:
                    red.unite(ed.u, ed.v);
                    red_gold.unite(ed.u, ed.v);
                    break;
                case Colour::Blue:
                    blue.unite(ed.u, ed.v);
                    blue_gold.unite(ed.u, ed.v);
                    break;
                case Colour::Gold:
                    red_gold.unite(ed.u, ed.v);
                    blue_gold.unite(ed.u, ed.v);
                    break;
                default:
                    break;
                }
            }
            for (std::size_t e = 0; e < gr.edge_count(); ++e) {
                const Edge& ed = gr.edges()[e];
                switch (colour[e]) {
                case Colour::Red:
                    if (blue_gold.same(ed.u, ed.v)) {
                        return false;
                    }
                    break;
                case Colour::Blue:
                    if (red_gold.same(ed.u, ed.v)) {
                        return false;
                    }
                    break;
                case Colour::Gold:
                    if (red.same(ed.u, ed.v) || blue.same(ed.u, ed.v)) {
                        return false;
                    }
                    break;
                default:
                    break;
                }
            }
            return true;
        }

        void descend(std::size_t depth)
        {
            if (!consistent()) {
                return;
            }
            if (depth == orbits.size()) {
                ++leaves;
                if (pseudo_rs_fast(g, colour)) {
                    out.push_back(ThreeColouring { colour });
                }
                return;
            }
            const EdgeOrbit& o = orbits[depth];
            for (const auto& choice : orbit_choices) {
                colour[at(o.representative)] = choice[0];
                colour[at(o.mirror)] = choice[1];
                descend(depth + 1);
            }
            colour[at(o.representative)] = unassigned;
            colour[at(o.mirror)] = unassigned;
        }
    };

} // namespace

std::string_view to_string(Colour c)
{
    switch (c) {
    case Colour::Red: return "red";
    case Colour::Blue: return "blue";
    case Colour::Gold: return "gold";
    }
    return "?";
}

Colour parse_colour(std::string_view text)
{
    if (text == "red") {
        return Colour::Red;
    }
    if (text == "blue") {
        return Colour::Blue;
    }
    if (text == "gold") {
        return Colour::Gold;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown colour '" + std::string(text) + "'", std::string(text));
}

std::uint64_t budget_from_environment()
{
    const char* env = std::getenv("SYMFLEX_BUDGET");
    if (env == nullptr || *env == '\0') {
        return default_budget;
    }
    std::uint64_t value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc {} || ptr != text.data() + text.size()) {
        throw Error(ErrorCode::InvalidArgument, "SYMFLEX_BUDGET is not a non-negative integer", std::string(text));
    }
    return value;
}

NacResult is_nac(const Graph& g, const TwoColouring& delta)
{
    if (delta.colour.size() != g.edge_count()) {
        throw Error(ErrorCode::InvalidArgument, "colouring size does not match edge count");
    }
    NacResult r;
    if (std::any_of(delta.colour.begin(), delta.colour.end(), [](Colour c) { return c == Colour::Gold; })) {
        r.failure = NacFailure::NotTwoColouring;
        return r;
    }
    const bool has_red = std::find(delta.colour.begin(), delta.colour.end(), Colour::Red) != delta.colour.end();
    const bool has_blue = std::find(delta.colour.begin(), delta.colour.end(), Colour::Blue) != delta.colour.end();
    if (!has_red || !has_blue) {
        r.failure = NacFailure::NotSurjective;
        return r;
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Colour c = delta.colour[e];
        const Colour other = swap_red_blue(c);
        const Edge& ed = g.edges()[e];
        auto path = shortest_path(g, ed.u, ed.v, [&](EdgeIndex f) { return delta[f] == other; });
        if (path) {
            r.failure = NacFailure::Cycle;
            r.witness = Cycle { path->vertices, path->edges };
            r.witness->edges.push_back(static_cast<EdgeIndex>(e));
            return r;
        }
    }
    r.ok = true;
    return r;
}

bool is_nac_fast(const Graph& g, const std::vector<Colour>& colour)
{
    if (std::any_of(colour.begin(), colour.end(), [](Colour c) { return c == Colour::Gold; })) {
        return false;
    }
    return nac_with_gold_as(g, colour, Colour::Red);
}

std::vector<TwoColouring> enumerate_nac(const Graph& g, const NacOptions& options)
{
    const std::size_t m = g.edge_count();
    const std::uint64_t candidates = power_saturating(2, m);
    if (m >= 64 || candidates > options.budget) {
        throw Error(ErrorCode::BudgetExceeded,
            "2^" + std::to_string(m) + " candidates exceed budget " + std::to_string(options.budget));
    }
    std::vector<TwoColouring> out;
    std::vector<Colour> colour(m);
    for (std::uint64_t mask = 0; mask < candidates; ++mask) {
        // Edge 0 is the most significant bit so that counting order is
        // lexicographic order.
        for (std::size_t e = 0; e < m; ++e) {
            colour[e] = ((mask >> (m - 1 - e)) & 1U) != 0U ? Colour::Blue : Colour::Red;
        }
        if (options.quotient_swap && m > 0 && colour[0] != Colour::Red) {
            continue;
        }
        if (is_nac_fast(g, colour)) {
            out.push_back(TwoColouring { colour });
        }
    }
    return out;
}

TwoColouring substitute_gold(const ThreeColouring& delta, Colour to)
{
    TwoColouring out { delta.colour };
    std::replace(out.colour.begin(), out.colour.end(), Colour::Gold, to);
    return out;
}

std::string_view to_string(PseudoRsFailure f)
{
    switch (f) {
    case PseudoRsFailure::None: return "ok";
    case PseudoRsFailure::MissingColour: return "red and blue must both occur";
    case PseudoRsFailure::GoldToBlueNotNac: return "gold to blue is not a NAC-colouring";
    case PseudoRsFailure::GoldToRedNotNac: return "gold to red is not a NAC-colouring";
    case PseudoRsFailure::NotSwapped: return "sigma does not swap red and blue";
    }
    return "?";
}

PseudoRsResult is_pseudo_rs(const SymmetricGraph& g, const ThreeColouring& delta)
{
    if (delta.colour.size() != g.edge_count()) {
        throw Error(ErrorCode::InvalidArgument, "colouring size does not match edge count");
    }
    const bool has_red = std::find(delta.colour.begin(), delta.colour.end(), Colour::Red) != delta.colour.end();
    const bool has_blue = std::find(delta.colour.begin(), delta.colour.end(), Colour::Blue) != delta.colour.end();
    const bool to_blue = nac_with_gold_as(g.graph(), delta.colour, Colour::Blue);
    const bool to_red = nac_with_gold_as(g.graph(), delta.colour, Colour::Red);
    EdgeIndex witness = -1;
    const bool swapped = swap_condition(g, delta.colour, &witness);
    if (swapped && to_blue != to_red) {
        throw std::logic_error("gold substitutions disagree on a sigma-swapped colouring");
    }
    PseudoRsResult r;
    if (!has_red || !has_blue) {
        r.failure = PseudoRsFailure::MissingColour;
    } else if (!to_blue) {
        r.failure = PseudoRsFailure::GoldToBlueNotNac;
    } else if (!to_red) {
        r.failure = PseudoRsFailure::GoldToRedNotNac;
    } else if (!swapped) {
        r.failure = PseudoRsFailure::NotSwapped;
        r.witness_edge = witness;
    } else {
        r.ok = true;
    }
    return r;
}

ThreeColouring conjugate(const SymmetricGraph& g, const ThreeColouring& delta)
{
    ThreeColouring out { std::vector<Colour>(delta.colour.size()) };
    for (std::size_t e = 0; e < delta.colour.size(); ++e) {
        out.colour[e] = delta.colour[at(g.mirror_edge(static_cast<EdgeIndex>(e)))];
    }
    return out;
}

CycleList almost_red_blue_cycles(const SymmetricGraph& g, const ThreeColouring& delta, std::size_t cap)
{
    CycleList out;
    const Graph& gr = g.graph();
    for (std::size_t e = 0; e < gr.edge_count() && !out.truncated; ++e) {
        if (delta.colour[e] != Colour::Gold) {
            continue;
        }
        const Edge& ed = gr.edges()[e];
        const std::size_t remaining = cap - out.cycles.size();
        PathList paths = simple_paths(gr, ed.u, ed.v, [&](EdgeIndex f) { return delta[f] == Colour::Gold; }, remaining);
        for (Path& p : paths.paths) {
            Cycle c { std::move(p.vertices), std::move(p.edges) };
            c.edges.push_back(static_cast<EdgeIndex>(e));
            out.cycles.push_back(std::move(c));
        }
        out.truncated = paths.truncated;
    }
    return out;
}

std::string_view to_string(RsStatus s)
{
    switch (s) {
    case RsStatus::NotPseudoRs: return "NotPseudoRS";
    case RsStatus::PseudoRsOnly: return "PseudoRSOnly";
    case RsStatus::RsNoCycle: return "RS_NoCycle";
    case RsStatus::RsCertified: return "RS_Certified";
    case RsStatus::UnknownTruncated: return "UnknownTruncated";
    }
    return "?";
}

std::optional<std::pair<EdgeIndex, EdgeIndex>> separating_pair(const Cycle& cycle,
    const ThreeColouring& delta, const ThreeColouring& other)
{
    for (std::size_t i = 0; i < cycle.edges.size(); ++i) {
        for (std::size_t j = i + 1; j < cycle.edges.size(); ++j) {
            const EdgeIndex a = cycle.edges[i];
            const EdgeIndex b = cycle.edges[j];
            if (delta[a] == delta[b] && other[a] != other[b]) {
                return std::pair { a, b };
            }
        }
    }
    return std::nullopt;
}

RsVerdict classify_rs(const SymmetricGraph& g, const ThreeColouring& delta,
    const std::vector<ThreeColouring>* pool, const ClassifyOptions& options)
{
    RsVerdict v;
    const PseudoRsResult pseudo = is_pseudo_rs(g, delta);
    if (!pseudo) {
        v.pseudo_failure = pseudo.failure;
        return v;
    }
    CycleList cycles = almost_red_blue_cycles(g, delta, options.cycle_cap);
    if (cycles.truncated) {
        v.status = RsStatus::UnknownTruncated;
        return v;
    }
    if (cycles.cycles.empty()) {
        v.status = RsStatus::RsNoCycle;
        return v;
    }
    const ThreeColouring conj = conjugate(g, delta);
    std::vector<ThreeColouring> lazy_pool;
    bool pool_ready = pool != nullptr && !pool->empty();
    for (Cycle& cycle : cycles.cycles) {
        std::optional<Certification> found;
        if (auto pair = separating_pair(cycle, delta, conj)) {
            found = Certification { cycle, conj, pair->first, pair->second };
        }
        if (!found && !pool_ready) {
            EnumerateOptions eo;
            eo.prune = true;
            eo.budget = options.budget;
            lazy_pool = enumerate_pseudo_rs(g, eo).colourings;
            pool = &lazy_pool;
            pool_ready = true;
        }
        for (std::size_t i = 0; !found && i < pool->size(); ++i) {
            if (auto pair = separating_pair(cycle, delta, (*pool)[i])) {
                found = Certification { cycle, (*pool)[i], pair->first, pair->second };
            }
        }
        if (!found) {
            v.status = RsStatus::PseudoRsOnly;
            v.witness = std::move(cycle);
            v.certified.clear();
            return v;
        }
        v.certified.push_back(std::move(*found));
    }
    v.status = RsStatus::RsCertified;
    return v;
}

std::uint64_t candidate_count(const SymmetricGraph& g)
{
    std::size_t free_orbits = 0;
    for (const EdgeOrbit& o : edge_orbits(g)) {
        free_orbits += o.is_invariant ? 0 : 1;
    }
    return power_saturating(3, free_orbits);
}

Enumeration enumerate_pseudo_rs(const SymmetricGraph& g, const EnumerateOptions& options)
{
    Enumeration result;
    result.candidates = candidate_count(g);
    if (result.candidates > options.budget) {
        throw Error(ErrorCode::BudgetExceeded,
            std::to_string(result.candidates) + " candidates exceed budget " + std::to_string(options.budget));
    }
    std::vector<EdgeOrbit> free;
    std::vector<Colour> base(g.edge_count(), unassigned);
    for (const EdgeOrbit& o : edge_orbits(g)) {
        if (o.is_invariant) {
            base[at(o.representative)] = Colour::Gold;
        } else {
            free.push_back(o);
        }
    }

    std::vector<ThreeColouring> all;
    if (options.prune) {
        std::uint64_t leaves = 0;
        PrunedSearch search { g, free, base, all, leaves };
        search.descend(0);
    } else {
        std::vector<Colour> colour = base;
        std::vector<int> digit(free.size(), 0);
        for (std::uint64_t n = 0; n < result.candidates; ++n) {
            for (std::size_t i = 0; i < free.size(); ++i) {
                const auto& choice = orbit_choices[at(digit[i])];
                colour[at(free[i].representative)] = choice[0];
                colour[at(free[i].mirror)] = choice[1];
            }
            if (pseudo_rs_fast(g, colour)) {
                all.push_back(ThreeColouring { colour });
            }
            for (std::size_t i = free.size(); i-- > 0;) {
                if (++digit[i] < 3) {
                    break;
                }
                digit[i] = 0;
            }
        }
    }
    std::sort(all.begin(), all.end());

    std::vector<ThreeColouring> kept;
    if (options.rs_only) {
        ClassifyOptions co { options.cycle_cap, options.budget };
        for (const ThreeColouring& delta : all) {
            const RsVerdict v = classify_rs(g, delta, &all, co);
            if (v.status == RsStatus::UnknownTruncated) {
                result.truncated = true;
            } else if (v.is_rs()) {
                kept.push_back(delta);
            }
        }
    } else {
        kept = std::move(all);
    }
    if (options.quotient_conjugation) {
        std::vector<ThreeColouring> reps;
        for (ThreeColouring& delta : kept) {
            if (delta <= conjugate(g, delta)) {
                reps.push_back(std::move(delta));
            }
        }
        kept = std::move(reps);
    }
    result.colourings = std::move(kept);
    return result;
}

CartesianResult is_cartesian(const SymmetricGraph& g, const ThreeColouring& delta)
{
    const Graph& gr = g.graph();
    UnionFind rb = union_of(gr, delta.colour, Colour::Red, Colour::Blue);
    UnionFind rg = union_of(gr, delta.colour, Colour::Red, Colour::Gold);
    UnionFind bg = union_of(gr, delta.colour, Colour::Blue, Colour::Gold);
    std::map<std::array<int, 3>, VertexIndex> first;
    for (std::size_t v = 0; v < gr.vertex_count(); ++v) {
        const int x = static_cast<int>(v);
        const std::array<int, 3> key { rb.find(x), rg.find(x), bg.find(x) };
        const auto [it, inserted] = first.emplace(key, x);
        if (!inserted) {
            return CartesianResult { false, std::pair { it->second, x } };
        }
    }
    return CartesianResult { true, std::nullopt };
}

LiftedColouring lift_nac_to_pseudo_rs(const Graph& g, const TwoColouring& nac, EdgeIndex f)
{
    if (!is_nac(g, nac)) {
        throw Error(ErrorCode::NotNac, "input colouring is not a NAC-colouring");
    }
    TwoColouring delta = nac;
    const bool swapped = delta[f] != Colour::Red;
    if (swapped) {
        std::transform(delta.colour.begin(), delta.colour.end(), delta.colour.begin(), swap_red_blue);
    }
    GluedGraph glued = glue_double(g, f);
    const Graph& h = glued.graph.graph();
    ThreeColouring out { std::vector<Colour>(h.edge_count(), Colour::Gold) };
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (static_cast<EdgeIndex>(e) == f || delta.colour[e] == Colour::Red) {
            continue;
        }
        const Edge& ed = g.edges()[e];
        const auto here = h.find_edge(glued.original[at(ed.u)], glued.original[at(ed.v)]);
        const auto there = h.find_edge(glued.mirrored[at(ed.u)], glued.mirrored[at(ed.v)]);
        out.colour[at(*here)] = Colour::Blue;
        out.colour[at(*there)] = Colour::Red;
    }
    return LiftedColouring { std::move(glued), std::move(out), swapped };
}

std::string format_colouring(const Graph& g, const std::vector<Colour>& colour)
{
    std::string out;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        out += g.edge_key(static_cast<EdgeIndex>(e));
        out += ": ";
        out += to_string(colour[e]);
        out += '\n';
    }
    return out;
}

ThreeColouring parse_colouring(const Graph& g, std::string_view text)
{
    ThreeColouring out { std::vector<Colour>(g.edge_count(), Colour::Gold) };
    std::vector<bool> seen(g.edge_count(), false);
    std::istringstream in { std::string(text) };
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        const auto colon = line.find(':');
        const auto dash = line.find('-');
        if (colon == std::string::npos || dash == std::string::npos || dash > colon) {
            throw Error(ErrorCode::Schema, "expected 'u-v: colour'", line);
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string u = trim(line.substr(0, dash));
        const std::string v = trim(line.substr(dash + 1, colon - dash - 1));
        const EdgeIndex e = g.edge_index(u, v);
        if (seen[at(e)]) {
            throw Error(ErrorCode::Schema, "edge coloured twice", g.edge_key(e));
        }
        seen[at(e)] = true;
        out.colour[at(e)] = parse_colour(trim(line.substr(colon + 1)));
    }
    for (std::size_t e = 0; e < seen.size(); ++e) {
        if (!seen[e]) {
            throw Error(ErrorCode::Schema, "edge without colour", g.edge_key(static_cast<EdgeIndex>(e)));
        }
    }
    return out;
}

} // namespace symflex
