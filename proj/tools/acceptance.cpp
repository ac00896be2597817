// Acceptance checks; one PASS/FAIL line per criterion, exit 0 iff all pass.

#include "oracles.hpp"

#include "symflex/cli.hpp"
#include "symflex/closure.hpp"
#include "symflex/fixtures.hpp"
#include "symflex/flexes.hpp"
#include "symflex/frameworks.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace symflex;

namespace {

constexpr double length_tol = 1e-9;
constexpr double symmetry_tol = 1e-12;
constexpr double gap_tol = 1e-8;
constexpr double angle_tol = 1e-3;
constexpr double axis_tol = 1e-9;
constexpr double start_tol = 1e-9;
constexpr double coincidence_tol = 1e-9;
constexpr std::size_t flex_samples = 200;
constexpr int lift_graphs = 50;
constexpr int strip_frameworks = 108;

Tolerances pinned()
{
    Tolerances t;
    t.length = length_tol;
    t.symmetry = symmetry_tol;
    t.min_gap = gap_tol;
    t.angle = angle_tol;
    return t;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

ThreeColouring canonical(const SymmetricGraph& g, const ThreeColouring& d) { return std::min(d, conjugate(g, d)); }

EnumerateOptions pruned(bool rs_only = false, bool quotient = false)
{
    EnumerateOptions o;
    o.prune = true;
    o.rs_only = rs_only;
    o.quotient_conjugation = quotient;
    return o;
}

std::string fmt(double x)
{
    std::ostringstream s;
    s << x;
    return s.str();
}

// 1
Outcome fig2_enumeration()
{
    const GraphDocument doc = fixture("fig2");
    const SymmetricGraph g = build_graph(doc);
    const Enumeration e = enumerate_pseudo_rs(g, pruned(false, true));
    std::set<ThreeColouring> found;
    bool all_no_cycle = true;
    for (const ThreeColouring& d : e.colourings) {
        found.insert(canonical(g, d));
        all_no_cycle = all_no_cycle && classify_rs(g, d).status == RsStatus::RsNoCycle;
    }
    std::set<ThreeColouring> drawn;
    for (const auto& [name, colours] : doc.colourings) {
        drawn.insert(canonical(g, build_colouring(doc, g.graph(), name)));
    }
    return { e.colourings.size() == 5 && all_no_cycle && found == drawn && !e.truncated,
        std::to_string(e.colourings.size()) + " classes up to conjugation, all RS_NoCycle: " + (all_no_cycle ? "yes" : "no")
            + ", equal to drawings: " + (found == drawn ? "yes" : "no") };
}

// 2
Outcome fig2_cartesian()
{
    const GraphDocument doc = fixture("fig2");
    const SymmetricGraph g = build_graph(doc);
    std::vector<std::string> cartesian;
    for (const auto& [name, colours] : doc.colourings) {
        if (is_cartesian(g, build_colouring(doc, g.graph(), name)).ok) {
            cartesian.push_back(name);
        }
    }
    std::string names;
    for (const auto& n : cartesian) {
        names += (names.empty() ? "" : ",") + n;
    }
    return { cartesian == std::vector<std::string> { "c1" }, "Cartesian drawings: {" + names + "} (second drawing is c1)" };
}

// 3
Outcome fig4_verdicts()
{
    const SymmetricGraph left = build_graph(fixture("fig4_left"));
    const SymmetricGraph right = build_graph(fixture("fig4_right"));
    const std::size_t pseudo = enumerate_pseudo_rs(left, pruned()).colourings.size();
    const std::size_t rs_left = enumerate_pseudo_rs(left, pruned(true)).colourings.size();
    const Necessity v = necessity_verdict(left, pruned()).verdict;
    const std::size_t rs_right = enumerate_pseudo_rs(right, pruned(true)).colourings.size();
    return { pseudo > 0 && rs_left == 0 && v == Necessity::NoRs && rs_right > 0,
        "left: " + std::to_string(pseudo) + " pseudo-RS, " + std::to_string(rs_left) + " RS, verdict "
            + std::string(to_string(v)) + "; right: " + std::to_string(rs_right) + " RS" };
}

// 4
Outcome fig3_double()
{
    const GraphDocument doc = fixture("fig3");
    const SymmetricGraph g = build_graph(doc);
    const ThreeColouring d1 = build_colouring(doc, g.graph(), "c0");
    const ThreeColouring d2 = build_colouring(doc, g.graph(), "c1");
    const VertexIndex w = g.graph().vertex_index("3");
    const bool pseudo = is_pseudo_rs(g, d1).ok && is_pseudo_rs(g, d2).ok;
    const std::vector<ThreeColouring> pool1 { d2 };
    const std::vector<ThreeColouring> pool2 { d1 };
    const bool certified = classify_rs(g, d1, &pool1).status == RsStatus::RsCertified
        && classify_rs(g, d2, &pool2).status == RsStatus::RsCertified;
    const bool conditions = check_double_conditions(g, d1, d2, w).ok();
    const ParametricFlex f = double_flex(g, d1, d2, w);
    const FlexReport r = verify_flex(g, f, flex_samples, pinned());
    double axis = 0.0;
    for (const FlexSample& s : sample_flex(f, flex_samples)) {
        axis = std::max(axis, std::abs(s.p[static_cast<std::size_t>(w)].x));
    }
    return { pseudo && certified && conditions && r.passed() && r.length_variation <= length_tol && axis <= axis_tol,
        std::string("pseudo-RS ") + (pseudo ? "yes" : "no") + ", mutually certified " + (certified ? "yes" : "no")
            + ", conditions " + (conditions ? "hold" : "fail") + ", length variation " + fmt(r.length_variation)
            + ", max |x(w)| " + fmt(axis) + " over " + std::to_string(flex_samples) + " samples" };
}

// 5
Outcome grid_suite()
{
    std::size_t checked = 0;
    std::size_t failed = 0;
    double worst_length = 0.0;
    double worst_symmetry = 0.0;
    std::string first_failure;
    for (const std::string& name : fixture_names()) {
        const SymmetricGraph g = build_graph(fixture(name));
        for (const ThreeColouring& d : enumerate_pseudo_rs(g, pruned(true)).colourings) {
            const CycleList cycles = almost_red_blue_cycles(g, d);
            if (!cycles.cycles.empty() || cycles.truncated) {
                continue;
            }
            ++checked;
            try {
                const FlexReport r = verify_flex(g, grid_flex(g, d, checked), flex_samples, pinned());
                worst_length = std::max(worst_length, r.length_variation);
                worst_symmetry = std::max(worst_symmetry, r.symmetry_residual);
                if (!r.passed()) {
                    ++failed;
                    first_failure = first_failure.empty() ? name : first_failure;
                }
            } catch (const Error& e) {
                ++failed;
                first_failure = first_failure.empty() ? name + " (" + e.what() + ")" : first_failure;
            }
        }
    }
    return { failed == 0 && checked > 0,
        std::to_string(checked) + " RS_NoCycle colourings over all fixtures, " + std::to_string(failed)
            + " failures, worst length variation " + fmt(worst_length) + ", worst symmetry " + fmt(worst_symmetry)
            + (first_failure.empty() ? "" : ", first failure " + first_failure) };
}

// 6
Outcome oracle_equivalence()
{
    const auto graphs = oracle::small_symmetric_graphs(6, 8);
    std::size_t enum_mismatch = 0;
    std::size_t nac_mismatch = 0;
    std::size_t colourings = 0;
    for (const SymmetricGraph& g : graphs) {
        std::vector<std::vector<Colour>> got;
        for (const ThreeColouring& d : enumerate_pseudo_rs(g, pruned()).colourings) {
            got.push_back(d.colour);
        }
        enum_mismatch += got == oracle::enumerate_pseudo_rs(g) ? 0 : 1;
        const auto cycles = oracle::all_cycles(g.graph());
        const std::size_t m = g.edge_count();
        for (std::uint64_t mask = 0; mask < (std::uint64_t { 1 } << m); ++mask) {
            std::vector<Colour> c(m);
            for (std::size_t e = 0; e < m; ++e) {
                c[e] = ((mask >> e) & 1U) != 0U ? Colour::Blue : Colour::Red;
            }
            const bool expected = oracle::is_nac(cycles, c);
            nac_mismatch += (is_nac_fast(g.graph(), c) == expected && is_nac(g.graph(), TwoColouring { c }).ok == expected) ? 0 : 1;
            ++colourings;
        }
    }
    return { enum_mismatch == 0 && nac_mismatch == 0,
        std::to_string(graphs.size()) + " graphs (n <= 6, m <= 8), enumeration mismatches " + std::to_string(enum_mismatch)
            + ", NAC mismatches " + std::to_string(nac_mismatch) + " over " + std::to_string(colourings) + " colourings" };
}

// 7
Outcome four_cycle()
{
    const SymmetricGraph antipodal = build_graph(fixture("c4_antipodal"));
    const SymmetricGraph axial = build_graph(fixture("c4_axial"));
    const std::size_t nac = enumerate_nac(antipodal.graph()).size();
    const std::size_t rs = enumerate_pseudo_rs(antipodal, pruned(true)).colourings.size();
    const std::size_t pseudo_axial = enumerate_pseudo_rs(axial, pruned()).colourings.size();
    const bool oracle_agrees = oracle::enumerate_pseudo_rs(axial).empty() && !oracle::enumerate_pseudo_rs(antipodal).empty();
    return { nac == 6 && rs >= 1 && pseudo_axial == 0 && oracle_agrees,
        std::to_string(nac) + " NAC-colourings; (1 3)(2 4): " + std::to_string(rs) + " RS; (1 2)(3 4): "
            + std::to_string(pseudo_axial) + " pseudo-RS" };
}

// 8
enum class GkType { Single, Double, Alternating, Other };

GkType gk_type(const SymmetricGraph& g, const ThreeColouring& d, int k)
{
    const Graph& gr = g.graph();
    const auto colour = [&](const std::string& a, const std::string& b) { return d[gr.edge_index(a, b)]; };
    if (colour("l0", "r0") != Colour::Gold) {
        return GkType::Other;
    }
    int matched = 0;
    int alternating = 0;
    int off = 0;
    for (int i = 1; i <= k; ++i) {
        const std::string s = std::to_string(i);
        for (int j = i + 1; j <= k; ++j) {
            if (colour("m" + s, "m" + std::to_string(j)) != Colour::Gold) {
                return GkType::Other;
            }
        }
        const Colour l1 = colour("l0", "l" + s);
        const Colour l2 = colour("l" + s, "m" + s);
        const Colour r1 = colour("r0", "r" + s);
        const Colour r2 = colour("r" + s, "m" + s);
        const bool all_gold = l1 == Colour::Gold && l2 == Colour::Gold && r1 == Colour::Gold && r2 == Colour::Gold;
        const bool none_gold = l1 != Colour::Gold && l2 != Colour::Gold && r1 != Colour::Gold && r2 != Colour::Gold;
        if (all_gold) {
            ++off;
        } else if (none_gold && l1 == l2 && r1 == r2) {
            ++matched;
        } else if (none_gold && l1 != l2 && r1 != r2) {
            ++alternating;
        } else {
            return GkType::Other;
        }
    }
    if (matched == 1 && off == k - 1) {
        return GkType::Single;
    }
    if (matched == 2 && off == k - 2) {
        return GkType::Double;
    }
    if (alternating == k) {
        return GkType::Alternating;
    }
    return GkType::Other;
}

Outcome gk_suite()
{
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= 4; ++k) {
        const SymmetricGraph g = gk_graph(k);
        std::map<GkType, std::size_t> count;
        for (const ThreeColouring& d : enumerate_pseudo_rs(g, pruned(true, true)).colourings) {
            ++count[gk_type(g, d, k)];
        }
        const std::size_t pairs = static_cast<std::size_t>(k * (k - 1) / 2);
        const bool types = count[GkType::Other] == 0 && count[GkType::Single] == static_cast<std::size_t>(k)
            && count[GkType::Double] == pairs && count[GkType::Alternating] == (std::size_t { 1 } << (k - 1));

        const GoldCore core = gold_core(g, pruned());
        std::set<std::string> gold;
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (core.gold[e]) {
                gold.insert(g.graph().edge_key(static_cast<EdgeIndex>(e)));
            }
        }
        std::set<std::string> expected { "l0-r0" };
        for (int i = 1; i <= k; ++i) {
            for (int j = i + 1; j <= k; ++j) {
                expected.insert("m" + std::to_string(i) + "-m" + std::to_string(j));
            }
        }
        const ClosureTrace trace = gold_closure(g, pruned());
        const bool fixpoint = trace.stages.size() == 1 && trace.final_graph().edge_count() == g.edge_count();
        ok = ok && types && gold == expected && fixpoint && !core.vacuous;
        detail += (detail.empty() ? "" : "; ") + std::string("k=") + std::to_string(k) + ": "
            + std::to_string(count[GkType::Single]) + "/" + std::to_string(count[GkType::Double]) + "/"
            + std::to_string(count[GkType::Alternating]) + " other " + std::to_string(count[GkType::Other])
            + (gold == expected ? "" : " core mismatch") + (fixpoint ? "" : " closure grew");
    }
    return { ok, "types single/double/alternating " + detail };
}

// 9
Outcome lift_round_trip()
{
    std::mt19937_64 rng(2024);
    int done = 0;
    int failures = 0;
    int attempts = 0;
    while (done < lift_graphs && attempts < 10'000) {
        ++attempts;
        const int n = 4 + static_cast<int>(rng() % 4);
        std::vector<VertexId> names;
        for (int v = 0; v < n; ++v) {
            names.push_back("v" + std::to_string(v));
        }
        std::set<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v) {
            edges.insert({ static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v });
        }
        const int extra = static_cast<int>(rng() % 4);
        for (int i = 0; i < extra; ++i) {
            const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            const int b = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            if (a != b) {
                edges.insert({ std::min(a, b), std::max(a, b) });
            }
        }
        std::vector<std::pair<VertexId, VertexId>> named;
        for (const auto& [a, b] : edges) {
            named.emplace_back(names[static_cast<std::size_t>(a)], names[static_cast<std::size_t>(b)]);
        }
        const Graph g(names, named);
        const std::vector<TwoColouring> nacs = enumerate_nac(g);
        if (nacs.empty()) {
            continue;
        }
        const TwoColouring& nac = nacs[rng() % nacs.size()];
        std::vector<EdgeIndex> red;
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (nac.colour[e] == Colour::Red) {
                red.push_back(static_cast<EdgeIndex>(e));
            }
        }
        const EdgeIndex f = red[rng() % red.size()];
        ++done;
        const LiftedColouring lifted = lift_nac_to_pseudo_rs(g, nac, f);
        const SymmetricGraph& h = lifted.glued.graph;
        bool ok = is_pseudo_rs(h, lifted.colouring).ok && classify_rs(h, lifted.colouring).status != RsStatus::PseudoRsOnly;
        const TwoColouring back = substitute_gold(lifted.colouring, Colour::Red);
        for (std::size_t e = 0; e < g.edge_count() && ok; ++e) {
            const Edge& ed = g.edge(static_cast<EdgeIndex>(e));
            const auto he = h.graph().find_edge(lifted.glued.original[static_cast<std::size_t>(ed.u)],
                lifted.glued.original[static_cast<std::size_t>(ed.v)]);
            ok = he.has_value() && back[*he] == nac.colour[e];
        }
        failures += ok ? 0 : 1;
    }
    return { done == lift_graphs && failures == 0,
        std::to_string(done) + " seeded graphs with a NAC-colouring (glued edge red), " + std::to_string(failures) + " failures" };
}

// 10
Outcome walk_independent_equivalence()
{
    int frameworks = 0;
    int disagreements = 0;
    int flexible = 0;
    int pattern_mismatch = 0;
    std::size_t colourings = 0;
    std::string first;
    for (int rows = 1; rows <= 3 && frameworks < strip_frameworks; ++rows) {
        for (int columns = 2; columns <= 4 && frameworks < strip_frameworks; ++columns) {
            for (int variant = 0; variant < 4; ++variant) {
                for (std::uint64_t seed = 0; seed < 3; ++seed) {
                    StripOptions o;
                    o.rows = rows;
                    o.columns = columns;
                    o.brace = (variant & 1) != 0;
                    o.triangles = (variant & 2) != 0;
                    o.seed = seed;
                    const Framework fw = build_framework(strip_fixture(o));
                    if (!fw.is_symmetric() || !is_walk_independent(fw)) {
                        ++disagreements;
                        first = first.empty() ? "fixture not symmetric walk-independent" : first;
                        continue;
                    }
                    ++frameworks;
                    const SymmetricGraph& g = fw.graph();
                    const ApcPartition apc = angle_preserving_classes(g);
                    const std::optional<int> r = noninvariant_apc(apc);
                    const bool by_apc = r.has_value();

                    bool by_enumeration = false;
                    std::optional<ThreeColouring> cartesian_rs;
                    const Enumeration pseudo = enumerate_pseudo_rs(g, pruned());
                    for (const ThreeColouring& d : pseudo.colourings) {
                        ++colourings;
                        const bool cartesian = is_cartesian(g, d).ok;
                        pattern_mismatch += apc_pattern_check(d, apc) == cartesian ? 0 : 1;
                        if (cartesian && !by_enumeration && classify_rs(g, d, &pseudo.colourings).is_rs()) {
                            by_enumeration = true;
                            cartesian_rs = d;
                        }
                    }

                    bool by_flex = false;
                    const std::optional<ThreeColouring> delta = r ? std::optional(cartesian_from_apc(g, apc, *r)) : cartesian_rs;
                    if (delta) {
                        try {
                            const ParametricFlex f = walkindep_flex(fw, *delta);
                            const std::vector<Vec2> p0 = f.realisation(0.0);
                            bool starts = true;
                            for (std::size_t v = 0; v < p0.size(); ++v) {
                                starts = starts && norm(p0[v] - fw.p()[v]) <= start_tol;
                            }
                            by_flex = starts && verify_flex(g, f, flex_samples, pinned()).passed();
                        } catch (const Error&) {
                            by_flex = false;
                        }
                    }
                    flexible += by_apc ? 1 : 0;
                    if (by_apc != by_enumeration || by_apc != by_flex) {
                        ++disagreements;
                        if (first.empty()) {
                            first = std::to_string(rows) + "x" + std::to_string(columns) + " variant " + std::to_string(variant)
                                + " seed " + std::to_string(seed);
                        }
                    }
                }
            }
        }
    }
    return { frameworks >= 100 && disagreements == 0 && pattern_mismatch == 0,
        std::to_string(frameworks) + " frameworks (" + std::to_string(flexible) + " flexible), " + std::to_string(disagreements)
            + " verdict disagreements, pattern mismatches " + std::to_string(pattern_mismatch) + " over "
            + std::to_string(colourings) + " pseudo-RS-colourings" + (first.empty() ? "" : ", first " + first) };
}

// 11
Outcome injectivity()
{
    const SymmetricGraph g = build_graph(fixture("fig2"));
    int agree = 0;
    int total = 0;
    for (const ThreeColouring& d : enumerate_pseudo_rs(g, pruned()).colourings) {
        ++total;
        const std::vector<Vec2> p = grid_flex(g, d, 17).realisation(0.0);
        bool injective = true;
        for (std::size_t u = 0; u < p.size(); ++u) {
            for (std::size_t v = u + 1; v < p.size(); ++v) {
                injective = injective && norm(p[u] - p[v]) > coincidence_tol;
            }
        }
        agree += injective == is_cartesian(g, d).ok ? 1 : 0;
    }
    return { total == 10 && agree == total,
        std::to_string(agree) + "/" + std::to_string(total) + " colourings (with conjugates) agree" };
}

// 12
Outcome determinism()
{
    const auto invoke = [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out;
        std::ostringstream err;
        const int status = run(args, in, out, err);
        return std::to_string(status) + "\n" + out.str();
    };
    const std::string grid = invoke({ "flex", "grid", "fig2", "--colouring", "c3", "--seed", "5" }, "");
    const std::string grid_doc = grid.substr(grid.find('\n') + 1);
    const std::vector<std::pair<std::vector<std::string>, std::string>> commands {
        { { "fixtures", "strip", "--m", "2", "--n", "3", "--brace", "--seed", "4" }, "" },
        { { "--json", "check", "rs", "fig4_left", "--colouring", "c0" }, "" },
        { { "--json", "enumerate", "rs", "fig2", "--up-to-conjugation" }, "" },
        { { "--json", "enumerate", "nac", "c4_antipodal" }, "" },
        { { "closure", "fig6" }, "" },
        { { "--json", "verdict", "fig4_right" }, "" },
        { { "--json", "verdict", "--tp", "fig7" }, "" },
        { { "flex", "grid", "fig2", "--colouring", "c3", "--seed", "5" }, "" },
        { { "flex", "double", "fig3", "--colouring", "c0", "--second", "c1", "--w", "3", "--seed", "9" }, "" },
        { { "flex", "walkindep", "c4_diagonal" }, "" },
        { { "--json", "verify" }, grid_doc },
        { { "sample", "--n", "7" }, grid_doc },
        { { "export", "--csv", "-", "--frames", "6" }, grid_doc },
    };
    int differing = 0;
    for (const auto& [args, input] : commands) {
        differing += invoke(args, input) == invoke(args, input) ? 0 : 1;
    }
    const auto dir = std::filesystem::temp_directory_path() / "symflex_acceptance";
    std::filesystem::remove_all(dir);
    invoke({ "export", "--svg", (dir / "a").string(), "--frames", "3" }, grid_doc);
    invoke({ "export", "--svg", (dir / "b").string(), "--frames", "3" }, grid_doc);
    const auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    };
    int svg_differing = 0;
    for (int i = 0; i < 3; ++i) {
        const std::string name = "frame_000" + std::to_string(i) + ".svg";
        const std::string a = slurp(dir / "a" / name);
        svg_differing += !a.empty() && a == slurp(dir / "b" / name) ? 0 : 1;
    }
    std::filesystem::remove_all(dir);
    return { differing == 0 && svg_differing == 0,
        std::to_string(commands.size()) + " commands and 3 SVG frames re-run, " + std::to_string(differing + svg_differing)
            + " differ" };
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria {
        { "fig2 enumeration", fig2_enumeration },
        { "fig2 Cartesian", fig2_cartesian },
        { "fig4 verdicts", fig4_verdicts },
        { "fig3 double flex", fig3_double },
        { "grid construction", grid_suite },
        { "oracle equivalence", oracle_equivalence },
        { "four-cycle brute force", four_cycle },
        { "G_k suite", gk_suite },
        { "NAC lift round trip", lift_round_trip },
        { "walk-independent equivalence", walk_independent_equivalence },
        { "injectivity criterion", injectivity },
        { "determinism", determinism },
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = { false, std::string("exception: ") + e.what() };
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << (i + 1 < 10 ? " " : "") << i + 1 << ' ' << criteria[i].first << ": "
                  << o.detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
