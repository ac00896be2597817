#include "oracles.hpp"

#include "symflex/colourings.hpp"
#include "symflex/fixtures.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace symflex;

namespace {

struct Loaded {
    GraphDocument doc;
    SymmetricGraph g;
    explicit Loaded(const std::string& name)
        : doc(fixture(name))
        , g(build_graph(doc))
    {
    }
    ThreeColouring colouring(const std::string& name) const { return build_colouring(doc, g.graph(), name); }
    ThreeColouring parse(const std::string& text) const { return parse_colouring(g.graph(), text); }
};

TwoColouring two(const Graph& g, const std::string& text)
{
    return TwoColouring { parse_colouring(g, text).colour };
}

ThreeColouring canonical(const SymmetricGraph& g, const ThreeColouring& d)
{
    return std::min(d, conjugate(g, d));
}

std::set<std::string> edge_keys(const Graph& g, const std::vector<EdgeIndex>& edges)
{
    std::set<std::string> out;
    for (EdgeIndex e : edges) {
        out.insert(g.edge_key(e));
    }
    return out;
}

} // namespace

TEST(Nac, FourCycleDrawings)
{
    const Graph c4({ "1", "2", "3", "4" }, { { "1", "2" }, { "2", "3" }, { "3", "4" }, { "1", "4" } });
    EXPECT_TRUE(is_nac(c4, two(c4, "1-2: red\n3-4: red\n2-3: blue\n1-4: blue\n")));

    const NacResult bad = is_nac(c4, two(c4, "1-2: red\n3-4: red\n2-3: red\n1-4: blue\n"));
    EXPECT_FALSE(bad);
    EXPECT_EQ(bad.failure, NacFailure::Cycle);
    ASSERT_TRUE(bad.witness.has_value());
    EXPECT_EQ(bad.witness->edges.size(), 4U);

    const NacResult mono = is_nac(c4, two(c4, "1-2: red\n3-4: red\n2-3: red\n1-4: red\n"));
    EXPECT_EQ(mono.failure, NacFailure::NotSurjective);
}

TEST(Nac, EnumerationCounts)
{
    const Graph k3({ "1", "2", "3" }, { { "1", "2" }, { "2", "3" }, { "1", "3" } });
    EXPECT_TRUE(enumerate_nac(k3).empty());

    const Graph c4({ "1", "2", "3", "4" }, { { "1", "2" }, { "2", "3" }, { "3", "4" }, { "1", "4" } });
    EXPECT_EQ(enumerate_nac(c4).size(), 6U);
    EXPECT_EQ(enumerate_nac(c4, { true, default_budget }).size(), 3U);

    const Graph tree({ "a", "b", "c", "d", "e" }, { { "a", "b" }, { "b", "c" }, { "b", "d" }, { "d", "e" } });
    EXPECT_EQ(enumerate_nac(tree).size(), 14U);

    EXPECT_THROW(enumerate_nac(c4, { false, 8 }), Error);
}

TEST(Nac, WitnessCycleHasExactlyOneEdgeOfAColour)
{
    std::mt19937_64 rng(7);
    const SymmetricGraph g = build_graph(fixture("fig2"));
    const Graph& gr = g.graph();
    for (int trial = 0; trial < 200; ++trial) {
        TwoColouring d { std::vector<Colour>(gr.edge_count()) };
        for (auto& c : d.colour) {
            c = (rng() & 1U) != 0U ? Colour::Red : Colour::Blue;
        }
        const NacResult r = is_nac(gr, d);
        if (r.failure != NacFailure::Cycle) {
            continue;
        }
        int red = 0;
        int blue = 0;
        for (EdgeIndex e : r.witness->edges) {
            (d[e] == Colour::Red ? red : blue) += 1;
        }
        EXPECT_TRUE(red == 1 || blue == 1);
    }
}

TEST(Nac, ComponentCriterionMatchesCycleScanOnFixtures)
{
    std::mt19937_64 rng(11);
    for (const char* name : { "fig2", "fig4_left", "c4_axial", "k3_mirror", "fig7" }) {
        const SymmetricGraph g = build_graph(fixture(name));
        const auto cycles = oracle::all_cycles(g.graph());
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<Colour> c(g.edge_count());
            for (auto& x : c) {
                x = (rng() & 1U) != 0U ? Colour::Red : Colour::Blue;
            }
            EXPECT_EQ(is_nac_fast(g.graph(), c), oracle::is_nac(cycles, c)) << name;
            EXPECT_EQ(is_nac(g.graph(), TwoColouring { c }).ok, oracle::is_nac(cycles, c)) << name;
        }
    }
}

TEST(PseudoRs, TranscribedColouringsAreAccepted)
{
    const Loaded f("fig2");
    for (const char* c : { "c0", "c1", "c2", "c3", "c4" }) {
        EXPECT_TRUE(is_pseudo_rs(f.g, f.colouring(c))) << c;
    }
    const Loaded anti("c4_antipodal");
    EXPECT_TRUE(is_pseudo_rs(anti.g, anti.colouring("c0")));
}

TEST(PseudoRs, AxialFourCycleHasNone)
{
    const Loaded f("c4_axial");
    std::vector<Colour> c(4, Colour::Red);
    int accepted = 0;
    for (int n = 0; n < 81; ++n) {
        int x = n;
        for (auto& e : c) {
            e = static_cast<Colour>(x % 3);
            x /= 3;
        }
        accepted += is_pseudo_rs(f.g, ThreeColouring { c }).ok ? 1 : 0;
    }
    EXPECT_EQ(accepted, 0);
    EXPECT_TRUE(enumerate_pseudo_rs(f.g).colourings.empty());
}

TEST(PseudoRs, FailureReasons)
{
    const Loaded f("c4_antipodal");
    EXPECT_EQ(is_pseudo_rs(f.g, f.parse("1-2: gold\n2-3: gold\n3-4: gold\n1-4: gold\n")).failure, PseudoRsFailure::MissingColour);
    const PseudoRsResult swap = is_pseudo_rs(f.g, f.parse("1-2: red\n2-3: blue\n3-4: red\n1-4: blue\n"));
    EXPECT_EQ(swap.failure, PseudoRsFailure::NotSwapped);
    EXPECT_TRUE(swap.witness_edge.has_value());
    EXPECT_EQ(is_pseudo_rs(f.g, f.parse("1-2: red\n2-3: gold\n3-4: blue\n1-4: gold\n")).failure, PseudoRsFailure::GoldToBlueNotNac);
}

TEST(Conjugate, InvolutionAndGoldFixed)
{
    const Loaded f("fig2");
    const ThreeColouring d = f.colouring("c0");
    const ThreeColouring c = conjugate(f.g, d);
    EXPECT_EQ(conjugate(f.g, c), d);
    std::vector<EdgeIndex> red;
    std::vector<EdgeIndex> blue;
    for (std::size_t e = 0; e < d.colour.size(); ++e) {
        if (d.colour[e] == Colour::Gold) {
            EXPECT_EQ(c.colour[e], Colour::Gold);
        }
        if (c.colour[e] == Colour::Red) {
            red.push_back(static_cast<EdgeIndex>(e));
        }
        if (c.colour[e] == Colour::Blue) {
            blue.push_back(static_cast<EdgeIndex>(e));
        }
    }
    EXPECT_EQ(edge_keys(f.g.graph(), red), (std::set<std::string> { "1-4", "3-5", "5-6" }));
    EXPECT_EQ(edge_keys(f.g.graph(), blue), (std::set<std::string> { "2-8", "3-7", "6-7" }));
}

TEST(AlmostRedBlue, NoneInEightVertexColourings)
{
    const Loaded f("fig2");
    for (const char* c : { "c0", "c1", "c2", "c3", "c4" }) {
        const CycleList l = almost_red_blue_cycles(f.g, f.colouring(c));
        EXPECT_TRUE(l.cycles.empty()) << c;
        EXPECT_FALSE(l.truncated);
    }
}

TEST(AlmostRedBlue, PentagonInGadget)
{
    const Loaded f("fig4_left");
    const ThreeColouring d = f.colouring("c0");
    const CycleList l = almost_red_blue_cycles(f.g, d);
    const auto cycles = oracle::almost_red_blue(oracle::all_cycles(f.g.graph()), d.colour);
    EXPECT_EQ(l.cycles.size(), cycles.size());
    bool pentagon = false;
    for (const Cycle& c : l.cycles) {
        std::set<std::string> names;
        for (VertexIndex v : c.vertices) {
            names.insert(f.g.graph().name(v));
        }
        int gold = 0;
        for (EdgeIndex e : c.edges) {
            gold += d[e] == Colour::Gold ? 1 : 0;
        }
        EXPECT_EQ(gold, 1);
        pentagon = pentagon || names == std::set<std::string> { "1", "2", "3", "4", "5" };
    }
    EXPECT_TRUE(pentagon);
    EXPECT_TRUE(almost_red_blue_cycles(f.g, d, 1).truncated || l.cycles.size() <= 1);
}

TEST(ClassifyRs, Verdicts)
{
    const Loaded f2("fig2");
    for (const char* c : { "c0", "c1", "c2", "c3", "c4" }) {
        EXPECT_EQ(classify_rs(f2.g, f2.colouring(c)).status, RsStatus::RsNoCycle);
    }

    const Loaded f3("fig3");
    const ThreeColouring left = f3.colouring("c0");
    const ThreeColouring right = f3.colouring("c1");
    const std::vector<ThreeColouring> pool_left { right };
    const std::vector<ThreeColouring> pool_right { left };
    const RsVerdict vl = classify_rs(f3.g, left, &pool_left);
    const RsVerdict vr = classify_rs(f3.g, right, &pool_right);
    ASSERT_EQ(vl.status, RsStatus::RsCertified);
    ASSERT_EQ(vr.status, RsStatus::RsCertified);
    for (const Certification& c : vl.certified) {
        EXPECT_EQ(c.certificate, right);
        EXPECT_EQ(left[c.e1], left[c.e2]);
        EXPECT_NE(right[c.e1], right[c.e2]);
    }

    const Loaded f4("fig4_left");
    const RsVerdict v4 = classify_rs(f4.g, f4.colouring("c0"));
    EXPECT_EQ(v4.status, RsStatus::PseudoRsOnly);
    EXPECT_TRUE(v4.witness.has_value());

    const Loaded axial("c4_axial");
    EXPECT_EQ(classify_rs(axial.g, axial.parse("1-2: gold\n2-3: red\n3-4: gold\n1-4: blue\n")).status, RsStatus::NotPseudoRs);
}

TEST(ClassifyRs, CycleCapGivesUnknown)
{
    const Loaded f3("fig3");
    ClassifyOptions o;
    o.cycle_cap = 1;
    const std::vector<ThreeColouring> pool { f3.colouring("c1") };
    EXPECT_EQ(classify_rs(f3.g, f3.colouring("c0"), &pool, o).status, RsStatus::UnknownTruncated);
}

TEST(Enumerate, EightVertexGraphHasFiveUpToConjugation)
{
    const Loaded f("fig2");
    EnumerateOptions o;
    o.quotient_conjugation = true;
    const Enumeration e = enumerate_pseudo_rs(f.g, o);
    ASSERT_EQ(e.colourings.size(), 5U);
    std::set<ThreeColouring> enumerated(e.colourings.begin(), e.colourings.end());
    std::set<ThreeColouring> drawn;
    for (const char* c : { "c0", "c1", "c2", "c3", "c4" }) {
        drawn.insert(canonical(f.g, f.colouring(c)));
    }
    EXPECT_EQ(enumerated, drawn);
    EXPECT_TRUE(std::is_sorted(e.colourings.begin(), e.colourings.end()));
    EXPECT_EQ(enumerate_pseudo_rs(f.g).colourings.size(), 10U);
}

TEST(Enumerate, MatchesDefinitionFilterOnSmallFixtures)
{
    for (const char* name : { "c4_antipodal", "c4_axial", "c4_diagonal", "k3_mirror", "fig2", "fig4_left", "fig7" }) {
        const SymmetricGraph g = build_graph(fixture(name));
        std::vector<std::vector<Colour>> expected = oracle::enumerate_pseudo_rs(g);
        std::vector<std::vector<Colour>> got;
        for (const auto& d : enumerate_pseudo_rs(g).colourings) {
            got.push_back(d.colour);
        }
        EXPECT_EQ(got, expected) << name;
    }
}

TEST(Enumerate, PrunedPathIsIdenticalToReference)
{
    for (const std::string& name : fixture_names()) {
        const SymmetricGraph g = build_graph(fixture(name));
        if (candidate_count(g) > 3'000'000) {
            continue;
        }
        for (bool rs : { false, true }) {
            for (bool q : { false, true }) {
                EnumerateOptions slow;
                slow.rs_only = rs;
                slow.quotient_conjugation = q;
                EnumerateOptions fast = slow;
                fast.prune = true;
                EXPECT_EQ(enumerate_pseudo_rs(g, slow).colourings, enumerate_pseudo_rs(g, fast).colourings) << name;
            }
        }
    }
}

TEST(Enumerate, BudgetIsEnforced)
{
    const SymmetricGraph g = build_graph(fixture("fig2"));
    EnumerateOptions o;
    o.budget = 100;
    try {
        enumerate_pseudo_rs(g, o);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
    }
}

TEST(Enumerate, InvariantsOverAllFixtureColourings)
{
    for (const std::string& name : fixture_names()) {
        const SymmetricGraph g = build_graph(fixture(name));
        if (candidate_count(g) > 3'000'000) {
            continue;
        }
        EnumerateOptions o;
        o.prune = true;
        const auto all = enumerate_pseudo_rs(g, o).colourings;
        for (const ThreeColouring& d : all) {
            for (const auto& orbit : edge_orbits(g)) {
                if (orbit.is_invariant) {
                    EXPECT_EQ(d[orbit.representative], Colour::Gold) << name;
                }
            }
            const ThreeColouring c = conjugate(g, d);
            EXPECT_TRUE(is_pseudo_rs(g, c)) << name;
            const RsVerdict vd = classify_rs(g, d, &all);
            const RsVerdict vc = classify_rs(g, c, &all);
            EXPECT_EQ(vd.is_rs(), vc.is_rs()) << name;
            EXPECT_EQ(is_cartesian(g, d).ok, is_cartesian(g, c).ok) << name;
            for (std::size_t e = 0; e < d.colour.size(); ++e) {
                EXPECT_EQ(d.colour[e] == Colour::Gold, c.colour[e] == Colour::Gold);
            }
            if (is_cartesian(g, d)) {
                EXPECT_EQ(vd.status, RsStatus::RsNoCycle) << name;
            }
            EXPECT_EQ(is_cartesian(g, d).ok, oracle::is_cartesian(g.graph(), d.colour)) << name;
        }
    }
}

TEST(Cartesian, FourCycleDrawings)
{
    const Loaded diagonal("c4_diagonal");
    EXPECT_TRUE(is_cartesian(diagonal.g, diagonal.parse("1-2: red\n3-4: red\n2-3: blue\n1-4: blue\n")));
    const Loaded anti("c4_antipodal");
    const CartesianResult adjacent = is_cartesian(anti.g, anti.colouring("c0"));
    EXPECT_FALSE(adjacent);
    EXPECT_TRUE(adjacent.witness.has_value());
}

TEST(Cartesian, OnlySecondEightVertexColouring)
{
    const Loaded f("fig2");
    std::vector<std::string> cartesian;
    for (const char* c : { "c0", "c1", "c2", "c3", "c4" }) {
        if (is_cartesian(f.g, f.colouring(c))) {
            cartesian.emplace_back(c);
        }
    }
    EXPECT_EQ(cartesian, std::vector<std::string> { "c1" });
    const CartesianResult first = is_cartesian(f.g, f.colouring("c0"));
    ASSERT_TRUE(first.witness.has_value());
    const ThreeColouring d = f.colouring("c0");
    const auto [v, w] = *first.witness;
    EXPECT_TRUE(oracle::connected_within(f.g.graph(), v, w, d.colour, Colour::Red, Colour::Blue));
    EXPECT_TRUE(oracle::connected_within(f.g.graph(), v, w, d.colour, Colour::Red, Colour::Gold));
    EXPECT_TRUE(oracle::connected_within(f.g.graph(), v, w, d.colour, Colour::Blue, Colour::Gold));
}

TEST(Lift, NpExampleMatchesDrawing)
{
    const Graph g({ "a", "b", "c", "e", "f" },
        { { "a", "e" }, { "a", "f" }, { "b", "e" }, { "b", "f" }, { "e", "f" }, { "a", "c" }, { "b", "c" } });
    const TwoColouring nac = two(g, "a-e: red\na-f: red\nb-e: red\nb-f: red\ne-f: red\na-c: blue\nb-c: blue\n");
    ASSERT_TRUE(is_nac(g, nac));
    const LiftedColouring lifted = lift_nac_to_pseudo_rs(g, nac, g.edge_index("a", "f"));
    const Graph& h = lifted.glued.graph.graph();
    const ThreeColouring drawn = parse_colouring(h,
        "a-e: gold\na-f: gold\nb-e: gold\nb-f: gold\ne-f: gold\n"
        "a-e': gold\nb'-e': gold\nb'-f: gold\ne'-f: gold\n"
        "a-c: blue\nb-c: blue\na-c': red\nb'-c': red\n");
    EXPECT_EQ(lifted.colouring, drawn);
    EXPECT_TRUE(is_pseudo_rs(lifted.glued.graph, lifted.colouring));
    EXPECT_NE(classify_rs(lifted.glued.graph, lifted.colouring).status, RsStatus::PseudoRsOnly);
}

TEST(Lift, FourCycleAndRoundTrip)
{
    const Graph c4({ "1", "2", "3", "4" }, { { "1", "2" }, { "2", "3" }, { "3", "4" }, { "1", "4" } });
    for (const TwoColouring& nac : enumerate_nac(c4)) {
        for (EdgeIndex f = 0; f < 4; ++f) {
            const LiftedColouring lifted = lift_nac_to_pseudo_rs(c4, nac, f);
            const SymmetricGraph& h = lifted.glued.graph;
            EXPECT_EQ(h.edge_count(), 7U);
            int gold = 0;
            for (Colour c : lifted.colouring.colour) {
                gold += c == Colour::Gold ? 1 : 0;
            }
            EXPECT_EQ(gold, 3);
            EXPECT_TRUE(is_pseudo_rs(h, lifted.colouring));
            EXPECT_NE(classify_rs(h, lifted.colouring).status, RsStatus::PseudoRsOnly);
            const TwoColouring back = substitute_gold(lifted.colouring, Colour::Red);
            for (std::size_t e = 0; e < c4.edge_count(); ++e) {
                const Edge& ed = c4.edge(static_cast<EdgeIndex>(e));
                const auto he = h.graph().find_edge(lifted.glued.original[static_cast<std::size_t>(ed.u)],
                    lifted.glued.original[static_cast<std::size_t>(ed.v)]);
                const Colour expected = lifted.swapped ? swap_red_blue(nac.colour[e]) : nac.colour[e];
                EXPECT_EQ(back[*he], expected);
            }
        }
    }
    const TwoColouring bad { std::vector<Colour>(4, Colour::Red) };
    EXPECT_THROW(lift_nac_to_pseudo_rs(c4, bad, 0), Error);
}

TEST(ColouringText, RoundTrip)
{
    const Loaded f("fig3");
    const ThreeColouring d = f.colouring("c0");
    const std::string text = format_colouring(f.g.graph(), d.colour);
    EXPECT_EQ(parse_colouring(f.g.graph(), text), d);
    EXPECT_THROW(parse_colouring(f.g.graph(), "1-2: red\n"), Error);
    EXPECT_THROW(parse_colouring(f.g.graph(), text + "1-5: gold\n"), Error);
}
