#include "symflex/fixtures.hpp"
#include "symflex/flexes.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace symflex;

namespace {

struct Named {
    GraphDocument doc;
    SymmetricGraph g;
    explicit Named(const std::string& name)
        : doc(fixture(name))
        , g(build_graph(doc))
    {
    }
    ThreeColouring colouring(const std::string& name) const { return build_colouring(doc, g.graph(), name); }
    VertexIndex v(const std::string& id) const { return g.graph().vertex_index(id); }
};

// Explicit matrix form of p_t for a one-channel flex.
Vec2 closed_form(const ParametricFlex& f, VertexIndex v, double t)
{
    const auto i = static_cast<std::size_t>(v);
    const double c = std::cos(t);
    const double s = std::sin(t);
    const Vec2 a = f.a[i];
    const Vec2 m { -f.a_mirror[i].x, f.a_mirror[i].y };
    return { c * a.x - s * a.y + c * m.x + s * m.y + f.z[i].x, s * a.x + c * a.y - s * m.x + c * m.y + f.z[i].y };
}

double min_pair_distance(const std::vector<Vec2>& p)
{
    double best = INFINITY;
    for (std::size_t u = 0; u < p.size(); ++u) {
        for (std::size_t v = u + 1; v < p.size(); ++v) {
            best = std::min(best, norm(p[u] - p[v]));
        }
    }
    return best;
}

SymmetricGraph five_cycle()
{
    return validate_symmetry({ "u", "su", "x", "sx", "w" }, { { "u", "su" }, { "u", "x" }, { "x", "w" }, { "w", "sx" }, { "sx", "su" } },
        { { "u", "su" }, { "su", "u" }, { "x", "sx" }, { "sx", "x" } });
}

} // namespace

TEST(GridFlex, RhombusMatchesClosedForm)
{
    const Named c4("c4_antipodal");
    const ParametricFlex f = grid_flex(c4.g, c4.colouring("c0"), 3);
    EXPECT_EQ(f.kind, "grid");
    // Red edges 1-2, 2-3 tie 1, 2, 3 to one base point.
    EXPECT_EQ(f.a[0], f.a[1]);
    EXPECT_EQ(f.a[1], f.a[2]);
    EXPECT_NE(f.a[2], f.a[3]);
    const double side = norm(f.a[0] - f.a[3]);
    double lo = INFINITY;
    double hi = -INFINITY;
    for (const double t : uniform_grid(0.0, two_pi, 97)) {
        const std::vector<Vec2> p = f.realisation(t);
        for (std::size_t v = 0; v < 4; ++v) {
            EXPECT_NEAR(norm(p[v] - closed_form(f, static_cast<VertexIndex>(v), t)), 0.0, 1e-12);
        }
        for (const Edge& e : c4.g.graph().edges()) {
            EXPECT_NEAR(norm(p[static_cast<std::size_t>(e.u)] - p[static_cast<std::size_t>(e.v)]), side, 1e-12);
        }
        const double angle = signed_angle(p[1] - p[0], p[3] - p[2]);
        lo = std::min(lo, angle);
        hi = std::max(hi, angle);
    }
    EXPECT_GT(hi - lo, 1.0);
    const FlexReport r = verify_flex(c4.g, f);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.symmetry_residual, 0.0);
}

TEST(GridFlex, EdgeLengthsFollowTheirColour)
{
    const Named fig("fig2");
    for (const char* name : { "c0", "c1", "c2", "c3", "c4" }) {
        const ThreeColouring d = fig.colouring(name);
        const ParametricFlex f = grid_flex(fig.g, d, 11);
        for (const double t : { 0.0, 0.7, 2.9, 5.5 }) {
            const std::vector<Vec2> p = f.realisation(t);
            for (std::size_t e = 0; e < fig.g.edge_count(); ++e) {
                const Edge& ed = fig.g.graph().edge(static_cast<EdgeIndex>(e));
                const auto u = static_cast<std::size_t>(ed.u);
                const auto v = static_cast<std::size_t>(ed.v);
                const double expected = d.colour[e] == Colour::Red ? norm(f.a_mirror[u] - f.a_mirror[v])
                    : d.colour[e] == Colour::Blue                  ? norm(f.a[u] - f.a[v])
                                                                   : norm(f.z[u] - f.z[v]);
                EXPECT_NEAR(norm(p[u] - p[v]), expected, 1e-12) << name << " " << fig.g.graph().edge_key(static_cast<EdgeIndex>(e));
            }
        }
        EXPECT_TRUE(verify_flex(fig.g, f).passed()) << name;
    }
}

TEST(GridFlex, InjectiveExactlyForCartesianColourings)
{
    const Named fig("fig2");
    int injective = 0;
    for (const char* name : { "c0", "c1", "c2", "c3", "c4" }) {
        const ThreeColouring d = fig.colouring(name);
        const ParametricFlex f = grid_flex(fig.g, d, 5);
        const bool distinct = min_pair_distance(f.realisation(0.0)) > 1e-9;
        EXPECT_EQ(distinct, is_cartesian(fig.g, d).ok) << name;
        injective += distinct ? 1 : 0;
    }
    EXPECT_EQ(injective, 1);
}

TEST(GridFlex, DeterministicPerSeed)
{
    const Named fig("fig2");
    const ThreeColouring d = fig.colouring("c3");
    const ParametricFlex a = grid_flex(fig.g, d, 42);
    const ParametricFlex b = grid_flex(fig.g, d, 42);
    EXPECT_EQ(a.a, b.a);
    EXPECT_EQ(a.z, b.z);
}

TEST(GridFlex, RefusesColouringsWithCyclesOrWithoutRs)
{
    const Named k3("k3_mirror");
    ThreeColouring d { { Colour::Red, Colour::Blue, Colour::Gold } };
    try {
        grid_flex(k3.g, d);
        FAIL() << "expected NotRSNoCycle";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotRsNoCycle);
    }
    const Named fig3("fig3");
    EXPECT_THROW(grid_flex(fig3.g, fig3.colouring("c0")), Error);
}

TEST(GridFlex, EveryCycleFreeRsColouringOfSmallFixtures)
{
    for (const char* name : { "fig2", "fig4_right", "fig6", "c4_antipodal", "c4_diagonal", "gadget" }) {
        const Named fx(name);
        EnumerateOptions o;
        o.rs_only = true;
        o.prune = true;
        for (const ThreeColouring& d : enumerate_pseudo_rs(fx.g, o).colourings) {
            if (classify_rs(fx.g, d).status != RsStatus::RsNoCycle) {
                continue;
            }
            const FlexReport r = verify_flex(fx.g, grid_flex(fx.g, d, 1));
            EXPECT_TRUE(r.passed()) << name << "\n" << format_colouring(fx.g.graph(), d.colour);
        }
    }
}

TEST(DoubleConditions, CertifyingPairOfEighteenVertexGraph)
{
    const Named fig("fig3");
    const DoubleConditions c = check_double_conditions(fig.g, fig.colouring("c0"), fig.colouring("c1"), fig.v("3"));
    EXPECT_TRUE(c.pseudo_rs);
    EXPECT_TRUE(c.certificates);
    EXPECT_TRUE(c.same_gold);
    ASSERT_TRUE(c.five_cycle.has_value());
    EXPECT_TRUE(c.path_colours);
    EXPECT_TRUE(c.all_combinations);
    EXPECT_FALSE(c.truncated);
    EXPECT_TRUE(c.ok());
    const std::set<VertexIndex> gold_ends { fig.v("1"), fig.v("5") };
    EXPECT_TRUE(gold_ends.contains(c.five_cycle->ubar));
    EXPECT_EQ(c.n_side.size(), 2U);
    EXPECT_NE(std::ranges::find(c.n_side, c.five_cycle->x), c.n_side.end());
}

TEST(DoubleConditions, NoAllCombinationsInTwentyOneVertexGraph)
{
    const Named fig("fig10");
    const DoubleConditions c = check_double_conditions(fig.g, fig.colouring("c0"), fig.colouring("c1"), fig.v("w"));
    EXPECT_TRUE(c.pseudo_rs);
    EXPECT_TRUE(c.same_gold);
    EXPECT_TRUE(c.five_cycle.has_value());
    EXPECT_FALSE(c.n_side.empty());
    EXPECT_FALSE(c.all_combinations);
    ASSERT_TRUE(c.combination_witness.has_value());
    EXPECT_EQ(c.combination_witness->vertices.front(), fig.v("w"));
    EXPECT_FALSE(c.ok());
}

TEST(DoubleConditions, BareFiveCycle)
{
    const SymmetricGraph g = five_cycle();
    const ThreeColouring d1 = parse_colouring(g.graph(), "su-u: gold\nu-x: blue\nw-x: red\nsx-w: blue\nsu-sx: red\n");
    const ThreeColouring d2 = parse_colouring(g.graph(), "su-u: gold\nu-x: blue\nw-x: blue\nsx-w: red\nsu-sx: red\n");
    const DoubleConditions c = check_double_conditions(g, d1, d2, g.graph().vertex_index("w"));
    EXPECT_TRUE(c.ok());
    const ParametricFlex f = double_flex(g, d1, d2, g.graph().vertex_index("w"), { .seed = 2 });
    EXPECT_TRUE(verify_flex(g, f).passed());
    EXPECT_THROW(check_double_conditions(g, d1, d2, g.graph().vertex_index("x")), Error);
}

TEST(DoubleFlex, EighteenVertexGraphFlexes)
{
    const Named fig("fig3");
    const VertexIndex w = fig.v("3");
    for (const bool mirrored : { false, true }) {
        DoubleOptions o;
        o.seed = 9;
        o.mirrored_branch = mirrored;
        const ParametricFlex f = double_flex(fig.g, fig.colouring("c0"), fig.colouring("c1"), w, o);
        ASSERT_TRUE(f.reparametrisation.has_value());
        EXPECT_EQ(f.reparametrisation->mirrored, mirrored);
        EXPECT_GE(f.t_min, 0.0);
        EXPECT_LE(f.t_max, two_pi);
        const FlexReport r = verify_flex(fig.g, f, 400);
        EXPECT_TRUE(r.passed()) << r.length_variation << " " << r.symmetry_residual << " " << r.min_edge_gap;
        for (const FlexSample& s : sample_flex(f, 200)) {
            EXPECT_LE(std::abs(s.p[static_cast<std::size_t>(w)].x), 1e-9);
            ASSERT_TRUE(s.s.has_value());
        }
    }
}

TEST(DoubleFlex, RefusedWhenConditionsFailAndForcedFlexCollapses)
{
    const Named fig("fig10");
    const ThreeColouring d1 = fig.colouring("c0");
    const ThreeColouring d2 = fig.colouring("c1");
    try {
        double_flex(fig.g, d1, d2, fig.v("w"));
        FAIL() << "expected ConditionsFailed";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ConditionsFailed);
    }
    DoubleOptions o;
    o.force = true;
    const ParametricFlex f = double_flex(fig.g, d1, d2, fig.v("w"), o);
    const std::vector<Vec2> p = f.realisation(0.5 * (f.t_min + f.t_max));
    const Graph& g = fig.g.graph();
    for (const auto& [a, b] : { std::pair { "1l", "2l" }, { "1r", "2r" } }) {
        EXPECT_LT(norm(p[static_cast<std::size_t>(g.vertex_index(a))] - p[static_cast<std::size_t>(g.vertex_index(b))]), 1e-12);
    }
    EXPECT_FALSE(verify_flex(fig.g, f).gaps_ok());
}

TEST(DoubleFlex, ReparametrisationKeepsTheSplitVertexOnTheAxis)
{
    const Reparametrisation half_turn { M_PI, 0.0, false };
    const double s = half_turn(0.0);
    EXPECT_TRUE(std::isfinite(s));
    EXPECT_NEAR(2.0 * std::cos(0.0 + M_PI) + 2.0 * std::cos(s) + 1.0, 0.0, 1e-12);
    for (const double alpha : { -1.0, 0.0, 0.9 }) {
        for (const bool mirrored : { false, true }) {
            const Reparametrisation r { alpha, 0.4, mirrored };
            for (const double t : uniform_grid(M_PI / 3 - alpha + 1e-6, 5 * M_PI / 3 - alpha - 1e-6, 50)) {
                EXPECT_NEAR(2.0 * std::cos(t + alpha) + 2.0 * std::cos(r(t) + 0.4) + 1.0, 0.0, 1e-9);
            }
        }
    }
}

TEST(SplitVertex, SidesAndOrigins)
{
    const SymmetricGraph g = five_cycle();
    const SplitGraph s = split_vertex(g, g.graph().vertex_index("w"), { g.graph().vertex_index("x") });
    EXPECT_EQ(s.graph.vertex_count(), 6U);
    EXPECT_EQ(s.graph.edge_count(), 5U);
    EXPECT_EQ(s.graph.sigma(s.w1), s.w2);
    EXPECT_TRUE(s.graph.graph().find_edge(s.w1, s.graph.graph().vertex_index("x")).has_value());
    EXPECT_TRUE(s.graph.graph().find_edge(s.w2, s.graph.graph().vertex_index("sx")).has_value());
    EXPECT_FALSE(is_connected(s.graph.graph()) && s.graph.graph().find_edge(s.w1, s.w2));
    for (std::size_t e = 0; e < s.origin.size(); ++e) {
        EXPECT_GE(s.origin[e], 0);
    }
}

TEST(WalkIndepFlex, RhombusStartsAtItsRealisation)
{
    const Framework fw = build_framework(fixture("c4_diagonal"));
    const ApcPartition apc = angle_preserving_classes(fw.graph());
    const ThreeColouring d = cartesian_from_apc(fw.graph(), apc, *noninvariant_apc(apc));
    const ParametricFlex f = walkindep_flex(fw, d);
    const std::vector<Vec2> p0 = f.realisation(0.0);
    for (std::size_t v = 0; v < p0.size(); ++v) {
        EXPECT_LE(norm(p0[v] - fw.p()[v]), 1e-9);
    }
    const FlexReport r = verify_flex(fw.graph(), f);
    EXPECT_TRUE(r.passed());
    for (const double t : { 0.3, 1.9 }) {
        const std::vector<Vec2> p = f.realisation(t);
        for (const Edge& e : fw.graph().graph().edges()) {
            EXPECT_NEAR(norm(p[static_cast<std::size_t>(e.u)] - p[static_cast<std::size_t>(e.v)]), std::sqrt(2.0), 1e-12);
        }
    }
}

TEST(WalkIndepFlex, ParallelogramGridShear)
{
    StripOptions so;
    so.rows = 2;
    so.columns = 2;
    const Framework fw = build_framework(strip_fixture(so));
    const ApcPartition apc = angle_preserving_classes(fw.graph());
    const auto r = noninvariant_apc(apc);
    ASSERT_TRUE(r.has_value());
    const ThreeColouring d = cartesian_from_apc(fw.graph(), apc, *r);
    const ParametricFlex f = walkindep_flex(fw, d);
    const std::vector<Vec2> p0 = f.realisation(0.0);
    for (std::size_t v = 0; v < p0.size(); ++v) {
        EXPECT_LE(norm(p0[v] - fw.p()[v]), 1e-9);
    }
    const FlexReport rep = verify_flex(fw.graph(), f);
    EXPECT_TRUE(rep.passed()) << rep.length_variation << " " << rep.symmetry_residual << " " << rep.min_edge_gap << " " << rep.nontriviality;
    // Red edges turn by t, blue edges by -t; gold edges keep their vector.
    const double t = 0.8;
    const std::vector<Vec2> p = f.realisation(t);
    for (std::size_t e = 0; e < fw.graph().edge_count(); ++e) {
        const Edge& ed = fw.graph().graph().edge(static_cast<EdgeIndex>(e));
        const Vec2 before = fw.p()[static_cast<std::size_t>(ed.v)] - fw.p()[static_cast<std::size_t>(ed.u)];
        const Vec2 after = p[static_cast<std::size_t>(ed.v)] - p[static_cast<std::size_t>(ed.u)];
        const double turn = d.colour[e] == Colour::Red ? -t : d.colour[e] == Colour::Blue ? t : 0.0;
        EXPECT_LE(norm(after - rotate(turn, before)), 1e-9) << fw.graph().graph().edge_key(static_cast<EdgeIndex>(e));
    }
}

TEST(WalkIndepFlex, Refusals)
{
    const Named c4("c4_antipodal");
    std::vector<Vec2> trapezoid { { -2, 0 }, { -1, 1 }, { 2, 0 }, { 1, 1 } };
    const Framework twisted(c4.g, trapezoid);
    try {
        walkindep_flex(twisted, c4.colouring("c0"));
        FAIL() << "expected NotWalkIndependent";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotWalkIndependent);
    }
    const Framework fw = build_framework(fixture("fig7"));
    const Named fig("fig2");
    try {
        walkindep_flex(fw, fig.colouring("c0"));
        FAIL() << "expected NotCartesian";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotCartesian);
    }
    const ParametricFlex f = walkindep_flex(fw, fig.colouring("c1"));
    EXPECT_TRUE(verify_flex(fw.graph(), f).passed());
}

TEST(VerifyFlex, FailureModes)
{
    const Named c4("c4_antipodal");
    const ParametricFlex good = grid_flex(c4.g, c4.colouring("c0"));

    ParametricFlex constant = good;
    const std::vector<Vec2> p = good.realisation(0.0);
    for (std::size_t v = 0; v < 4; ++v) {
        constant.a[v] = constant.a_mirror[v] = Vec2 {};
        constant.z[v] = p[v];
    }
    const FlexReport rc = verify_flex(c4.g, constant);
    EXPECT_TRUE(rc.lengths_ok());
    EXPECT_TRUE(rc.symmetric());
    EXPECT_TRUE(rc.gaps_ok());
    EXPECT_FALSE(rc.nontrivial());

    ParametricFlex collided = good;
    collided.a[3] = collided.a[0];
    collided.a_mirror[1] = collided.a_mirror[0];
    EXPECT_FALSE(verify_flex(c4.g, collided).gaps_ok());

    EXPECT_THROW(verify_flex(c4.g, good, 1), Error);
    const Named fig("fig2");
    EXPECT_THROW(verify_flex(fig.g, good), Error);
}

TEST(SampleFlex, Shapes)
{
    const Named c4("c4_antipodal");
    const ParametricFlex f = grid_flex(c4.g, c4.colouring("c0"));
    const auto one = sample_flex(f, 1);
    ASSERT_EQ(one.size(), 1U);
    EXPECT_EQ(one[0].t, f.t_min);
    EXPECT_EQ(one[0].p, f.realisation(f.t_min));
    EXPECT_FALSE(one[0].s.has_value());

    const auto four = sample_flex(f, 4);
    ASSERT_EQ(four.size(), 4U);
    EXPECT_EQ(four.back().t, f.t_max);
    const double side = norm(four[0].p[0] - four[0].p[1]);
    for (const FlexSample& s : four) {
        for (const Edge& e : c4.g.graph().edges()) {
            EXPECT_NEAR(norm(s.p[static_cast<std::size_t>(e.u)] - s.p[static_cast<std::size_t>(e.v)]), side, 1e-12);
        }
    }
    EXPECT_THROW(sample_flex(f, 0), Error);
}
