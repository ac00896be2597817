#include "symflex/fixtures.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace symflex {

namespace {

    using EdgeList = std::vector<std::pair<VertexId, VertexId>>;
    using Coordinates = std::vector<std::pair<VertexId, Vec2>>;

    struct Builder {
        std::vector<VertexId> vertices;
        EdgeList edges;
        std::vector<std::pair<VertexId, VertexId>> sigma;
        Coordinates coordinates;
        std::vector<std::pair<std::string, std::string>> colourings;

        void swap(const VertexId& a, const VertexId& b)
        {
            sigma.emplace_back(a, b);
            sigma.emplace_back(b, a);
        }

        GraphDocument finish(std::string provenance) const
        {
            const SymmetricGraph g = validate_symmetry(vertices, edges, sigma);
            GraphDocument doc = make_document(g, std::move(provenance));
            if (!coordinates.empty()) {
                std::vector<Vec2> p(g.vertex_count());
                for (const auto& [id, xy] : coordinates) {
                    p[static_cast<std::size_t>(g.graph().vertex_index(id))] = xy;
                }
                set_realisation(doc, g.graph(), p);
            }
            for (const auto& [name, text] : colourings) {
                set_colouring(doc, g.graph(), name, parse_colouring(g.graph(), text));
            }
            return doc;
        }
    };

    EdgeList parse_edges(std::string_view text)
    {
        EdgeList out;
        std::istringstream in { std::string(text) };
        std::string token;
        while (in >> token) {
            const auto dash = token.find('-');
            out.emplace_back(token.substr(0, dash), token.substr(dash + 1));
        }
        return out;
    }

    /// Colouring text from three whitespace-separated edge lists.
    std::string colouring_text(std::string_view gold, std::string_view blue, std::string_view red)
    {
        std::string out;
        auto add = [&](std::string_view list, std::string_view colour) {
            for (const auto& [a, b] : parse_edges(list)) {
                out += a + "-" + b + ": " + std::string(colour) + "\n";
            }
        };
        add(gold, "gold");
        add(blue, "blue");
        add(red, "red");
        return out;
    }

    Vec2 polar(double degrees, double r)
    {
        const double rad = degrees * std::numbers::pi / 180.0;
        return { r * std::cos(rad), r * std::sin(rad) };
    }

    Vec2 rotate_about(Vec2 centre, double degrees, Vec2 v)
    {
        return centre + rotate(degrees * std::numbers::pi / 180.0, v - centre);
    }

    GraphDocument c4(const std::vector<std::pair<VertexId, VertexId>>& swaps, const Coordinates& coordinates,
        const std::string& provenance)
    {
        Builder b;
        b.vertices = { "1", "2", "3", "4" };
        b.edges = parse_edges("1-2 2-3 3-4 1-4");
        for (const auto& [x, y] : swaps) {
            b.swap(x, y);
        }
        b.coordinates = coordinates;
        return b.finish(provenance);
    }

    GraphDocument eight_vertex(const Coordinates& coordinates, const std::string& provenance, bool with_colourings)
    {
        Builder b;
        b.vertices = { "1", "2", "3", "4", "5", "6", "7", "8" };
        b.edges = parse_edges("1-2 1-3 1-4 2-3 2-8 3-5 3-7 4-5 5-6 6-7 7-8");
        b.swap("1", "2");
        b.swap("4", "8");
        b.swap("5", "7");
        b.coordinates = coordinates;
        if (with_colourings) {
            b.colourings = {
                { "c0", colouring_text("1-2 1-3 2-3 4-5 7-8", "1-4 3-5 5-6", "2-8 3-7 6-7") },
                { "c1", colouring_text("1-2 1-3 2-3 4-5 7-8", "1-4 3-5 6-7", "2-8 3-7 5-6") },
                { "c2", colouring_text("1-2 1-3 2-3 3-5 3-7 5-6 6-7", "1-4 4-5", "2-8 7-8") },
                { "c3", colouring_text("1-2 1-3 1-4 2-3 2-8", "3-5 4-5 5-6", "3-7 6-7 7-8") },
                { "c4", colouring_text("1-2 1-3 1-4 2-3 2-8", "3-5 4-5 6-7", "3-7 5-6 7-8") },
            };
        }
        return b.finish(provenance);
    }

    GraphDocument fig2()
    {
        return eight_vertex({ { "1", { -0.51, 0 } }, { "2", { 0.51, 0 } }, { "3", { 0, 0.74 } }, { "4", { -1.35, 0.56 } },
                                { "5", { -0.76, 1.4 } }, { "6", { 0, 2.1 } }, { "7", { 0.76, 1.4 } }, { "8", { 1.35, 0.56 } } },
            "transcribed drawing: eight-vertex graph with its five pseudo-RS-colourings up to conjugation", true);
    }

    GraphDocument fig7()
    {
        const Vec2 a1 = polar(70.0, 1.25);
        const Vec2 sa1 = mirror(a1);
        const Vec2 d1 { 0, 0.75 };
        const Vec2 dt1 { 0.5, 0 };
        return eight_vertex({ { "1", Vec2 {} - dt1 }, { "2", dt1 }, { "3", d1 }, { "4", sa1 - dt1 }, { "5", sa1 + d1 },
                                { "6", a1 + sa1 + d1 }, { "7", a1 + d1 }, { "8", a1 + dt1 } },
            "transcribed drawing: walk-independent realisation of the eight-vertex graph", false);
    }

    GraphDocument fig3()
    {
        Builder b;
        b.coordinates = {
            { "1", { 0.6, -0.8 } }, { "2", { 0.9, 0.3 } }, { "3", { 0, 1.8 } }, { "4", { -0.9, 0.3 } },
            { "5", { -0.6, -0.8 } }, { "6", { 1.4, -0.5 } }, { "7", { -1.4, -0.5 } }, { "8", { 0, -1.8 } },
            { "1a", { 1.6, -1.5 } }, { "2a", { 1.9, -0.4 } }, { "6a", { 2.4, -1.2 } }, { "5a", { -1.6, -1.5 } },
            { "4a", { -1.9, -0.4 } }, { "7a", { -2.4, -1.2 } }, { "8b", { 1, -2.5 } }, { "5b", { 0.4, -1.5 } },
            { "8c", { -1, -2.5 } }, { "1c", { -0.4, -1.5 } },
        };
        for (const auto& [id, xy] : b.coordinates) {
            b.vertices.push_back(id);
        }
        const std::string gold = "1-5 8-5 1-8 1a-5b 8b-5b 1a-8b 1c-5a 8c-5a 1c-8c";
        const std::string left_blue = "4-3 4a-3 2-1 6-1 2-6 2a-1a 6a-1a 2a-6a 4-4a 5-5a 7-7a 8-8c 1-1c";
        const std::string left_red = "2-3 2a-3 5-4 7-5 4-7 1-1a 2-2a 6-6a 5a-4a 7a-5a 4a-7a 8-8b 5-5b";
        const std::string right_blue = "2-1 6-1 2-6 2a-1a 6a-1a 2a-6a 2-3 2a-3 2-2a 1-1a 8-8b 5-5b 6-6a";
        const std::string right_red = "5-4 7-5 4-7 5a-4a 7a-5a 4a-7a 4-4a 4-3 4a-3 8-8c 5-5a 7-7a 1-1c";
        b.edges = parse_edges(gold + " " + left_blue + " " + left_red);
        for (const auto& [x, y] : { std::pair { "1", "5" }, { "2", "4" }, { "6", "7" }, { "1a", "5a" }, { "2a", "4a" },
                 { "6a", "7a" }, { "8b", "8c" }, { "5b", "1c" } }) {
            b.swap(x, y);
        }
        b.colourings = {
            { "c0", colouring_text(gold, left_blue, left_red) },
            { "c1", colouring_text(gold, right_blue, right_red) },
        };
        return b.finish("transcribed drawing: two RS-colourings certifying each other, axis vertex 3");
    }

    const std::vector<Vec2>& pentagon()
    {
        static const std::vector<Vec2> p {
            { 0.587785, -0.809017 }, { 0.951057, 0.309017 }, { 0, 1 }, { -0.951057, 0.309017 },
            { -0.587785, -0.809017 }, { 0.2, 0.125 }, { -0.2, 0.125 },
        };
        return p;
    }

    constexpr std::string_view pentagon_edges = "1-2 2-3 3-4 4-5 1-5 1-6 2-6 3-6 4-7 5-7 3-7";
    constexpr std::string_view pentagon_gold = "1-5";
    constexpr std::string_view pentagon_blue = "2-3 1-2 1-6 2-6 3-6";
    constexpr std::string_view pentagon_red = "3-4 4-5 4-7 5-7 3-7";
    constexpr std::string_view braced_edges = "1-2 2-3 3-4 4-5 1-6 2-6 3-6 4-7 5-7 3-7 1-8 1-9 5-8 5-9 8-9";
    constexpr std::string_view braced_gold = "1-8 1-9 5-8 5-9 8-9";

    GraphDocument fig4_left()
    {
        Builder b;
        for (int i = 1; i <= 7; ++i) {
            b.vertices.push_back(std::to_string(i));
            b.coordinates.emplace_back(std::to_string(i), pentagon()[static_cast<std::size_t>(i - 1)]);
        }
        b.edges = parse_edges(pentagon_edges);
        b.swap("1", "5");
        b.swap("2", "4");
        b.swap("6", "7");
        b.colourings = { { "c0", colouring_text(pentagon_gold, pentagon_blue, pentagon_red) } };
        return b.finish("transcribed drawing: pentagon gadget whose pseudo-RS-colouring is not RS");
    }

    /// Two rotated pentagon gadgets joined by an invariant edge a-b; the
    /// left copy's vertex 5 is b and the right copy's vertex 1 is a.
    Builder twin_gadgets(bool with_diamond)
    {
        Builder b;
        const Vec2 a = pentagon()[0];
        const Vec2 bb = pentagon()[4];
        const std::vector<int> m { 0, 5, 4, 3, 2, 1, 7, 6, 8, 9 };
        auto left = [](int i) { return i == 5 ? std::string("b") : "l" + std::to_string(i); };
        auto right = [](int i) { return i == 1 ? std::string("a") : "r" + std::to_string(i); };
        const int count = with_diamond ? 9 : 7;
        std::vector<Vec2> local = pentagon();
        if (with_diamond) {
            const Vec2 mid = (local[0] + local[4]) * 0.5;
            local.push_back(mid + Vec2 { 0, 0.2 });
            local.push_back(mid + Vec2 { 0, -0.2 });
        }
        b.vertices = { "a", "b" };
        b.coordinates = { { "a", a }, { "b", bb } };
        b.edges = { { "a", "b" } };
        b.swap("a", "b");
        for (int i = 1; i <= count; ++i) {
            const Vec2 pl = rotate_about(bb, 60.0, local[static_cast<std::size_t>(i - 1)]);
            const Vec2 pr = rotate_about(a, -60.0, local[static_cast<std::size_t>(i - 1)]);
            if (i != 5) {
                b.vertices.push_back(left(i));
                b.coordinates.emplace_back(left(i), pl);
                b.swap(left(i), right(m[static_cast<std::size_t>(i)]));
            }
            if (i != 1) {
                b.vertices.push_back(right(i));
                b.coordinates.emplace_back(right(i), pr);
            }
        }
        std::string edges(with_diamond ? braced_edges : pentagon_edges);
        for (const auto& [x, y] : parse_edges(edges)) {
            b.edges.emplace_back(left(std::stoi(x)), left(std::stoi(y)));
            b.edges.emplace_back(right(std::stoi(x)), right(std::stoi(y)));
        }
        std::string gold = "a-b";
        std::string blue;
        std::string red;
        for (auto [list, target] : { std::pair { with_diamond ? braced_gold : pentagon_gold, &gold }, { pentagon_blue, &blue }, { pentagon_red, &red } }) {
            for (const auto& [x, y] : parse_edges(list)) {
                for (auto name : { +left, +right }) {
                    *target += " " + name(std::stoi(x)) + "-" + name(std::stoi(y));
                }
            }
        }
        b.colourings = { { "c0", colouring_text(gold, blue, red) } };
        return b;
    }

    GraphDocument fig4_right()
    {
        return twin_gadgets(false).finish("transcribed drawing: two rotated pentagon gadgets joined by an invariant edge");
    }

    GraphDocument fig6()
    {
        return twin_gadgets(true).finish("transcribed drawing: two braced pentagon gadgets joined by an invariant edge");
    }

    GraphDocument fig10()
    {
        Builder b;
        const Vec2 l1 { -2, 0 };
        const Vec2 r1 { 2, 0 };
        const Vec2 l2 = l1 + polar(108, 4);
        const Vec2 r2 = r1 + polar(72, 4);
        const Vec2 w = r2 + polar(144, 4);
        const Vec2 l3 = w + polar(-110, 3);
        const Vec2 r3 = w + polar(-70, 3);
        const Vec2 l4 = l3 + polar(200, 0.75);
        const Vec2 r4 = r3 + polar(-20, 0.75);
        const Vec2 l5 = l4 + polar(180, 0.5);
        const Vec2 r5 = r4 + polar(0, 0.5);
        const Vec2 l6 = l5 + polar(140, 0.5);
        const Vec2 r6 = r5 + polar(40, 0.5);
        const Vec2 l8 { -1, 1.2 };
        const Vec2 r8 { 1, 1.2 };
        const Vec2 l7 = l8 + polar(140, 1.2);
        const Vec2 r7 = r8 + polar(40, 1.2);
        const Vec2 l9 = l8 + polar(30, 1.8);
        const Vec2 r9 = r8 + polar(150, 1.8);
        const Vec2 l10 = l9 + polar(30, 0.75);
        const Vec2 r10 = r9 + polar(150, 0.75);
        b.coordinates = {
            { "1l", l1 }, { "1r", r1 }, { "2l", l2 }, { "2r", r2 }, { "w", w }, { "3l", l3 }, { "3r", r3 },
            { "4l", l4 }, { "4r", r4 }, { "5l", l5 }, { "5r", r5 }, { "6l", l6 }, { "6r", r6 }, { "7l", l7 },
            { "7r", r7 }, { "8l", l8 }, { "8r", r8 }, { "9l", l9 }, { "9r", r9 }, { "10l", l10 }, { "10r", r10 },
        };
        for (const auto& [id, xy] : b.coordinates) {
            b.vertices.push_back(id);
            if (id != "w" && id.back() == 'l') {
                b.swap(id, id.substr(0, id.size() - 1) + "r");
            }
        }
        const std::string gold = "1l-1r 8r-9r 8l-9l";
        const std::string red0 = "1l-2l 2r-w 3r-w 3r-4r 6r-2r 3r-7r 7r-8r 3r-10l 9l-10l 4l-5l 5l-6l";
        const std::string blue0 = "1r-2r 2l-w 3l-w 3l-4l 6l-2l 3l-7l 7l-8l 3l-10r 9r-10r 4r-5r 5r-6r";
        const std::string red1 = "1r-2r 2r-w 3r-w 3l-4l 4r-5r 5r-6r 6l-2l 3l-7l 7r-8r 3r-10l 9l-10l";
        const std::string blue1 = "1l-2l 2l-w 3l-w 3r-4r 4l-5l 5l-6l 6r-2r 3r-7r 7l-8l 3l-10r 9r-10r";
        b.edges = parse_edges(gold + " " + red0 + " " + blue0);
        b.colourings = {
            { "c0", colouring_text(gold, blue0, red0) },
            { "c1", colouring_text(gold, blue1, red1) },
        };
        return b.finish("transcribed drawing: two RS-colourings sharing gold edges where the split flex degenerates");
    }

    GraphDocument fig5_lift()
    {
        const Graph g({ "a", "b", "c", "e", "f" }, parse_edges("a-e a-f b-e b-f e-f a-c b-c"));
        TwoColouring nac { std::vector<Colour>(g.edge_count(), Colour::Red) };
        nac.colour[static_cast<std::size_t>(g.edge_index("a", "c"))] = Colour::Blue;
        nac.colour[static_cast<std::size_t>(g.edge_index("b", "c"))] = Colour::Blue;
        const LiftedColouring lifted = lift_nac_to_pseudo_rs(g, nac, g.edge_index("a", "f"));
        const SymmetricGraph& h = lifted.glued.graph;
        GraphDocument doc = make_document(h, "transcribed drawing: NAC-colouring of a five-vertex graph lifted to its double");
        std::vector<Vec2> p(h.vertex_count());
        const std::vector<std::pair<VertexId, Vec2>> base {
            { "a", polar(90, 1) }, { "b", polar(-30, 1) }, { "c", polar(30, 2) }, { "e", polar(30, 1) }, { "f", { 0, 0 } },
        };
        for (const auto& [id, xy] : base) {
            const VertexIndex v = g.vertex_index(id);
            p[static_cast<std::size_t>(lifted.glued.original[static_cast<std::size_t>(v)])] = xy;
            p[static_cast<std::size_t>(lifted.glued.mirrored[static_cast<std::size_t>(v)])] = mirror(xy);
        }
        set_realisation(doc, h.graph(), p);
        set_colouring(doc, h.graph(), "c0", lifted.colouring);
        return doc;
    }

    GraphDocument triangle_chain()
    {
        Builder b;
        b.vertices = { "u", "a", "sa", "b", "sb", "c", "sc", "e" };
        b.edges = parse_edges("u-a u-sa a-sa a-b a-sb b-sb sa-sb sa-b u-c c-e e-sc sc-u");
        b.swap("a", "sa");
        b.swap("b", "sb");
        b.swap("c", "sc");
        return b.finish("generated gadget: invariant apex over a forced-gold K4 with a four-cycle tail");
    }

} // namespace

std::vector<std::string> fixture_names()
{
    return { "c4_antipodal", "c4_axial", "c4_diagonal", "k3_mirror", "fig2", "fig3", "fig4_left", "fig4_right",
        "fig5_lift", "fig6", "fig7", "fig10", "gk", "strip", "gadget" };
}

GraphDocument fixture(std::string_view name)
{
    if (name == "c4_antipodal") {
        GraphDocument doc = c4({ { "1", "3" }, { "2", "4" } }, {}, "generated: four-cycle with fixed-point-free mirror");
        const SymmetricGraph g = build_graph(doc);
        set_colouring(doc, g.graph(), "c0", parse_colouring(g.graph(), "1-2: red\n2-3: red\n3-4: blue\n1-4: blue\n"));
        return doc;
    }
    if (name == "c4_axial") {
        return c4({ { "1", "2" }, { "3", "4" } },
            { { "1", { -1, -1 } }, { "2", { 1, -1 } }, { "3", { 1, 1 } }, { "4", { -1, 1 } } },
            "generated: square whose mirror fixes edges 1-2 and 3-4");
    }
    if (name == "c4_diagonal") {
        return c4({ { "1", "3" } }, { { "1", { -1, 0 } }, { "2", { 0, 1 } }, { "3", { 1, 0 } }, { "4", { 0, -1 } } },
            "generated: rhombus whose mirror fixes vertices 2 and 4");
    }
    if (name == "k3_mirror") {
        Builder b;
        b.vertices = { "1", "2", "3" };
        b.edges = parse_edges("1-2 1-3 2-3");
        b.swap("2", "3");
        b.coordinates = { { "1", { 0, 1 } }, { "2", { -1, 0 } }, { "3", { 1, 0 } } };
        return b.finish("generated: triangle with mirror (2 3)");
    }
    if (name == "fig2") {
        return fig2();
    }
    if (name == "fig3") {
        return fig3();
    }
    if (name == "fig4_left") {
        return fig4_left();
    }
    if (name == "fig4_right") {
        return fig4_right();
    }
    if (name == "fig5_lift") {
        return fig5_lift();
    }
    if (name == "fig6") {
        return fig6();
    }
    if (name == "fig7") {
        return fig7();
    }
    if (name == "fig10") {
        return fig10();
    }
    if (name == "gk") {
        return gk_fixture(3);
    }
    if (name == "strip") {
        return strip_fixture({});
    }
    if (name == "gadget") {
        return gadget_fixture("triangle-chain");
    }
    throw Error(ErrorCode::InvalidArgument, "unknown fixture '" + std::string(name) + "'", std::string(name));
}

GraphDocument gk_fixture(int k)
{
    return make_document(gk_graph(k), "generated: G_k family with k = " + std::to_string(k));
}

GraphDocument gadget_fixture(std::string_view name)
{
    if (name == "triangle-chain") {
        return triangle_chain();
    }
    throw Error(ErrorCode::InvalidArgument, "unknown gadget '" + std::string(name) + "'", std::string(name));
}

GraphDocument strip_fixture(const StripOptions& o)
{
    if (o.rows < 1 || o.columns < 1) {
        throw Error(ErrorCode::InvalidArgument, "strip needs at least one row and one column");
    }
    const int n = o.columns;
    const int m = o.rows;
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> jitter(-1.0, 1.0);

    std::vector<Vec2> column(static_cast<std::size_t>(n + 1));
    for (int i = 0; 2 * i <= n; ++i) {
        const double x = static_cast<double>(i) - n / 2.0;
        const double y = 0.3 * jitter(rng);
        column[static_cast<std::size_t>(i)] = { x, y };
        column[static_cast<std::size_t>(n - i)] = mirror(column[static_cast<std::size_t>(i)]);
    }
    if (n % 2 == 0) {
        column[static_cast<std::size_t>(n / 2)].x = 0.0;
    }
    std::vector<double> height(static_cast<std::size_t>(m + 1), 0.0);
    for (int j = 1; j <= m; ++j) {
        height[static_cast<std::size_t>(j)] = height[static_cast<std::size_t>(j - 1)] + 1.0 + 0.3 * jitter(rng);
    }

    auto id = [](int i, int j) { return "x" + std::to_string(i) + "y" + std::to_string(j); };
    Builder b;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= m; ++j) {
            b.vertices.push_back(id(i, j));
            b.coordinates.emplace_back(id(i, j), column[static_cast<std::size_t>(i)] + Vec2 { 0.0, height[static_cast<std::size_t>(j)] });
            if (2 * i < n) {
                b.swap(id(i, j), id(n - i, j));
            }
            if (i < n) {
                b.edges.emplace_back(id(i, j), id(i + 1, j));
            }
            if (j < m) {
                b.edges.emplace_back(id(i, j), id(i, j + 1));
            }
        }
    }
    std::bernoulli_distribution coin(1.0 / 3.0);
    if (o.brace) {
        for (int j = 0; j < m; ++j) {
            for (int i = 0; 2 * i < n; ++i) {
                if (!coin(rng)) {
                    continue;
                }
                b.edges.emplace_back(id(i, j), id(i + 1, j + 1));
                b.edges.emplace_back(id(n - i, j), id(n - i - 1, j + 1));
            }
        }
    }
    if (o.triangles) {
        for (int i = 0; 2 * i < n; ++i) {
            if (!coin(rng)) {
                continue;
            }
            std::vector<int> cells { i };
            if (n - 1 - i != i) {
                cells.push_back(n - 1 - i);
            }
            for (int c : cells) {
                const std::string apex = "t" + std::to_string(c);
                const Vec2 mid = (column[static_cast<std::size_t>(c)] + column[static_cast<std::size_t>(c + 1)]) * 0.5;
                b.vertices.push_back(apex);
                b.coordinates.emplace_back(apex, mid + Vec2 { 0.0, height[static_cast<std::size_t>(m)] + 0.6 });
                b.edges.emplace_back(apex, id(c, m));
                b.edges.emplace_back(apex, id(c + 1, m));
            }
            if (i != n - 1 - i) {
                b.swap("t" + std::to_string(i), "t" + std::to_string(n - 1 - i));
            }
        }
    }
    std::ostringstream prov;
    prov << "generated: " << m << "x" << n << " parallelogram strip"
         << (o.brace ? ", braced" : "") << (o.triangles ? ", boundary triangles" : "") << ", seed " << o.seed;
    return b.finish(prov.str());
}

} // namespace symflex
