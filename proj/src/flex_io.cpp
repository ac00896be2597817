#include "symflex/flex_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

namespace symflex {

using nlohmann::json;

namespace {

    [[noreturn]] void schema_error(const std::string& pointer, const std::string& message)
    {
        throw Error(ErrorCode::Schema, message + " at " + (pointer.empty() ? "/" : pointer), pointer);
    }

    double parse_exact(const json& value, const std::string& pointer)
    {
        if (!value.is_string()) {
            schema_error(pointer, "expected a decimal string");
        }
        const auto text = value.get<std::string>();
        char* end = nullptr;
        const double x = std::strtod(text.c_str(), &end);
        if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(x)) {
            schema_error(pointer, "malformed decimal '" + text + "'");
        }
        return x;
    }

    Vec2 parse_pair(const json& value, const std::string& pointer)
    {
        if (!value.is_array() || value.size() != 2) {
            schema_error(pointer, "expected [x, y]");
        }
        return { parse_exact(value[0], pointer + "/0"), parse_exact(value[1], pointer + "/1") };
    }

    json pair(Vec2 v) { return json::array({ format_exact(v.x), format_exact(v.y) }); }

    const char* svg_colour(std::optional<Colour> c)
    {
        if (!c) {
            return "#555555";
        }
        switch (*c) {
        case Colour::Red:
            return "#d62728";
        case Colour::Blue:
            return "#1f77b4";
        case Colour::Gold:
            return "#d4a017";
        }
        return "#555555";
    }

} // namespace

std::string format_exact(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s(buf);
    if (s == "-0") {
        s = "0";
    }
    return s;
}

std::string emit_flex(const FlexDocument& doc)
{
    const SymmetricGraph sg = build_graph(doc.graph);
    const Graph& g = sg.graph();
    const ParametricFlex& f = doc.flex;
    if (f.vertex_count() != g.vertex_count()) {
        throw Error(ErrorCode::InvalidArgument, "flex and graph differ in vertex count");
    }
    json j = json::object();
    j["kind"] = f.kind;
    j["graph"] = json::parse(emit_document(doc.graph));
    j["domain"] = json::array({ format_exact(f.t_min), format_exact(f.t_max) });
    json coefficients = json::object();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        json c = json::object();
        c["a"] = pair(f.a[v]);
        c["a_mirror"] = pair(f.a_mirror[v]);
        c["z"] = pair(f.z[v]);
        if (f.has_second_channel()) {
            c["b"] = pair(f.b[v]);
            c["b_mirror"] = pair(f.b_mirror[v]);
        }
        coefficients[g.name(static_cast<VertexIndex>(v))] = c;
    }
    j["coefficients"] = coefficients;
    if (!doc.colouring.empty()) {
        json c = json::object();
        for (const auto& [key, colour] : doc.colouring) {
            c[key] = std::string(to_string(colour));
        }
        j["colouring"] = c;
    }
    if (f.reparametrisation) {
        const Reparametrisation& r = *f.reparametrisation;
        json table = json::array();
        const auto steps = static_cast<std::size_t>(std::floor((f.t_max - f.t_min) / reparametrisation_step));
        for (std::size_t k = 0; k <= steps; ++k) {
            const double t = f.t_min + static_cast<double>(k) * reparametrisation_step;
            table.push_back({ format_coordinate(t), format_coordinate(r(t)) });
        }
        if (f.t_min + static_cast<double>(steps) * reparametrisation_step < f.t_max) {
            table.push_back({ format_coordinate(f.t_max), format_coordinate(r(f.t_max)) });
        }
        j["reparametrisation"] = {
            { "alpha", format_exact(r.alpha) },
            { "beta", format_exact(r.beta) },
            { "mirrored", r.mirrored },
            { "table", table },
        };
    }
    return j.dump(2) + "\n";
}

FlexDocument parse_flex(std::string_view text)
{
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Schema, std::string("malformed JSON: ") + e.what(), "");
    }
    if (!j.is_object()) {
        schema_error("", "flex document must be an object");
    }
    static const std::set<std::string> known { "kind", "graph", "domain", "coefficients", "colouring", "reparametrisation" };
    for (const auto& [key, value] : j.items()) {
        if (!known.contains(key)) {
            schema_error(json_pointer({ key }), "unknown key");
        }
    }
    FlexDocument doc;
    if (!j.contains("graph")) {
        schema_error("/graph", "missing graph");
    }
    try {
        doc.graph = parse_document(j["graph"].dump());
    } catch (const Error& e) {
        if (e.code() != ErrorCode::Schema) {
            throw;
        }
        throw Error(ErrorCode::Schema, e.what(), "/graph" + e.witness());
    }
    const SymmetricGraph sg = build_graph(doc.graph);
    const Graph& g = sg.graph();
    ParametricFlex& f = doc.flex;

    if (!j.contains("kind") || !j["kind"].is_string()) {
        schema_error("/kind", "expected a string");
    }
    f.kind = j["kind"].get<std::string>();
    if (!j.contains("domain") || !j["domain"].is_array() || j["domain"].size() != 2) {
        schema_error("/domain", "expected [t_min, t_max]");
    }
    f.t_min = parse_exact(j["domain"][0], "/domain/0");
    f.t_max = parse_exact(j["domain"][1], "/domain/1");
    if (!(f.t_min <= f.t_max)) {
        schema_error("/domain", "t_min exceeds t_max");
    }

    if (!j.contains("coefficients") || !j["coefficients"].is_object()) {
        schema_error("/coefficients", "expected an object");
    }
    const json& coefficients = j["coefficients"];
    const std::size_t n = g.vertex_count();
    bool second = false;
    if (n > 0) {
        const std::string first = g.name(0);
        second = coefficients.contains(first) && coefficients[first].contains("b");
    }
    f.a.resize(n);
    f.a_mirror.resize(n);
    f.z.resize(n);
    if (second) {
        f.b.resize(n);
        f.b_mirror.resize(n);
    }
    for (const auto& [key, value] : coefficients.items()) {
        if (!g.find_vertex(key)) {
            schema_error(json_pointer({ "coefficients", key }), "undeclared vertex");
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        const std::string& name = g.name(static_cast<VertexIndex>(v));
        const std::string ptr = json_pointer({ "coefficients", name });
        if (!coefficients.contains(name) || !coefficients[name].is_object()) {
            schema_error(ptr, "missing coefficients");
        }
        const json& c = coefficients[name];
        const std::set<std::string> expected = second ? std::set<std::string> { "a", "a_mirror", "z", "b", "b_mirror" }
                                                      : std::set<std::string> { "a", "a_mirror", "z" };
        for (const auto& [key, value] : c.items()) {
            if (!expected.contains(key)) {
                schema_error(ptr + json_pointer({ key }), "unexpected coefficient");
            }
        }
        for (const std::string& key : expected) {
            if (!c.contains(key)) {
                schema_error(ptr + json_pointer({ key }), "missing coefficient");
            }
        }
        f.a[v] = parse_pair(c["a"], ptr + "/a");
        f.a_mirror[v] = parse_pair(c["a_mirror"], ptr + "/a_mirror");
        f.z[v] = parse_pair(c["z"], ptr + "/z");
        if (second) {
            f.b[v] = parse_pair(c["b"], ptr + "/b");
            f.b_mirror[v] = parse_pair(c["b_mirror"], ptr + "/b_mirror");
        }
    }

    if (j.contains("colouring")) {
        if (!j["colouring"].is_object()) {
            schema_error("/colouring", "expected an object");
        }
        for (const auto& [key, value] : j["colouring"].items()) {
            const std::string ptr = json_pointer({ "colouring", key });
            if (!value.is_string()) {
                schema_error(ptr, "expected a colour name");
            }
            try {
                doc.colouring[key] = parse_colour(value.get<std::string>());
            } catch (const Error&) {
                schema_error(ptr, "unknown colour");
            }
        }
    }

    if (j.contains("reparametrisation")) {
        const json& r = j["reparametrisation"];
        if (!r.is_object() || !r.contains("alpha") || !r.contains("beta") || !r.contains("mirrored")
            || !r["mirrored"].is_boolean()) {
            schema_error("/reparametrisation", "expected alpha, beta and mirrored");
        }
        if (!second) {
            schema_error("/reparametrisation", "reparametrisation without a second channel");
        }
        f.reparametrisation = Reparametrisation { parse_exact(r["alpha"], "/reparametrisation/alpha"),
            parse_exact(r["beta"], "/reparametrisation/beta"), r["mirrored"].get<bool>() };
    } else if (second) {
        schema_error("/reparametrisation", "second channel without a reparametrisation");
    }
    return doc;
}

std::string samples_csv(const Graph& g, const std::vector<FlexSample>& samples)
{
    std::ostringstream out;
    out << "t,vertex,x,y\n";
    for (const FlexSample& s : samples) {
        for (std::size_t v = 0; v < s.p.size(); ++v) {
            out << format_coordinate(s.t) << ',' << g.name(static_cast<VertexIndex>(v)) << ','
                << format_coordinate(s.p[v].x) << ',' << format_coordinate(s.p[v].y) << '\n';
        }
    }
    return out.str();
}

std::vector<std::string> samples_svg(const Graph& g, const std::map<std::string, Colour>& colouring,
    const std::vector<FlexSample>& samples)
{
    double lo_x = 0.0;
    double hi_x = 0.0;
    double lo_y = 0.0;
    double hi_y = 0.0;
    bool first = true;
    for (const FlexSample& s : samples) {
        for (const Vec2& p : s.p) {
            if (first) {
                lo_x = hi_x = p.x;
                lo_y = hi_y = p.y;
                first = false;
            }
            lo_x = std::min(lo_x, p.x);
            hi_x = std::max(hi_x, p.x);
            lo_y = std::min(lo_y, p.y);
            hi_y = std::max(hi_y, p.y);
        }
    }
    // The axis x = 0 stays in view.
    lo_x = std::min(lo_x, 0.0);
    hi_x = std::max(hi_x, 0.0);
    const double span = std::max({ hi_x - lo_x, hi_y - lo_y, 1e-9 });
    const double margin = 0.08 * span;
    const double x0 = lo_x - margin;
    const double y0 = -hi_y - margin;
    const double w = hi_x - lo_x + 2 * margin;
    const double h = hi_y - lo_y + 2 * margin;
    const double stroke = 0.006 * span;
    const double radius = 0.015 * span;
    const auto num = [](double x) { return format_coordinate(x); };

    std::vector<std::string> frames;
    for (const FlexSample& s : samples) {
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(x0) << ' ' << num(y0) << ' ' << num(w) << ' '
            << num(h) << "\">\n";
        out << "  <title>t = " << num(s.t) << "</title>\n";
        out << "  <line x1=\"0\" y1=\"" << num(y0) << "\" x2=\"0\" y2=\"" << num(y0 + h) << "\" stroke=\"#999999\" stroke-width=\""
            << num(stroke / 2) << "\" stroke-dasharray=\"" << num(4 * stroke) << ' ' << num(2 * stroke) << "\"/>\n";
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(static_cast<EdgeIndex>(e));
            const auto it = colouring.find(g.edge_key(static_cast<EdgeIndex>(e)));
            const Vec2 p = s.p[static_cast<std::size_t>(ed.u)];
            const Vec2 q = s.p[static_cast<std::size_t>(ed.v)];
            out << "  <line x1=\"" << num(p.x) << "\" y1=\"" << num(-p.y) << "\" x2=\"" << num(q.x) << "\" y2=\"" << num(-q.y)
                << "\" stroke=\"" << svg_colour(it == colouring.end() ? std::nullopt : std::optional(it->second))
                << "\" stroke-width=\"" << num(stroke) << "\"/>\n";
        }
        for (std::size_t v = 0; v < s.p.size(); ++v) {
            const Vec2 p = s.p[v];
            bool shared = false;
            for (std::size_t u = 0; u < s.p.size() && !shared; ++u) {
                shared = u != v && norm(s.p[u] - p) <= 1e-9 * span;
            }
            if (shared) {
                out << "  <rect x=\"" << num(p.x - radius) << "\" y=\"" << num(-p.y - radius) << "\" width=\"" << num(2 * radius)
                    << "\" height=\"" << num(2 * radius) << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\""
                    << num(stroke / 2) << "\"><title>" << g.name(static_cast<VertexIndex>(v)) << "</title></rect>\n";
            } else {
                out << "  <circle cx=\"" << num(p.x) << "\" cy=\"" << num(-p.y) << "\" r=\"" << num(radius)
                    << "\" fill=\"#000000\"><title>" << g.name(static_cast<VertexIndex>(v)) << "</title></circle>\n";
            }
        }
        out << "</svg>\n";
        frames.push_back(out.str());
    }
    return frames;
}

} // namespace symflex
