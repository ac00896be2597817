#include "symflex/document.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>

namespace symflex {

using nlohmann::json;

namespace {

    [[noreturn]] void schema_error(const std::string& pointer, const std::string& message)
    {
        throw Error(ErrorCode::Schema, message + " at " + (pointer.empty() ? "/" : pointer), pointer);
    }

    bool parse_number(const std::string& text, double& out)
    {
        if (text.empty()) {
            return false;
        }
        char* end = nullptr;
        out = std::strtod(text.c_str(), &end);
        return end == text.c_str() + text.size() && std::isfinite(out);
    }

    std::pair<VertexId, VertexId> ordered(const VertexId& a, const VertexId& b)
    {
        return a < b ? std::pair { a, b } : std::pair { b, a };
    }

} // namespace

std::string json_pointer(std::initializer_list<std::string_view> tokens)
{
    std::string out;
    for (std::string_view t : tokens) {
        out += '/';
        for (char c : t) {
            if (c == '~') {
                out += "~0";
            } else if (c == '/') {
                out += "~1";
            } else {
                out += c;
            }
        }
    }
    return out;
}

std::string format_coordinate(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    std::string s(buf);
    if (s == "-0") {
        s = "0";
    }
    return s;
}

GraphDocument parse_document(std::string_view text)
{
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Schema, std::string("malformed JSON: ") + e.what(), "");
    }
    if (!j.is_object()) {
        schema_error("", "document must be an object");
    }
    static const std::set<std::string> known { "provenance", "vertices", "edges", "sigma", "realisation", "colourings" };
    for (const auto& [key, value] : j.items()) {
        if (!known.contains(key)) {
            schema_error(json_pointer({ key }), "unknown key");
        }
    }

    GraphDocument doc;
    if (j.contains("provenance")) {
        if (!j["provenance"].is_string()) {
            schema_error("/provenance", "expected a string");
        }
        doc.provenance = j["provenance"].get<std::string>();
    }

    if (!j.contains("vertices") || !j["vertices"].is_array()) {
        schema_error("/vertices", "expected an array of vertex ids");
    }
    std::set<VertexId> declared;
    for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
        const json& v = j["vertices"][i];
        const std::string ptr = "/vertices/" + std::to_string(i);
        if (!v.is_string()) {
            schema_error(ptr, "vertex id must be a string");
        }
        const auto id = v.get<std::string>();
        if (id.empty() || id.find_first_of("- \t\r\n:") != std::string::npos) {
            schema_error(ptr, "vertex id must be non-empty without '-', ':' or whitespace");
        }
        if (!declared.insert(id).second) {
            schema_error(ptr, "duplicate vertex id");
        }
        doc.vertices.push_back(id);
    }

    if (!j.contains("edges") || !j["edges"].is_array()) {
        schema_error("/edges", "expected an array of vertex pairs");
    }
    for (std::size_t i = 0; i < j["edges"].size(); ++i) {
        const json& e = j["edges"][i];
        const std::string ptr = "/edges/" + std::to_string(i);
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
            schema_error(ptr, "edge must be a pair of vertex ids");
        }
        for (int k = 0; k < 2; ++k) {
            if (!declared.contains(e[k].get<std::string>())) {
                schema_error(ptr + "/" + std::to_string(k), "undeclared vertex");
            }
        }
        doc.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }

    if (j.contains("sigma")) {
        if (!j["sigma"].is_object()) {
            schema_error("/sigma", "expected an object");
        }
        for (const auto& [key, value] : j["sigma"].items()) {
            const std::string ptr = json_pointer({ "sigma", key });
            if (!declared.contains(key)) {
                schema_error(ptr, "undeclared vertex");
            }
            if (!value.is_string() || !declared.contains(value.get<std::string>())) {
                schema_error(ptr, "sigma image must be a declared vertex");
            }
            doc.sigma[key] = value.get<std::string>();
        }
    }

    if (j.contains("realisation")) {
        if (!j["realisation"].is_object()) {
            schema_error("/realisation", "expected an object");
        }
        for (const auto& [key, value] : j["realisation"].items()) {
            const std::string ptr = json_pointer({ "realisation", key });
            if (!declared.contains(key)) {
                schema_error(ptr, "undeclared vertex");
            }
            if (!value.is_array() || value.size() != 2 || !value[0].is_string() || !value[1].is_string()) {
                schema_error(ptr, "coordinates must be two decimal strings");
            }
            std::array<std::string, 2> xy { value[0].get<std::string>(), value[1].get<std::string>() };
            for (int k = 0; k < 2; ++k) {
                double unused = 0.0;
                if (!parse_number(xy[static_cast<std::size_t>(k)], unused)) {
                    schema_error(ptr + "/" + std::to_string(k), "not a finite decimal");
                }
            }
            doc.realisation[key] = xy;
        }
        if (doc.realisation.size() != declared.size()) {
            for (const VertexId& v : doc.vertices) {
                if (!doc.realisation.contains(v)) {
                    schema_error(json_pointer({ "realisation", v }), "missing coordinates");
                }
            }
        }
    }

    if (j.contains("colourings")) {
        if (!j["colourings"].is_object()) {
            schema_error("/colourings", "expected an object");
        }
        std::set<std::string> edge_keys;
        for (const auto& [a, b] : doc.edges) {
            const auto [u, v] = ordered(a, b);
            edge_keys.insert(u + "-" + v);
        }
        for (const auto& [name, colouring] : j["colourings"].items()) {
            const std::string base = json_pointer({ "colourings", name });
            if (!colouring.is_object()) {
                schema_error(base, "expected an object");
            }
            auto& target = doc.colourings[name];
            for (const auto& [key, value] : colouring.items()) {
                const std::string ptr = json_pointer({ "colourings", name, key });
                if (!edge_keys.contains(key)) {
                    schema_error(ptr, "not a canonical edge key");
                }
                if (!value.is_string()) {
                    schema_error(ptr, "colour must be a string");
                }
                try {
                    target[key] = parse_colour(value.get<std::string>());
                } catch (const Error&) {
                    schema_error(ptr, "colour must be red, blue or gold");
                }
            }
            for (const std::string& key : edge_keys) {
                if (!target.contains(key)) {
                    schema_error(json_pointer({ "colourings", name, key }), "edge has no colour");
                }
            }
        }
    }
    return doc;
}

std::string emit_document(const GraphDocument& doc)
{
    json j = json::object();
    if (!doc.provenance.empty()) {
        j["provenance"] = doc.provenance;
    }
    std::vector<VertexId> vertices = doc.vertices;
    std::sort(vertices.begin(), vertices.end());
    j["vertices"] = vertices;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [a, b] : doc.edges) {
        edges.push_back(ordered(a, b));
    }
    std::sort(edges.begin(), edges.end());
    j["edges"] = json::array();
    for (const auto& [a, b] : edges) {
        j["edges"].push_back({ a, b });
    }
    j["sigma"] = json::object();
    for (const auto& [from, to] : doc.sigma) {
        if (from != to) {
            j["sigma"][from] = to;
        }
    }
    if (!doc.realisation.empty()) {
        j["realisation"] = json::object();
        for (const auto& [v, xy] : doc.realisation) {
            j["realisation"][v] = { xy[0], xy[1] };
        }
    }
    if (!doc.colourings.empty()) {
        j["colourings"] = json::object();
        for (const auto& [name, colouring] : doc.colourings) {
            json c = json::object();
            for (const auto& [key, colour] : colouring) {
                c[key] = std::string(to_string(colour));
            }
            j["colourings"][name] = c;
        }
    }
    return j.dump(2) + "\n";
}

SymmetricGraph build_graph(const GraphDocument& doc)
{
    std::vector<std::pair<VertexId, VertexId>> sigma(doc.sigma.begin(), doc.sigma.end());
    return validate_symmetry(doc.vertices, doc.edges, sigma);
}

bool has_realisation(const GraphDocument& doc) { return !doc.realisation.empty(); }

std::vector<Vec2> build_realisation(const GraphDocument& doc, const Graph& g)
{
    if (doc.realisation.empty()) {
        throw Error(ErrorCode::Schema, "document has no realisation", "/realisation");
    }
    std::vector<Vec2> p(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const VertexId& id = g.name(static_cast<VertexIndex>(v));
        const auto it = doc.realisation.find(id);
        if (it == doc.realisation.end()) {
            schema_error(json_pointer({ "realisation", id }), "missing coordinates");
        }
        parse_number(it->second[0], p[v].x);
        parse_number(it->second[1], p[v].y);
    }
    return p;
}

ThreeColouring build_colouring(const GraphDocument& doc, const Graph& g, const std::string& name)
{
    const auto it = doc.colourings.find(name);
    if (it == doc.colourings.end()) {
        throw Error(ErrorCode::InvalidArgument, "no colouring named '" + name + "'", name);
    }
    ThreeColouring delta { std::vector<Colour>(g.edge_count(), Colour::Gold) };
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const std::string key = g.edge_key(static_cast<EdgeIndex>(e));
        const auto c = it->second.find(key);
        if (c == it->second.end()) {
            schema_error(json_pointer({ "colourings", name, key }), "edge has no colour");
        }
        delta.colour[e] = c->second;
    }
    return delta;
}

GraphDocument make_document(const SymmetricGraph& g, std::string provenance)
{
    GraphDocument doc;
    doc.provenance = std::move(provenance);
    doc.vertices = g.graph().vertices();
    doc.edges = g.graph().edge_names();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto idx = static_cast<VertexIndex>(v);
        if (g.sigma(idx) != idx) {
            doc.sigma[g.graph().name(idx)] = g.graph().name(g.sigma(idx));
        }
    }
    return doc;
}

void set_realisation(GraphDocument& doc, const Graph& g, const std::vector<Vec2>& p)
{
    doc.realisation.clear();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        doc.realisation[g.name(static_cast<VertexIndex>(v))] = { format_coordinate(p[v].x), format_coordinate(p[v].y) };
    }
}

void set_colouring(GraphDocument& doc, const Graph& g, const std::string& name, const ThreeColouring& delta)
{
    auto& target = doc.colourings[name];
    target.clear();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        target[g.edge_key(static_cast<EdgeIndex>(e))] = delta.colour[e];
    }
}

} // namespace symflex
