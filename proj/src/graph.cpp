#include "symflex/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace symflex {

namespace {

    std::size_t at(int i) { return static_cast<std::size_t>(i); }

} // namespace

Graph::Graph(std::vector<VertexId> vertices, const std::vector<std::pair<VertexId, VertexId>>& edges)
    : names_(std::move(vertices))
{
    std::sort(names_.begin(), names_.end());
    for (std::size_t i = 1; i < names_.size(); ++i) {
        if (names_[i] == names_[i - 1]) {
            throw Error(ErrorCode::InvalidArgument, "duplicate vertex id", names_[i]);
        }
    }
    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        const VertexIndex u = vertex_index(a);
        const VertexIndex v = vertex_index(b);
        if (u == v) {
            throw Error(ErrorCode::NotSimple, "loop at vertex " + a, a);
        }
        edges_.push_back({ std::min(u, v), std::max(u, v) });
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i] == edges_[i - 1]) {
            const std::string key = name(edges_[i].u) + "-" + name(edges_[i].v);
            throw Error(ErrorCode::NotSimple, "parallel edge " + key, key);
        }
    }
    adjacency_.resize(names_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        adjacency_[at(edges_[e].u)].push_back({ edges_[e].v, static_cast<EdgeIndex>(e) });
        adjacency_[at(edges_[e].v)].push_back({ edges_[e].u, static_cast<EdgeIndex>(e) });
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end(), [](const Incidence& x, const Incidence& y) { return x.neighbour < y.neighbour; });
    }
}

std::optional<VertexIndex> Graph::find_vertex(std::string_view id) const
{
    const auto it = std::lower_bound(names_.begin(), names_.end(), id);
    if (it == names_.end() || *it != id) {
        return std::nullopt;
    }
    return static_cast<VertexIndex>(it - names_.begin());
}

VertexIndex Graph::vertex_index(std::string_view id) const
{
    if (auto v = find_vertex(id)) {
        return *v;
    }
    throw Error(ErrorCode::UnknownVertex, "unknown vertex " + std::string(id), std::string(id));
}

std::optional<EdgeIndex> Graph::find_edge(VertexIndex a, VertexIndex b) const
{
    const Edge key { std::min(a, b), std::max(a, b) };
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) {
        return std::nullopt;
    }
    return static_cast<EdgeIndex>(it - edges_.begin());
}

EdgeIndex Graph::edge_index(std::string_view a, std::string_view b) const
{
    if (auto e = find_edge(vertex_index(a), vertex_index(b))) {
        return *e;
    }
    const std::string key = std::string(a) + "-" + std::string(b);
    throw Error(ErrorCode::InvalidArgument, "no edge " + key, key);
}

std::string Graph::edge_key(EdgeIndex e) const
{
    const Edge& ed = edge(e);
    return name(ed.u) + "-" + name(ed.v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edge_names() const
{
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) {
        out.emplace_back(name(e.u), name(e.v));
    }
    return out;
}

SymmetricGraph::SymmetricGraph(Graph graph, std::vector<VertexIndex> sigma)
    : graph_(std::move(graph))
    , sigma_(std::move(sigma))
{
    const std::size_t n = graph_.vertex_count();
    if (sigma_.size() != n) {
        throw Error(ErrorCode::InvalidArgument, "sigma must map every vertex");
    }
    for (std::size_t v = 0; v < n; ++v) {
        const VertexIndex image = sigma_[v];
        if (image < 0 || at(image) >= n) {
            throw Error(ErrorCode::UnknownVertex, "sigma image out of range", graph_.name(static_cast<VertexIndex>(v)));
        }
        if (sigma_[at(image)] != static_cast<VertexIndex>(v)) {
            const std::string& id = graph_.name(static_cast<VertexIndex>(v));
            throw Error(ErrorCode::NotInvolution, "sigma(sigma(" + id + ")) != " + id, id);
        }
    }
    bool identity = true;
    for (std::size_t v = 0; v < n; ++v) {
        identity = identity && sigma_[v] == static_cast<VertexIndex>(v);
    }
    if (identity) {
        throw Error(ErrorCode::IdentityMap, "sigma is the identity");
    }
    sigma_edge_.resize(graph_.edge_count());
    for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
        const Edge& ed = graph_.edge(static_cast<EdgeIndex>(e));
        const auto image = graph_.find_edge(sigma_[at(ed.u)], sigma_[at(ed.v)]);
        if (!image) {
            const std::string key = graph_.edge_key(static_cast<EdgeIndex>(e));
            throw Error(ErrorCode::NotAutomorphism,
                "edge " + key + " maps to non-edge " + graph_.name(sigma_[at(ed.u)]) + "-" + graph_.name(sigma_[at(ed.v)]), key);
        }
        sigma_edge_[e] = *image;
    }
    if (!is_connected(graph_)) {
        const Partition parts = components(graph_, [](EdgeIndex) { return true; });
        throw Error(ErrorCode::Disconnected, "graph has " + std::to_string(parts.size()) + " components",
            graph_.name(parts.members[1].front()));
    }
}

SymmetricGraph validate_symmetry(std::vector<VertexId> vertices,
    const std::vector<std::pair<VertexId, VertexId>>& edges,
    const std::vector<std::pair<VertexId, VertexId>>& sigma)
{
    Graph g(std::move(vertices), edges);
    std::vector<VertexIndex> map(g.vertex_count());
    for (std::size_t v = 0; v < map.size(); ++v) {
        map[v] = static_cast<VertexIndex>(v);
    }
    std::vector<bool> assigned(map.size(), false);
    for (const auto& [from, to] : sigma) {
        const VertexIndex a = g.vertex_index(from);
        const VertexIndex b = g.vertex_index(to);
        if (assigned[at(a)] && map[at(a)] != b) {
            throw Error(ErrorCode::NotInvolution, "sigma assigns two images to " + from, from);
        }
        assigned[at(a)] = true;
        map[at(a)] = b;
    }
    return SymmetricGraph(std::move(g), std::move(map));
}

std::vector<EdgeOrbit> edge_orbits(const SymmetricGraph& g)
{
    std::vector<EdgeOrbit> out;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto idx = static_cast<EdgeIndex>(e);
        const EdgeIndex m = g.mirror_edge(idx);
        if (m >= idx) {
            out.push_back({ idx, m, m == idx });
        }
    }
    return out;
}

Partition components(const Graph& g, const EdgeFilter& keep)
{
    const std::size_t n = g.vertex_count();
    Partition p;
    p.component_of.assign(n, -1);
    std::vector<VertexIndex> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (p.component_of[s] >= 0) {
            continue;
        }
        const int id = static_cast<int>(p.members.size());
        p.members.emplace_back();
        p.component_of[s] = id;
        stack.push_back(static_cast<VertexIndex>(s));
        while (!stack.empty()) {
            const VertexIndex v = stack.back();
            stack.pop_back();
            p.members.back().push_back(v);
            for (const Incidence& inc : g.neighbours(v)) {
                if (p.component_of[at(inc.neighbour)] < 0 && keep(inc.edge)) {
                    p.component_of[at(inc.neighbour)] = id;
                    stack.push_back(inc.neighbour);
                }
            }
        }
        std::sort(p.members.back().begin(), p.members.back().end());
    }
    return p;
}

bool is_connected(const Graph& g)
{
    return g.vertex_count() <= 1 || components(g, [](EdgeIndex) { return true; }).size() == 1;
}

namespace {

    struct PathSearch {
        const Graph& g;
        VertexIndex target;
        const EdgeFilter& avoid;
        std::size_t cap;
        PathList result;
        std::vector<bool> on_path;
        Path current;

        bool descend(VertexIndex v)
        {
            if (v == target) {
                if (result.paths.size() == cap) {
                    result.truncated = true;
                    return false;
                }
                result.paths.push_back(current);
                return true;
            }
            for (const Incidence& inc : g.neighbours(v)) {
                if (on_path[at(inc.neighbour)] || avoid(inc.edge)) {
                    continue;
                }
                on_path[at(inc.neighbour)] = true;
                current.vertices.push_back(inc.neighbour);
                current.edges.push_back(inc.edge);
                const bool go_on = descend(inc.neighbour);
                current.vertices.pop_back();
                current.edges.pop_back();
                on_path[at(inc.neighbour)] = false;
                if (!go_on) {
                    return false;
                }
            }
            return true;
        }
    };

} // namespace

PathList simple_paths(const Graph& g, VertexIndex u, VertexIndex v, const EdgeFilter& avoid, std::size_t cap)
{
    if (u == v) {
        throw Error(ErrorCode::InvalidArgument, "simple_paths needs distinct endpoints", g.name(u));
    }
    PathSearch search { g, v, avoid, cap, {}, std::vector<bool>(g.vertex_count(), false), {} };
    search.on_path[at(u)] = true;
    search.current.vertices.push_back(u);
    search.descend(u);
    return std::move(search.result);
}

std::vector<Cycle> cycle_basis(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<VertexIndex> parent(n, -1);
    std::vector<EdgeIndex> parent_edge(n, -1);
    std::vector<int> depth(n, -1);
    std::vector<bool> tree_edge(g.edge_count(), false);
    for (std::size_t root = 0; root < n; ++root) {
        if (depth[root] >= 0) {
            continue;
        }
        depth[root] = 0;
        std::queue<VertexIndex> queue;
        queue.push(static_cast<VertexIndex>(root));
        while (!queue.empty()) {
            const VertexIndex v = queue.front();
            queue.pop();
            for (const Incidence& inc : g.neighbours(v)) {
                if (depth[at(inc.neighbour)] < 0) {
                    depth[at(inc.neighbour)] = depth[at(v)] + 1;
                    parent[at(inc.neighbour)] = v;
                    parent_edge[at(inc.neighbour)] = inc.edge;
                    tree_edge[at(inc.edge)] = true;
                    queue.push(inc.neighbour);
                }
            }
        }
    }

    std::vector<Cycle> cycles;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (tree_edge[e]) {
            continue;
        }
        const Edge& ed = g.edge(static_cast<EdgeIndex>(e));
        std::vector<VertexIndex> up_u { ed.u };
        std::vector<EdgeIndex> up_u_edges;
        std::vector<VertexIndex> up_v { ed.v };
        std::vector<EdgeIndex> up_v_edges;
        VertexIndex a = ed.u;
        VertexIndex b = ed.v;
        while (a != b) {
            if (depth[at(a)] >= depth[at(b)]) {
                up_u_edges.push_back(parent_edge[at(a)]);
                a = parent[at(a)];
                up_u.push_back(a);
            } else {
                up_v_edges.push_back(parent_edge[at(b)]);
                b = parent[at(b)];
                up_v.push_back(b);
            }
        }
        Cycle c;
        c.vertices = up_u;
        c.edges = up_u_edges;
        for (std::size_t i = up_v.size() - 1; i-- > 0;) {
            c.vertices.push_back(up_v[i]);
        }
        for (std::size_t i = up_v_edges.size(); i-- > 0;) {
            c.edges.push_back(up_v_edges[i]);
        }
        c.edges.push_back(static_cast<EdgeIndex>(e));
        cycles.push_back(std::move(c));
    }
    return cycles;
}

SymmetricGraph gk_graph(int k)
{
    if (k < 1) {
        throw Error(ErrorCode::InvalidArgument, "G_k needs k >= 1", std::to_string(k));
    }
    auto l = [](int i) { return "l" + std::to_string(i); };
    auto r = [](int i) { return "r" + std::to_string(i); };
    auto m = [](int i) { return "m" + std::to_string(i); };
    std::vector<VertexId> vertices;
    std::vector<std::pair<VertexId, VertexId>> edges { { l(0), r(0) } };
    std::vector<std::pair<VertexId, VertexId>> sigma;
    for (int i = 0; i <= k; ++i) {
        vertices.push_back(l(i));
        vertices.push_back(r(i));
        sigma.emplace_back(l(i), r(i));
        sigma.emplace_back(r(i), l(i));
    }
    for (int i = 1; i <= k; ++i) {
        vertices.push_back(m(i));
        edges.emplace_back(l(0), l(i));
        edges.emplace_back(r(0), r(i));
        edges.emplace_back(l(i), m(i));
        edges.emplace_back(r(i), m(i));
        for (int j = i + 1; j <= k; ++j) {
            edges.emplace_back(m(i), m(j));
        }
    }
    return validate_symmetry(std::move(vertices), edges, sigma);
}

VertexId mirrored_name(const VertexId& id) { return id + "'"; }

GluedGraph glue_double(const Graph& g, EdgeIndex f)
{
    if (f < 0 || at(f) >= g.edge_count()) {
        throw Error(ErrorCode::InvalidArgument, "glue edge is not an edge of the graph", std::to_string(f));
    }
    const Edge fe = g.edge(f);
    auto copy_name = [&](VertexIndex v) {
        return (v == fe.u || v == fe.v) ? g.name(v) : mirrored_name(g.name(v));
    };
    std::vector<VertexId> vertices = g.vertices();
    std::vector<std::pair<VertexId, VertexId>> sigma;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto idx = static_cast<VertexIndex>(v);
        if (idx == fe.u || idx == fe.v) {
            continue;
        }
        const VertexId twin = copy_name(idx);
        if (g.find_vertex(twin)) {
            throw Error(ErrorCode::InvalidArgument, "mirrored vertex name collides with an existing vertex", twin);
        }
        vertices.push_back(twin);
        sigma.emplace_back(g.name(idx), twin);
        sigma.emplace_back(twin, g.name(idx));
    }
    std::vector<std::pair<VertexId, VertexId>> edges = g.edge_names();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (static_cast<EdgeIndex>(e) == f) {
            continue;
        }
        const Edge& ed = g.edge(static_cast<EdgeIndex>(e));
        edges.emplace_back(copy_name(ed.u), copy_name(ed.v));
    }
    SymmetricGraph h = validate_symmetry(std::move(vertices), edges, sigma);
    GluedGraph out { std::move(h), {}, {} };
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto idx = static_cast<VertexIndex>(v);
        out.original.push_back(out.graph.graph().vertex_index(g.name(idx)));
        out.mirrored.push_back(out.graph.graph().vertex_index(copy_name(idx)));
    }
    return out;
}

} // namespace symflex

namespace symflex {

std::optional<Path> shortest_path(const Graph& g, VertexIndex u, VertexIndex v, const EdgeFilter& keep)
{
    std::vector<VertexIndex> parent(g.vertex_count(), -1);
    std::vector<EdgeIndex> via(g.vertex_count(), -1);
    std::vector<bool> seen(g.vertex_count(), false);
    std::queue<VertexIndex> queue;
    seen[at(u)] = true;
    queue.push(u);
    while (!queue.empty() && !seen[at(v)]) {
        const VertexIndex x = queue.front();
        queue.pop();
        for (const Incidence& inc : g.neighbours(x)) {
            if (!seen[at(inc.neighbour)] && keep(inc.edge)) {
                seen[at(inc.neighbour)] = true;
                parent[at(inc.neighbour)] = x;
                via[at(inc.neighbour)] = inc.edge;
                queue.push(inc.neighbour);
            }
        }
    }
    if (!seen[at(v)]) {
        return std::nullopt;
    }
    Path path;
    for (VertexIndex x = v; x != u; x = parent[at(x)]) {
        path.vertices.push_back(x);
        path.edges.push_back(via[at(x)]);
    }
    path.vertices.push_back(u);
    std::reverse(path.vertices.begin(), path.vertices.end());
    std::reverse(path.edges.begin(), path.edges.end());
    return path;
}

} // namespace symflex
