#pragma once

#include "symflex/error.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symflex {

using VertexId = std::string;
using VertexIndex = int;
using EdgeIndex = int;

/// Undirected edge stored with `u < v` in vertex-index order.
struct Edge {
    VertexIndex u = 0;
    VertexIndex v = 0;
    auto operator<=>(const Edge&) const = default;
};

struct Incidence {
    VertexIndex neighbour;
    EdgeIndex edge;
};

/**
 * Finite simple undirected graph with opaque string vertex ids.
 *
 * Vertices are kept in lexicographic id order and edges sorted by their
 * endpoint pair, so vertex and edge indices are canonical: two graphs built
 * from the same sets index identically regardless of input order.
 */
class Graph {
public:
    Graph() = default;

    /// Throws NotSimple for loops or parallel edges, UnknownVertex for
    /// endpoints that are not declared, InvalidArgument for duplicate ids.
    Graph(std::vector<VertexId> vertices, const std::vector<std::pair<VertexId, VertexId>>& edges);

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<VertexId>& vertices() const { return names_; }
    const VertexId& name(VertexIndex v) const { return names_.at(static_cast<std::size_t>(v)); }
    std::optional<VertexIndex> find_vertex(std::string_view id) const;
    VertexIndex vertex_index(std::string_view id) const;

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeIndex e) const { return edges_.at(static_cast<std::size_t>(e)); }
    std::optional<EdgeIndex> find_edge(VertexIndex a, VertexIndex b) const;
    EdgeIndex edge_index(std::string_view a, std::string_view b) const;

    std::span<const Incidence> neighbours(VertexIndex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    std::size_t degree(VertexIndex v) const { return neighbours(v).size(); }

    /// Canonical "u-v" key with u < v.
    std::string edge_key(EdgeIndex e) const;
    std::vector<std::pair<VertexId, VertexId>> edge_names() const;

private:
    std::vector<VertexId> names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

/// Graph plus a validated reflection (non-identity involutive automorphism).
class SymmetricGraph {
public:
    /// Validates every invariant; see validate_symmetry.
    SymmetricGraph(Graph graph, std::vector<VertexIndex> sigma);

    const Graph& graph() const { return graph_; }
    std::size_t vertex_count() const { return graph_.vertex_count(); }
    std::size_t edge_count() const { return graph_.edge_count(); }

    VertexIndex sigma(VertexIndex v) const { return sigma_[static_cast<std::size_t>(v)]; }
    const std::vector<VertexIndex>& sigma_map() const { return sigma_; }
    EdgeIndex mirror_edge(EdgeIndex e) const { return sigma_edge_[static_cast<std::size_t>(e)]; }

    bool is_invariant_vertex(VertexIndex v) const { return sigma(v) == v; }
    bool is_invariant_edge(EdgeIndex e) const { return mirror_edge(e) == e; }

private:
    Graph graph_;
    std::vector<VertexIndex> sigma_;
    std::vector<EdgeIndex> sigma_edge_;
};

/// Build and validate a reflection-symmetric graph from raw ids.
/// Errors: NotSimple, UnknownVertex, NotInvolution, IdentityMap,
/// NotAutomorphism, Disconnected; each carries a witness element.
SymmetricGraph validate_symmetry(std::vector<VertexId> vertices,
    const std::vector<std::pair<VertexId, VertexId>>& edges,
    const std::vector<std::pair<VertexId, VertexId>>& sigma);

struct EdgeOrbit {
    EdgeIndex representative;
    EdgeIndex mirror;
    bool is_invariant;
};

/// Orbits of sigma on the edges, ordered by representative (the smaller
/// edge of the orbit).
std::vector<EdgeOrbit> edge_orbits(const SymmetricGraph& g);

using EdgeFilter = std::function<bool(EdgeIndex)>;

struct Partition {
    std::vector<int> component_of;
    std::vector<std::vector<VertexIndex>> members;

    std::size_t size() const { return members.size(); }
    bool same(VertexIndex a, VertexIndex b) const { return component_of[static_cast<std::size_t>(a)] == component_of[static_cast<std::size_t>(b)]; }
};

/// Connected components of the spanning subgraph on edges accepted by
/// `keep`. Components are ordered by their smallest vertex index, members
/// ascending.
Partition components(const Graph& g, const EdgeFilter& keep);

struct Path {
    std::vector<VertexIndex> vertices;
    std::vector<EdgeIndex> edges;
};

/// Shortest u-v path using only edges accepted by `keep` (BFS, neighbours
/// ascending). Empty optional when u and v are not connected.
std::optional<Path> shortest_path(const Graph& g, VertexIndex u, VertexIndex v, const EdgeFilter& keep);

struct PathList {
    std::vector<Path> paths;
    bool truncated = false;
};

inline constexpr std::size_t default_path_cap = 10'000;

/// All simple u-v paths avoiding edges for which `avoid` is true, in DFS
/// order (neighbours ascending). Stops at `cap` paths and sets `truncated`
/// if more exist.
PathList simple_paths(const Graph& g, VertexIndex u, VertexIndex v, const EdgeFilter& avoid,
    std::size_t cap = default_path_cap);

/// Closed walk: vertices[0] == start, edges[i] joins vertices[i] and
/// vertices[(i + 1) % size].
struct Cycle {
    std::vector<VertexIndex> vertices;
    std::vector<EdgeIndex> edges;
};

/// Fundamental cycles of a BFS spanning forest rooted at the smallest
/// vertex of each component, one per non-tree edge in edge order.
std::vector<Cycle> cycle_basis(const Graph& g);

bool is_connected(const Graph& g);

/// The G_k family: l_0..l_k, r_0..r_k, m_1..m_k with the sigma swapping
/// l_i and r_i and fixing every m_i.
SymmetricGraph gk_graph(int k);

/// Two copies of `g` glued along the edge `f`; sigma swaps the copies and
/// fixes exactly the endpoints of `f`.
struct GluedGraph {
    SymmetricGraph graph;
    /// Index in `graph` of each vertex of the original copy.
    std::vector<VertexIndex> original;
    /// Index in `graph` of each vertex of the mirrored copy.
    std::vector<VertexIndex> mirrored;
};

GluedGraph glue_double(const Graph& g, EdgeIndex f);

/// Name given to the mirrored copy of `id` by glue_double.
VertexId mirrored_name(const VertexId& id);

} // namespace symflex
