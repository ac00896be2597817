#pragma once

// Definition-level reference implementations. They enumerate raw edge
// subsets and colourings instead of using components or orbits, so they
// share no code path with the library beyond the graph container.

#include "symflex/colourings.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using symflex::Colour;
using symflex::Graph;
using symflex::SymmetricGraph;

/// Every edge subset forming exactly one cycle, as a bitmask over edges.
inline std::vector<std::uint64_t> all_cycles(const Graph& g)
{
    const std::size_t m = g.edge_count();
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t { 1 } << m); ++mask) {
        std::vector<int> degree(g.vertex_count(), 0);
        int first = -1;
        for (std::size_t e = 0; e < m; ++e) {
            if ((mask >> e) & 1U) {
                ++degree[static_cast<std::size_t>(g.edge(static_cast<int>(e)).u)];
                ++degree[static_cast<std::size_t>(g.edge(static_cast<int>(e)).v)];
                first = g.edge(static_cast<int>(e)).u;
            }
        }
        if (std::any_of(degree.begin(), degree.end(), [](int d) { return d != 0 && d != 2; })) {
            continue;
        }
        std::vector<bool> seen(g.vertex_count(), false);
        std::vector<int> stack { first };
        seen[static_cast<std::size_t>(first)] = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto& inc : g.neighbours(v)) {
                if (((mask >> inc.edge) & 1U) && !seen[static_cast<std::size_t>(inc.neighbour)]) {
                    seen[static_cast<std::size_t>(inc.neighbour)] = true;
                    stack.push_back(inc.neighbour);
                }
            }
        }
        bool single = true;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            single = single && (degree[v] == 0 || seen[v]);
        }
        if (single) {
            out.push_back(mask);
        }
    }
    return out;
}

inline int count_on(std::uint64_t mask, const std::vector<Colour>& colour, Colour c)
{
    int n = 0;
    for (std::size_t e = 0; e < colour.size(); ++e) {
        n += ((mask >> e) & 1U) && colour[e] == c ? 1 : 0;
    }
    return n;
}

/// Surjective red/blue colouring with no cycle holding exactly one edge
/// of either colour.
inline bool is_nac(const std::vector<std::uint64_t>& cycles, const std::vector<Colour>& colour)
{
    const bool red = std::find(colour.begin(), colour.end(), Colour::Red) != colour.end();
    const bool blue = std::find(colour.begin(), colour.end(), Colour::Blue) != colour.end();
    if (!red || !blue || std::find(colour.begin(), colour.end(), Colour::Gold) != colour.end()) {
        return false;
    }
    for (std::uint64_t c : cycles) {
        if (count_on(c, colour, Colour::Red) == 1 || count_on(c, colour, Colour::Blue) == 1) {
            return false;
        }
    }
    return true;
}

inline std::vector<Colour> substitute(std::vector<Colour> colour, Colour to)
{
    std::replace(colour.begin(), colour.end(), Colour::Gold, to);
    return colour;
}

inline bool is_pseudo_rs(const SymmetricGraph& g, const std::vector<std::uint64_t>& cycles, const std::vector<Colour>& colour)
{
    if (std::find(colour.begin(), colour.end(), Colour::Red) == colour.end()
        || std::find(colour.begin(), colour.end(), Colour::Blue) == colour.end()) {
        return false;
    }
    for (std::size_t e = 0; e < colour.size(); ++e) {
        const Colour mirrored = colour[static_cast<std::size_t>(g.mirror_edge(static_cast<int>(e)))];
        if ((colour[e] == Colour::Red) != (mirrored == Colour::Blue)) {
            return false;
        }
    }
    return is_nac(cycles, substitute(colour, Colour::Blue)) && is_nac(cycles, substitute(colour, Colour::Red));
}

/// All 3^|E| colourings filtered by the definition, in lexicographic order.
inline std::vector<std::vector<Colour>> enumerate_pseudo_rs(const SymmetricGraph& g)
{
    const auto cycles = all_cycles(g.graph());
    const std::size_t m = g.edge_count();
    std::vector<std::vector<Colour>> out;
    std::vector<Colour> colour(m, Colour::Red);
    while (true) {
        if (is_pseudo_rs(g, cycles, colour)) {
            out.push_back(colour);
        }
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (colour[i] != Colour::Gold) {
                colour[i] = static_cast<Colour>(static_cast<int>(colour[i]) + 1);
                break;
            }
            colour[i] = Colour::Red;
            if (i == 0) {
                return out;
            }
        }
        if (m == 0) {
            return out;
        }
    }
}

/// Cycles with exactly one gold edge.
inline std::vector<std::uint64_t> almost_red_blue(const std::vector<std::uint64_t>& cycles, const std::vector<Colour>& colour)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t c : cycles) {
        if (count_on(c, colour, Colour::Gold) == 1) {
            out.push_back(c);
        }
    }
    return out;
}

inline bool connected_within(const Graph& g, int a, int b, const std::vector<Colour>& colour, Colour x, Colour y)
{
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<int> stack { a };
    seen[static_cast<std::size_t>(a)] = true;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const auto& inc : g.neighbours(v)) {
            const Colour c = colour[static_cast<std::size_t>(inc.edge)];
            if ((c == x || c == y) && !seen[static_cast<std::size_t>(inc.neighbour)]) {
                seen[static_cast<std::size_t>(inc.neighbour)] = true;
                stack.push_back(inc.neighbour);
            }
        }
    }
    return seen[static_cast<std::size_t>(b)];
}

/// No distinct pair joined by a red-blue, a red-gold and a blue-gold path.
inline bool is_cartesian(const Graph& g, const std::vector<Colour>& colour)
{
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        for (std::size_t w = v + 1; w < g.vertex_count(); ++w) {
            const int a = static_cast<int>(v);
            const int b = static_cast<int>(w);
            if (connected_within(g, a, b, colour, Colour::Red, Colour::Blue)
                && connected_within(g, a, b, colour, Colour::Red, Colour::Gold)
                && connected_within(g, a, b, colour, Colour::Blue, Colour::Gold)) {
                return false;
            }
        }
    }
    return true;
}

/// Connected graphs on 2..max_n vertices with at most max_m edges, closed
/// under sigma = (0 1)(2 3)...(2k-2 2k-1) for every k >= 1. Every graph with
/// a non-identity involution is isomorphic to one of these.
inline std::vector<SymmetricGraph> small_symmetric_graphs(int max_n, std::size_t max_m)
{
    std::vector<SymmetricGraph> out;
    for (int n = 2; n <= max_n; ++n) {
        std::vector<symflex::VertexId> names;
        for (int v = 0; v < n; ++v) {
            names.push_back(std::to_string(v));
        }
        for (int k = 1; 2 * k <= n; ++k) {
            std::vector<int> sigma(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) {
                sigma[static_cast<std::size_t>(v)] = v < 2 * k ? (v ^ 1) : v;
            }
            std::vector<std::pair<symflex::VertexId, symflex::VertexId>> sigma_names;
            for (int v = 0; v < n; ++v) {
                sigma_names.emplace_back(names[static_cast<std::size_t>(v)], names[static_cast<std::size_t>(sigma[static_cast<std::size_t>(v)])]);
            }
            // Edge orbits of sigma on the complete graph.
            std::vector<std::vector<std::pair<int, int>>> orbits;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    int a = sigma[static_cast<std::size_t>(u)];
                    int b = sigma[static_cast<std::size_t>(v)];
                    if (a > b) {
                        std::swap(a, b);
                    }
                    if (std::pair { a, b } < std::pair { u, v }) {
                        continue;
                    }
                    orbits.push_back({ { u, v } });
                    if (std::pair { a, b } != std::pair { u, v }) {
                        orbits.back().emplace_back(a, b);
                    }
                }
            }
            for (std::uint64_t mask = 1; mask < (std::uint64_t { 1 } << orbits.size()); ++mask) {
                std::vector<std::pair<symflex::VertexId, symflex::VertexId>> edges;
                std::vector<int> parent(static_cast<std::size_t>(n));
                for (int v = 0; v < n; ++v) {
                    parent[static_cast<std::size_t>(v)] = v;
                }
                const auto find = [&](int v) {
                    while (parent[static_cast<std::size_t>(v)] != v) {
                        v = parent[static_cast<std::size_t>(v)];
                    }
                    return v;
                };
                int parts = n;
                for (std::size_t o = 0; o < orbits.size(); ++o) {
                    if (((mask >> o) & 1U) == 0U) {
                        continue;
                    }
                    for (const auto& [u, v] : orbits[o]) {
                        edges.emplace_back(names[static_cast<std::size_t>(u)], names[static_cast<std::size_t>(v)]);
                        const int ru = find(u);
                        const int rv = find(v);
                        if (ru != rv) {
                            parent[static_cast<std::size_t>(ru)] = rv;
                            --parts;
                        }
                    }
                }
                if (edges.size() > max_m || parts != 1) {
                    continue;
                }
                out.push_back(symflex::validate_symmetry(names, edges, sigma_names));
            }
        }
    }
    return out;
}

} // namespace oracle
