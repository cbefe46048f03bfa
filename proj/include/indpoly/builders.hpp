#pragma once

/**
 * @file builders.hpp
 * @brief Named graph families and the structural combinators: disjoint
 * union, Zykov sum (join) and the pendant corona G -> G*.
 *
 * Index conventions are fixed so combinator output is deterministic:
 * disjoint_union keeps g1's indices and shifts g2's by |V(g1)|; zykov_sum
 * does the same before adding all cross edges; corona_k1 appends the new
 * pendant vertex of vertex i at index n+i; star's hub is vertex 0.
 */

#include <numeric>
#include <vector>

#include "indpoly/graph.hpp"

namespace indpoly {

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

/// Star K_{1,n}: hub 0 plus n leaves, n+1 vertices in total.
inline Graph star(int n) {
    Graph g(n + 1);
    for (int v = 1; v <= n; ++v) g.add_edge(0, v);
    return g;
}

/// Complete graph minus the edge {0,1}.
inline Graph complete_minus_edge(int n) {
    if (n < 2) throw std::invalid_argument("complete_minus_edge: need n >= 2");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(u == 0 && v == 1)) g.add_edge(u, v);
    return g;
}

/// Complete multipartite graph; vertices of different parts are adjacent.
/// An empty part list yields the empty graph.
inline Graph multipartite(const std::vector<int>& parts) {
    long long total = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("multipartite: part sizes must be >= 1");
        total += p;
    }
    if (total > vertex_cap)
        throw cap_exceeded("multipartite: " + std::to_string(total) +
                           " vertices exceeds cap of " + std::to_string(vertex_cap) +
                           "; use the symbolic calculus");
    Graph g{int(total)};
    std::vector<int> start(parts.size() + 1, 0);
    std::partial_sum(parts.begin(), parts.end(), start.begin() + 1);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (int u = start[i]; u < start[i + 1]; ++u)
                for (int v = start[j]; v < start[j + 1]; ++v) g.add_edge(u, v);
    return g;
}

inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count();
    Graph g(n1 + g2.vertex_count());
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
    return g;
}

/// Zykov sum (join): both graphs plus every cross edge.
inline Graph zykov_sum(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    Graph g = disjoint_union(g1, g2);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) g.add_edge(u, n1 + v);
    return g;
}

/// Pendant corona G*: one new pendant neighbor n+i attached to each
/// vertex i of g.
inline Graph corona_k1(const Graph& g) {
    const int n = g.vertex_count();
    Graph h(2 * n);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (int v = 0; v < n; ++v) h.add_edge(v, n + v);
    return h;
}

}  // namespace indpoly
