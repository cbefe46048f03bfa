#pragma once

/**
 * @file graph.hpp
 * @brief Finite simple graphs: dense vertex indices 0..n-1, symmetric
 * irreflexive adjacency stored as per-vertex bitsets.
 *
 * Graphs are value types. Builders and combinators construct a graph and
 * return it by value; after that a Graph is treated as immutable and is
 * safe to share across threads.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace indpoly {

/// Direct materialization refuses graphs larger than this; bigger
/// constructions are handled symbolically (see expr.hpp).
inline constexpr int vertex_cap = 4096;

/// Thrown when an operation exceeds one of the documented size caps.
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Subset of the vertices 0..universe-1 of some graph, as a bitset.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.add(v);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const {
        return v >= 0 && v < universe_ && (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        check(v);
        words_[v >> 6] |= std::uint64_t(1) << (v & 63);
    }

    void remove(int v) {
        check(v);
        words_[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Lowest member, or -1 if empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    /// Set difference (and-not).
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }

    /// Visit members in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(int(i * 64 + __builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::size_t hash() const {
        std::size_t h = std::hash<int>{}(universe_);
        for (auto w : words_) h = h * 1099511628211ull ^ std::hash<std::uint64_t>{}(w);
        return h;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= universe_)
            throw std::out_of_range("VertexSet: vertex " + std::to_string(v) +
                                    " outside universe " + std::to_string(universe_));
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

/// Finite simple graph. Adjacency is kept symmetric and irreflexive by
/// construction; add_edge is the only mutator and rejects loops.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        if (n > vertex_cap)
            throw cap_exceeded("Graph: " + std::to_string(n) + " vertices exceeds cap of " +
                               std::to_string(vertex_cap) + "; use the symbolic calculus");
        adj_.assign(n, VertexSet(n));
    }

    int vertex_count() const { return n_; }

    long long edge_count() const {
        long long deg_sum = 0;
        for (const auto& s : adj_) deg_sum += s.count();
        return deg_sum / 2;
    }

    bool adjacent(int u, int v) const { return adj_[u].contains(v); }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("Graph: loop rejected");
        adj_[u].add(v);  // range checks live in VertexSet
        adj_[v].add(u);
    }

    const VertexSet& neighbors(int v) const { return adj_.at(v); }

    int degree(int v) const { return adj_.at(v).count(); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            adj_[u].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

inline VertexSet neighborhood(const Graph& g, int v) { return g.neighbors(v); }

inline VertexSet closed_neighborhood(const Graph& g, int v) {
    VertexSet s = g.neighbors(v);
    s.add(v);
    return s;
}

/// Connected components as vertex sets, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexSet> comps;
    std::vector<bool> seen(n, false);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp(n);
        stack.push_back(s);
        seen[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.add(u);
            g.neighbors(u).for_each([&](int w) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            });
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || components(g).size() == 1;
}

/// Subgraph induced by the kept vertices, reindexed densely in ascending
/// order of the original indices.
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<int> verts = keep.to_vector();
    std::vector<int> newidx(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) newidx[verts[i]] = int(i);
    Graph h(int(verts.size()));
    for (int u : verts)
        g.neighbors(u).for_each([&](int v) {
            if (u < v && keep.contains(v)) h.add_edge(newidx[u], newidx[v]);
        });
    return h;
}

/// Girth value; forests get a distinguished acyclic value that compares
/// greater than every finite girth.
class Girth {
public:
    static Girth acyclic() { return Girth(); }
    static Girth finite(int g) { return Girth(g); }

    bool is_acyclic() const { return !value_.has_value(); }

    /// Finite girth; throws for acyclic graphs.
    int value() const {
        if (!value_) throw std::logic_error("Girth: acyclic has no finite value");
        return *value_;
    }

    friend bool operator==(const Girth& a, const Girth& b) { return a.value_ == b.value_; }
    friend bool operator<(const Girth& a, const Girth& b) {
        if (a.is_acyclic()) return false;           // acyclic is maximal
        if (b.is_acyclic()) return true;
        return *a.value_ < *b.value_;
    }
    friend bool operator>(const Girth& a, const Girth& b) { return b < a; }

    friend bool operator==(const Girth& a, int k) { return a.value_ == std::optional<int>(k); }
    friend bool operator>=(const Girth& a, int k) { return a.is_acyclic() || *a.value_ >= k; }
    friend bool operator<(const Girth& a, int k) { return !(a >= k); }

private:
    Girth() = default;
    explicit Girth(int g) : value_(g) {}
    std::optional<int> value_;
};

/// Length of a shortest cycle. BFS from every vertex; an edge closing two
/// BFS branches at depths d(u), d(v) witnesses a cycle of length
/// d(u)+d(v)+1, and the minimum over all starts is exact for unweighted
/// graphs.
inline Girth girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            bool prune = false;
            g.neighbors(u).for_each([&](int w) {
                if (prune) return;
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                    if (best == 3) prune = true;
                }
            });
            if (prune) break;
        }
        if (best == 3) break;  // no shorter cycle exists in a simple graph
    }
    return best == -1 ? Girth::acyclic() : Girth::finite(best);
}

/// True iff the pendant edges (edges with a degree-1 endpoint) cover every
/// vertex exactly once.
inline bool pendant_perfect_matching(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<int> cover(n, 0);
    for (auto [u, v] : g.edges())
        if (g.degree(u) == 1 || g.degree(v) == 1) {
            ++cover[u];
            ++cover[v];
        }
    return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

}  // namespace indpoly
