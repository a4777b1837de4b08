#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fraccover/bitset.hpp"

namespace fraccover {

// A vertex set identifies an induced subgraph of its associated graph.
using VertexSet = Bitset;

// Immutable simple undirected graph on vertices 0..n-1.
// No self-loops, adjacency symmetric; stored as per-vertex neighbor masks.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        adj_.assign(static_cast<std::size_t>(n), Bitset(n));
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        int twice = 0;
        for (const auto& row : adj_) twice += row.count();
        return twice / 2;
    }

    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(v); }

    const Bitset& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }

    VertexSet vertices() const { return Bitset::all(n_); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[static_cast<std::size_t>(u)].next(u + 1); v >= 0;
                 v = adj_[static_cast<std::size_t>(u)].next(v + 1))
                out.emplace_back(u, v);
        return out;
    }

private:
    void add_edge(int u, int v) {
        adj_[static_cast<std::size_t>(u)].set(v);
        adj_[static_cast<std::size_t>(v)].set(u);
    }

    int n_ = 0;
    std::vector<Bitset> adj_;

    friend Graph build_graph(int, const std::vector<std::pair<int, int>>&);
    friend Graph complete_graph(int);
    friend Graph cycle_graph(int);
    friend Graph kneser_graph(int, int);
    friend Graph complement(const Graph&);
    friend Graph conormal_product(const Graph&, const Graph&);
};

// Builds the simple graph with exactly the given edges; duplicates collapse.
// Rejects self-loops and out-of-range endpoints.
inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("build_graph: vertex out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("build_graph: self-loop at vertex " + std::to_string(u));
        g.add_edge(u, v);
    }
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Graph g(n);
    for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
    return g;
}

inline Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph out(n);
    for (int u = 0; u < n; ++u) {
        Bitset row = g.neighbors(u).complement();
        row.reset(u);
        out.adj_[static_cast<std::size_t>(u)] = row;
    }
    return out;
}

namespace detail {

// All b-subsets of {0..a-1} in lexicographic order of their ascending tuples.
inline std::vector<std::vector<int>> combinations(int a, int b) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(b));
    for (int i = 0; i < b; ++i) cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = b - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == a - b + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < b; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace detail

// Kneser graph KG(a,b): vertices are the b-subsets of an a-set in
// lexicographic order; two vertices are adjacent iff the subsets are disjoint.
inline Graph kneser_graph(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("kneser_graph: need a, b >= 1");
    if (b > a) throw std::invalid_argument("kneser_graph: need b <= a");
    auto subsets = detail::combinations(a, b);
    int n = static_cast<int>(subsets.size());
    std::vector<Bitset> masks;
    masks.reserve(subsets.size());
    for (const auto& s : subsets) {
        Bitset m(a);
        for (int e : s) m.set(e);
        masks.push_back(std::move(m));
    }
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!masks[static_cast<std::size_t>(u)].intersects(masks[static_cast<std::size_t>(v)]))
                g.add_edge(u, v);
    return g;
}

// Co-normal product: vertex set V(G) x V(H) indexed row-major as u*|V(H)|+v;
// (u1,v1) ~ (u2,v2) iff u1u2 in E(G) or v1v2 in E(H).
inline Graph conormal_product(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    Graph out(ng * nh);
    for (int u1 = 0; u1 < ng; ++u1)
        for (int v1 = 0; v1 < nh; ++v1)
            for (int u2 = u1; u2 < ng; ++u2) {
                int v2start = (u2 == u1) ? v1 + 1 : 0;
                for (int v2 = v2start; v2 < nh; ++v2)
                    if (g.adjacent(u1, u2) || h.adjacent(v1, v2))
                        out.add_edge(u1 * nh + v1, u2 * nh + v2);
            }
    return out;
}

}  // namespace fraccover
