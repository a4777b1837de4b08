#pragma once

#include <stdexcept>

#include "fraccover/graph.hpp"

namespace fraccover {

namespace detail {

// True iff the candidate set contains a clique on t vertices.
inline bool clique_at_least(const Graph& g, const Bitset& cand, int t) {
    if (t <= 0) return true;
    if (cand.count() < t) return false;
    // Branch on the lowest candidate: either it joins the clique or it does not.
    Bitset rest = cand;
    for (int v = rest.next(0); v >= 0; v = rest.next(v + 1)) {
        Bitset with_v = rest;
        with_v &= g.neighbors(v);
        if (clique_at_least(g, with_v, t - 1)) return true;
        rest.reset(v);
        if (rest.count() < t) return false;
    }
    return false;
}

inline void max_clique_rec(const Graph& g, const Bitset& cand, int size, int& best) {
    int c = cand.count();
    if (size + c <= best) return;
    if (c == 0) {
        best = size;
        return;
    }
    Bitset rest = cand;
    for (int v = rest.next(0); v >= 0; v = rest.next(v + 1)) {
        if (size + rest.count() <= best) return;
        Bitset with_v = rest;
        with_v &= g.neighbors(v);
        max_clique_rec(g, with_v, size + 1, best);
        rest.reset(v);
    }
    if (size > best) best = size;
}

}  // namespace detail

// True iff the subgraph induced by S contains a clique on t vertices (t >= 1).
inline bool has_clique_of_size(const Graph& g, const VertexSet& S, int t) {
    if (t < 1) throw std::invalid_argument("has_clique_of_size: need t >= 1");
    return detail::clique_at_least(g, S, t);
}

inline int clique_number(const Graph& g, const VertexSet& within) {
    int best = 0;
    detail::max_clique_rec(g, within, 0, best);
    return best;
}

// omega(G), by exact branch-and-bound. Rejects the empty graph.
inline int clique_number(const Graph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("clique_number: undefined on the empty graph");
    return clique_number(g, g.vertices());
}

}  // namespace fraccover
