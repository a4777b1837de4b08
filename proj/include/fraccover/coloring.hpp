#pragma once

#include <stdexcept>
#include <vector>

#include "fraccover/clique.hpp"
#include "fraccover/graph.hpp"

namespace fraccover {

namespace detail {

// DSATUR-style exact colorability search on the subgraph induced by `verts`.
class ColorSearch {
public:
    ColorSearch(const Graph& g, const std::vector<int>& verts, int k)
        : k_(k), n_(static_cast<int>(verts.size())) {
        adj_.assign(static_cast<std::size_t>(n_), Bitset(n_));
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (g.adjacent(verts[static_cast<std::size_t>(i)],
                               verts[static_cast<std::size_t>(j)])) {
                    adj_[static_cast<std::size_t>(i)].set(j);
                    adj_[static_cast<std::size_t>(j)].set(i);
                }
        color_.assign(static_cast<std::size_t>(n_), -1);
        neighbor_color_count_.assign(static_cast<std::size_t>(n_),
                                     std::vector<int>(static_cast<std::size_t>(k_), 0));
    }

    bool run() { return extend(0, 0); }

private:
    int saturation(int v) const {
        int s = 0;
        for (int c = 0; c < k_; ++c)
            if (neighbor_color_count_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] > 0)
                ++s;
        return s;
    }

    // Most saturated uncolored vertex; ties by degree, then by lowest index.
    int pick() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_[static_cast<std::size_t>(v)] >= 0) continue;
            int s = saturation(v);
            int d = adj_[static_cast<std::size_t>(v)].count();
            if (s > best_sat || (s == best_sat && d > best_deg)) {
                best = v;
                best_sat = s;
                best_deg = d;
            }
        }
        return best;
    }

    bool extend(int colored, int used) {
        if (colored == n_) return true;
        int v = pick();
        int limit = used < k_ ? used + 1 : k_;  // at most one fresh color
        for (int c = 0; c < limit; ++c) {
            if (neighbor_color_count_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] > 0)
                continue;
            color_[static_cast<std::size_t>(v)] = c;
            const Bitset& nb = adj_[static_cast<std::size_t>(v)];
            for (int u = nb.next(0); u >= 0; u = nb.next(u + 1))
                ++neighbor_color_count_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)];
            if (extend(colored + 1, c == used ? used + 1 : used)) return true;
            for (int u = nb.next(0); u >= 0; u = nb.next(u + 1))
                --neighbor_color_count_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)];
            color_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    int k_;
    int n_;
    std::vector<Bitset> adj_;
    std::vector<int> color_;
    std::vector<std::vector<int>> neighbor_color_count_;
};

}  // namespace detail

// Exact test: is the subgraph induced by `within` properly k-colorable?
inline bool is_k_colorable(const Graph& g, const VertexSet& within, int k) {
    if (k < 0) throw std::invalid_argument("is_k_colorable: need k >= 0");
    std::vector<int> verts = within.to_vector();
    int n = static_cast<int>(verts.size());
    if (n == 0) return true;
    if (k == 0) return false;
    if (k >= n) return true;
    detail::ColorSearch search(g, verts, k);
    return search.run();
}

inline bool is_k_colorable(const Graph& g, int k) {
    return is_k_colorable(g, g.vertices(), k);
}

// chi(G): least k with is_k_colorable(G, k); 0 for the empty graph.
// Searches upward from omega(G), a valid lower bound.
inline int chromatic_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int k = clique_number(g);; ++k)
        if (is_k_colorable(g, k)) return k;
}

}  // namespace fraccover
