#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "fraccover/graph.hpp"

namespace fraccover {

// Total map V(G1) -> V(G2) sending every edge of G1 to an edge of G2.
struct HomomorphismMap {
    std::vector<int> assignment;
};

inline bool verify_homomorphism(const Graph& g1, const Graph& g2, const HomomorphismMap& h) {
    if (static_cast<int>(h.assignment.size()) != g1.vertex_count()) return false;
    for (int t : h.assignment)
        if (t < 0 || t >= g2.vertex_count()) return false;
    for (auto [u, v] : g1.edges())
        if (!g2.adjacent(h.assignment[static_cast<std::size_t>(u)],
                         h.assignment[static_cast<std::size_t>(v)]))
            return false;
    return true;
}

namespace detail {

// Vertices sorted by descending degree, ties by id.
inline std::vector<int> degree_order(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

class HomSearch {
public:
    HomSearch(const Graph& g1, const Graph& g2) : g1_(g1), g2_(g2) {
        order_ = degree_order(g1);
        position_.assign(static_cast<std::size_t>(g1.vertex_count()), -1);
        for (int p = 0; p < g1.vertex_count(); ++p)
            position_[static_cast<std::size_t>(order_[static_cast<std::size_t>(p)])] = p;
        assignment_.assign(static_cast<std::size_t>(g1.vertex_count()), -1);
    }

    std::optional<HomomorphismMap> run() {
        if (g1_.vertex_count() == 0) return HomomorphismMap{{}};
        if (g2_.vertex_count() == 0) return std::nullopt;
        std::vector<Bitset> domains(static_cast<std::size_t>(g1_.vertex_count()),
                                    Bitset::all(g2_.vertex_count()));
        if (assign(0, domains)) return HomomorphismMap{assignment_};
        return std::nullopt;
    }

private:
    bool assign(int pos, const std::vector<Bitset>& domains) {
        if (pos == g1_.vertex_count()) return true;
        int u = order_[static_cast<std::size_t>(pos)];
        const Bitset& dom = domains[static_cast<std::size_t>(u)];
        for (int t = dom.next(0); t >= 0; t = dom.next(t + 1)) {
            assignment_[static_cast<std::size_t>(u)] = t;
            std::vector<Bitset> next = domains;
            bool dead = false;
            const Bitset& nb1 = g1_.neighbors(u);
            for (int w = nb1.next(0); w >= 0; w = nb1.next(w + 1)) {
                if (position_[static_cast<std::size_t>(w)] <= pos) continue;  // already assigned
                auto& dw = next[static_cast<std::size_t>(w)];
                dw &= g2_.neighbors(t);
                if (dw.none()) {
                    dead = true;
                    break;
                }
            }
            if (!dead && assign(pos + 1, next)) return true;
            assignment_[static_cast<std::size_t>(u)] = -1;
        }
        return false;
    }

    const Graph& g1_;
    const Graph& g2_;
    std::vector<int> order_;
    std::vector<int> position_;
    std::vector<int> assignment_;
};

// Searches for an automorphism of g with a prescribed image of one vertex.
class AutomorphismSearch {
public:
    AutomorphismSearch(const Graph& g, int source, int target)
        : g_(g), source_(source), target_(target) {
        order_.push_back(source);
        for (int v : degree_order(g))
            if (v != source) order_.push_back(v);
        position_.assign(static_cast<std::size_t>(g.vertex_count()), -1);
        for (int p = 0; p < g.vertex_count(); ++p)
            position_[static_cast<std::size_t>(order_[static_cast<std::size_t>(p)])] = p;
    }

    bool exists() {
        int n = g_.vertex_count();
        std::vector<Bitset> domains;
        domains.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            Bitset d(n);
            for (int t = 0; t < n; ++t)
                if (g_.degree(t) == g_.degree(v)) d.set(t);
            domains.push_back(std::move(d));
        }
        Bitset forced(n);
        forced.set(target_);
        domains[static_cast<std::size_t>(source_)] = forced;
        return assign(0, domains);
    }

private:
    bool assign(int pos, const std::vector<Bitset>& domains) {
        int n = g_.vertex_count();
        if (pos == n) return true;
        int u = order_[static_cast<std::size_t>(pos)];
        const Bitset& dom = domains[static_cast<std::size_t>(u)];
        for (int t = dom.next(0); t >= 0; t = dom.next(t + 1)) {
            std::vector<Bitset> next = domains;
            bool dead = false;
            for (int p = pos + 1; p < n && !dead; ++p) {
                int w = order_[static_cast<std::size_t>(p)];
                auto& dw = next[static_cast<std::size_t>(w)];
                dw.reset(t);  // injective
                if (g_.adjacent(u, w))
                    dw &= g_.neighbors(t);
                else
                    dw.subtract(g_.neighbors(t));
                if (dw.none()) dead = true;
            }
            if (!dead && assign(pos + 1, next)) return true;
        }
        return false;
    }

    const Graph& g_;
    int source_;
    int target_;
    std::vector<int> order_;
    std::vector<int> position_;
};

}  // namespace detail

// First edge-preserving map found with targets tried in ascending id and
// source vertices assigned in descending-degree order (ties by id); absent if
// no homomorphism exists.
inline std::optional<HomomorphismMap> find_homomorphism(const Graph& g1, const Graph& g2) {
    detail::HomSearch search(g1, g2);
    return search.run();
}

// a:b-colourability, via the homomorphism characterization into KG(a,b).
inline bool is_ab_colorable(const Graph& g, int a, int b) {
    if (b < 1 || a < b) throw std::invalid_argument("is_ab_colorable: need a >= b >= 1");
    return find_homomorphism(g, kneser_graph(a, b)).has_value();
}

// True iff for every vertex v some automorphism maps vertex 0 to v.
inline bool is_vertex_transitive(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != g.degree(0)) return false;
    for (int v = 1; v < n; ++v) {
        detail::AutomorphismSearch search(g, 0, v);
        if (!search.exists()) return false;
    }
    return true;
}

}  // namespace fraccover
