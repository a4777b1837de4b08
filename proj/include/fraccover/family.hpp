#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fraccover/clique.hpp"
#include "fraccover/coloring.hpp"
#include "fraccover/graph.hpp"
#include "fraccover/rational.hpp"

namespace fraccover {

// Selects the subgraph class F: independent sets, (k+1)-clique-free induced
// subgraphs, or k-colourable induced subgraphs. Independent coincides with
// CliqueFree(1) and Colorable(1).
struct FamilyKind {
    enum class Tag { Independent, CliqueFree, Colorable };

    Tag tag = Tag::Independent;
    int k = 1;

    static FamilyKind independent() { return {Tag::Independent, 1}; }
    static FamilyKind clique_free(int k) {
        if (k < 1) throw std::invalid_argument("FamilyKind: need k >= 1");
        return {Tag::CliqueFree, k};
    }
    static FamilyKind colorable(int k) {
        if (k < 1) throw std::invalid_argument("FamilyKind: need k >= 1");
        return {Tag::Colorable, k};
    }

    bool operator==(const FamilyKind& o) const { return tag == o.tag && k == o.k; }

    std::string str() const {
        switch (tag) {
            case Tag::Independent: return "independent";
            case Tag::CliqueFree: return "cliquefree(" + std::to_string(k) + ")";
            case Tag::Colorable: return "colorable(" + std::to_string(k) + ")";
        }
        return "?";
    }
};

struct WeightedVertexSet {
    VertexSet set;
    Rational weight;
};

// Membership of the induced subgraph G[S] in the family. The empty set is a
// member of every family.
inline bool is_member(const Graph& g, const VertexSet& S, FamilyKind kind) {
    switch (kind.tag) {
        case FamilyKind::Tag::Independent:
            for (int v = S.next(0); v >= 0; v = S.next(v + 1))
                if (g.neighbors(v).intersects(S)) return false;
            return true;
        case FamilyKind::Tag::CliqueFree:
            return !detail::clique_at_least(g, S, kind.k + 1);
        case FamilyKind::Tag::Colorable:
            return is_k_colorable(g, S, kind.k);
    }
    return false;
}

namespace detail {

// Can v join S without leaving the family? Assumes S itself is a member.
// For clique-free families this only inspects cliques through v.
inline bool addable(const Graph& g, const Bitset& S, int v, FamilyKind kind) {
    switch (kind.tag) {
        case FamilyKind::Tag::Independent:
            return !g.neighbors(v).intersects(S);
        case FamilyKind::Tag::CliqueFree: {
            Bitset around = S;
            around &= g.neighbors(v);
            return !clique_at_least(g, around, kind.k);
        }
        case FamilyKind::Tag::Colorable: {
            Bitset with_v = S;
            with_v.set(v);
            return is_k_colorable(g, with_v, kind.k);
        }
    }
    return false;
}

// Bron-Kerbosch with pivoting over an explicit adjacency (used on the
// complement to list maximal independent sets). emit returns false to stop.
inline bool bron_kerbosch(const std::vector<Bitset>& adj, Bitset& R, Bitset& P, Bitset& X,
                          const std::function<bool(const Bitset&)>& emit) {
    if (P.none() && X.none()) return emit(R);
    int pivot = -1, pivot_score = -1;
    Bitset both = P;
    both |= X;
    for (int u = both.next(0); u >= 0; u = both.next(u + 1)) {
        Bitset covered = P;
        covered &= adj[static_cast<std::size_t>(u)];
        int score = covered.count();
        if (score > pivot_score) {
            pivot_score = score;
            pivot = u;
        }
    }
    Bitset ext = P;
    ext.subtract(adj[static_cast<std::size_t>(pivot)]);
    for (int v = ext.next(0); v >= 0; v = ext.next(v + 1)) {
        Bitset R2 = R, P2 = P, X2 = X;
        R2.set(v);
        P2 &= adj[static_cast<std::size_t>(v)];
        X2 &= adj[static_cast<std::size_t>(v)];
        if (!bron_kerbosch(adj, R2, P2, X2, emit)) return false;
        P.reset(v);
        X.set(v);
    }
    return true;
}

// Branch/exclude enumeration of maximal members of a hereditary family:
// S decided-in, C undecided-and-addable, X decided-out. A branch dies when
// some excluded vertex stays addable no matter which candidates join.
inline bool hereditary_maximal(const Graph& g, FamilyKind kind, Bitset& S, Bitset& C, Bitset& X,
                               const std::function<bool(const Bitset&)>& emit) {
    Bitset reach = S;
    reach |= C;
    for (int x = X.next(0); x >= 0; x = X.next(x + 1))
        if (addable(g, reach, x, kind)) return true;  // no maximal set below
    if (C.none()) {
        for (int x = X.next(0); x >= 0; x = X.next(x + 1))
            if (addable(g, S, x, kind)) return true;
        return emit(S);
    }
    int v = C.next(0);
    {
        Bitset S2 = S, C2(g.vertex_count()), X2(g.vertex_count());
        S2.set(v);
        for (int u = C.next(0); u >= 0; u = C.next(u + 1))
            if (u != v && addable(g, S2, u, kind)) C2.set(u);
        for (int x = X.next(0); x >= 0; x = X.next(x + 1))
            if (addable(g, S2, x, kind)) X2.set(x);
        if (!hereditary_maximal(g, kind, S2, C2, X2, emit)) return false;
    }
    Bitset C2 = C, X2 = X;
    C2.reset(v);
    X2.set(v);
    return hereditary_maximal(g, kind, S, C2, X2, emit);
}

}  // namespace detail

// Streams every inclusion-maximal member of the family; emit returns false to
// stop early. Order of emission is deterministic but not canonical.
inline void for_each_maximal_member(const Graph& g, FamilyKind kind,
                                    const std::function<bool(const Bitset&)>& emit,
                                    int colorable_limit = 16) {
    int n = g.vertex_count();
    if (n == 0) {
        emit(Bitset(0));  // the empty set is the single (vacuously maximal) member
        return;
    }
    if (kind.tag == FamilyKind::Tag::Colorable && n > colorable_limit)
        throw std::invalid_argument(
            "enumerate_maximal: graph on " + std::to_string(n) +
            " vertices exceeds the colourable-family enumeration limit of " +
            std::to_string(colorable_limit) + "; use column generation or raise the limit");
    if (kind.tag == FamilyKind::Tag::Independent) {
        std::vector<Bitset> co(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            Bitset row = g.neighbors(v).complement();
            row.reset(v);
            co[static_cast<std::size_t>(v)] = row;
        }
        Bitset R(n), P = Bitset::all(n), X(n);
        detail::bron_kerbosch(co, R, P, X, emit);
        return;
    }
    Bitset S(n), C = Bitset::all(n), X(n);
    detail::hereditary_maximal(g, kind, S, C, X, emit);
}

// All inclusion-maximal members, canonically sorted (size descending, then by
// ascending-id element sequence).
inline std::vector<VertexSet> enumerate_maximal(const Graph& g, FamilyKind kind,
                                                int colorable_limit = 16) {
    std::vector<VertexSet> out;
    for_each_maximal_member(
        g, kind,
        [&](const Bitset& s) {
            out.push_back(s);
            return true;
        },
        colorable_limit);
    std::sort(out.begin(), out.end(), canonical_less);
    for (const auto& s : out)
        if (!is_member(g, s, kind))
            throw std::logic_error("enumerate_maximal: produced a non-member");
    return out;
}

namespace detail {

// After v joins S, drop from C every u whose addition would now close a
// (k+1)-clique; new cliques must contain both u and v.
inline Bitset filter_candidates_cliquefree(const Graph& g, int k, const Bitset& S, int v,
                                           const Bitset& C) {
    Bitset out = C;
    Bitset touched = C;
    touched &= g.neighbors(v);
    Bitset base = S;
    base &= g.neighbors(v);
    for (int u = touched.next(0); u >= 0; u = touched.next(u + 1)) {
        Bitset common = base;
        common &= g.neighbors(u);
        if (clique_at_least(g, common, k - 1)) out.reset(u);
    }
    return out;
}

struct BetaSearch {
    const Graph& g;
    int k;
    int best = 0;

    void run() {
        int n = g.vertex_count();
        // Greedy incumbent over ascending ids.
        Bitset S(n);
        for (int v = 0; v < n; ++v)
            if (addable(g, S, v, FamilyKind::clique_free(k))) S.set(v);
        best = S.count();
        Bitset empty(n);
        recurse(empty, Bitset::all(n));
    }

    void recurse(const Bitset& S, Bitset C) {
        int size = S.count();
        while (true) {
            if (size + C.count() <= best) return;
            int v = C.next(0);
            if (v < 0) {
                best = size;  // guarded by the bound above
                return;
            }
            C.reset(v);
            Bitset S2 = S;
            S2.set(v);
            recurse(S2, filter_candidates_cliquefree(g, k, S, v, C));
            // loop continues with v excluded
        }
    }
};

}  // namespace detail

// beta_k(G): maximum number of vertices inducing a (k+1)-clique-free
// subgraph. Exact branch-and-bound over in/out decisions with bound
// |S| + |candidates| and a greedy incumbent.
inline int beta_k(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("beta_k: need k >= 1");
    if (g.vertex_count() == 0) return 0;
    detail::BetaSearch search{g, k};
    search.run();
    return search.best;
}

namespace detail {

template <typename W>
struct MaxWeightSearch {
    const Graph& g;
    int k;
    const std::vector<W>& w;
    W best_weight{0};
    Bitset best_set;

    void run() {
        int n = g.vertex_count();
        best_set = Bitset(n);
        Bitset C(n);
        for (int v = 0; v < n; ++v)
            if (w[static_cast<std::size_t>(v)] > W{0}) C.set(v);
        Bitset empty(n);
        recurse(empty, W{0}, C);
    }

    W total(const Bitset& C) const {
        W t{0};
        for (int v = C.next(0); v >= 0; v = C.next(v + 1)) t += w[static_cast<std::size_t>(v)];
        return t;
    }

    // Ascending ids, include branch first, strict improvement only: the
    // returned optimum is the first in depth-first include-order, which
    // prefers sets containing the smallest undecided vertex.
    void recurse(const Bitset& S, W weight, Bitset C) {
        while (true) {
            if (weight + total(C) <= best_weight) return;
            int v = C.next(0);
            if (v < 0) {  // leaf; the bound above guarantees strict improvement
                best_weight = weight;
                best_set = S;
                return;
            }
            C.reset(v);
            Bitset S2 = S;
            S2.set(v);
            recurse(S2, weight + w[static_cast<std::size_t>(v)],
                    filter_candidates_cliquefree(g, k, S, v, C));
            // loop continues with v excluded
        }
    }
};

}  // namespace detail

// Maximum-weight family member for Independent or CliqueFree(k) under
// non-negative vertex weights; the column-generation pricing oracle.
// Zero-weight vertices never enter the returned set.
inline WeightedVertexSet max_weight_member(const Graph& g, FamilyKind kind,
                                           const std::vector<Rational>& weights) {
    if (kind.tag == FamilyKind::Tag::Colorable)
        throw std::invalid_argument("max_weight_member: colourable pricing is unsupported");
    int n = g.vertex_count();
    if (static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("max_weight_member: weight vector size mismatch");
    for (const auto& x : weights)
        if (x.sign() < 0) throw std::invalid_argument("max_weight_member: negative weight");
    int k = kind.tag == FamilyKind::Tag::Independent ? 1 : kind.k;

    // Scale to integers over the common denominator.
    mpz_class lcm = 1;
    for (const auto& x : weights) {
        mpz_class den = x.denominator();
        mpz_class gcd;
        mpz_gcd(gcd.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / gcd * den;
    }
    std::vector<mpz_class> scaled;
    scaled.reserve(weights.size());
    mpz_class sum = 0;
    for (const auto& x : weights) {
        mpz_class s = x.numerator() * (lcm / x.denominator());
        sum += s;
        scaled.push_back(std::move(s));
    }

    Bitset set(n);
    mpz_class best;
    if (sum.fits_slong_p() && sum < mpz_class(std::int64_t{1} << 62)) {
        std::vector<std::int64_t> wi;
        wi.reserve(scaled.size());
        for (const auto& s : scaled) wi.push_back(s.get_si());
        detail::MaxWeightSearch<std::int64_t> search{g, k, wi};
        search.run();
        set = search.best_set;
        best = search.best_weight;
    } else {
        detail::MaxWeightSearch<mpz_class> search{g, k, scaled};
        search.run();
        set = search.best_set;
        best = search.best_weight;
    }
    return WeightedVertexSet{set, Rational(best, lcm)};
}

// Greedy maximalization: adds ascending-id vertices while membership holds.
// A single pass suffices because addability is monotone under growth.
inline VertexSet extend_to_maximal(const Graph& g, FamilyKind kind, VertexSet S) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!S.test(v) && detail::addable(g, S, v, kind)) S.set(v);
    return S;
}

}  // namespace fraccover
