#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fraccover/clique.hpp"
#include "fraccover/coloring.hpp"
#include "fraccover/family.hpp"
#include "fraccover/graph.hpp"
#include "fraccover/homomorphism.hpp"
#include "fraccover/rational.hpp"
#include "fraccover/simplex.hpp"

namespace fraccover {

enum class Strategy { Auto, FullEnumeration, ColumnGeneration };

inline std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Auto: return "auto";
        case Strategy::FullEnumeration: return "enumerate";
        case Strategy::ColumnGeneration: return "colgen";
    }
    return "?";
}

struct CoverOptions {
    int colorable_limit = 16;       // max vertices for colourable-family enumeration
    int auto_column_cap = 200000;   // above this many maximal members, auto uses colgen
};

// An optimal fractional F-cover: family members with positive rational
// weights, the exact objective, and the dual vertex weights.
struct CoverSolution {
    FamilyKind kind;
    std::vector<std::pair<VertexSet, Rational>> members;
    Rational objective;
    std::vector<Rational> dual;
    Strategy strategy = Strategy::FullEnumeration;  // resolved, never Auto
};

// Checks every CoverSolution invariant by substitution: per-vertex coverage
// at least one, weights in [0,1] summing to the objective, membership of
// every member, and exact agreement of the dual total with the objective.
inline void validate_cover_solution(const Graph& g, const CoverSolution& sol) {
    Rational total;
    for (const auto& [set, weight] : sol.members) {
        if (weight <= Rational(0) || weight > Rational(1))
            throw std::logic_error("cover solution: member weight outside (0,1]");
        if (!is_member(g, set, sol.kind))
            throw std::logic_error("cover solution: member fails the family test");
        total += weight;
    }
    if (total != sol.objective)
        throw std::logic_error("cover solution: objective differs from the weight sum");
    for (int v = 0; v < g.vertex_count(); ++v) {
        Rational covered;
        for (const auto& [set, weight] : sol.members)
            if (set.test(v)) covered += weight;
        if (covered < Rational(1))
            throw std::logic_error("cover solution: vertex " + std::to_string(v) + " undercovered");
    }
    if (static_cast<int>(sol.dual.size()) != g.vertex_count())
        throw std::logic_error("cover solution: dual size mismatch");
    Rational dual_total;
    for (const auto& y : sol.dual) {
        if (y < Rational(0)) throw std::logic_error("cover solution: negative dual weight");
        dual_total += y;
    }
    if (dual_total != sol.objective)
        throw std::logic_error("cover solution: dual total differs from the objective");
}

namespace detail {

inline CoverSolution whole_graph_cover(const Graph& g, FamilyKind kind) {
    CoverSolution sol;
    sol.kind = kind;
    sol.strategy = Strategy::FullEnumeration;
    sol.members.emplace_back(g.vertices(), Rational(1));
    sol.objective = Rational(1);
    sol.dual.assign(static_cast<std::size_t>(g.vertex_count()), Rational(0));
    sol.dual[0] = Rational(1);
    return sol;
}

inline CoverSolution cover_from_lp(const Graph& g, FamilyKind kind, Strategy strategy,
                                   const std::vector<VertexSet>& columns,
                                   const LpSolution& lp_sol) {
    CoverSolution sol;
    sol.kind = kind;
    sol.strategy = strategy;
    for (std::size_t c = 0; c < columns.size(); ++c)
        if (lp_sol.primal[c] > Rational(0)) sol.members.emplace_back(columns[c], lp_sol.primal[c]);
    sol.objective = lp_sol.objective;
    sol.dual = lp_sol.dual;
    return sol;
}

inline LpSolution solve_master(const Graph& g, const std::vector<VertexSet>& columns) {
    CoveringLp lp;
    lp.num_rows = g.vertex_count();
    lp.columns = columns;
    LpSolution sol = solve_covering_lp(lp);
    if (sol.status != LpStatus::Optimal)
        throw std::logic_error("cover engine: master LP unexpectedly infeasible");
    return sol;
}

// Greedy cover: repeatedly take a maximum member under 0/1 weights on the
// still-uncovered vertices, maximalized. Guarantees initial feasibility.
inline std::vector<VertexSet> greedy_initial_columns(const Graph& g, FamilyKind kind) {
    int n = g.vertex_count();
    std::vector<VertexSet> columns;
    Bitset uncovered = Bitset::all(n);
    while (uncovered.any()) {
        std::vector<Rational> weights(static_cast<std::size_t>(n), Rational(0));
        for (int v = uncovered.next(0); v >= 0; v = uncovered.next(v + 1))
            weights[static_cast<std::size_t>(v)] = Rational(1);
        WeightedVertexSet pick = max_weight_member(g, kind, weights);
        VertexSet column = extend_to_maximal(g, kind, pick.set);
        uncovered.subtract(column);
        columns.push_back(std::move(column));
    }
    return columns;
}

inline CoverSolution solve_by_column_generation(const Graph& g, FamilyKind kind) {
    std::vector<VertexSet> columns = greedy_initial_columns(g, kind);
    while (true) {
        LpSolution master = solve_master(g, columns);
        WeightedVertexSet priced = max_weight_member(g, kind, master.dual);
        // Reduced cost of any member H is 1 - sum of duals over H; stop when
        // none is negative. Exact arithmetic makes this decidable.
        if (priced.weight <= Rational(1))
            return cover_from_lp(g, kind, Strategy::ColumnGeneration, columns, master);
        VertexSet column = extend_to_maximal(g, kind, priced.set);
        for (const auto& existing : columns)
            if (existing == column)
                throw std::logic_error("column generation: repeated column despite master optimality");
        columns.push_back(std::move(column));
    }
}

}  // namespace detail

// Fractional F-cover number of G as an exact LP optimum. FullEnumeration
// builds the covering LP over all maximal members; ColumnGeneration prices
// columns with max_weight_member until no reduced cost is negative. Requests
// with k >= omega(G) (resp. k >= chi(G)) return weight one on the whole
// graph without solving.
inline CoverSolution cover_number(const Graph& g, FamilyKind kind,
                                  Strategy strategy = Strategy::Auto,
                                  const CoverOptions& options = {}) {
    int n = g.vertex_count();
    if (n == 0) {
        CoverSolution sol;
        sol.kind = kind;
        sol.strategy = Strategy::FullEnumeration;
        sol.objective = Rational(0);
        return sol;
    }
    if (kind.tag == FamilyKind::Tag::Colorable && strategy == Strategy::ColumnGeneration)
        throw std::invalid_argument(
            "cover_number: column generation is unsupported for colourable families");

    int trivial_threshold = kind.tag == FamilyKind::Tag::Colorable ? chromatic_number(g)
                                                                   : clique_number(g);
    if (kind.k >= trivial_threshold) {
        CoverSolution sol = detail::whole_graph_cover(g, kind);
        validate_cover_solution(g, sol);
        return sol;
    }

    std::optional<std::vector<VertexSet>> columns;
    Strategy resolved = strategy;
    if (strategy == Strategy::Auto) {
        if (kind.tag == FamilyKind::Tag::Colorable) {
            resolved = Strategy::FullEnumeration;
        } else {
            // Estimate the column count by capped enumeration.
            std::vector<VertexSet> found;
            bool complete = true;
            for_each_maximal_member(
                g, kind,
                [&](const Bitset& s) {
                    found.push_back(s);
                    if (static_cast<int>(found.size()) > options.auto_column_cap) {
                        complete = false;
                        return false;
                    }
                    return true;
                },
                options.colorable_limit);
            if (complete) {
                std::sort(found.begin(), found.end(), canonical_less);
                columns = std::move(found);
                resolved = Strategy::FullEnumeration;
            } else {
                resolved = Strategy::ColumnGeneration;
            }
        }
    }

    CoverSolution sol;
    if (resolved == Strategy::FullEnumeration) {
        if (!columns) columns = enumerate_maximal(g, kind, options.colorable_limit);
        LpSolution lp_sol = detail::solve_master(g, *columns);
        sol = detail::cover_from_lp(g, kind, Strategy::FullEnumeration, *columns, lp_sol);
    } else {
        sol = detail::solve_by_column_generation(g, kind);
    }
    validate_cover_solution(g, sol);
    return sol;
}

// chi_f(G): the independent-set cover number.
inline Rational fractional_chromatic_number(const Graph& g) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument("fractional_chromatic_number: need at least one vertex");
    return cover_number(g, FamilyKind::independent()).objective;
}

enum class SequenceShape { Constant, NonDecreasing, NonIncreasing, NonMonotonic };

inline std::string sequence_shape_name(SequenceShape s) {
    switch (s) {
        case SequenceShape::Constant: return "Constant";
        case SequenceShape::NonDecreasing: return "NonDecreasing";
        case SequenceShape::NonIncreasing: return "NonIncreasing";
        case SequenceShape::NonMonotonic: return "NonMonotonic";
    }
    return "?";
}

// A constant sequence reports Constant, never NonDecreasing/NonIncreasing.
inline SequenceShape classify_sequence(const std::vector<Rational>& values) {
    bool up = true, down = true;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        if (values[i] > values[i + 1]) up = false;
        if (values[i] < values[i + 1]) down = false;
    }
    if (up && down) return SequenceShape::Constant;
    if (up) return SequenceShape::NonDecreasing;
    if (down) return SequenceShape::NonIncreasing;
    return SequenceShape::NonMonotonic;
}

struct SequenceEntry {
    int k = 0;
    Rational cover;
    Rational k_times_cover;
};

struct SequenceReport {
    std::vector<SequenceEntry> entries;
    SequenceShape shape = SequenceShape::Constant;  // shape of (k * cover)
};

namespace detail {

inline SequenceReport make_sequence_report(std::vector<SequenceEntry> entries) {
    SequenceReport report;
    std::vector<Rational> covers, scaled;
    for (const auto& e : entries) {
        covers.push_back(e.cover);
        scaled.push_back(e.k_times_cover);
    }
    for (std::size_t i = 0; i + 1 < covers.size(); ++i)
        if (covers[i] < covers[i + 1])
            throw std::logic_error("cover sequence: not non-increasing");
    if (!covers.empty() && covers.back() != Rational(1))
        throw std::logic_error("cover sequence: last entry differs from one");
    report.entries = std::move(entries);
    report.shape = classify_sequence(scaled);
    return report;
}

}  // namespace detail

// (K_k-cover) for k = 1..omega(G), with the classification of (k * cover).
inline SequenceReport kk_cover_sequence(const Graph& g, Strategy strategy = Strategy::Auto,
                                        const CoverOptions& options = {}) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument("kk_cover_sequence: need at least one vertex");
    int omega = clique_number(g);
    std::vector<SequenceEntry> entries;
    for (int k = 1; k <= omega; ++k) {
        Rational cover = cover_number(g, FamilyKind::clique_free(k), strategy, options).objective;
        entries.push_back({k, cover, Rational(k) * cover});
    }
    return detail::make_sequence_report(std::move(entries));
}

// (C_k-cover) for k = 1..chi(G); (k * cover) is checked to be non-decreasing.
inline SequenceReport cc_cover_sequence(const Graph& g, const CoverOptions& options = {}) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument("cc_cover_sequence: need at least one vertex");
    if (g.vertex_count() > options.colorable_limit)
        throw std::invalid_argument(
            "cc_cover_sequence: graph exceeds the colourable enumeration limit of " +
            std::to_string(options.colorable_limit));
    int chi = chromatic_number(g);
    std::vector<SequenceEntry> entries;
    for (int k = 1; k <= chi; ++k) {
        Rational cover =
            cover_number(g, FamilyKind::colorable(k), Strategy::FullEnumeration, options).objective;
        entries.push_back({k, cover, Rational(k) * cover});
    }
    SequenceReport report = detail::make_sequence_report(std::move(entries));
    if (report.shape != SequenceShape::NonDecreasing && report.shape != SequenceShape::Constant)
        throw std::logic_error("cc cover sequence: (k * cover) must be non-decreasing");
    return report;
}

// Closed form |V(G)| / beta_k(G) for vertex-transitive graphs. With
// assert_vt the transitivity check is skipped on the caller's word.
inline Rational vt_cover_number(const Graph& g, int k, bool assert_vt = false) {
    if (g.vertex_count() < 1) throw std::invalid_argument("vt_cover_number: empty graph");
    if (!assert_vt && !is_vertex_transitive(g))
        throw std::invalid_argument("vt_cover_number: graph is not vertex-transitive");
    return Rational(g.vertex_count()) / Rational(beta_k(g, k));
}

// max{ C((k+1)b-1, b), C(a,b) - C(a-k,b) }, valid for 1 < k < floor(a/b).
inline long long kneser_beta_lower_bound(int a, int b, int k) {
    if (b < 1 || a < b) throw std::invalid_argument("kneser_beta_lower_bound: need a >= b >= 1");
    int omega = a / b;
    if (k <= 1 || k >= omega)
        throw std::invalid_argument("kneser_beta_lower_bound: need 1 < k < floor(a/b)");
    mpz_class first = binomial(static_cast<unsigned long>((k + 1) * b - 1),
                               static_cast<unsigned long>(b));
    mpz_class second = binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(b)) -
                       binomial(static_cast<unsigned long>(a - k), static_cast<unsigned long>(b));
    mpz_class value = first > second ? first : second;
    if (!value.fits_slong_p())
        throw std::overflow_error("kneser_beta_lower_bound: value exceeds long long");
    return value.get_si();
}

// n-colourable bound: K_k-cover <= n/k for 1 <= k <= n.
inline Rational n_colorable_bound(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("n_colorable_bound: need 1 <= k <= n");
    return Rational(n, k);
}

// a:b-colourable bound: a/b at k = 1; C(a,b)/max{...} for 1 < k < floor(a/b);
// exactly one at k = floor(a/b). With b = 1 this reduces to n_colorable_bound.
inline Rational ab_colorable_bound(int a, int b, int k) {
    if (b < 1 || a < b) throw std::invalid_argument("ab_colorable_bound: need a >= b >= 1");
    int omega = a / b;
    if (k < 1 || k > omega)
        throw std::invalid_argument("ab_colorable_bound: need 1 <= k <= floor(a/b)");
    if (k == 1) return Rational(a, b);
    if (k == omega) return Rational(1);
    return Rational(binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(b)),
                    mpz_class(kneser_beta_lower_bound(a, b, k)));
}

struct BoundReport {
    std::string name;
    std::string parameters;
    bool applicable = true;  // false when no homomorphism was found
    Rational bound;
    std::optional<Rational> computed;
    bool satisfied = false;
};

// Homomorphic-image bound: a homomorphism G1 -> G2 forces
// K_k-cover(G1) <= K_k-cover(G2). Absence of a homomorphism is a report
// state, not an error.
inline BoundReport verify_hom_bound(const Graph& g1, const Graph& g2, int k,
                                    Strategy strategy = Strategy::Auto,
                                    const CoverOptions& options = {}) {
    BoundReport report;
    report.name = "hom-cover-bound";
    report.parameters = "k=" + std::to_string(k);
    auto hom = find_homomorphism(g1, g2);
    if (!hom) {
        report.applicable = false;
        return report;
    }
    if (!verify_homomorphism(g1, g2, *hom))
        throw std::logic_error("verify_hom_bound: search returned an invalid homomorphism");
    Rational c1 = cover_number(g1, FamilyKind::clique_free(k), strategy, options).objective;
    Rational c2 = cover_number(g2, FamilyKind::clique_free(k), strategy, options).objective;
    report.bound = c2;
    report.computed = c1;
    report.satisfied = c1 <= c2;
    return report;
}

// Dual objective (the fractional F-clique value); equals the primal
// objective exactly by strong duality.
inline Rational dual_clique_value(const CoverSolution& sol) {
    Rational total;
    for (const auto& y : sol.dual) total += y;
    if (total != sol.objective)
        throw std::logic_error("dual_clique_value: dual total differs from the objective");
    return total;
}

}  // namespace fraccover
