#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "crossvar/graph.hpp"

namespace crossvar {

/// |c(u,v)| and S_{u,v} = Σ_{w∈c(u,v)} k_w for the common neighborhood c(u,v).
struct NeighborIntersection {
    std::uint64_t size = 0;
    std::uint64_t degree_sum = 0;

    friend bool operator==(const NeighborIntersection&, const NeighborIntersection&) = default;
};

/**
 * @brief Every graph-dependent quantity in the variance formula.
 *
 * The Q-aggregates (q, K, Φ₁, Φ₂, Λ₁, Λ₂) and the subgraph counts
 * n(L4), n(L5), n(C3), n(C4), n(paw), n(C3⊕L2). μ₁ and μ₂ are the two
 * edge sums behind the fast L4 count; brute_census fills them too.
 */
struct CensusReport {
    Integer q, K, phi1, phi2, lambda1, lambda2, mu1, mu2;
    Integer nP4, nP5, nC3, nC4, nPaw, nC3L2;

    friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

/// Work caps for the brute-force oracles.
struct OracleLimits {
    std::size_t max_vertices = 12;                  ///< brute_census (adjacency-matrix powers)
    std::uint64_t max_edge_subsets = 50'000'000;    ///< C(m, k) for edge-subset pattern matching
    std::uint64_t max_pair_products = 100'000'000;  ///< q² for classifying Q×Q
};

/// Linear merge of the two sorted neighbor lists. Requires u ≠ v.
NeighborIntersection neighbor_intersection(const Graph& g, vertex u, vertex v);

Integer count_paths4(const Graph& g);
Integer count_paths5(const Graph& g);
Integer count_cycles4(const Graph& g);
Integer count_triangles(const Graph& g);
Integer count_paw(const Graph& g);
Integer count_c3l2(const Graph& g);
Integer compute_lambda1(const Graph& g, const DegreeAggregates& agg);
Integer compute_lambda2(const Graph& g, const DegreeAggregates& agg);

/// All census fields via the fast per-edge forms above.
CensusReport fast_census(const Graph& g);

/// Every field by exhaustive enumeration. Throws oracle_limit_exceeded.
CensusReport brute_census(const Graph& g, const OracleLimits& limits = {});

/// Small patterns recognised by the edge-subset matcher (at most four edges).
enum class Pattern {
    L2xL2,        // L2 ⊕ L2
    L3,
    L3xL2,        // L3 ⊕ L2
    L2xL2xL2,
    C3,
    L4,
    C4,
    L5,
    Paw,
    C3xL2,        // C3 ⊕ L2
    L4xL2,
    L3xL3,
    L2xL2xL2xL2,
    L3xL2xL2,
};

/// n_G(F): number of (not necessarily induced) subgraphs of g isomorphic to the pattern.
Integer count_subgraphs(const Graph& g, Pattern pattern, const OracleLimits& limits = {});

/// Batched form: one edge-subset pass per distinct pattern size.
std::vector<Integer> count_subgraphs(const Graph& g, std::span<const Pattern> patterns,
                                     const OracleLimits& limits = {});

/// Identities kept alongside the census as independent cross-checks.
struct CountIdentities {
    Integer paths4_qsum;     ///< Σ_Q (a_su + a_sv + a_tu + a_tv)
    Integer paths4_matrix;   ///< ½ Σ_{s≠t} (a⁽³⁾_st − a_st(2k_t − 1))
    Integer paths4_moment;   ///< m₃ + m₁ − Σk²
    Integer cycles4_qsum;    ///< ½ Σ_Q (a_sv a_tu + a_su a_tv)
    Integer cycles4_trace;   ///< ⅛ [tr(A⁴) + 4q − 2m²]
    Integer paths5_qsum;     ///< Σ_Q over the four L5 families
    Integer paw_qsum;        ///< Σ_Q (a_su + a_tv)(a_sv + a_tu)
    Integer c3l2_qsum;       ///< ⅓ Σ_Q (triangles on st with uv, and vice versa)
};

/// Brute-force evaluation of the Q-sum and adjacency-matrix identities. Same limits as brute_census.
CountIdentities brute_count_identities(const Graph& g, const OracleLimits& limits = {});

} // namespace crossvar
