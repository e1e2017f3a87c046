#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "crossvar/census.hpp"
#include "crossvar/frequencies.hpp"

namespace crossvar {

enum class Algorithm { automatic, naive, subgraph, general, reuse, forest, closed };

std::string_view algorithm_name(Algorithm a);
/// Accepts "auto", "naive", "subgraph", "general", "reuse", "forest", "closed".
std::optional<Algorithm> algorithm_from_name(std::string_view name);

struct VarianceResult {
    Rational variance;
    Rational expectation;
    Algorithm algorithm = Algorithm::general;
    std::optional<CensusReport> census;
    std::optional<std::uint64_t> hash_table_size;
};

/// Memoized (|c(u,v)|, S_{u,v}) keyed by the unordered pair {u, v}.
class PairHashTable {
public:
    explicit PairHashTable(const Graph& g, std::size_t expected_size = 0);

    const NeighborIntersection& get(vertex u, vertex v);
    std::size_t size() const noexcept { return table_.size(); }
    /// Stored entry for {u, v}, if any.
    std::optional<NeighborIntersection> find(vertex u, vertex v) const;

    template <typename F>
    void for_each(F&& f) const {
        for (const auto& [key, value] : table_) f(static_cast<vertex>(key >> 32), static_cast<vertex>(key), value);
    }

private:
    static std::uint64_t key(vertex u, vertex v) noexcept {
        return u < v ? (std::uint64_t{u} << 32) | v : (std::uint64_t{v} << 32) | u;
    }

    const Graph* g_;
    std::unordered_map<std::uint64_t, NeighborIntersection> table_;
};

/// Σ_ω f_ω E[γ_ω] with f from classifying Q × Q.
VarianceResult variance_naive(const Graph& g, const ExpectationTable& t, const OracleLimits& limits = {});

/// Σ_ω f_ω E[γ_ω] with f_ω = a_ω n_G(F_ω) from brute subgraph counts.
VarianceResult variance_subgraph(const Graph& g, const ExpectationTable& t, const OracleLimits& limits = {});

/// Single pass over the edges computing every census term inline.
VarianceResult variance_general(const Graph& g, const ExpectationTable& t);

/// As variance_general, memoizing common-neighborhood queries in a PairHashTable.
VarianceResult variance_general_reuse(const Graph& g, const ExpectationTable& t);

/// Linear-time path for acyclic graphs. Throws not_a_forest.
VarianceResult variance_forest(const Graph& g, const ExpectationTable& t);

/// The rla closed form over 180, evaluated on the fast census.
VarianceResult variance_rla_closed(const Graph& g);

/// Var from census terms by the grouped general-layout formula.
Rational variance_from_census(const CensusReport& c, const Integer& m, const ExpectationTable& t);

/// The rla-specific formula, (1/180)[8(m+2)q + 2K − ...].
Rational rla_closed_form(const CensusReport& c, const Integer& m);

/// Resolves `automatic` to forest or reuse. Throws not_a_forest for a forest hint on a cyclic graph.
Algorithm select_algorithm(const Graph& g, Algorithm hint);

/// Runs the selected algorithm.
VarianceResult compute_variance(const Graph& g, const ExpectationTable& t, Algorithm hint = Algorithm::automatic,
                                const OracleLimits& limits = {});

} // namespace crossvar
