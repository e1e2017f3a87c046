#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "crossvar/frequencies.hpp"
#include "crossvar/graph.hpp"
#include "crossvar/variance.hpp"

namespace crossvar {

/// A linear arrangement: position(v) is the rank of v, 0-based, left to right.
class Arrangement {
public:
    /// Vertices listed left to right. Throws contract_violation unless `order` is a permutation of 0..n-1.
    static Arrangement from_order(std::span<const vertex> order);
    static Arrangement identity(std::size_t n);

    std::size_t size() const noexcept { return position_.size(); }
    std::uint32_t position(vertex v) const noexcept { return position_[v]; }
    std::span<const std::uint32_t> positions() const noexcept { return position_; }
    std::vector<vertex> order() const;
    Arrangement reversed() const;

private:
    std::vector<std::uint32_t> position_;
};

/// Reads one line of whitespace-separated vertex ids. Throws parse_error or contract_violation.
Arrangement load_arrangement(std::istream& in);
Arrangement load_arrangement_file(const std::string& path);

/// Edges {s,t} and {u,v} cross when exactly one of u, v lies strictly between s and t.
bool edges_cross(std::span<const std::uint32_t> position, edge a, edge b) noexcept;

/// Number of crossing pairs. The arrangement must cover every vertex of g.
std::uint64_t count_crossings(const Graph& g, const Arrangement& a);

struct ExhaustiveStats {
    std::uint64_t sample_count = 0;
    Rational mean;
    Rational variance;
    std::map<std::uint64_t, std::uint64_t> distribution;
};

/// Every one of the n! arrangements. Throws oracle_limit_exceeded when n > max_vertices.
ExhaustiveStats exhaustive_distribution(const Graph& g, std::size_t max_vertices = 9);

struct MonteCarloStats {
    std::uint64_t sample_count = 0;
    double mean = 0;
    /// Unbiased (n − 1) sample variance; 0 for a single sample.
    double variance = 0;
};

/**
 * @brief Uniformly random arrangements by Fisher–Yates.
 *
 * Samples are drawn in blocks of `monte_carlo_block` arrangements; block b
 * uses std::mt19937_64 seeded with seed_seq{low32(seed), high32(seed), b}
 * and bounded draws by rejection. Blocks are spread over `shards` threads,
 * and the result does not depend on the shard count.
 */
MonteCarloStats monte_carlo(const Graph& g, std::uint64_t samples, std::uint64_t seed, unsigned shards = 1);

inline constexpr std::uint64_t monte_carlo_block = 4096;

/// (C − E)/√Var. Throws degenerate_statistic when Var = 0.
double zscore(std::uint64_t observed, const VarianceResult& v);
double zscore(std::uint64_t observed, const Graph& g, const ExpectationTable& t);

enum class Tail { lower, upper, two_sided };

/// Chebyshev (two-sided) or Cantelli (one-sided) bound on the p-value. Throws degenerate_statistic when Var = 0.
Rational chebyshev_pvalue_bound(std::uint64_t observed, const VarianceResult& v, Tail tail);
Rational chebyshev_pvalue_bound(std::uint64_t observed, const Graph& g, const ExpectationTable& t, Tail tail);

} // namespace crossvar
