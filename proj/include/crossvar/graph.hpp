#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crossvar/rational.hpp"

namespace crossvar {

using vertex = std::uint32_t;
using edge = std::pair<vertex, vertex>;

/**
 * @brief Immutable simple undirected graph.
 *
 * Adjacency is stored in CSR form; each neighbor list is strictly increasing.
 * Edges are kept once each with `first < second`, in lexicographic order.
 */
class Graph {
public:
    Graph() = default;

    /// Builds a graph on `n` vertices. Rejects self-loops, out-of-range ids and duplicate edges.
    static Graph from_edges(std::size_t n, std::span<const edge> edges);

    std::size_t num_vertices() const noexcept { return degree_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    std::span<const vertex> neighbors(vertex u) const noexcept {
        return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
    }
    std::uint64_t degree(vertex u) const noexcept { return degree_[u]; }
    std::span<const std::uint64_t> degrees() const noexcept { return degree_; }
    std::span<const edge> edges() const noexcept { return edges_; }

    /// O(log k_u) adjacency test.
    bool adjacent(vertex u, vertex v) const noexcept;
    std::uint64_t max_degree() const noexcept;

private:
    std::vector<std::size_t> offsets_{0};
    std::vector<vertex> neighbors_;
    std::vector<std::uint64_t> degree_;
    std::vector<edge> edges_;
};

/// Degree moments and neighbor-degree sums, all stored as exact integers.
struct DegreeAggregates {
    Integer mmt2;                     ///< Σ k_s²  (= n⟨k²⟩)
    Integer mmt3;                     ///< Σ k_s³  (= n⟨k³⟩)
    std::vector<std::uint64_t> xi;    ///< ξ(s): sum of the degrees of the neighbors of s
    Integer psi;                      ///< Σ_{st∈E} k_s k_t

    static DegreeAggregates of(const Graph& g);
};

struct EdgeListResult {
    Graph graph;
    std::vector<std::string> warnings;
};

/**
 * @brief Parses the edge-list text format.
 *
 * '#' lines are comments. An optional first directive "n=<int>" forces the
 * vertex count; otherwise n = 1 + max id. Duplicate edges are collapsed and
 * reported as warnings. Throws parse_error (with line) or validation_error.
 */
EdgeListResult load_graph(std::istream& in);
EdgeListResult load_graph_file(const std::string& path);

/// Number of pairs of vertex-disjoint edges, ½(m(m+1) − Σk²).
Integer compute_q(const Graph& g);

/// K = Σ_Q (k_s+k_t+k_u+k_v) = (m+1)Σk² − Σk³ − 2ψ.
Integer compute_K(const Graph& g, const DegreeAggregates& agg);

/// Φ₁ = Σ_Q (k_s k_t + k_u k_v) = (m+1)ψ − Σ_E k_s k_t (k_s+k_t).
Integer compute_phi1(const Graph& g, const DegreeAggregates& agg);

/// Φ₂ = Σ_Q (k_s+k_t)(k_u+k_v), via the per-edge closed form.
Integer compute_phi2(const Graph& g, const DegreeAggregates& agg);

/// Union-find acyclicity test.
bool is_forest(const Graph& g);

} // namespace crossvar
