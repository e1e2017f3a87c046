#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crossvar/graph.hpp"

namespace crossvar::generators {

Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph path(std::size_t n);
/// Requires n ≥ 3.
Graph cycle(std::size_t n);
/// Hub 0 joined to n − 1 leaves.
Graph star(std::size_t n);
/// Star on n − 1 vertices plus one vertex pendant to a leaf. Requires n ≥ 3.
Graph quasi_star(std::size_t n);
/// Perfect matching {0,1}, {2,3}, ... Requires even n.
Graph one_regular(std::size_t n);

/// G(n, p): each pair i < j, in lexicographic order, is kept when
/// (mt19937_64() >> 11) · 2⁻⁵³ < p, with the generator seeded by `seed`.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Uniform labelled tree from a random Prüfer sequence. Requires n ≥ 1.
Graph random_tree(std::size_t n, std::uint64_t seed);
/// Uniform labelled rooted forest: a random tree on n + 1 vertices without vertex n.
Graph random_forest(std::size_t n, std::uint64_t seed);

/// Tree with the given Prüfer sequence on seq.size() + 2 vertices.
Graph tree_from_pruefer(const std::vector<vertex>& seq);

/// Canonical string of a free tree (AHU encoding rooted at the center). Requires a tree.
std::string tree_canonical_form(const Graph& tree);

/// Every free tree on n vertices exactly once, sorted by canonical form. Requires 1 ≤ n ≤ 10.
std::vector<Graph> all_trees(std::size_t n);

struct FamilySpec {
    std::string family;
    std::size_t n = 0;
    std::size_t n2 = 0;  ///< second side of complete_bipartite
    double p = 0;
    std::uint64_t seed = 0;
};

/// One graph for most families; every tree for all_trees. Throws validation_error.
std::vector<Graph> generate(const FamilySpec& spec);

} // namespace crossvar::generators
