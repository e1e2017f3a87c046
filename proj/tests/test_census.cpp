#include <gtest/gtest.h>

#include "crossvar/errors.hpp"
#include "crossvar/generators.hpp"
#include "fixtures.hpp"

using namespace crossvar;

namespace {

std::vector<Graph> random_graphs() {
    std::vector<Graph> out;
    for (std::uint64_t seed = 0; seed < 60; ++seed)
        out.push_back(generators::erdos_renyi(5 + seed % 6, 0.2 + 0.1 * static_cast<double>(seed % 7), 1000 + seed));
    for (std::uint64_t seed = 0; seed < 10; ++seed) out.push_back(generators::random_forest(10, seed));
    return out;
}

} // namespace

TEST(NeighborIntersection, Examples) {
    const auto c4 = generators::cycle(4);
    EXPECT_EQ(neighbor_intersection(c4, 0, 2), (NeighborIntersection{2, 4}));
    const auto two = fixtures::make(4, {{0, 1}, {2, 3}});
    EXPECT_EQ(neighbor_intersection(two, 0, 2), (NeighborIntersection{0, 0}));
    const auto k4 = generators::complete(4);
    for (vertex u = 0; u < 4; ++u)
        for (vertex v = u + 1; v < 4; ++v) EXPECT_EQ(neighbor_intersection(k4, u, v), (NeighborIntersection{2, 6}));
    EXPECT_THROW(neighbor_intersection(k4, 1, 1), contract_violation);
}

TEST(NeighborIntersection, MatchesSetIntersection) {
    for (const auto& g : random_graphs()) {
        for (vertex u = 0; u < g.num_vertices(); ++u)
            for (vertex v = u + 1; v < g.num_vertices(); ++v) {
                NeighborIntersection expected;
                for (vertex w = 0; w < g.num_vertices(); ++w)
                    if (g.adjacent(u, w) && g.adjacent(v, w)) {
                        ++expected.size;
                        expected.degree_sum += g.degree(w);
                    }
                const auto got = neighbor_intersection(g, u, v);
                EXPECT_EQ(got, expected);
                EXPECT_GE(got.degree_sum, got.size);
            }
    }
}

TEST(FastCensus, OracleValues) {
    for (const auto& x : fixtures::oracle_graphs()) {
        SCOPED_TRACE(x.name);
        const auto c = fast_census(x.graph);
        EXPECT_EQ(c.q, x.q);
        EXPECT_EQ(c.K, x.K);
        EXPECT_EQ(c.phi1, x.phi1);
        EXPECT_EQ(c.phi2, x.phi2);
        EXPECT_EQ(c.lambda1, x.lambda1);
        EXPECT_EQ(c.lambda2, x.lambda2);
        EXPECT_EQ(c.nP4, x.nP4);
        EXPECT_EQ(c.nP5, x.nP5);
        EXPECT_EQ(c.nC3, x.nC3);
        EXPECT_EQ(c.nC4, x.nC4);
        EXPECT_EQ(c.nPaw, x.nPaw);
        EXPECT_EQ(c.nC3L2, x.nC3L2);
    }
}

TEST(BruteCensus, OracleValues) {
    for (const auto& x : fixtures::oracle_graphs()) {
        SCOPED_TRACE(x.name);
        const auto c = brute_census(x.graph);
        EXPECT_EQ(c.q, x.q);
        EXPECT_EQ(c.K, x.K);
        EXPECT_EQ(c.lambda1, x.lambda1);
        EXPECT_EQ(c.lambda2, x.lambda2);
        EXPECT_EQ(c.nP4, x.nP4);
        EXPECT_EQ(c.nP5, x.nP5);
        EXPECT_EQ(c.nC4, x.nC4);
        EXPECT_EQ(c.nPaw, x.nPaw);
        EXPECT_EQ(c.nC3L2, x.nC3L2);
    }
}

TEST(FastCensus, EqualsBruteOnRandomGraphs) {
    for (const auto& g : random_graphs()) EXPECT_EQ(fast_census(g), brute_census(g));
}

TEST(FastCensus, StandaloneOperationsAgree) {
    for (const auto& g : random_graphs()) {
        const auto c = fast_census(g);
        const auto agg = DegreeAggregates::of(g);
        EXPECT_EQ(count_paths4(g), c.nP4);
        EXPECT_EQ(count_paths5(g), c.nP5);
        EXPECT_EQ(count_cycles4(g), c.nC4);
        EXPECT_EQ(count_triangles(g), c.nC3);
        EXPECT_EQ(count_paw(g), c.nPaw);
        EXPECT_EQ(count_c3l2(g), c.nC3L2);
        EXPECT_EQ(compute_lambda1(g, agg), c.lambda1);
        EXPECT_EQ(compute_lambda2(g, agg), c.lambda2);
        EXPECT_EQ(c.mu1, agg.psi);
    }
}

TEST(FastCensus, ForestsHaveNoCycles) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto c = fast_census(generators::random_forest(15, seed));
        EXPECT_EQ(c.nC3, 0);
        EXPECT_EQ(c.nC4, 0);
        EXPECT_EQ(c.nPaw, 0);
        EXPECT_EQ(c.nC3L2, 0);
    }
}

TEST(FastCensus, SingleEdge) {
    const auto c = fast_census(fixtures::make(2, {{0, 1}}));
    CensusReport expected;
    expected.mu1 = 1;
    EXPECT_EQ(c, expected);
}

TEST(CountIdentities, AllFormsAgree) {
    auto graphs = random_graphs();
    for (const auto& x : fixtures::oracle_graphs()) graphs.push_back(x.graph);
    for (const auto& g : graphs) {
        const auto c = fast_census(g);
        const auto id = brute_count_identities(g);
        EXPECT_EQ(id.paths4_qsum, c.nP4);
        EXPECT_EQ(id.paths4_matrix, c.nP4);
        EXPECT_EQ(id.paths4_moment, c.nP4);
        EXPECT_EQ(id.cycles4_qsum, c.nC4);
        EXPECT_EQ(id.cycles4_trace, c.nC4);
        EXPECT_EQ(id.paths5_qsum, c.nP5);
        EXPECT_EQ(id.paw_qsum, c.nPaw);
        EXPECT_EQ(id.c3l2_qsum, c.nC3L2);
    }
}

TEST(CountSubgraphs, SmallPatterns) {
    const auto k4 = generators::complete(4);
    EXPECT_EQ(count_subgraphs(k4, Pattern::C4), 3);
    EXPECT_EQ(count_subgraphs(k4, Pattern::C3), 4);
    EXPECT_EQ(count_subgraphs(k4, Pattern::L3), 12);
    EXPECT_EQ(count_subgraphs(k4, Pattern::L2xL2), 3);
    EXPECT_EQ(count_subgraphs(k4, Pattern::Paw), 12);
    EXPECT_EQ(count_subgraphs(generators::complete(5), Pattern::C3xL2), 10);
    EXPECT_EQ(count_subgraphs(generators::one_regular(8), Pattern::L2xL2xL2xL2), 1);
    EXPECT_EQ(count_subgraphs(fixtures::make(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}), Pattern::L3xL3), 1);
}

TEST(BruteCensus, RefusesLargeInputs) {
    OracleLimits limits;
    limits.max_vertices = 5;
    EXPECT_THROW(brute_census(generators::path(6), limits), oracle_limit_exceeded);
    limits.max_edge_subsets = 10;
    EXPECT_THROW(count_subgraphs(generators::complete(5), Pattern::C4, limits), oracle_limit_exceeded);
}
