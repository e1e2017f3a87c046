#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "crossvar/arrangement.hpp"
#include "crossvar/errors.hpp"
#include "crossvar/frequencies.hpp"
#include "crossvar/generators.hpp"
#include "fixtures.hpp"

using namespace crossvar;

namespace {

ExpectationTable parse_table(const std::string& text) {
    std::istringstream in(text);
    return load_layout_table(in);
}

const char* rla_p_table = R"(# rla as crossing probabilities
name = rla-p
delta = 1/3
p_00 = 1/9
p_24 = 1/3
p_13 = 1/6
p_12 = 2/15
p_04 = 0
p_03 = 1/12
p_021 = 1/10
p_022 = 7/60
p_01 = 1/9
)";

std::vector<Graph> corpus() {
    std::vector<Graph> out;
    for (std::uint64_t seed = 0; seed < 30; ++seed)
        out.push_back(generators::erdos_renyi(6 + seed % 6, 0.25 + 0.05 * static_cast<double>(seed % 6), 77 + seed));
    out.push_back(generators::complete(6));
    out.push_back(generators::complete_bipartite(3, 4));
    out.push_back(generators::path(9));
    out.push_back(generators::cycle(8));
    for (const auto& x : fixtures::oracle_graphs()) out.push_back(x.graph);
    return out;
}

// P(both pairs cross) over every relative order of the vertices involved.
Rational joint_crossing_probability(const IndependentPair& a, const IndependentPair& b) {
    std::set<vertex> vs{a.first.first, a.first.second, a.second.first, a.second.second,
                        b.first.first, b.first.second, b.second.first, b.second.second};
    const vertex n = *vs.rbegin() + 1;
    std::vector<vertex> involved(vs.begin(), vs.end());
    std::vector<std::uint32_t> position(n, 0);
    std::vector<std::uint32_t> ranks(involved.size());
    std::iota(ranks.begin(), ranks.end(), 0u);
    long both = 0, total = 0;
    do {
        for (std::size_t i = 0; i < involved.size(); ++i) position[involved[i]] = ranks[i];
        both += edges_cross(position, a.first, a.second) && edges_cross(position, b.first, b.second);
        ++total;
    } while (std::next_permutation(ranks.begin(), ranks.end()));
    return Rational(Integer(both), Integer(total));
}

} // namespace

TEST(ProductType, Table) {
    EXPECT_EQ(code(ProductType::t021), "021");
    EXPECT_EQ(product_type_from_code("04"), ProductType::t04);
    EXPECT_FALSE(product_type_from_code("05").has_value());
    EXPECT_EQ(tau(ProductType::t24), 2);
    EXPECT_EQ(phi(ProductType::t24), 4);
    EXPECT_EQ(tau(ProductType::t13), 1);
    EXPECT_EQ(phi(ProductType::t13), 3);
    EXPECT_EQ(phi(ProductType::t022), 2);
    const std::array<int, 9> a{6, 1, 2, 6, 2, 2, 2, 4, 4};
    for (auto t : all_product_types) EXPECT_EQ(subgraph_multiplier(t), a[index_of(t)]);
}

TEST(ClassifyPair, Examples) {
    const auto k4 = generators::complete(4);
    const IndependentPair a{{0, 1}, {2, 3}};
    const IndependentPair b{{0, 2}, {1, 3}};
    EXPECT_EQ(classify_pair(k4, a, a), ProductType::t24);
    EXPECT_EQ(classify_pair(k4, a, b), ProductType::t04);
    const auto one = generators::one_regular(8);
    EXPECT_EQ(classify_pair(one, {{0, 1}, {2, 3}}, {{4, 5}, {6, 7}}), ProductType::t00);
    EXPECT_THROW(classify_pair(k4, {{0, 1}, {1, 2}}, a), contract_violation);
    EXPECT_THROW(classify_pair(one, {{0, 2}, {4, 5}}, a), contract_violation);
}

TEST(ClassifyPair, SubtypesOfSharedPairs) {
    const auto k6 = generators::complete(6);
    // Shared vertices s, u joined by an edge of the second pair.
    EXPECT_EQ(classify_pair(k6, {{0, 1}, {2, 3}}, {{0, 2}, {4, 5}}), ProductType::t021);
    // Shared vertices s, t form an edge of the first pair.
    EXPECT_EQ(classify_pair(k6, {{0, 1}, {2, 3}}, {{0, 4}, {1, 5}}), ProductType::t021);
    // One shared vertex per edge, not joined by any edge of either pair.
    EXPECT_EQ(classify_pair(k6, {{0, 1}, {2, 3}}, {{0, 4}, {2, 5}}), ProductType::t022);
}

TEST(ClassifyPair, SymmetricAndComplete) {
    for (const auto& g : corpus()) {
        const auto q = enumerate_q(g);
        EXPECT_EQ(Integer(static_cast<unsigned long>(q.size())), compute_q(g));
        for (std::size_t i = 0; i < q.size() && i < 40; ++i)
            for (std::size_t j = 0; j < q.size() && j < 40; ++j)
                EXPECT_EQ(classify_pair(g, q[i], q[j]), classify_pair(g, q[j], q[i]));
    }
}

TEST(ExpectationTable, BuiltinRla) {
    const auto& t = builtin_rla_table();
    EXPECT_EQ(t.delta, Rational(1, 3));
    EXPECT_EQ(t[ProductType::t00], Rational(0));
    EXPECT_EQ(t[ProductType::t24], Rational(2, 9));
    EXPECT_EQ(t[ProductType::t13], Rational(1, 18));
    EXPECT_EQ(t[ProductType::t12], Rational(1, 45));
    EXPECT_EQ(t[ProductType::t04], Rational(-1, 9));
    EXPECT_EQ(t[ProductType::t03], Rational(-1, 36));
    EXPECT_EQ(t[ProductType::t021], Rational(-1, 90));
    EXPECT_EQ(t[ProductType::t022], Rational(1, 180));
    EXPECT_EQ(t[ProductType::t01], Rational(0));
}

TEST(ExpectationTable, RlaValuesFromArrangementEnumeration) {
    const auto k8 = generators::complete(8);
    const auto q = enumerate_q(k8);
    std::array<bool, 9> seen{};
    const auto& rla = builtin_rla_table();
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) {
            const auto w = classify_pair(k8, q[i], q[j]);
            if (seen[index_of(w)]) continue;
            seen[index_of(w)] = true;
            SCOPED_TRACE(std::string(code(w)));
            const Rational p = joint_crossing_probability(q[i], q[j]);
            EXPECT_EQ(p - rla.delta * rla.delta, rla[w]);
        }
    for (bool s : seen) EXPECT_TRUE(s);
}

TEST(LayoutTable, PValuesReproduceBuiltin) {
    const auto t = parse_table(rla_p_table);
    EXPECT_EQ(t.name, "rla-p");
    EXPECT_EQ(t.delta, builtin_rla_table().delta);
    EXPECT_EQ(t.gamma, builtin_rla_table().gamma);
}

TEST(LayoutTable, MixedEntriesAndSpherical) {
    const auto t = parse_table("delta = 1/8\np_00 = 1/64\np_01 = 1/64\np_24 = 1/8\np_04 = 0\n"
                               "E_13 = 1/100\nE_12 = 1/200\np_03 = 1/50\nE_021 = 0\nE_022 = 1/300\n");
    EXPECT_EQ(t[ProductType::t24], Rational(7, 64));
    EXPECT_EQ(t[ProductType::t04], Rational(-1, 64));
    EXPECT_EQ(t[ProductType::t13], Rational(1, 100));
}

TEST(LayoutTable, Errors) {
    std::string missing = rla_p_table;
    missing.erase(missing.find("p_03"), std::string("p_03 = 1/12\n").size());
    EXPECT_THROW(parse_table(missing), validation_error);
    try {
        parse_table(missing);
    } catch (const validation_error& e) {
        EXPECT_NE(std::string(e.what()).find("03"), std::string::npos);
    }
    EXPECT_THROW(parse_table(std::string(rla_p_table) + "p_12 = x\n"), validation_error);
    EXPECT_THROW(parse_table(std::string(rla_p_table) + "q_12 = 1\n"), validation_error);
    std::string bad24 = rla_p_table;
    bad24.replace(bad24.find("p_24 = 1/3"), 10, "p_24 = 1/4");
    EXPECT_THROW(parse_table(bad24), validation_error);
    std::string bad00 = rla_p_table;
    bad00.replace(bad00.find("p_00 = 1/9"), 10, "p_00 = 1/8");
    EXPECT_THROW(parse_table(bad00), validation_error);
    EXPECT_THROW(parse_table("p_24 = 1/3\n"), validation_error);
    EXPECT_THROW(parse_table("delta 1/3\n"), parse_error);
    EXPECT_THROW(load_layout_table_file("/nonexistent/table"), io_error);
}

TEST(Frequencies, Examples) {
    const auto two = fixtures::make(4, {{0, 1}, {2, 3}});
    const auto f = frequencies_brute(two);
    EXPECT_EQ(f[ProductType::t24], 1);
    EXPECT_EQ(f.total(), 1);

    const auto c4 = frequencies_brute(generators::cycle(4));
    EXPECT_EQ(c4[ProductType::t24], 2);
    EXPECT_EQ(c4[ProductType::t04], 2);
    EXPECT_EQ(c4.total(), 4);

    const auto k4 = frequencies_brute(generators::complete(4));
    EXPECT_EQ(k4[ProductType::t24], 3);
    EXPECT_EQ(k4[ProductType::t04], 6);
    EXPECT_EQ(k4.total(), 9);
    EXPECT_EQ(frequencies_from_subgraph_counts(generators::complete(4))[ProductType::t04], 6);
    EXPECT_EQ(frequencies_from_subgraph_counts(generators::cycle(4))[ProductType::t04], 2);
    EXPECT_EQ(frequencies_from_subgraph_counts(two)[ProductType::t24], 1);

    const auto p4 = frequencies_from_census(fast_census(generators::path(4)), 3);
    for (auto t : contributing_product_types) EXPECT_EQ(p4[t], t == ProductType::t24 ? 1 : 0);
    const auto star = frequencies_from_census(fast_census(generators::star(6)), 5);
    EXPECT_EQ(star.total(), 0);
}

TEST(Frequencies, CensusFormsFromHandValues) {
    CensusReport c;
    c.q = 2;
    c.K = 16;
    c.nP4 = 4;
    c.nC4 = 1;
    c.lambda1 = 16;
    c.lambda2 = 32;
    c.phi1 = 16;
    c.phi2 = 32;
    const auto f = frequencies_from_census(c, 4);
    EXPECT_EQ(f[ProductType::t24], 2);
    EXPECT_EQ(f[ProductType::t04], 2);
    for (auto t : {ProductType::t13, ProductType::t12, ProductType::t03, ProductType::t021, ProductType::t022})
        EXPECT_EQ(f[t], 0);
    c.nC4 = 5;
    EXPECT_THROW(frequencies_from_census(c, 4), internal_inconsistency);
}

TEST(Frequencies, ThreeRoutesAgree) {
    for (const auto& g : corpus()) {
        const auto brute = frequencies_brute(g);
        const auto census = frequencies_from_census(fast_census(g), Integer(static_cast<unsigned long>(g.num_edges())));
        const auto sub = frequencies_from_subgraph_counts(g);
        EXPECT_TRUE(brute.same_contributing(census));
        for (auto t : all_product_types) EXPECT_EQ(brute[t], sub[t]) << code(t);
        EXPECT_EQ(brute.total(), compute_q(g) * compute_q(g));
        EXPECT_EQ(brute[ProductType::t24], compute_q(g));
    }
}

TEST(Frequencies, BruteRefusesOverBudget) {
    OracleLimits limits;
    limits.max_pair_products = 10;
    EXPECT_THROW(frequencies_brute(generators::complete(6), limits), oracle_limit_exceeded);
}

TEST(Frequencies, LargeVertexIdsUseGenericPath) {
    std::vector<edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 70}, {70, 71}, {71, 2}};
    const auto g = Graph::from_edges(72, e);
    const auto brute = frequencies_brute(g);
    const auto sub = frequencies_from_subgraph_counts(g);
    for (auto t : all_product_types) EXPECT_EQ(brute[t], sub[t]) << code(t);
}
