#include "crossvar/variance.hpp"

#include <array>

#include "crossvar/errors.hpp"

namespace crossvar {

namespace {

using wide = __int128;

constexpr std::array<std::pair<Algorithm, std::string_view>, 7> algorithm_names{{
    {Algorithm::automatic, "auto"},
    {Algorithm::naive, "naive"},
    {Algorithm::subgraph, "subgraph"},
    {Algorithm::general, "general"},
    {Algorithm::reuse, "reuse"},
    {Algorithm::forest, "forest"},
    {Algorithm::closed, "closed"},
}};

Integer edge_count(const Graph& g) { return Integer(static_cast<unsigned long>(g.num_edges())); }

void require_zero_independent_types(const ExpectationTable& t) {
    if (!t[ProductType::t00].is_zero() || !t[ProductType::t01].is_zero())
        throw contract_violation("layout '" + t.name + "' has nonzero E_00 or E_01");
}

Rational weighted_sum(const FrequencyVector& f, const ExpectationTable& t) {
    Rational total;
    for (auto w : all_product_types) total += Rational(f[w]) * t[w];
    return total;
}

VarianceResult degenerate(Algorithm a) {
    VarianceResult r;
    r.algorithm = a;
    return r;
}

// Common-neighborhood query without memoization.
struct DirectIntersections {
    const Graph& g;
    NeighborIntersection get(vertex u, vertex v) const { return neighbor_intersection(g, u, v); }
};

struct CachedIntersections {
    PairHashTable& table;
    const NeighborIntersection& get(vertex u, vertex v) const { return table.get(u, v); }
};

// One pass over the edges; every graph-dependent term of the variance formula.
template <typename Intersections>
CensusReport census_pass(const Graph& g, const DegreeAggregates& agg, const Intersections& inter) {
    const wide m = static_cast<wide>(g.num_edges());
    wide mu2 = 0, paw = 0, c3l2 = 0, lambda1 = 0, lambda2_extra = 0, p5 = 0, c4 = 0;

    for (auto [s, t] : g.edges()) {
        const wide ks = g.degree(s);
        const wide kt = g.degree(t);
        const wide xs = agg.xi[s];
        const wide xt = agg.xi[t];
        const auto c_st = inter.get(s, t);
        const wide c = static_cast<wide>(c_st.size);
        const wide S = static_cast<wide>(c_st.degree_sum);

        mu2 += c;
        paw += S - 2 * c;
        c3l2 += (m - ks - kt + 3) * c - S;
        lambda1 += (kt - 1) * (xs - kt) + (ks - 1) * (xt - ks) - 2 * S;
        lambda2_extra += (ks + kt) * ((ks - 1) * (kt - 1) - c);

        for (vertex u : g.neighbors(s)) {
            if (u == t) continue;
            const wide a = g.adjacent(u, t) ? 1 : 0;
            const wide ku = g.degree(u);
            p5 += (kt - 1 - a) * (ku - 1 - a) + 1 - static_cast<wide>(inter.get(t, u).size);
        }
        for (vertex u : g.neighbors(t)) {
            if (u == s) continue;
            const wide a = g.adjacent(u, s) ? 1 : 0;
            const wide ku = g.degree(u);
            const wide c_su = static_cast<wide>(inter.get(s, u).size);
            p5 += (ks - 1 - a) * (ku - 1 - a) + 1 - c_su;
            c4 += c_su - 1;
        }
    }

    CensusReport r;
    r.q = compute_q(g);
    r.K = compute_K(g, agg);
    r.phi1 = compute_phi1(g, agg);
    r.phi2 = compute_phi2(g, agg);
    r.lambda1 = to_integer(lambda1);
    r.lambda2 = r.lambda1 + to_integer(lambda2_extra);
    r.mu1 = agg.psi;
    r.mu2 = to_integer(mu2);
    r.nP4 = edge_count(g) - agg.mmt2 + r.mu1 - r.mu2;
    r.nP5 = exact_div(to_integer(p5), 2, "paths5");
    r.nC3 = exact_div(r.mu2, 3, "triangles");
    r.nC4 = exact_div(to_integer(c4), 4, "cycles4");
    r.nPaw = to_integer(paw);
    r.nC3L2 = exact_div(to_integer(c3l2), 3, "c3l2");
    return r;
}

// Tree forms; the cyclic subgraph counts vanish.
CensusReport forest_pass(const Graph& g, const DegreeAggregates& agg) {
    wide p4 = 0, p5 = 0, lambda1 = 0, lambda2_extra = 0;
    for (auto [s, t] : g.edges()) {
        const wide ks = g.degree(s);
        const wide kt = g.degree(t);
        const wide xs = agg.xi[s];
        const wide xt = agg.xi[t];
        const wide path = (ks - 1) * (kt - 1);
        p4 += path;
        p5 += (kt - 1) * (xs - kt - ks + 1) + (ks - 1) * (xt - kt - ks + 1);
        lambda1 += (kt - 1) * (xs - kt) + (ks - 1) * (xt - ks);
        lambda2_extra += path * (ks + kt);
    }
    CensusReport r;
    r.q = compute_q(g);
    r.K = compute_K(g, agg);
    r.phi1 = compute_phi1(g, agg);
    r.phi2 = compute_phi2(g, agg);
    r.lambda1 = to_integer(lambda1);
    r.lambda2 = r.lambda1 + to_integer(lambda2_extra);
    r.mu1 = agg.psi;
    r.mu2 = 0;
    r.nP4 = to_integer(p4);
    r.nP5 = exact_div(to_integer(p5), 2, "paths5");
    r.nC3 = r.nC4 = r.nPaw = r.nC3L2 = 0;
    return r;
}

VarianceResult from_census(CensusReport census, const Graph& g, const ExpectationTable& t, Algorithm a) {
    VarianceResult r;
    r.algorithm = a;
    r.expectation = Rational(census.q) * t.delta;
    r.variance = variance_from_census(census, edge_count(g), t);
    r.census = std::move(census);
    return r;
}

} // namespace

std::string_view algorithm_name(Algorithm a) {
    for (const auto& [alg, name] : algorithm_names)
        if (alg == a) return name;
    return "unknown";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
    for (const auto& [alg, n] : algorithm_names)
        if (n == name) return alg;
    return std::nullopt;
}

PairHashTable::PairHashTable(const Graph& g, std::size_t expected_size) : g_(&g) {
    if (expected_size > 0) table_.reserve(expected_size);
}

const NeighborIntersection& PairHashTable::get(vertex u, vertex v) {
    const auto [it, inserted] = table_.try_emplace(key(u, v));
    if (inserted) it->second = neighbor_intersection(*g_, u, v);
    return it->second;
}

std::optional<NeighborIntersection> PairHashTable::find(vertex u, vertex v) const {
    const auto it = table_.find(key(u, v));
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

Rational variance_from_census(const CensusReport& c, const Integer& m, const ExpectationTable& t) {
    require_zero_independent_types(t);
    const Rational& e24 = t[ProductType::t24];
    const Rational& e13 = t[ProductType::t13];
    const Rational& e12 = t[ProductType::t12];
    const Rational& e04 = t[ProductType::t04];
    const Rational& e03 = t[ProductType::t03];
    const Rational& e021 = t[ProductType::t021];
    const Rational& e022 = t[ProductType::t022];
    const Rational mr(m);

    Rational v = Rational(c.q) * (e24 - 4 * e13 + 2 * (mr + 2) * e12 + 2 * e021 + 4 * e022);
    v += Rational(c.K) * (e13 - 2 * e12 - e021 - 2 * e022);
    v += Rational(c.nP4) * (-2 * e13 + 2 * e12 - 2 * e03 + (mr + 5) * e021 + 5 * e022);
    v += Rational(c.nC4) * (2 * e04 - 8 * e03 + 8 * e021 + 4 * e022);
    v += Rational(c.nPaw) * (-2 * e03 + 3 * e021 + 2 * e022);
    v += Rational(c.lambda1) * (e03 - e021);
    v -= Rational(c.lambda2) * (e021 + e022);
    v -= Rational(c.nP5) * e022;
    v -= Rational(c.nC3L2) * 3 * e021;
    v += Rational(c.phi1) * e021;
    v += Rational(c.phi2) * e022;
    return v;
}

Rational rla_closed_form(const CensusReport& c, const Integer& m) {
    const Integer numer = 8 * (m + 2) * c.q + 2 * c.K - (2 * m + 7) * c.nP4 - 12 * c.nC4 + 6 * c.nPaw - c.nP5 +
                          6 * c.nC3L2 - 3 * c.lambda1 + c.lambda2 - 2 * c.phi1 + c.phi2;
    return Rational(numer, Integer(180));
}

VarianceResult variance_naive(const Graph& g, const ExpectationTable& t, const OracleLimits& limits) {
    const auto f = frequencies_brute(g, limits);
    VarianceResult r;
    r.algorithm = Algorithm::naive;
    r.expectation = Rational(f[ProductType::t24]) * t.delta;
    r.variance = weighted_sum(f, t);
    return r;
}

VarianceResult variance_subgraph(const Graph& g, const ExpectationTable& t, const OracleLimits& limits) {
    const auto f = frequencies_from_subgraph_counts(g, limits);
    VarianceResult r;
    r.algorithm = Algorithm::subgraph;
    r.expectation = Rational(f[ProductType::t24]) * t.delta;
    r.variance = weighted_sum(f, t);
    return r;
}

VarianceResult variance_general(const Graph& g, const ExpectationTable& t) {
    require_zero_independent_types(t);
    if (sgn(compute_q(g)) == 0) return degenerate(Algorithm::general);
    const auto agg = DegreeAggregates::of(g);
    return from_census(census_pass(g, agg, DirectIntersections{g}), g, t, Algorithm::general);
}

VarianceResult variance_general_reuse(const Graph& g, const ExpectationTable& t) {
    require_zero_independent_types(t);
    if (sgn(compute_q(g)) == 0) {
        auto r = degenerate(Algorithm::reuse);
        r.hash_table_size = 0;
        return r;
    }
    const auto agg = DegreeAggregates::of(g);
    PairHashTable table(g, g.num_edges() * 2);
    auto r = from_census(census_pass(g, agg, CachedIntersections{table}), g, t, Algorithm::reuse);
    r.hash_table_size = table.size();
    return r;
}

VarianceResult variance_forest(const Graph& g, const ExpectationTable& t) {
    if (!is_forest(g)) throw not_a_forest("the forest algorithm requires an acyclic graph");
    require_zero_independent_types(t);
    if (sgn(compute_q(g)) == 0) return degenerate(Algorithm::forest);
    const auto agg = DegreeAggregates::of(g);
    return from_census(forest_pass(g, agg), g, t, Algorithm::forest);
}

VarianceResult variance_rla_closed(const Graph& g) {
    auto census = fast_census(g);
    VarianceResult r;
    r.algorithm = Algorithm::closed;
    r.expectation = Rational(census.q, Integer(3));
    r.variance = rla_closed_form(census, edge_count(g));
    r.census = std::move(census);
    return r;
}

Algorithm select_algorithm(const Graph& g, Algorithm hint) {
    if (hint == Algorithm::automatic) return is_forest(g) ? Algorithm::forest : Algorithm::reuse;
    if (hint == Algorithm::forest && !is_forest(g))
        throw not_a_forest("the forest algorithm was requested for a graph with a cycle");
    return hint;
}

VarianceResult compute_variance(const Graph& g, const ExpectationTable& t, Algorithm hint,
                                const OracleLimits& limits) {
    switch (select_algorithm(g, hint)) {
    case Algorithm::naive: return variance_naive(g, t, limits);
    case Algorithm::subgraph: return variance_subgraph(g, t, limits);
    case Algorithm::general: return variance_general(g, t);
    case Algorithm::reuse: return variance_general_reuse(g, t);
    case Algorithm::forest: return variance_forest(g, t);
    case Algorithm::closed: {
        const auto& rla = builtin_rla_table();
        if (t.delta != rla.delta || t.gamma != rla.gamma)
            throw unsupported_algorithm("the closed form applies only to the rla layout");
        return variance_rla_closed(g);
    }
    case Algorithm::automatic: break;
    }
    throw internal_inconsistency("unresolved algorithm");
}

} // namespace crossvar
