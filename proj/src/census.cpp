#include "crossvar/census.hpp"

#include "crossvar/errors.hpp"

namespace crossvar {

NeighborIntersection neighbor_intersection(const Graph& g, vertex u, vertex v) {
    if (u == v) throw contract_violation("neighbor_intersection requires two distinct vertices");
    const auto a = g.neighbors(u);
    const auto b = g.neighbors(v);
    NeighborIntersection out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++out.size;
            out.degree_sum += g.degree(a[i]);
            ++i;
            ++j;
        }
    }
    return out;
}

namespace {

using wide = __int128;

// μ₂ = Σ_E |c(s,t)|.
wide sum_common_neighbors(const Graph& g) {
    wide mu2 = 0;
    for (auto [s, t] : g.edges()) mu2 += neighbor_intersection(g, s, t).size;
    return mu2;
}

// g₁(s,t) = Σ_{u∈Γ(s)\{t}} ((k_t − 1 − a_ut)(k_u − 1 − a_ut) + 1 − |c(t,u)|)
wide g1(const Graph& g, vertex s, vertex t) {
    const wide kt = g.degree(t);
    wide total = 0;
    for (vertex u : g.neighbors(s)) {
        if (u == t) continue;
        const wide a_ut = g.adjacent(u, t) ? 1 : 0;
        const wide ku = g.degree(u);
        total += (kt - 1 - a_ut) * (ku - 1 - a_ut) + 1 - static_cast<wide>(neighbor_intersection(g, t, u).size);
    }
    return total;
}

} // namespace

Integer count_paths4(const Graph& g) {
    const auto agg = DegreeAggregates::of(g);
    wide mu1x2 = 0;
    for (auto [s, t] : g.edges()) mu1x2 += static_cast<wide>(agg.xi[s]) + agg.xi[t];
    const Integer mu1 = exact_div(to_integer(mu1x2), 2, "mu1");
    return Integer(static_cast<unsigned long>(g.num_edges())) - agg.mmt2 + mu1 - to_integer(sum_common_neighbors(g));
}

Integer count_paths5(const Graph& g) {
    wide total = 0;
    for (auto [s, t] : g.edges()) total += g1(g, s, t) + g1(g, t, s);
    return exact_div(to_integer(total), 2, "paths5");
}

Integer count_cycles4(const Graph& g) {
    wide total = 0;
    for (auto [s, t] : g.edges()) {
        for (vertex u : g.neighbors(t)) {
            if (u == s) continue;
            total += static_cast<wide>(neighbor_intersection(g, s, u).size) - 1;
        }
    }
    return exact_div(to_integer(total), 4, "cycles4");
}

Integer count_triangles(const Graph& g) { return exact_div(to_integer(sum_common_neighbors(g)), 3, "triangles"); }

Integer count_paw(const Graph& g) {
    wide total = 0;
    for (auto [s, t] : g.edges()) {
        const auto c = neighbor_intersection(g, s, t);
        total += static_cast<wide>(c.degree_sum) - 2 * static_cast<wide>(c.size);
    }
    return to_integer(total);
}

Integer count_c3l2(const Graph& g) {
    const wide m = static_cast<wide>(g.num_edges());
    wide total = 0;
    for (auto [s, t] : g.edges()) {
        const auto c = neighbor_intersection(g, s, t);
        const wide ks = g.degree(s);
        const wide kt = g.degree(t);
        total += (m - ks - kt + 3) * static_cast<wide>(c.size) - static_cast<wide>(c.degree_sum);
    }
    return exact_div(to_integer(total), 3, "c3l2");
}

Integer compute_lambda1(const Graph& g, const DegreeAggregates& agg) {
    wide total = 0;
    for (auto [s, t] : g.edges()) {
        const wide ks = g.degree(s);
        const wide kt = g.degree(t);
        const wide xs = agg.xi[s];
        const wide xt = agg.xi[t];
        const auto c = neighbor_intersection(g, s, t);
        total += (kt - 1) * (xs - kt) + (ks - 1) * (xt - ks) - 2 * static_cast<wide>(c.degree_sum);
    }
    return to_integer(total);
}

Integer compute_lambda2(const Graph& g, const DegreeAggregates& agg) {
    wide extra = 0;
    for (auto [s, t] : g.edges()) {
        const wide ks = g.degree(s);
        const wide kt = g.degree(t);
        const auto c = neighbor_intersection(g, s, t);
        extra += (ks + kt) * ((ks - 1) * (kt - 1) - static_cast<wide>(c.size));
    }
    return compute_lambda1(g, agg) + to_integer(extra);
}

CensusReport fast_census(const Graph& g) {
    const auto agg = DegreeAggregates::of(g);
    CensusReport r;
    r.q = compute_q(g);
    r.K = compute_K(g, agg);
    r.phi1 = compute_phi1(g, agg);
    r.phi2 = compute_phi2(g, agg);
    r.lambda1 = compute_lambda1(g, agg);
    r.lambda2 = compute_lambda2(g, agg);
    wide mu1x2 = 0;
    for (auto [s, t] : g.edges()) mu1x2 += static_cast<wide>(agg.xi[s]) + agg.xi[t];
    r.mu1 = exact_div(to_integer(mu1x2), 2, "mu1");
    r.mu2 = to_integer(sum_common_neighbors(g));
    r.nP4 = count_paths4(g);
    r.nP5 = count_paths5(g);
    r.nC3 = count_triangles(g);
    r.nC4 = count_cycles4(g);
    r.nPaw = count_paw(g);
    r.nC3L2 = count_c3l2(g);
    return r;
}

} // namespace crossvar
