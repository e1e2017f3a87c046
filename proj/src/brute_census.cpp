#include <algorithm>
#include <array>
#include <vector>

#include "crossvar/census.hpp"
#include "crossvar/errors.hpp"

namespace crossvar {

namespace {

using Matrix = std::vector<std::vector<long>>;

Matrix adjacency_matrix(const Graph& g) {
    const std::size_t n = g.num_vertices();
    Matrix a(n, std::vector<long>(n, 0));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
    return a;
}

Matrix multiply(const Matrix& x, const Matrix& y) {
    const std::size_t n = x.size();
    Matrix z(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (x[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(r);
}

void check_vertices(const Graph& g, const OracleLimits& limits, const char* who) {
    if (g.num_vertices() > limits.max_vertices)
        throw oracle_limit_exceeded(std::string(who) + ": n=" + std::to_string(g.num_vertices()) +
                                    " exceeds the oracle limit of " + std::to_string(limits.max_vertices));
}

// Canonical form for graphs with at most four edges: the sorted list of
// per-component codes (vertex count, edge count, degree histogram). Two such
// graphs are isomorphic iff their signatures are equal.
using Signature = std::array<std::uint32_t, 4>;

Signature signature_of(std::span<const edge> edges) {
    std::array<vertex, 8> ids{};
    std::array<std::uint32_t, 8> deg{};
    std::array<std::uint8_t, 8> parent{};
    std::size_t nv = 0;
    auto local = [&](vertex x) -> std::uint8_t {
        for (std::size_t i = 0; i < nv; ++i)
            if (ids[i] == x) return static_cast<std::uint8_t>(i);
        ids[nv] = x;
        parent[nv] = static_cast<std::uint8_t>(nv);
        return static_cast<std::uint8_t>(nv++);
    };
    auto find = [&](std::uint8_t x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    std::array<std::array<std::uint8_t, 2>, 4> le{};
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto a = local(edges[i].first);
        const auto b = local(edges[i].second);
        le[i] = {a, b};
        ++deg[a];
        ++deg[b];
        parent[find(a)] = find(b);
    }
    std::array<std::uint32_t, 8> code{};
    // code layout: [vertices:4][edges:4][count of degree d, 3 bits each for d=1..4]
    for (std::size_t i = 0; i < nv; ++i) {
        auto& c = code[find(static_cast<std::uint8_t>(i))];
        c += 1u << 20;
        c += 1u << (3 * (deg[i] - 1));
    }
    for (std::size_t i = 0; i < edges.size(); ++i) code[find(le[i][0])] += 1u << 16;
    Signature sig{};
    std::size_t ncomp = 0;
    for (std::size_t i = 0; i < nv; ++i)
        if (find(static_cast<std::uint8_t>(i)) == i) sig[ncomp++] = code[i];
    std::sort(sig.begin(), sig.begin() + static_cast<long>(ncomp));
    return sig;
}

std::vector<edge> pattern_edges(Pattern p) {
    switch (p) {
    case Pattern::L2xL2: return {{0, 1}, {2, 3}};
    case Pattern::L3: return {{0, 1}, {1, 2}};
    case Pattern::L3xL2: return {{0, 1}, {1, 2}, {3, 4}};
    case Pattern::L2xL2xL2: return {{0, 1}, {2, 3}, {4, 5}};
    case Pattern::C3: return {{0, 1}, {1, 2}, {0, 2}};
    case Pattern::L4: return {{0, 1}, {1, 2}, {2, 3}};
    case Pattern::C4: return {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    case Pattern::L5: return {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    case Pattern::Paw: return {{0, 1}, {1, 2}, {0, 2}, {2, 3}};
    case Pattern::C3xL2: return {{0, 1}, {1, 2}, {0, 2}, {3, 4}};
    case Pattern::L4xL2: return {{0, 1}, {1, 2}, {2, 3}, {4, 5}};
    case Pattern::L3xL3: return {{0, 1}, {1, 2}, {3, 4}, {4, 5}};
    case Pattern::L2xL2xL2xL2: return {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
    case Pattern::L3xL2xL2: return {{0, 1}, {1, 2}, {3, 4}, {5, 6}};
    }
    throw contract_violation("unknown pattern");
}

} // namespace

std::vector<Integer> count_subgraphs(const Graph& g, std::span<const Pattern> patterns, const OracleLimits& limits) {
    std::vector<Integer> out(patterns.size(), 0);
    const std::size_t m = g.num_edges();
    const auto edges = g.edges();

    for (std::size_t k = 1; k <= 4; ++k) {
        std::vector<std::pair<Signature, std::size_t>> targets;
        for (std::size_t p = 0; p < patterns.size(); ++p) {
            const auto pe = pattern_edges(patterns[p]);
            if (pe.size() == k) targets.emplace_back(signature_of(pe), p);
        }
        if (targets.empty()) continue;
        if (binomial_capped(m, k, limits.max_edge_subsets) > limits.max_edge_subsets)
            throw oracle_limit_exceeded("count_subgraphs: C(" + std::to_string(m) + "," + std::to_string(k) +
                                        ") edge subsets exceed the oracle budget");
        if (m < k) continue;

        std::vector<std::uint64_t> counts(targets.size(), 0);
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        std::array<edge, 4> chosen{};
        for (;;) {
            for (std::size_t i = 0; i < k; ++i) chosen[i] = edges[idx[i]];
            const Signature sig = signature_of(std::span<const edge>(chosen.data(), k));
            for (std::size_t t = 0; t < targets.size(); ++t)
                if (targets[t].first == sig) ++counts[t];
            // next k-combination of [0, m)
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        for (std::size_t t = 0; t < targets.size(); ++t)
            out[targets[t].second] = Integer(static_cast<unsigned long>(counts[t]));
    }
    return out;
}

Integer count_subgraphs(const Graph& g, Pattern pattern, const OracleLimits& limits) {
    const std::array<Pattern, 1> one{pattern};
    return count_subgraphs(g, one, limits)[0];
}

CensusReport brute_census(const Graph& g, const OracleLimits& limits) {
    check_vertices(g, limits, "brute_census");
    const auto a = adjacency_matrix(g);
    const std::size_t n = g.num_vertices();
    std::vector<long> k(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k[i] += a[i][j];

    CensusReport r;
    const auto edges = g.edges();
    long q = 0, K = 0, phi1 = 0, phi2 = 0, lambda1 = 0, lambda2 = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [s, t] = edges[i];
            const auto [u, v] = edges[j];
            if (s == u || s == v || t == u || t == v) continue;
            ++q;
            K += k[s] + k[t] + k[u] + k[v];
            phi1 += k[s] * k[t] + k[u] * k[v];
            phi2 += (k[s] + k[t]) * (k[u] + k[v]);
            lambda1 += a[s][u] * (k[t] + k[v]) + a[s][v] * (k[t] + k[u]) + a[t][u] * (k[s] + k[v]) +
                       a[t][v] * (k[s] + k[u]);
            lambda2 += (a[s][u] + a[s][v] + a[t][u] + a[t][v]) * (k[s] + k[t] + k[u] + k[v]);
        }
    }
    r.q = q;
    r.K = K;
    r.phi1 = phi1;
    r.phi2 = phi2;
    r.lambda1 = lambda1;
    r.lambda2 = lambda2;

    long mu1x2 = 0, mu2 = 0;
    for (auto [s, t] : edges) {
        for (std::size_t w = 0; w < n; ++w) {
            mu1x2 += a[s][w] * k[w] + a[t][w] * k[w];
            mu2 += a[s][w] * a[t][w];
        }
    }
    r.mu1 = mu1x2 / 2;
    r.mu2 = mu2;

    constexpr std::array patterns{Pattern::L4, Pattern::L5, Pattern::C3, Pattern::C4, Pattern::Paw, Pattern::C3xL2};
    const auto counts = count_subgraphs(g, patterns, limits);
    r.nP4 = counts[0];
    r.nP5 = counts[1];
    r.nC3 = counts[2];
    r.nC4 = counts[3];
    r.nPaw = counts[4];
    r.nC3L2 = counts[5];
    return r;
}

CountIdentities brute_count_identities(const Graph& g, const OracleLimits& limits) {
    check_vertices(g, limits, "brute_count_identities");
    const auto a = adjacency_matrix(g);
    const std::size_t n = g.num_vertices();
    std::vector<long> k(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k[i] += a[i][j];
    const long m = static_cast<long>(g.num_edges());

    CountIdentities out;
    const auto edges = g.edges();
    long q = 0, p4 = 0, c4x2 = 0, p5 = 0, paw = 0, c3l2x3 = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [s, t] = edges[i];
            const auto [u, v] = edges[j];
            if (s == u || s == v || t == u || t == v) continue;
            ++q;
            p4 += a[s][u] + a[s][v] + a[t][u] + a[t][v];
            c4x2 += a[s][v] * a[t][u] + a[s][u] * a[t][v];
            paw += (a[s][u] + a[t][v]) * (a[s][v] + a[t][u]);
            for (std::size_t w = 0; w < n; ++w) {
                if (w == s || w == t || w == u || w == v) continue;
                p5 += a[s][w] * (a[u][w] + a[v][w]) + a[t][w] * (a[u][w] + a[v][w]);
                c3l2x3 += a[s][w] * a[t][w] + a[u][w] * a[v][w];
            }
        }
    }
    out.paths4_qsum = p4;
    out.cycles4_qsum = exact_div(Integer(c4x2), 2, "cycles4 q-sum");
    out.paths5_qsum = p5;
    out.paw_qsum = paw;
    out.c3l2_qsum = exact_div(Integer(c3l2x3), 3, "c3l2 q-sum");

    const Matrix a2 = multiply(a, a);
    const Matrix a3 = multiply(a2, a);
    const Matrix a4 = multiply(a3, a);
    long matrix_form = 0, m3 = 0, trace4 = 0, sum_k2 = 0;
    for (std::size_t s = 0; s < n; ++s) {
        trace4 += a4[s][s];
        sum_k2 += k[s] * k[s];
        for (std::size_t t = 0; t < n; ++t) {
            if (s == t) continue;
            matrix_form += a3[s][t] - a[s][t] * (2 * k[t] - 1);
            if (s < t) m3 += a3[s][t];
        }
    }
    out.paths4_matrix = exact_div(Integer(matrix_form), 2, "paths4 matrix form");
    out.paths4_moment = m3 + m - sum_k2;
    out.cycles4_trace = exact_div(Integer(trace4 + 4 * q - 2 * m * m), 8, "cycles4 trace form");
    return out;
}

} // namespace crossvar
