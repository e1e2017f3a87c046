#include "crossvar/frequencies.hpp"

#include <algorithm>
#include <bit>

#include "crossvar/errors.hpp"

namespace crossvar {

namespace {

struct TypeInfo {
    std::string_view code;
    int tau;
    int phi;
    int multiplier;
    Pattern pattern;
};

constexpr std::array<TypeInfo, 9> type_info{{
    {"00", 0, 0, 6, Pattern::L2xL2xL2xL2},
    {"24", 2, 4, 1, Pattern::L2xL2},
    {"13", 1, 3, 2, Pattern::L3xL2},
    {"12", 1, 2, 6, Pattern::L2xL2xL2},
    {"04", 0, 4, 2, Pattern::C4},
    {"03", 0, 3, 2, Pattern::L5},
    {"021", 0, 2, 2, Pattern::L4xL2},
    {"022", 0, 2, 4, Pattern::L3xL3},
    {"01", 0, 1, 4, Pattern::L3xL2xL2},
}};

ProductType from_tau_phi(int t, int p, bool shared_pair_is_edge) {
    switch (t * 10 + p) {
    case 24: return ProductType::t24;
    case 13: return ProductType::t13;
    case 12: return ProductType::t12;
    case 4: return ProductType::t04;
    case 3: return ProductType::t03;
    case 2: return shared_pair_is_edge ? ProductType::t021 : ProductType::t022;
    case 1: return ProductType::t01;
    case 0: return ProductType::t00;
    default: throw internal_inconsistency("impossible (tau, phi) = (" + std::to_string(t) + ", " + std::to_string(p) + ")");
    }
}

bool same_edge(edge a, edge b) {
    return (a.first == b.first && a.second == b.second) || (a.first == b.second && a.second == b.first);
}

bool touches(edge e, vertex x) { return e.first == x || e.second == x; }

// Generic classification from the four vertices of each pair.
ProductType classify_vertices(const IndependentPair& p1, const IndependentPair& p2) {
    const std::array<edge, 2> e1{p1.first, p1.second};
    const std::array<edge, 2> e2{p2.first, p2.second};
    int t = 0;
    for (auto a : e1)
        for (auto b : e2) t += same_edge(a, b);

    std::array<vertex, 4> shared{};
    int p = 0;
    for (vertex x : {p1.first.first, p1.first.second, p1.second.first, p1.second.second})
        if (touches(p2.first, x) || touches(p2.second, x)) shared[p++] = x;

    bool pair_is_edge = false;
    if (t == 0 && p == 2) {
        const edge s{shared[0], shared[1]};
        pair_is_edge = same_edge(s, p1.first) || same_edge(s, p1.second) || same_edge(s, p2.first) ||
                       same_edge(s, p2.second);
    }
    return from_tau_phi(t, p, pair_is_edge);
}

bool is_independent_pair_of(const Graph& g, const IndependentPair& p) {
    const auto [s, t] = p.first;
    const auto [u, v] = p.second;
    const std::size_t n = g.num_vertices();
    if (s >= n || t >= n || u >= n || v >= n) return false;
    if (s == u || s == v || t == u || t == v) return false;
    return s != t && u != v && g.adjacent(s, t) && g.adjacent(u, v);
}

// Bit-mask form of a Q element for graphs with at most 64 vertices.
struct MaskedPair {
    std::uint64_t vertices;
    std::uint64_t e1;
    std::uint64_t e2;
};

inline ProductType classify_masks(const MaskedPair& a, const MaskedPair& b) {
    const std::uint64_t common = a.vertices & b.vertices;
    if (common == 0) return ProductType::t00;
    const int p = std::popcount(common);
    const int t = (a.e1 == b.e1) + (a.e1 == b.e2) + (a.e2 == b.e1) + (a.e2 == b.e2);
    const bool pair_is_edge = common == a.e1 || common == a.e2 || common == b.e1 || common == b.e2;
    return from_tau_phi(t, p, pair_is_edge);
}

} // namespace

std::string_view code(ProductType t) { return type_info[index_of(t)].code; }

std::optional<ProductType> product_type_from_code(std::string_view c) {
    for (auto t : all_product_types)
        if (code(t) == c) return t;
    return std::nullopt;
}

int tau(ProductType t) { return type_info[index_of(t)].tau; }
int phi(ProductType t) { return type_info[index_of(t)].phi; }
int subgraph_multiplier(ProductType t) { return type_info[index_of(t)].multiplier; }
Pattern subgraph_pattern(ProductType t) { return type_info[index_of(t)].pattern; }

Integer FrequencyVector::total() const {
    Integer s = 0;
    for (const auto& x : f) s += x;
    return s;
}

bool FrequencyVector::same_contributing(const FrequencyVector& other) const {
    for (auto t : contributing_product_types)
        if ((*this)[t] != other[t]) return false;
    return joint_00_01() == other.joint_00_01();
}

ProductType classify_pair(const Graph& g, const IndependentPair& p1, const IndependentPair& p2) {
    if (!is_independent_pair_of(g, p1) || !is_independent_pair_of(g, p2))
        throw contract_violation("classify_pair: arguments must be pairs of independent edges of the graph");
    return classify_vertices(p1, p2);
}

std::vector<IndependentPair> enumerate_q(const Graph& g) {
    std::vector<IndependentPair> q;
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [s, t] = edges[i];
            const auto [u, v] = edges[j];
            if (s != u && s != v && t != u && t != v) q.push_back({edges[i], edges[j]});
        }
    return q;
}

FrequencyVector frequencies_brute(const Graph& g, const OracleLimits& limits) {
    const Integer q = compute_q(g);
    if (q * q > Integer(static_cast<unsigned long>(limits.max_pair_products)))
        throw oracle_limit_exceeded("frequencies_brute: q^2 = " + to_string(q * q) + " exceeds the oracle budget");

    const auto pairs = enumerate_q(g);
    std::array<std::uint64_t, 9> counts{};
    // Classification is symmetric, so unordered pairs are counted twice.
    if (g.num_vertices() <= 64) {
        std::vector<MaskedPair> masked;
        masked.reserve(pairs.size());
        for (const auto& p : pairs) {
            const std::uint64_t e1 = (1ull << p.first.first) | (1ull << p.first.second);
            const std::uint64_t e2 = (1ull << p.second.first) | (1ull << p.second.second);
            masked.push_back({e1 | e2, e1, e2});
        }
        for (std::size_t i = 0; i < masked.size(); ++i)
            for (std::size_t j = i + 1; j < masked.size(); ++j) ++counts[index_of(classify_masks(masked[i], masked[j]))];
    } else {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (std::size_t j = i + 1; j < pairs.size(); ++j)
                ++counts[index_of(classify_vertices(pairs[i], pairs[j]))];
    }

    FrequencyVector fv;
    for (auto t : all_product_types) fv[t] = Integer(static_cast<unsigned long>(counts[index_of(t)])) * 2;
    fv[ProductType::t24] += Integer(static_cast<unsigned long>(pairs.size()));
    return fv;
}

FrequencyVector frequencies_from_census(const CensusReport& c, const Integer& m) {
    FrequencyVector fv;
    fv.split_00_01 = false;
    fv[ProductType::t24] = c.q;
    fv[ProductType::t13] = c.K - 4 * c.q - 2 * c.nP4;
    fv[ProductType::t12] = 2 * ((m + 2) * c.q + c.nP4 - c.K);
    fv[ProductType::t04] = 2 * c.nC4;
    fv[ProductType::t03] = c.lambda1 - 2 * c.nP4 - 8 * c.nC4 - 2 * c.nPaw;
    fv[ProductType::t021] =
        (m + 5) * c.nP4 + 8 * c.nC4 + 2 * c.q - c.K + 3 * c.nPaw - 3 * c.nC3L2 - c.lambda1 - c.lambda2 + c.phi1;
    fv[ProductType::t022] = 4 * c.q - 2 * c.K + 5 * c.nP4 - c.nP5 + 2 * c.nPaw + 4 * c.nC4 - c.lambda2 + c.phi2;

    Integer rest = c.q * c.q;
    for (auto t : contributing_product_types) rest -= fv[t];
    fv[ProductType::t00] = rest;
    fv[ProductType::t01] = 0;

    for (auto t : all_product_types)
        if (sgn(fv[t]) < 0)
            throw internal_inconsistency("frequencies_from_census: f_" + std::string(code(t)) + " = " +
                                         to_string(fv[t]) + " is negative");
    return fv;
}

FrequencyVector frequencies_from_subgraph_counts(const Graph& g, const OracleLimits& limits) {
    std::array<Pattern, 9> patterns{};
    for (auto t : all_product_types) patterns[index_of(t)] = subgraph_pattern(t);
    const auto counts = count_subgraphs(g, patterns, limits);
    FrequencyVector fv;
    for (auto t : all_product_types) fv[t] = subgraph_multiplier(t) * counts[index_of(t)];
    return fv;
}

} // namespace crossvar
