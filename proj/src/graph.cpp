#include "crossvar/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "crossvar/errors.hpp"

namespace crossvar {

Graph Graph::from_edges(std::size_t n, std::span<const edge> edges) {
    Graph g;
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw validation_error("self-loop at vertex " + std::to_string(u));
        if (u >= n || v >= n)
            throw validation_error("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                   " out of range for n=" + std::to_string(n));
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end())
        throw validation_error("duplicate edge");

    g.degree_.assign(n, 0);
    for (auto [u, v] : g.edges_) {
        ++g.degree_[u];
        ++g.degree_[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + g.degree_[u];
    g.neighbors_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : g.edges_) {
        g.neighbors_[fill[u]++] = v;
        g.neighbors_[fill[v]++] = u;
    }
    for (std::size_t u = 0; u < n; ++u)
        std::sort(g.neighbors_.begin() + g.offsets_[u], g.neighbors_.begin() + g.offsets_[u + 1]);
    return g;
}

bool Graph::adjacent(vertex u, vertex v) const noexcept {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::uint64_t Graph::max_degree() const noexcept {
    return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

DegreeAggregates DegreeAggregates::of(const Graph& g) {
    DegreeAggregates a;
    unsigned __int128 m2 = 0;
    unsigned __int128 m3 = 0;
    for (auto k : g.degrees()) {
        m2 += static_cast<unsigned __int128>(k) * k;
        m3 += static_cast<unsigned __int128>(k) * k * k;
    }
    a.mmt2 = to_integer(static_cast<__int128>(m2));
    a.mmt3 = to_integer(static_cast<__int128>(m3));
    a.xi.assign(g.num_vertices(), 0);
    unsigned __int128 psi = 0;
    for (auto [s, t] : g.edges()) {
        a.xi[s] += g.degree(t);
        a.xi[t] += g.degree(s);
        psi += static_cast<unsigned __int128>(g.degree(s)) * g.degree(t);
    }
    a.psi = to_integer(static_cast<__int128>(psi));
    return a;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool parse_uint(std::string_view tok, std::uint64_t& out) {
    if (tok.empty()) return false;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

} // namespace

EdgeListResult load_graph(std::istream& in) {
    constexpr std::uint64_t max_id = 0xFFFFFFFEull;
    std::vector<edge> edges;
    std::optional<std::uint64_t> forced_n;
    std::uint64_t max_seen = 0;
    bool any_vertex = false;
    bool seen_data = false;

    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        if (line.starts_with("n=") || line.starts_with("n =")) {
            if (seen_data || forced_n) throw parse_error("'n=' directive must be the first data line", lineno);
            const auto value = trim(line.substr(line.find('=') + 1));
            std::uint64_t n = 0;
            if (!parse_uint(value, n) || n > max_id) throw parse_error("invalid vertex count directive", lineno);
            forced_n = n;
            continue;
        }
        seen_data = true;

        std::istringstream ls{std::string(line)};
        std::string a, b, extra;
        std::uint64_t u = 0, v = 0;
        if (!(ls >> a >> b) || (ls >> extra) || !parse_uint(a, u) || !parse_uint(b, v) || u > max_id || v > max_id)
            throw parse_error("expected two non-negative integers 'u v'", lineno);
        if (u == v) throw validation_error("line " + std::to_string(lineno) + ": self-loop at vertex " + a);
        edges.emplace_back(static_cast<vertex>(std::min(u, v)), static_cast<vertex>(std::max(u, v)));
        max_seen = std::max({max_seen, u, v});
        any_vertex = true;
    }

    std::size_t n = any_vertex ? static_cast<std::size_t>(max_seen) + 1 : 0;
    if (forced_n) {
        if (*forced_n < n)
            throw validation_error("n=" + std::to_string(*forced_n) + " but vertex id " + std::to_string(max_seen) +
                                   " appears");
        n = static_cast<std::size_t>(*forced_n);
    }

    EdgeListResult result;
    std::sort(edges.begin(), edges.end());
    const auto last = std::unique(edges.begin(), edges.end());
    const auto duplicates = static_cast<std::size_t>(edges.end() - last);
    edges.erase(last, edges.end());
    if (duplicates > 0)
        result.warnings.push_back("collapsed " + std::to_string(duplicates) + " duplicate edge(s)");
    result.graph = Graph::from_edges(n, edges);
    return result;
}

EdgeListResult load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path + "'");
    return load_graph(in);
}

Integer compute_q(const Graph& g) {
    const Integer m(static_cast<unsigned long>(g.num_edges()));
    Integer sum_k2 = 0;
    for (auto k : g.degrees()) sum_k2 += Integer(static_cast<unsigned long>(k)) * static_cast<unsigned long>(k);
    return exact_div(m * (m + 1) - sum_k2, 2, "q");
}

Integer compute_K(const Graph& g, const DegreeAggregates& agg) {
    const Integer m(static_cast<unsigned long>(g.num_edges()));
    return (m + 1) * agg.mmt2 - agg.mmt3 - 2 * agg.psi;
}

Integer compute_phi1(const Graph& g, const DegreeAggregates& agg) {
    const Integer m(static_cast<unsigned long>(g.num_edges()));
    __int128 correction = 0;
    for (auto [s, t] : g.edges()) {
        const __int128 ks = g.degree(s);
        const __int128 kt = g.degree(t);
        correction += ks * kt * (ks + kt);
    }
    return (m + 1) * agg.psi - to_integer(correction);
}

Integer compute_phi2(const Graph& g, const DegreeAggregates& agg) {
    // Σ_E (k_s + k_t) = Σk², so the constant part of each term factors out.
    __int128 rest = 0;
    for (auto [s, t] : g.edges()) {
        const __int128 ks = g.degree(s);
        const __int128 kt = g.degree(t);
        rest += (ks + kt) * (static_cast<__int128>(agg.xi[s]) + agg.xi[t] + ks * (ks - 1) + kt * (kt - 1));
    }
    return exact_div(agg.mmt2 * agg.mmt2 - to_integer(rest), 2, "phi2");
}

bool is_forest(const Graph& g) {
    std::vector<vertex> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), vertex{0});
    auto find = [&](vertex x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (auto [u, v] : g.edges()) {
        const vertex ru = find(u);
        const vertex rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
    }
    return true;
}

} // namespace crossvar
