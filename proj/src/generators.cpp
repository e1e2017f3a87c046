#include "crossvar/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>

#include "crossvar/errors.hpp"

namespace crossvar::generators {

namespace {

Graph build(std::size_t n, std::vector<edge> edges) { return Graph::from_edges(n, edges); }

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

std::vector<std::vector<vertex>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<vertex>> adj(g.num_vertices());
    for (auto [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::string ahu(const std::vector<std::vector<vertex>>& adj, vertex root, vertex parent) {
    std::vector<std::string> children;
    for (vertex c : adj[root])
        if (c != parent) children.push_back(ahu(adj, c, root));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    return out + ")";
}

} // namespace

Graph complete(std::size_t n) {
    std::vector<edge> e;
    for (vertex i = 0; i < n; ++i)
        for (vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return build(n, std::move(e));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<edge> e;
    for (vertex i = 0; i < a; ++i)
        for (vertex j = 0; j < b; ++j) e.emplace_back(i, static_cast<vertex>(a + j));
    return build(a + b, std::move(e));
}

Graph path(std::size_t n) {
    std::vector<edge> e;
    for (vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build(n, std::move(e));
}

Graph cycle(std::size_t n) {
    if (n < 3) throw validation_error("cycle needs n >= 3");
    std::vector<edge> e;
    for (vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<vertex>((i + 1) % n));
    return build(n, std::move(e));
}

Graph star(std::size_t n) {
    if (n < 1) throw validation_error("star needs n >= 1");
    std::vector<edge> e;
    for (vertex i = 1; i < n; ++i) e.emplace_back(0, i);
    return build(n, std::move(e));
}

Graph quasi_star(std::size_t n) {
    if (n < 3) throw validation_error("quasi_star needs n >= 3");
    std::vector<edge> e;
    for (vertex i = 1; i + 1 < n; ++i) e.emplace_back(0, i);
    e.emplace_back(1, static_cast<vertex>(n - 1));
    return build(n, std::move(e));
}

Graph one_regular(std::size_t n) {
    if (n % 2 != 0) throw validation_error("one_regular needs an even n");
    std::vector<edge> e;
    for (vertex i = 0; i < n; i += 2) e.emplace_back(i, i + 1);
    return build(n, std::move(e));
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw validation_error("erdos_renyi needs p in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<edge> e;
    for (vertex i = 0; i < n; ++i)
        for (vertex j = i + 1; j < n; ++j)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) e.emplace_back(i, j);
    return build(n, std::move(e));
}

Graph tree_from_pruefer(const std::vector<vertex>& seq) {
    const std::size_t n = seq.size() + 2;
    std::vector<std::size_t> degree(n, 1);
    for (vertex v : seq) {
        if (v >= n) throw validation_error("Pruefer entry out of range");
        ++degree[v];
    }
    // Linear decoding: `ptr` scans for the smallest leaf, `leaf` follows newly created leaves.
    std::vector<edge> e;
    e.reserve(n - 1);
    std::size_t ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    std::size_t leaf = ptr;
    for (vertex v : seq) {
        e.emplace_back(static_cast<vertex>(leaf), v);
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    e.emplace_back(static_cast<vertex>(leaf), static_cast<vertex>(n - 1));
    for (auto& [a, b] : e)
        if (a > b) std::swap(a, b);
    return build(n, std::move(e));
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw validation_error("random_tree needs n >= 1");
    if (n == 1) return build(1, {});
    if (n == 2) return build(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::vector<vertex> seq(n - 2);
    for (auto& v : seq) v = static_cast<vertex>(bounded(rng, n));
    return tree_from_pruefer(seq);
}

Graph random_forest(std::size_t n, std::uint64_t seed) {
    const Graph t = random_tree(n + 1, seed);
    std::vector<edge> e;
    for (auto [u, v] : t.edges())
        if (u != n && v != n) e.emplace_back(u, v);
    return build(n, std::move(e));
}

std::string tree_canonical_form(const Graph& tree) {
    const std::size_t n = tree.num_vertices();
    if (n == 0 || tree.num_edges() + 1 != n || !is_forest(tree))
        throw contract_violation("tree_canonical_form requires a tree");
    // Peel leaves layer by layer; the last one or two vertices are the center.
    std::vector<std::size_t> degree(n);
    std::vector<vertex> layer;
    for (vertex v = 0; v < n; ++v) {
        degree[v] = tree.degree(v);
        if (degree[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<vertex> next;
        for (vertex v : layer)
            for (vertex u : tree.neighbors(v))
                if (--degree[u] == 1) next.push_back(u);
        layer = std::move(next);
    }
    const auto adj = adjacency_lists(tree);
    std::string best;
    for (vertex c : layer) {
        std::string s = ahu(adj, c, c);
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

std::vector<Graph> all_trees(std::size_t n) {
    if (n < 1 || n > 10) throw validation_error("all_trees supports 1 <= n <= 10");
    // Every tree on k + 1 vertices is a tree on k vertices plus a leaf.
    std::map<std::string, Graph> level{{"()", build(1, {})}};
    for (std::size_t k = 1; k < n; ++k) {
        std::map<std::string, Graph> next;
        for (const auto& [form, t] : level) {
            for (vertex v = 0; v < k; ++v) {
                std::vector<edge> e(t.edges().begin(), t.edges().end());
                e.emplace_back(v, static_cast<vertex>(k));
                Graph grown = build(k + 1, std::move(e));
                next.try_emplace(tree_canonical_form(grown), std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (auto& [form, t] : level) out.push_back(std::move(t));
    return out;
}

std::vector<Graph> generate(const FamilySpec& s) {
    const std::string& f = s.family;
    if (f == "complete") return {complete(s.n)};
    if (f == "complete_bipartite") return {complete_bipartite(s.n, s.n2)};
    if (f == "path") return {path(s.n)};
    if (f == "cycle") return {cycle(s.n)};
    if (f == "star") return {star(s.n)};
    if (f == "quasi_star") return {quasi_star(s.n)};
    if (f == "one_regular") return {one_regular(s.n)};
    if (f == "erdos_renyi") return {erdos_renyi(s.n, s.p, s.seed)};
    if (f == "random_tree") return {random_tree(s.n, s.seed)};
    if (f == "random_forest") return {random_forest(s.n, s.seed)};
    if (f == "all_trees") return all_trees(s.n);
    throw validation_error("unknown graph family '" + f + "'");
}

} // namespace crossvar::generators
