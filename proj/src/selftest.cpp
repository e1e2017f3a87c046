#include "crossvar/selftest.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "crossvar/arrangement.hpp"
#include "crossvar/frequencies.hpp"
#include "crossvar/generators.hpp"
#include "crossvar/variance.hpp"

namespace crossvar {

namespace {

namespace gen = generators;

std::string format_p(double p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

std::string describe(const FrequencyVector& f) {
    std::string out;
    for (auto t : all_product_types) {
        if (!out.empty()) out += ' ';
        out += std::string(code(t)) + "=" + to_string(f[t]);
    }
    return out;
}

Comparison compare(const CorpusEntry& e, std::string check, bool ok, std::string detail = {}) {
    return {e.label, std::move(check), ok, std::move(detail)};
}

template <typename A, typename B>
Comparison compare_values(const CorpusEntry& e, std::string check, const A& a, const B& b) {
    std::ostringstream os;
    os << a << " vs " << b;
    return compare(e, std::move(check), a == b, os.str());
}

Integer open_wedges_bound(const Graph& g) {
    Integer wedges = 0;
    for (auto k : g.degrees()) wedges += Integer(static_cast<unsigned long>(k)) * (k > 0 ? k - 1 : 0) / 2;
    return Integer(static_cast<unsigned long>(g.num_edges())) + wedges - 3 * count_triangles(g);
}

} // namespace

std::vector<CorpusEntry> build_corpus(const CorpusOptions& o) {
    std::vector<CorpusEntry> out;
    std::mt19937_64 seeds(o.seed);
    for (std::size_t n = o.er_min_n; n <= o.er_max_n; ++n)
        for (double p : o.er_p)
            for (std::size_t i = 0; i < o.er_seeds; ++i) {
                const auto s = seeds();
                out.push_back({"er(" + std::to_string(n) + "," + format_p(p) + ",#" + std::to_string(i) + ")",
                               gen::erdos_renyi(n, p, s)});
            }
    for (std::size_t n = 1; n <= o.complete_max_n; ++n) out.push_back({"complete(" + std::to_string(n) + ")", gen::complete(n)});
    for (std::size_t a = o.bipartite_min; a <= o.bipartite_max; ++a)
        for (std::size_t b = a; b <= o.bipartite_max; ++b)
            out.push_back({"complete_bipartite(" + std::to_string(a) + "," + std::to_string(b) + ")",
                           gen::complete_bipartite(a, b)});
    for (std::size_t n = 1; n <= o.family_max_n; ++n) {
        const auto ns = std::to_string(n);
        out.push_back({"path(" + ns + ")", gen::path(n)});
        if (n >= 3) out.push_back({"cycle(" + ns + ")", gen::cycle(n)});
        out.push_back({"star(" + ns + ")", gen::star(n)});
        if (n >= 3) out.push_back({"quasi_star(" + ns + ")", gen::quasi_star(n)});
        if (n % 2 == 0) out.push_back({"one_regular(" + ns + ")", gen::one_regular(n)});
        out.push_back({"random_forest(" + ns + ")", gen::random_forest(n, seeds())});
    }
    for (std::size_t n = 1; n <= o.tree_max_n; ++n) {
        std::size_t i = 0;
        for (auto& t : gen::all_trees(n))
            out.push_back({"tree(" + std::to_string(n) + ",#" + std::to_string(i++) + ")", std::move(t)});
    }
    return out;
}

std::vector<Comparison> check_frequencies(const CorpusEntry& e, const OracleLimits& limits, Fault fault) {
    const Graph& g = e.graph;
    const auto brute = frequencies_brute(g, limits);
    auto census = frequencies_from_census(fast_census(g), Integer(static_cast<unsigned long>(g.num_edges())));
    if (fault == Fault::census_frequency) census[ProductType::t03] += 1;
    const auto subgraph = frequencies_from_subgraph_counts(g, limits);
    const Integer q = compute_q(g);
    return {
        compare(e, "frequencies brute/census", brute.same_contributing(census), describe(brute) + " | " + describe(census)),
        compare(e, "frequencies brute/subgraph", brute.same_contributing(subgraph),
                describe(brute) + " | " + describe(subgraph)),
        compare_values(e, "frequencies sum = q^2", brute.total(), q * q),
        compare_values(e, "f_24 = q", brute[ProductType::t24], q),
    };
}

std::vector<Comparison> check_variances(const CorpusEntry& e, const OracleLimits& limits, Fault fault) {
    const Graph& g = e.graph;
    const auto& rla = builtin_rla_table();
    const Rational naive = variance_naive(g, rla, limits).variance;
    std::vector<std::pair<std::string, Rational>> routes{
        {"subgraph", variance_subgraph(g, rla, limits).variance},
        {"general", variance_general(g, rla).variance},
        {"reuse", variance_general_reuse(g, rla).variance},
        {"closed", variance_rla_closed(g).variance},
    };
    if (fault == Fault::reuse_variance) routes[2].second += Rational(1, 180);
    if (is_forest(g)) routes.emplace_back("forest", variance_forest(g, rla).variance);
    std::vector<Comparison> out;
    for (const auto& [name, v] : routes) out.push_back(compare_values(e, "variance naive/" + name, naive, v));
    return out;
}

std::vector<Comparison> check_exhaustive(const CorpusEntry& e) {
    const Graph& g = e.graph;
    const auto stats = exhaustive_distribution(g);
    const auto general = variance_general(g, builtin_rla_table());
    return {
        compare_values(e, "exhaustive mean = q/3", stats.mean, Rational(compute_q(g), Integer(3))),
        compare_values(e, "exhaustive variance = general", stats.variance, general.variance),
    };
}

std::vector<Comparison> check_identities(const CorpusEntry& e, const OracleLimits& limits) {
    const Graph& g = e.graph;
    const auto fast = fast_census(g);
    const auto brute = brute_census(g, limits);
    const auto id = brute_count_identities(g, limits);
    std::vector<Comparison> out{
        compare(e, "census fast/brute", fast == brute),
        compare_values(e, "L4 q-sum/fast", id.paths4_qsum, fast.nP4),
        compare_values(e, "L4 matrix/fast", id.paths4_matrix, fast.nP4),
        compare_values(e, "L4 moment/fast", id.paths4_moment, fast.nP4),
        compare_values(e, "C4 q-sum/fast", id.cycles4_qsum, fast.nC4),
        compare_values(e, "C4 trace/fast", id.cycles4_trace, fast.nC4),
        compare_values(e, "L5 q-sum/fast", id.paths5_qsum, fast.nP5),
        compare_values(e, "paw q-sum/fast", id.paw_qsum, fast.nPaw),
        compare_values(e, "C3+L2 q-sum/fast", id.c3l2_qsum, fast.nC3L2),
        compare_values(e, "L5 brute/fast", count_subgraphs(g, Pattern::L5, limits), fast.nP5),
        compare_values(e, "paw brute/fast", count_subgraphs(g, Pattern::Paw, limits), fast.nPaw),
        compare_values(e, "C3+L2 brute/fast", count_subgraphs(g, Pattern::C3xL2, limits), fast.nC3L2),
    };
    if (is_forest(g))
        out.push_back(compare(e, "forest has no cycles",
                              sgn(fast.nC3) == 0 && sgn(fast.nC4) == 0 && sgn(fast.nPaw) == 0 && sgn(fast.nC3L2) == 0));
    return out;
}

Comparison check_hash_bound(const CorpusEntry& e) {
    const auto r = variance_general_reuse(e.graph, builtin_rla_table());
    const Integer size(static_cast<unsigned long>(r.hash_table_size.value_or(0)));
    const Integer bound = open_wedges_bound(e.graph);
    return compare(e, "|H| bound", size <= bound, to_string(size) + " <= " + to_string(bound));
}

bool SelftestReport::passed() const { return failures() == 0; }

std::size_t SelftestReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(comparisons.begin(), comparisons.end(), [](const Comparison& c) { return !c.passed; }));
}

SelftestReport run_selftest(const SelftestOptions& o) {
    SelftestReport report;
    const auto corpus = build_corpus(o.corpus);
    report.graphs = corpus.size();
    auto append = [&](std::vector<Comparison> cs) {
        for (auto& c : cs) report.comparisons.push_back(std::move(c));
    };
    for (const auto& e : corpus) {
        append(check_frequencies(e, o.limits, o.fault));
        append(check_variances(e, o.limits, o.fault));
        report.comparisons.push_back(check_hash_bound(e));
        if (e.graph.num_vertices() <= o.exhaustive_max_n) append(check_exhaustive(e));
        if (e.graph.num_vertices() <= o.identity_max_n) append(check_identities(e, o.limits));
    }
    return report;
}

} // namespace crossvar
