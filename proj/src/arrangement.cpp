#include "crossvar/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "crossvar/errors.hpp"

namespace crossvar {

namespace {

std::vector<std::pair<edge, edge>> independent_pairs(const Graph& g) {
    std::vector<std::pair<edge, edge>> out;
    for (const auto& p : enumerate_q(g)) out.emplace_back(p.first, p.second);
    return out;
}

std::uint64_t crossings(std::span<const std::uint32_t> position, std::span<const std::pair<edge, edge>> pairs) {
    std::uint64_t c = 0;
    for (const auto& [a, b] : pairs) c += edges_cross(position, a, b);
    return c;
}

// Uniform integer in [0, bound) by rejection from the top of the 64-bit range.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

struct Moments {
    std::uint64_t count = 0;
    unsigned __int128 sum = 0;
    unsigned __int128 sum_sq = 0;

    void add(std::uint64_t c) {
        ++count;
        sum += c;
        sum_sq += static_cast<unsigned __int128>(c) * c;
    }
    void merge(const Moments& o) {
        count += o.count;
        sum += o.sum;
        sum_sq += o.sum_sq;
    }
};

Integer to_integer_u(unsigned __int128 v) { return to_integer(static_cast<__int128>(v)); }

Moments run_block(std::span<const std::pair<edge, edge>> pairs, std::size_t n, std::uint64_t seed, std::uint64_t block,
                  std::uint64_t count) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
    std::mt19937_64 rng(seq);
    std::vector<std::uint32_t> position(n);
    Moments m;
    for (std::uint64_t i = 0; i < count; ++i) {
        std::iota(position.begin(), position.end(), 0u);
        for (std::size_t j = n; j > 1; --j) std::swap(position[j - 1], position[bounded(rng, j)]);
        m.add(crossings(position, pairs));
    }
    return m;
}

void require_positive_variance(const VarianceResult& v) {
    if (v.variance.sign() <= 0) throw degenerate_statistic("Var[C] = 0, the statistic is undefined");
}

} // namespace

Arrangement Arrangement::from_order(std::span<const vertex> order) {
    Arrangement a;
    a.position_.assign(order.size(), 0);
    std::vector<bool> seen(order.size(), false);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const vertex v = order[i];
        if (v >= order.size() || seen[v]) throw contract_violation("arrangement is not a permutation of 0..n-1");
        seen[v] = true;
        a.position_[v] = static_cast<std::uint32_t>(i);
    }
    return a;
}

Arrangement Arrangement::identity(std::size_t n) {
    Arrangement a;
    a.position_.resize(n);
    std::iota(a.position_.begin(), a.position_.end(), 0u);
    return a;
}

std::vector<vertex> Arrangement::order() const {
    std::vector<vertex> out(position_.size());
    for (std::size_t v = 0; v < position_.size(); ++v) out[position_[v]] = static_cast<vertex>(v);
    return out;
}

Arrangement Arrangement::reversed() const {
    Arrangement a = *this;
    const auto last = static_cast<std::uint32_t>(position_.size() - 1);
    for (auto& p : a.position_) p = last - p;
    return a;
}

Arrangement load_arrangement(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::vector<vertex> order;
        std::string tok;
        while (tokens >> tok) {
            std::size_t used = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || tok.front() == '-' || v > std::numeric_limits<vertex>::max())
                throw parse_error("'" + tok + "' is not a vertex id", lineno);
            order.push_back(static_cast<vertex>(v));
        }
        if (!order.empty()) return Arrangement::from_order(order);
    }
    throw parse_error("arrangement is empty");
}

Arrangement load_arrangement_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open arrangement '" + path + "'");
    return load_arrangement(in);
}

bool edges_cross(std::span<const std::uint32_t> position, edge a, edge b) noexcept {
    auto lo = position[a.first];
    auto hi = position[a.second];
    if (lo > hi) std::swap(lo, hi);
    const auto pu = position[b.first];
    const auto pv = position[b.second];
    const bool u_in = lo < pu && pu < hi;
    const bool v_in = lo < pv && pv < hi;
    return u_in != v_in;
}

std::uint64_t count_crossings(const Graph& g, const Arrangement& a) {
    if (a.size() != g.num_vertices())
        throw contract_violation("arrangement has " + std::to_string(a.size()) + " positions but the graph has " +
                                 std::to_string(g.num_vertices()) + " vertices");
    const auto edges = g.edges();
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [s, t] = edges[i];
            const auto [u, v] = edges[j];
            if (s == u || s == v || t == u || t == v) continue;
            c += edges_cross(a.positions(), edges[i], edges[j]);
        }
    return c;
}

ExhaustiveStats exhaustive_distribution(const Graph& g, std::size_t max_vertices) {
    const std::size_t n = g.num_vertices();
    if (n > max_vertices)
        throw oracle_limit_exceeded("exhaustive enumeration of " + std::to_string(n) + "! arrangements exceeds the " +
                                    std::to_string(max_vertices) + "-vertex cap");
    const auto pairs = independent_pairs(g);
    std::vector<std::uint32_t> position(n);
    std::iota(position.begin(), position.end(), 0u);
    ExhaustiveStats out;
    Moments m;
    do {
        const auto c = crossings(position, pairs);
        m.add(c);
        ++out.distribution[c];
    } while (std::next_permutation(position.begin(), position.end()));

    const Integer count(static_cast<unsigned long>(m.count));
    out.sample_count = m.count;
    out.mean = Rational(to_integer_u(m.sum), count);
    out.variance = Rational(to_integer_u(m.sum_sq), count) - out.mean * out.mean;
    return out;
}

MonteCarloStats monte_carlo(const Graph& g, std::uint64_t samples, std::uint64_t seed, unsigned shards) {
    if (samples == 0) throw contract_violation("monte_carlo needs at least one sample");
    shards = std::max(1u, shards);
    const auto pairs = independent_pairs(g);
    const std::size_t n = g.num_vertices();
    const std::uint64_t blocks = (samples + monte_carlo_block - 1) / monte_carlo_block;

    std::vector<Moments> per_shard(shards);
    auto work = [&](unsigned shard) {
        for (std::uint64_t b = shard; b < blocks; b += shards) {
            const std::uint64_t count = std::min(monte_carlo_block, samples - b * monte_carlo_block);
            per_shard[shard].merge(run_block(pairs, n, seed, b, count));
        }
    };
    if (shards == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        for (unsigned s = 0; s < shards; ++s) threads.emplace_back(work, s);
    }

    Moments total;
    for (const auto& m : per_shard) total.merge(m);

    const Integer count(static_cast<unsigned long>(total.count));
    const Integer sum = to_integer_u(total.sum);
    const Integer sum_sq = to_integer_u(total.sum_sq);
    MonteCarloStats out;
    out.sample_count = total.count;
    out.mean = Rational(sum, count).to_double();
    if (total.count > 1) out.variance = Rational(sum_sq * count - sum * sum, count * (count - 1)).to_double();
    return out;
}

double zscore(std::uint64_t observed, const VarianceResult& v) {
    require_positive_variance(v);
    const Rational diff = Rational(Integer(static_cast<unsigned long>(observed))) - v.expectation;
    return diff.to_double() / std::sqrt(v.variance.to_double());
}

double zscore(std::uint64_t observed, const Graph& g, const ExpectationTable& t) {
    return zscore(observed, compute_variance(g, t));
}

Rational chebyshev_pvalue_bound(std::uint64_t observed, const VarianceResult& v, Tail tail) {
    require_positive_variance(v);
    const Rational diff = Rational(Integer(static_cast<unsigned long>(observed))) - v.expectation;
    if (diff.is_zero()) return 1;
    const Rational d2 = diff * diff;
    switch (tail) {
    case Tail::two_sided: return std::min(Rational(1), v.variance / d2);
    case Tail::upper: return diff.sign() > 0 ? v.variance / (v.variance + d2) : Rational(1);
    case Tail::lower: return diff.sign() < 0 ? v.variance / (v.variance + d2) : Rational(1);
    }
    return 1;
}

Rational chebyshev_pvalue_bound(std::uint64_t observed, const Graph& g, const ExpectationTable& t, Tail tail) {
    return chebyshev_pvalue_bound(observed, compute_variance(g, t), tail);
}

} // namespace crossvar
