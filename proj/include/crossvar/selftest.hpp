#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crossvar/census.hpp"
#include "crossvar/graph.hpp"

namespace crossvar {

struct CorpusEntry {
    std::string label;
    Graph graph;
};

struct CorpusOptions {
    std::size_t er_min_n = 10;
    std::size_t er_max_n = 20;
    std::vector<double> er_p{0.1, 0.2, 0.5};
    std::size_t er_seeds = 5;
    std::size_t complete_max_n = 7;
    std::size_t bipartite_min = 2;
    std::size_t bipartite_max = 4;
    std::size_t family_max_n = 12;   ///< paths, cycles, stars, quasi-stars, one-regular, random forests
    std::size_t tree_max_n = 9;      ///< all free trees
    std::uint64_t seed = 1;
};

/// Deterministic test corpus.
std::vector<CorpusEntry> build_corpus(const CorpusOptions& options = {});

struct Comparison {
    std::string graph;
    std::string check;
    bool passed = false;
    std::string detail;
};

enum class Fault { none, census_frequency, reuse_variance };

/// Three routes to the frequency vector; also Σf = q².
std::vector<Comparison> check_frequencies(const CorpusEntry& e, const OracleLimits& limits, Fault fault = Fault::none);
/// naive, subgraph, general, reuse, forest (on forests) and closed, all with the rla table.
std::vector<Comparison> check_variances(const CorpusEntry& e, const OracleLimits& limits, Fault fault = Fault::none);
/// Exhaustive mean = q/3 and variance = general.
std::vector<Comparison> check_exhaustive(const CorpusEntry& e);
/// Fast census against brute census and the alternative count identities.
std::vector<Comparison> check_identities(const CorpusEntry& e, const OracleLimits& limits);
/// |H| ≤ m + n(L3) − 3 n(C3).
Comparison check_hash_bound(const CorpusEntry& e);

struct SelftestOptions {
    CorpusOptions corpus;
    OracleLimits limits;
    std::size_t exhaustive_max_n = 8;
    std::size_t identity_max_n = 10;
    Fault fault = Fault::none;
};

struct SelftestReport {
    std::size_t graphs = 0;
    std::vector<Comparison> comparisons;

    bool passed() const;
    std::size_t failures() const;
};

SelftestReport run_selftest(const SelftestOptions& options = {});

} // namespace crossvar
