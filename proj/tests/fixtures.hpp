#pragma once

#include <string>
#include <vector>

#include "crossvar/census.hpp"
#include "crossvar/graph.hpp"

namespace fixtures {

using crossvar::edge;
using crossvar::Graph;

inline Graph make(std::size_t n, std::vector<edge> edges) { return Graph::from_edges(n, edges); }

inline Graph complete(std::size_t n) {
    std::vector<edge> e;
    for (crossvar::vertex i = 0; i < n; ++i)
        for (crossvar::vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return make(n, e);
}

// Values frozen from tests/oracles/brute_oracle.py.
struct Expected {
    std::string name;
    Graph graph;
    long q, K, phi1, phi2, lambda1, lambda2, nP4, nP5, nC3, nC4, nPaw, nC3L2;
    std::string mean, variance;
};

inline std::vector<Expected> oracle_graphs() {
    return {
        {"two_edges", make(4, {{0, 1}, {2, 3}}), 1, 4, 2, 4, 0, 0, 0, 0, 0, 0, 0, 0, "1/3", "2/9"},
        {"C4", make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 2, 16, 16, 32, 16, 32, 4, 0, 0, 1, 0, 0, "2/3", "2/9"},
        {"K4", complete(4), 3, 36, 54, 108, 72, 144, 12, 0, 4, 3, 12, 0, "1", "0"},
        {"P4", make(4, {{0, 1}, {1, 2}, {2, 3}}), 1, 6, 4, 9, 2, 6, 1, 0, 0, 0, 0, 0, "1/3", "2/9"},
        {"P5", make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}), 3, 20, 16, 33, 6, 14, 2, 1, 0, 0, 0, 0, "1", "5/6"},
        {"C5", make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}), 5, 40, 40, 80, 20, 40, 5, 5, 0, 0, 0, 0, "5/3",
         "25/18"},
        {"S5", make(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}), 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, "0", "0"},
        {"paw", make(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}), 1, 8, 7, 16, 6, 16, 2, 0, 1, 0, 1, 0, "1/3", "2/9"},
        {"K5", complete(5), 15, 240, 480, 960, 480, 960, 60, 60, 10, 15, 60, 10, "5", "0"},
        {"C3L2", make(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}}), 3, 18, 15, 24, 0, 0, 0, 0, 1, 0, 0, 1, "1", "1"},
        {"K23", make(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}), 6, 60, 72, 150, 60, 120, 12, 6, 0, 3, 0, 0,
         "2", "1"},
        {"mixed7", make(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}, {5, 6}, {1, 6}}), 21, 222, 288, 586,
         92, 192, 18, 24, 2, 0, 4, 8, "7", "454/45"},
    };
}

} // namespace fixtures
