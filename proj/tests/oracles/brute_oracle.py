"""Independent brute-force oracle used to freeze expected values in the C++ tests.

Everything here is computed from definitions only: Q-sums by enumerating pairs
of vertex-disjoint edges, subgraph counts by enumerating edge subsets and
checking isomorphism with networkx, and the variance of C by enumerating every
linear arrangement.
"""
import itertools
import json
import sys
from fractions import Fraction

import networkx as nx


def independent_pairs(edges):
    return [(e1, e2) for e1, e2 in itertools.combinations(edges, 2) if not set(e1) & set(e2)]


def q_sums(n, edges):
    adj = {(u, v) for u, v in edges} | {(v, u) for u, v in edges}
    a = lambda x, y: 1 if (x, y) in adj else 0
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    k = deg
    Q = independent_pairs(edges)
    out = dict(q=len(Q), K=0, phi1=0, phi2=0, lambda1=0, lambda2=0)
    for (s, t), (u, v) in Q:
        out["K"] += k[s] + k[t] + k[u] + k[v]
        out["phi1"] += k[s] * k[t] + k[u] * k[v]
        out["phi2"] += (k[s] + k[t]) * (k[u] + k[v])
        out["lambda1"] += (a(s, u) * (k[t] + k[v]) + a(s, v) * (k[t] + k[u])
                           + a(t, u) * (k[s] + k[v]) + a(t, v) * (k[s] + k[u]))
        out["lambda2"] += (a(s, u) + a(s, v) + a(t, u) + a(t, v)) * (k[s] + k[t] + k[u] + k[v])
    return out


PATTERNS = {
    "nP4": nx.path_graph(4),
    "nP5": nx.path_graph(5),
    "nC3": nx.cycle_graph(3),
    "nC4": nx.cycle_graph(4),
    "nPaw": nx.Graph([(0, 1), (1, 2), (2, 0), (2, 3)]),
    "nC3L2": nx.Graph([(0, 1), (1, 2), (2, 0), (3, 4)]),
}


def subgraph_counts(edges):
    out = {}
    for name, pat in PATTERNS.items():
        cnt = 0
        for sub in itertools.combinations(edges, pat.number_of_edges()):
            if nx.is_isomorphic(nx.Graph(list(sub)), pat):
                cnt += 1
        out[name] = cnt
    return out


def crossings(edges, pos):
    c = 0
    for (s, t), (u, v) in independent_pairs(edges):
        a, b = sorted((pos[s], pos[t]))
        inside = (a < pos[u] < b) + (a < pos[v] < b)
        c += inside == 1
    return c


def exhaustive(n, edges):
    tot = Fraction(0)
    tot2 = Fraction(0)
    cnt = 0
    for perm in itertools.permutations(range(n)):
        pos = {v: i for i, v in enumerate(perm)}
        c = crossings(edges, pos)
        tot += c
        tot2 += c * c
        cnt += 1
    mean = tot / cnt
    return mean, tot2 / cnt - mean * mean


GRAPHS = {
    "two_edges": (4, [(0, 1), (2, 3)]),
    "C4": (4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    "K4": (4, list(itertools.combinations(range(4), 2))),
    "P4": (4, [(0, 1), (1, 2), (2, 3)]),
    "P5": (5, [(0, 1), (1, 2), (2, 3), (3, 4)]),
    "C5": (5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
    "S5": (6, [(0, i) for i in range(1, 6)]),
    "paw": (4, [(0, 1), (1, 2), (2, 0), (2, 3)]),
    "K5": (5, list(itertools.combinations(range(5), 2))),
    "C3L2": (5, [(0, 1), (1, 2), (2, 0), (3, 4)]),
    "K23": (5, [(a, b) for a in range(2) for b in range(2, 5)]),
    "mixed7": (7, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6), (1, 6)]),
}

if __name__ == "__main__":
    names = sys.argv[1:] or list(GRAPHS)
    for name in names:
        n, edges = GRAPHS[name]
        rec = dict(name=name)
        rec.update(q_sums(n, edges))
        rec.update(subgraph_counts(edges))
        if n <= 8:
            mean, var = exhaustive(n, edges)
            rec["mean"] = str(mean)
            rec["variance"] = str(var)
        print(json.dumps(rec))
