"""Shared graph builders for the test suite."""

import itertools

from factorkit import Graph


def complete(n):
    return Graph(n, itertools.combinations(range(n), 2))


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    assert n >= 3
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves):
    # vertex 0 is the center
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a, b):
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def two_disjoint_edges():
    return Graph(4, [(0, 1), (2, 3)])


def factor_degree_list(factor):
    degs = [0] * factor.host.n
    for u, v in factor.chosen:
        degs[u] += 1
        degs[v] += 1
    return degs
