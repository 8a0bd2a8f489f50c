"""Exact maximum-cardinality matching on general graphs.

The algorithm is the classical augmenting-path search with blossom
contraction, O(V^3): process each unmatched vertex as a root, grow an
alternating BFS forest, contract odd cycles to their base, and flip the
alternating path when an exposed vertex is reached.  Augmenting never
unmatches a vertex, so a root that fails to augment stays unmatched in
the final maximum matching; perfect-matching callers can therefore
abort on the first failed root.

Two interchangeable engines run the same algorithm: a numba-compiled
kernel (fast path) and the pure-Python transcription below (reference
and fallback).  They traverse vertices and neighbors in the same order,
so they produce identical match arrays; the test suite asserts this.
Set FACTORKIT_PURE=1 to force the Python engine.
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

from .graph import Graph

try:  # pragma: no cover - exercised implicitly by engine selection
    if os.environ.get("FACTORKIT_PURE") == "1":
        raise ImportError("pure-Python engine forced by FACTORKIT_PURE")
    from ._kernels import match_csr as _match_csr_fast
except ImportError:  # numba unavailable or disabled
    _match_csr_fast = None

__all__ = ["maximum_matching", "solve_csr", "match_csr_python", "default_engine"]


def default_engine() -> str:
    return "python" if _match_csr_fast is None else "numba"


def match_csr_python(n, adj_start, adj_flat, match, excluded, perfect_only):
    """Pure-Python twin of the compiled matching kernel.

    Same contract: CSR adjacency, match array in/out with preseeded pairs
    kept, excluded vertices treated as absent, returns matched pair count
    or -1 on early abort in perfect_only mode.
    """
    p = [-1] * n
    base = list(range(n))
    used = bytearray(n)
    blossom = bytearray(n)
    q = [0] * n

    for root in range(n):
        if match[root] >= 0 or excluded[root] == 1:
            continue
        g = -1
        for k in range(adj_start[root], adj_start[root + 1]):
            u = adj_flat[k]
            if match[u] < 0 and excluded[u] == 0:
                g = u
                break
        if g >= 0:
            match[root] = g
            match[g] = root
            continue

        for i in range(n):
            used[i] = 0
            p[i] = -1
            base[i] = i
        used[root] = 1
        q[0] = root
        qh = 0
        qt = 1
        found = False
        while qh < qt and not found:
            v = q[qh]
            qh += 1
            mv = match[v]
            for k in range(adj_start[v], adj_start[v + 1]):
                to = adj_flat[k]
                if excluded[to] == 1 or base[to] == base[v] or mv == to:
                    continue
                if to == root or (match[to] >= 0 and p[match[to]] >= 0):
                    seen = bytearray(n)
                    a = v
                    while True:
                        a = base[a]
                        seen[a] = 1
                        if match[a] < 0:
                            break
                        a = p[match[a]]
                    b = to
                    while True:
                        b = base[b]
                        if seen[b] == 1:
                            cur = b
                            break
                        b = p[match[b]]
                    for i in range(n):
                        blossom[i] = 0
                    x = v
                    child = to
                    while base[x] != cur:
                        blossom[base[x]] = 1
                        blossom[base[match[x]]] = 1
                        p[x] = child
                        child = match[x]
                        x = p[match[x]]
                    x = to
                    child = v
                    while base[x] != cur:
                        blossom[base[x]] = 1
                        blossom[base[match[x]]] = 1
                        p[x] = child
                        child = match[x]
                        x = p[match[x]]
                    for i in range(n):
                        if blossom[base[i]] == 1:
                            base[i] = cur
                            if used[i] == 0:
                                used[i] = 1
                                q[qt] = i
                                qt += 1
                elif p[to] < 0:
                    p[to] = v
                    if match[to] < 0:
                        t2 = to
                        while t2 >= 0:
                            pv = p[t2]
                            ppv = match[pv]
                            match[t2] = pv
                            match[pv] = t2
                            t2 = ppv
                        found = True
                        break
                    else:
                        w = match[to]
                        if used[w] == 0:
                            used[w] = 1
                            q[qt] = w
                            qt += 1
        if not found and perfect_only:
            return -1

    return sum(1 for i in range(n) if match[i] >= 0) // 2


def solve_csr(n, adj_start, adj_flat, match, excluded, perfect_only=False, engine=None):
    """Run the matching kernel on a CSR adjacency.  ``match`` (int32) and
    ``excluded`` (uint8) are numpy arrays; ``match`` is modified in place."""
    if engine is None:
        engine = default_engine()
    if engine == "numba":
        if _match_csr_fast is None:
            raise RuntimeError("numba engine requested but unavailable")
        return _match_csr_fast(n, adj_start, adj_flat, match, excluded,
                               1 if perfect_only else 0)
    if engine == "python":
        return match_csr_python(n, adj_start, adj_flat, match, excluded,
                                bool(perfect_only))
    raise ValueError(f"unknown engine {engine!r}")


@lru_cache(maxsize=1024)
def _csr_of(g: Graph):
    """CSR adjacency arrays of a graph, with neighbor lists sorted
    ascending so both engines see a deterministic traversal order."""
    n = g.n
    neighbors = [[] for _ in range(n)]
    for u, v in sorted(g.edges):
        neighbors[u].append(v)
        neighbors[v].append(u)
    adj_start = np.zeros(n + 1, np.int32)
    for i in range(n):
        neighbors[i].sort()
        adj_start[i + 1] = adj_start[i] + len(neighbors[i])
    adj_flat = np.empty(int(adj_start[n]), np.int32)
    k = 0
    for i in range(n):
        for x in neighbors[i]:
            adj_flat[k] = x
            k += 1
    return adj_start, adj_flat


def maximum_matching(g: Graph, engine=None) -> tuple:
    """Maximum-cardinality matching of a graph.

    Returns the match array as a tuple: entry v is v's partner, or -1 if
    v is unmatched.  Exact, deterministic for a fixed engine order.
    """
    n = g.n
    if n == 0:
        return ()
    adj_start, adj_flat = _csr_of(g)
    match = np.full(n, -1, np.int32)
    excluded = np.zeros(n, np.uint8)
    solve_csr(n, adj_start, adj_flat, match, excluded, perfect_only=False,
              engine=engine)
    return tuple(int(x) for x in match)
