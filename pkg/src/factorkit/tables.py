"""Whole-graph achievability tables by exhaustive edge-subset scan.

Both tables walk all 2^m edge subsets of a graph once, in Gray-code
order, so each step toggles one edge and updates degrees in O(1).  The
spec table records which {1}/{0,2} degree patterns some subset realizes
(indexed by the bitmask of degree-1 vertices); the degree table records
every realized degree vector (mixed-radix encoded).  One scan then
answers all 2^n spec queries, or all degree-target queries, for the
graph; this is the brute-force oracle, just amortized.

The numba kernels carry the scans at native speed; the twins here are
line-for-line Python transcriptions used when numba is unavailable or
FACTORKIT_PURE=1 is set.  Tests assert byte equality between engines.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import ScaleExceededError
from .graph import Graph
from .matching import default_engine

try:
    if os.environ.get("FACTORKIT_PURE") == "1":
        raise ImportError("pure-Python engine forced by FACTORKIT_PURE")
    from ._kernels import achievable_degree_table as _degree_fast
    from ._kernels import achievable_spec_table as _spec_fast
except ImportError:
    _spec_fast = None
    _degree_fast = None

__all__ = ["spec_table", "degree_table", "decode_degree_vector"]

_EDGE_CAP = 26


def _edge_arrays(g: Graph):
    edges = sorted(g.edges)
    eu = np.empty(len(edges), np.int32)
    ev = np.empty(len(edges), np.int32)
    for i, (u, v) in enumerate(edges):
        eu[i] = u
        ev[i] = v
    return eu, ev


def _spec_table_python(n, eu, ev):
    m = len(eu)
    table = bytearray(1 << n)
    deg = [0] * n
    chosen = bytearray(m)
    ones_mask = 0
    over = 0
    table[0] = 1
    for i in range(1, 1 << m):
        e = (i & -i).bit_length() - 1
        for w in (int(eu[e]), int(ev[e])):
            if chosen[e] == 0:
                d = deg[w]
                deg[w] = d + 1
                if d == 0:
                    ones_mask |= 1 << w
                elif d == 1:
                    ones_mask &= ~(1 << w)
                elif d == 2:
                    over += 1
            else:
                d = deg[w]
                deg[w] = d - 1
                if d == 1:
                    ones_mask &= ~(1 << w)
                elif d == 2:
                    ones_mask |= 1 << w
                elif d == 3:
                    over -= 1
        chosen[e] ^= 1
        if over == 0:
            table[ones_mask] = 1
    return np.frombuffer(bytes(table), np.uint8)


def _degree_table_python(n, eu, ev, strides, size):
    m = len(eu)
    table = bytearray(size)
    chosen = bytearray(m)
    idx = 0
    table[0] = 1
    for i in range(1, 1 << m):
        e = (i & -i).bit_length() - 1
        step = int(strides[eu[e]]) + int(strides[ev[e]])
        if chosen[e] == 0:
            chosen[e] = 1
            idx += step
        else:
            chosen[e] = 0
            idx -= step
        table[idx] = 1
    return np.frombuffer(bytes(table), np.uint8)


def _check_edges(g: Graph):
    m = len(g.edges)
    if m > _EDGE_CAP:
        raise ScaleExceededError(
            f"subset table scans capped at {_EDGE_CAP} edges, got {m}")
    return m


def spec_table(g: Graph, engine=None) -> np.ndarray:
    """uint8[2^n]: entry s is 1 iff the spec with ONE exactly on the set
    bits of s admits an H-factor (by the full edge-subset scan)."""
    _check_edges(g)
    eu, ev = _edge_arrays(g)
    eng = engine or default_engine()
    if eng == "numba" and _spec_fast is not None:
        return _spec_fast(g.n, eu, ev)
    return _spec_table_python(g.n, eu, ev)


def degree_table(g: Graph, engine=None):
    """(table, strides): table[c] is 1 iff some edge subset realizes the
    degree vector mixed-radix encoded by c with the returned strides
    (radix deg(v)+1 per vertex, vertex 0 fastest)."""
    _check_edges(g)
    eu, ev = _edge_arrays(g)
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    strides = np.empty(g.n, np.int64)
    size = 1
    for v in range(g.n):
        strides[v] = size
        size *= deg[v] + 1
    if size > 1 << 26:
        raise ScaleExceededError("degree-vector space larger than 2^26")
    eng = engine or default_engine()
    if eng == "numba" and _degree_fast is not None:
        table = _degree_fast(g.n, eu, ev, strides, size)
    else:
        table = _degree_table_python(g.n, eu, ev, strides, size)
    return table, strides


def decode_degree_vector(code: int, strides, n: int) -> tuple:
    """Inverse of the mixed-radix encoding used by degree_table."""
    out = []
    rem = code
    for v in range(n - 1, -1, -1):
        q, rem = divmod(rem, int(strides[v]))
        out.append(q)
    out.reverse()
    return tuple(out)
