"""Gadget constructions for the reduction pipeline.

Three constructions: the pendant attachment G^x (one new degree-1 vertex
hanging off x), the triangle lift G_L (every vertex v_i gains a private
triangle through two new vertices x_i, y_i), and the induced degree
function h_H on a lift.  The end-to-end reduction maps a connected cubic
graph to an all-(g,f)-factors instance on its triangle lift with g = 1
everywhere and f = 2 on base vertices, 1 on the new ones.

Index convention (0-based, fixed for deterministic serialization):
x_i = n + i and y_i = 2n + i, for base vertex i in 0..n-1.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import HypothesisError
from .graph import Graph, components, popcount

__all__ = [
    "LiftedGraph",
    "ReductionInstance",
    "pendant_attach",
    "triangle_lift",
    "lift_degree_spec",
    "reduce_to_all_gf",
]


def pendant_attach(g: Graph, x: int) -> Graph:
    """G plus one new vertex (index n) joined to x by a single edge."""
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range")
    return Graph._trusted(g.n + 1, g.edges | {(x, g.n)})


class LiftedGraph:
    """A triangle lift together with its base and index maps."""

    __slots__ = ("base", "lifted")

    def __init__(self, base: Graph, lifted: Graph):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "lifted", lifted)

    def __setattr__(self, name, value):
        raise AttributeError("LiftedGraph is immutable")

    def x_of(self, i: int) -> int:
        if not 0 <= i < self.base.n:
            raise ValueError(f"base vertex {i} out of range")
        return self.base.n + i

    def y_of(self, i: int) -> int:
        if not 0 <= i < self.base.n:
            raise ValueError(f"base vertex {i} out of range")
        return 2 * self.base.n + i

    def __eq__(self, other):
        if not isinstance(other, LiftedGraph):
            return NotImplemented
        return self.base == other.base

    def __hash__(self):
        return hash(("lift", self.base))

    def __repr__(self):
        return f"LiftedGraph(base_n={self.base.n})"


@lru_cache(maxsize=256)
def triangle_lift(g: Graph) -> LiftedGraph:
    """The lift on 3n vertices: E(G) plus the triangle x_i y_i, y_i v_i,
    v_i x_i for every base vertex i."""
    n = g.n
    extra = set()
    for i in range(n):
        extra.add((i, n + i))
        extra.add((i, 2 * n + i))
        extra.add((n + i, 2 * n + i))
    lifted = Graph._trusted(3 * n, g.edges | extra)
    return LiftedGraph(g, lifted)


def lift_degree_spec(lifted: LiftedGraph, spec) -> tuple:
    """Degree function h_H on the lift: 2 on base vertices whose spec
    value is {0,2}, and 1 everywhere else (ONE vertices and all x_i, y_i)."""
    from .generate import ONE, ZERO_TWO  # local import, no cycle

    spec = tuple(spec)
    n = lifted.base.n
    if len(spec) != n:
        raise ValueError(f"spec has {len(spec)} entries for a base of {n} vertices")
    out = []
    for s in spec:
        if s is ONE:
            out.append(1)
        elif s is ZERO_TWO:
            out.append(2)
        else:
            raise ValueError(f"not a spec value: {s!r}")
    out.extend([1] * (2 * n))
    return tuple(out)


class ReductionInstance:
    """An all-(g,f)-factors instance produced by the reduction."""

    __slots__ = ("lifted", "g_fn", "f_fn")

    def __init__(self, lifted: LiftedGraph, g_fn, f_fn):
        object.__setattr__(self, "lifted", lifted)
        object.__setattr__(self, "g_fn", tuple(g_fn))
        object.__setattr__(self, "f_fn", tuple(f_fn))

    def __setattr__(self, name, value):
        raise AttributeError("ReductionInstance is immutable")

    def __repr__(self):
        return f"ReductionInstance(base_n={self.lifted.base.n})"


def reduce_to_all_gf(g: Graph) -> ReductionInstance:
    """Map a connected cubic graph to the instance (G_L, g = 1, f) with
    f = 2 on base vertices and 1 on the lift vertices."""
    if len(components(g)) != 1:
        raise HypothesisError("not connected")
    adj = g.adj
    for v in range(g.n):
        if popcount(adj[v]) != 3:
            raise HypothesisError("not cubic")
    lifted = triangle_lift(g)
    n = g.n
    g_fn = (1,) * (3 * n)
    f_fn = (2,) * n + (1,) * (2 * n)
    return ReductionInstance(lifted, g_fn, f_fn)
