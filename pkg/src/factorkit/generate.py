"""Generation of small test universes.

Enumeration is labeled, not isomorphism-reduced: every property this
library verifies is isomorphism-invariant, so scanning all labelings is
sound and sidesteps canonical-form machinery.  Exhaustive streams yield
in ascending edge-bitmask order (bit i of the mask is the i-th pair in
lexicographic pair order), so failures are reproducible by index.

Universes beyond exhaustive reach (general graphs on 7..9 vertices) are
covered by a seeded sampler with a fixed, documented default seed.
"""

from __future__ import annotations

import enum
import random
from array import array
from functools import lru_cache
from itertools import combinations, product

from .errors import ScaleExceededError
from .graph import Graph, popcount

__all__ = [
    "DEFAULT_SEED",
    "ONE",
    "ZERO_TWO",
    "SpecValue",
    "allowed_degrees",
    "spec_from_mask",
    "spec_ones_mask",
    "edge_pairs",
    "connected_graphs",
    "connected_cubic_graphs",
    "degree_specs_even",
    "admissible_h",
]

DEFAULT_SEED = 1729


class SpecValue(enum.Enum):
    """Per-vertex value of a degree spec: required degree set {1} or {0,2}."""

    ONE = "one"
    ZERO_TWO = "zero_two"


ONE = SpecValue.ONE
ZERO_TWO = SpecValue.ZERO_TWO

_ALLOWED = {ONE: frozenset({1}), ZERO_TWO: frozenset({0, 2})}


def allowed_degrees(value: SpecValue) -> frozenset:
    return _ALLOWED[value]


def spec_from_mask(n: int, mask: int) -> tuple:
    """Spec whose ONE-vertices are the set bits of ``mask``."""
    return tuple(ONE if mask >> v & 1 else ZERO_TWO for v in range(n))


def spec_ones_mask(spec) -> int:
    m = 0
    for v, s in enumerate(spec):
        if s is ONE:
            m |= 1 << v
    return m


@lru_cache(maxsize=64)
def edge_pairs(n: int) -> tuple:
    """All vertex pairs of an n-vertex graph in lexicographic order; the
    index of a pair in this tuple is its bit position in edge bitmasks."""
    return tuple(combinations(range(n), 2))


def _mask_to_graph(n: int, mask: int, pairs) -> Graph:
    edges = []
    m = mask
    while m:
        b = m & -m
        edges.append(pairs[b.bit_length() - 1])
        m ^= b
    return Graph._trusted(n, frozenset(edges))


def _mask_is_connected(n: int, mask: int, pairs) -> bool:
    if n <= 1:
        return True
    adj = [0] * n
    m = mask
    while m:
        b = m & -m
        u, v = pairs[b.bit_length() - 1]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        m ^= b
    comp = 1
    frontier = 1
    full = (1 << n) - 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= adj[b.bit_length() - 1]
            f ^= b
        frontier = nxt & ~comp
        comp |= frontier
    return comp == full


def connected_graphs(n: int, samples: int | None = None, seed: int = DEFAULT_SEED):
    """Labeled simple connected graphs on n vertices.

    Exhaustive for n <= 6: every such graph exactly once, ascending by
    edge bitmask.  For larger n an explicit ``samples`` count switches to
    seeded sampling: distinct connected graphs drawn from mixed-density
    random edge sets, deterministic for a fixed seed.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    pairs = edge_pairs(n)
    if samples is None:
        if n > 6:
            raise ScaleExceededError(
                f"exhaustive connected-graph enumeration capped at n=6, got {n}; "
                "pass an explicit sample count for larger n")
        for mask in range(1 << len(pairs)):
            if _mask_is_connected(n, mask, pairs):
                yield _mask_to_graph(n, mask, pairs)
        return
    if n > 24:
        raise ScaleExceededError(f"sampling capped at n=24, got {n}")
    if samples < 0:
        raise ValueError("sample count must be nonnegative")
    rng = random.Random(seed)
    seen = set()
    yielded = 0
    attempts = 0
    limit = max(10_000, 200 * samples)
    while yielded < samples:
        attempts += 1
        if attempts > limit:
            raise ScaleExceededError(
                f"sampler exhausted {limit} attempts after {yielded} distinct graphs")
        density = rng.uniform(0.15, 0.95)
        mask = 0
        for i in range(len(pairs)):
            if rng.random() < density:
                mask |= 1 << i
        if mask in seen or not _mask_is_connected(n, mask, pairs):
            continue
        seen.add(mask)
        yielded += 1
        yield _mask_to_graph(n, mask, pairs)


def _cubic_masks(n: int, pairs) -> array:
    """Edge bitmasks of all labeled connected cubic graphs on n vertices,
    by backtracking: repeatedly complete the smallest unfinished vertex by
    joining it to higher-indexed vertices that still have free degree."""
    index_of = {p: i for i, p in enumerate(pairs)}
    deg = [0] * n
    adj = [0] * n
    out = array("q")

    def finish(u: int, mask: int):
        while u < n and deg[u] == 3:
            u += 1
        if u == n:
            if _mask_is_connected(n, mask, pairs):
                out.append(mask)
            return
        need = 3 - deg[u]
        candidates = [w for w in range(u + 1, n)
                      if deg[w] < 3 and not (adj[u] >> w & 1)]
        if len(candidates) < need:
            return
        for combo in combinations(candidates, need):
            bits = 0
            for w in combo:
                deg[u] += 1
                deg[w] += 1
                adj[u] |= 1 << w
                adj[w] |= 1 << u
                bits |= 1 << index_of[(u, w)]
            finish(u + 1, mask | bits)
            for w in combo:
                deg[u] -= 1
                deg[w] -= 1
                adj[u] &= ~(1 << w)
                adj[w] &= ~(1 << u)

    finish(0, 0)
    return out


def connected_cubic_graphs(n: int):
    """Labeled simple connected 3-regular graphs on n vertices, ascending
    by edge bitmask.  Exists only for even n >= 4; capped at n = 10."""
    if n % 2 == 1 or n < 4:
        raise ValueError(f"no cubic graph exists on {n} vertices")
    if n > 10:
        raise ScaleExceededError(f"cubic enumeration capped at n=10, got {n}")
    pairs = edge_pairs(n)
    masks = _cubic_masks(n, pairs)
    for mask in sorted(masks):
        yield _mask_to_graph(n, mask, pairs)


def degree_specs_even(g: Graph):
    """All degree specs of g with an even number of ONE vertices,
    ascending by ONE-set bitmask."""
    n = g.n
    if n > 20:
        raise ScaleExceededError(f"spec enumeration capped at n=20, got {n}")
    for mask in range(1 << n):
        if popcount(mask) % 2 == 0:
            yield spec_from_mask(n, mask)


def admissible_h(g_fn, f_fn):
    """Every integer h with g <= h <= f pointwise and even total sum, in
    lexicographic order.  Empty only when g = f with odd total."""
    g_fn = tuple(g_fn)
    f_fn = tuple(f_fn)
    if len(g_fn) != len(f_fn):
        raise ValueError("g and f must have the same length")
    size = 1
    for lo, hi in zip(g_fn, f_fn):
        if lo < 0:
            raise ValueError("degree bounds must be nonnegative")
        if lo > hi:
            raise ValueError(f"need g <= f pointwise, got {lo} > {hi}")
        size *= hi - lo + 1
        if size > 1 << 20:
            raise ScaleExceededError("admissible-h space larger than 2^20")
    for h in product(*(range(lo, hi + 1) for lo, hi in zip(g_fn, f_fn))):
        if sum(h) % 2 == 0:
            yield h
