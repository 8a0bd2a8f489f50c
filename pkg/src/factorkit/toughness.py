"""Exact toughness and the one-tough / almost-one-tough predicates.

Everything here is an exhaustive scan over vertex subsets S, comparing
|S| against the component count of G - S.  Values are exact rationals
(Fraction); INFINITE is the verdict when no subset disconnects the
graph, which happens exactly for complete graphs and for n <= 1.
Witness cuts are deterministic: smallest cut first, ties broken by
lexicographic bitmask.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ScaleExceededError
from .graph import Graph, components, popcount, vertices_of

__all__ = [
    "INFINITE",
    "ToughnessResult",
    "toughness",
    "is_one_tough",
    "is_almost_one_tough",
    "toughness_json",
]

_SCAN_CAP = 20


class _Infinite:
    """Order-maximal sentinel; compares above every Fraction."""

    __slots__ = ()

    def __repr__(self):
        return "INFINITE"

    def __eq__(self, other):
        return isinstance(other, _Infinite)

    def __hash__(self):
        return hash("toughness-infinite")

    def __gt__(self, other):
        return not isinstance(other, _Infinite)

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, _Infinite)


INFINITE = _Infinite()


class ToughnessResult:
    """value: Fraction or INFINITE; witness_cut: sorted vertex tuple or None.

    When finite, removing witness_cut leaves at least two components and
    value = |witness_cut| / omega(G - witness_cut).
    """

    __slots__ = ("value", "witness_cut")

    def __init__(self, value, witness_cut):
        self.value = value
        self.witness_cut = witness_cut

    def __eq__(self, other):
        if not isinstance(other, ToughnessResult):
            return NotImplemented
        return self.value == other.value and self.witness_cut == other.witness_cut

    def __repr__(self):
        return f"ToughnessResult(value={self.value!r}, witness_cut={self.witness_cut!r})"


def _check_scale(g: Graph):
    if g.n > _SCAN_CAP:
        raise ScaleExceededError(
            f"subset scans capped at {_SCAN_CAP} vertices, got {g.n}")


def toughness(g: Graph) -> ToughnessResult:
    """min |S| / omega(G-S) over all S leaving at least two components.

    INFINITE when no subset disconnects (complete graphs, n <= 1).
    """
    _check_scale(g)
    best = None
    best_key = None
    for s in range(1 << g.n):
        w = len(components(g, removed=s))
        if w < 2:
            continue
        k = popcount(s)
        val = Fraction(k, w)
        key = (val, k, s)
        if best_key is None or key < best_key:
            best_key = key
            best = s
    if best is None:
        return ToughnessResult(INFINITE, None)
    return ToughnessResult(best_key[0], vertices_of(best))


def is_one_tough(g: Graph):
    """(True, None) iff |S| >= omega(G-S) whenever omega(G-S) > 1;
    otherwise (False, violating cut)."""
    _check_scale(g)
    worst = None
    worst_key = None
    for s in range(1 << g.n):
        w = len(components(g, removed=s))
        if w < 2:
            continue
        k = popcount(s)
        if k < w:
            key = (k, s)
            if worst_key is None or key < worst_key:
                worst_key = key
                worst = s
    if worst is None:
        return True, None
    return False, vertices_of(worst)


def is_almost_one_tough(g: Graph):
    """(True, None) iff omega(G-S) <= |S| + 1 for every S including the
    empty set; otherwise (False, violating cut).

    The S = emptyset case makes disconnected graphs fail immediately.
    """
    _check_scale(g)
    worst = None
    worst_key = None
    for s in range(1 << g.n):
        w = len(components(g, removed=s))
        k = popcount(s)
        if w > k + 1:
            key = (k, s)
            if worst_key is None or key < worst_key:
                worst_key = key
                worst = s
    if worst is None:
        return True, None
    return False, vertices_of(worst)


def toughness_json(result: ToughnessResult) -> dict:
    """The pinned JSON shape for a toughness verdict."""
    if result.value == INFINITE:
        value = "infinite"
    else:
        value = {"num": result.value.numerator, "den": result.value.denominator}
    cut = None if result.witness_cut is None else list(result.witness_cut)
    return {"toughness": value, "cut": cut}
