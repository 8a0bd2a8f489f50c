"""Core graph representation and counting primitives.

Graphs are labeled, simple, and undirected: a vertex count ``n`` (vertices
are the indices ``0..n-1``) plus a set of unordered index pairs.  Values are
immutable after construction, so they can be hashed, shared across threads,
and used as cache keys.

Vertex sets are plain Python ints used as bitmasks (bit ``v`` set means
vertex ``v`` is a member).  At the scales this library accepts (n <= 24 for
anything that enumerates subsets) a mask fits comfortably in a machine word
and makes component counting and boundary counting cheap.
"""

from __future__ import annotations

from .errors import FormatError

__all__ = [
    "Graph",
    "Factor",
    "popcount",
    "mask_of",
    "vertices_of",
    "components",
    "degree",
    "degree_sum",
    "edge_boundary",
    "factor_degrees",
    "parse_edge_list",
    "format_edge_list",
    "format_factor",
]


def popcount(x: int) -> int:
    """Number of set bits; shim for builds without int.bit_count."""
    return bin(x).count("1")


if hasattr(int, "bit_count"):  # 3.11+, and backported builds
    popcount = int.bit_count


def mask_of(vertices) -> int:
    """Bitmask of an iterable of vertex indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple:
    """Sorted tuple of the vertex indices in a bitmask."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def _normalize_edge(e):
    u, v = e
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable labeled simple graph.

    ``edges`` is a frozenset of ``(u, v)`` tuples with ``u < v``.  The
    adjacency bitmasks are computed once on first use and cached.
    """

    __slots__ = ("n", "edges", "_adj", "_hash")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for e in edges:
            e = _normalize_edge(e)
            u, v = e
            if not (0 <= u and v < n):
                raise ValueError(f"edge {e} out of range for n={n}")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(seen))
        object.__setattr__(self, "_adj", None)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, n: int, edges: frozenset) -> "Graph":
        """Construct without validation; ``edges`` must already be a
        frozenset of in-range ``(u, v)`` tuples with ``u < v``."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "edges", edges)
        object.__setattr__(g, "_adj", None)
        object.__setattr__(g, "_hash", None)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def adj(self) -> tuple:
        """Tuple of adjacency bitmasks, one per vertex."""
        a = self._adj
        if a is None:
            masks = [0] * self.n
            for u, v in self.edges:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            a = tuple(masks)
            object.__setattr__(self, "_adj", a)
        return a

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.n, self.edges))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"

    def __reduce__(self):
        return (_rebuild_graph, (self.n, tuple(self.sorted_edges())))


def _rebuild_graph(n, edge_tuple):
    return Graph._trusted(n, frozenset(edge_tuple))


class Factor:
    """A spanning subgraph of a host graph, identified by its edge set."""

    __slots__ = ("host", "chosen")

    def __init__(self, host: Graph, chosen=()):
        chosen = frozenset(_normalize_edge(e) for e in chosen)
        if not chosen <= host.edges:
            bad = sorted(chosen - host.edges)
            raise ValueError(f"factor edges not in host: {bad}")
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "chosen", chosen)

    @classmethod
    def _trusted(cls, host: Graph, chosen: frozenset) -> "Factor":
        f = object.__new__(cls)
        object.__setattr__(f, "host", host)
        object.__setattr__(f, "chosen", chosen)
        return f

    def __setattr__(self, name, value):
        raise AttributeError("Factor is immutable")

    def __eq__(self, other):
        if not isinstance(other, Factor):
            return NotImplemented
        return self.host == other.host and self.chosen == other.chosen

    def __hash__(self):
        return hash((self.host, self.chosen))

    def __repr__(self):
        return f"Factor(host_n={self.host.n}, chosen={sorted(self.chosen)})"

    def __reduce__(self):
        return (_rebuild_factor, (self.host, tuple(sorted(self.chosen))))


def _rebuild_factor(host, chosen):
    return Factor._trusted(host, frozenset(chosen))


def _check_subset(g: Graph, mask: int, name: str):
    if mask < 0 or mask >> g.n:
        raise ValueError(f"{name} is not a subset of the graph's vertices")


def components(g: Graph, removed: int = 0) -> list:
    """Connected components of ``g - removed`` as vertex bitmasks.

    The list covers exactly the surviving vertices, each exactly once,
    ordered by smallest member.  ``len(components(g, s))`` is the
    component count omega(G - S).
    """
    _check_subset(g, removed, "removed")
    adj = g.adj
    remaining = ((1 << g.n) - 1) & ~removed
    comps = []
    while remaining:
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                nxt |= adj[b.bit_length() - 1]
                m ^= b
            frontier = nxt & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def degree(g: Graph, v: int, removed: int = 0) -> int:
    """Number of edges from ``v`` into the surviving vertices."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    _check_subset(g, removed, "removed")
    if removed >> v & 1:
        raise ValueError(f"vertex {v} is in the removed set")
    return popcount(g.adj[v] & ~removed)


def degree_sum(g: Graph, s: int, removed: int = 0) -> int:
    """Sum of degrees of the vertices of ``s`` in ``g - removed``.

    An edge with both endpoints in ``s`` is counted from both ends, the
    usual convention for the degree term in factor criteria.
    """
    _check_subset(g, s, "s")
    _check_subset(g, removed, "removed")
    if s & removed:
        raise ValueError("s and removed must be disjoint")
    adj = g.adj
    keep = ~removed
    total = 0
    m = s
    while m:
        b = m & -m
        total += popcount(adj[b.bit_length() - 1] & keep)
        m ^= b
    return total


def edge_boundary(g: Graph, a: int, b: int) -> int:
    """Number of edges with one endpoint in ``a`` and the other in ``b``."""
    _check_subset(g, a, "a")
    _check_subset(g, b, "b")
    if a & b:
        raise ValueError("sets must be disjoint")
    adj = g.adj
    total = 0
    m = a
    while m:
        bit = m & -m
        total += popcount(adj[bit.bit_length() - 1] & b)
        m ^= bit
    return total


def factor_degrees(f: Factor) -> tuple:
    """Degree of every host vertex in the spanning subgraph."""
    degs = [0] * f.host.n
    for u, v in f.chosen:
        degs[u] += 1
        degs[v] += 1
    return tuple(degs)


_DECIMAL = frozenset("0123456789")


def _parse_count(token: str, what: str) -> int:
    if not token or set(token) - _DECIMAL:
        raise FormatError(f"{what}: not a decimal integer: {token!r}")
    if len(token) > 1 and token[0] == "0":
        raise FormatError(f"{what}: leading zero: {token!r}")
    return int(token)


def _parse_pair_line(line: str, what: str):
    parts = line.split(" ")
    if len(parts) != 2 or "" in parts:
        raise FormatError(f"{what}: expected two space-separated integers: {line!r}")
    return _parse_count(parts[0], what), _parse_count(parts[1], what)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    Line 1 is ``n m``; the next ``m`` lines are ``u v`` with
    ``0 <= u < v < n``.  Single spaces, LF line endings, no duplicates,
    nothing else.  Violations raise FormatError.
    """
    if "\r" in text:
        raise FormatError("CR line endings are not accepted")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty input")
    n, m = _parse_pair_line(lines[0], "header")
    if len(lines) - 1 != m:
        raise FormatError(f"header declares {m} edges, found {len(lines) - 1} edge lines")
    edges = set()
    for line in lines[1:]:
        u, v = _parse_pair_line(line, "edge line")
        if not u < v:
            raise FormatError(f"edge line must satisfy u < v: {line!r}")
        if v >= n:
            raise FormatError(f"edge {u} {v} out of range for n={n}")
        if (u, v) in edges:
            raise FormatError(f"duplicate edge {u} {v}")
        edges.add((u, v))
    return Graph._trusted(n, frozenset(edges))


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def format_factor(f: Factor) -> str:
    """Serialize a factor as an edge list; the header carries the host's
    vertex count, so the text is the spanning subgraph in graph format."""
    lines = [f"{f.host.n} {len(f.chosen)}"]
    lines.extend(f"{u} {v}" for u, v in sorted(f.chosen))
    return "\n".join(lines) + "\n"
