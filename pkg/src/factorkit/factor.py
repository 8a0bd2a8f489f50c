"""Exact factor existence.

The engine is a single reduction: degree-constrained factor problems
become perfect-matching problems on an expansion gadget, solved by the
blossom matcher.  For an f-factor, every original vertex v becomes
d(v) "port" vertices (one per incident edge) plus d(v) - f(v) "core"
vertices joined to all of v's ports; each original edge uv becomes one
"encoding" edge between a port of u and a port of v.  A perfect
matching must pair every unused port with a core, which forces exactly
f(v) encoding edges at v; pulling the matched encoding edges back gives
the factor.

Degree specs with values {1} or {0,2} use a variant block: a {0,2}
vertex keeps d - 2 plain cores plus a linked core pair c1-c2 (both
joined to all ports and to each other), which leaves exactly the even
local choices 0 and 2 feasible.

Construction note: for a fixed graph the gadget's ports and encoding
edges do not depend on f, so a maximal skeleton (cores for f = 0) is
built once per graph and cached; a particular f just marks f(v) cores
per vertex as excluded for the matcher.  The excluded-core instance is
the f-gadget verbatim, modulo vertex numbering.  Every operation here
also has a brute-force twin (2^|E| subset scan) used for cross-checks.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

from .errors import ScaleExceededError
from .generate import ONE, ZERO_TWO
from .graph import Factor, Graph, factor_degrees
from .matching import _csr_of, solve_csr
from .reduction import lift_degree_spec, triangle_lift

__all__ = [
    "TutteGadgetMap",
    "tutte_gadget",
    "has_perfect_matching",
    "has_f_factor",
    "has_f_factor_bruteforce",
    "has_gf_factor",
    "has_gf_factor_bruteforce",
    "has_H_factor",
    "has_H_factor_bruteforce",
    "has_H_factor_via_lift",
    "lift_factor",
    "project_factor",
]

_BRUTE_EDGE_CAP = 24
_TARGET_SPACE_CAP = 1 << 20


# ---------------------------------------------------------------------------
# gadget skeletons


class _Skeleton:
    """Cached per-graph gadget template in CSR form.

    Vertex layout, per original vertex v in index order: first the core
    ids (``core_start[v]``, ``core_count[v]`` of them), then the port
    ids, one per incident edge in sorted-edge order.  ``enc_pu[ei]`` and
    ``enc_pv[ei]`` are the two ports of encoding edge ei.  ``link`` maps
    a vertex to its linked core pair, or None (degree-spec skeletons
    only).
    """

    __slots__ = ("n_max", "adj_start", "adj_flat", "enc_pu", "enc_pv",
                 "edge_list", "degrees", "core_start", "core_count",
                 "port_ids", "link")

    def __init__(self, n_max, adj_start, adj_flat, enc_pu, enc_pv,
                 edge_list, degrees, core_start, core_count, port_ids, link):
        self.n_max = n_max
        self.adj_start = adj_start
        self.adj_flat = adj_flat
        self.enc_pu = enc_pu
        self.enc_pv = enc_pv
        self.edge_list = edge_list
        self.degrees = degrees
        self.core_start = core_start
        self.core_count = core_count
        self.port_ids = port_ids
        self.link = link


def _csr_from_lists(nbrs):
    n = len(nbrs)
    adj_start = np.zeros(n + 1, np.int32)
    for i, lst in enumerate(nbrs):
        lst.sort()
        adj_start[i + 1] = adj_start[i] + len(lst)
    adj_flat = np.empty(int(adj_start[n]), np.int32)
    k = 0
    for lst in nbrs:
        for x in lst:
            adj_flat[k] = x
            k += 1
    return adj_start, adj_flat


def _build_skeleton(g: Graph, linked_pairs: bool) -> _Skeleton:
    edges = sorted(g.edges)
    n = g.n
    deg = [0] * n
    inc = [[] for _ in range(n)]
    for ei, (u, v) in enumerate(edges):
        deg[u] += 1
        deg[v] += 1
        inc[u].append(ei)
        inc[v].append(ei)

    core_start = [0] * n
    core_count = [0] * n
    port_ids = [()] * n
    link = [None] * n
    port_of = {}
    cur = 0
    for v in range(n):
        d = deg[v]
        if linked_pairs:
            plains = d - 1 if d >= 2 else d  # d=1 keeps one plain, d=0 none
        else:
            plains = d
        core_start[v] = cur
        core_count[v] = plains
        cur += plains
        if linked_pairs and d >= 2:
            link[v] = (cur, cur + 1)
            cur += 2
        ports = []
        for ei in inc[v]:
            port_of[(v, ei)] = cur
            ports.append(cur)
            cur += 1
        port_ids[v] = tuple(ports)

    n_max = cur
    nbrs = [[] for _ in range(n_max)]
    enc_pu = np.empty(len(edges), np.int32)
    enc_pv = np.empty(len(edges), np.int32)
    for ei, (u, v) in enumerate(edges):
        pu = port_of[(u, ei)]
        pv = port_of[(v, ei)]
        enc_pu[ei] = pu
        enc_pv[ei] = pv
        nbrs[pu].append(pv)
        nbrs[pv].append(pu)
    for v in range(n):
        ports = list(port_ids[v])
        cores = list(range(core_start[v], core_start[v] + core_count[v]))
        if link[v] is not None:
            cores.extend(link[v])
            c1, c2 = link[v]
            nbrs[c1].append(c2)
            nbrs[c2].append(c1)
        for c in cores:
            nbrs[c].extend(ports)
        for p in ports:
            nbrs[p].extend(cores)

    adj_start, adj_flat = _csr_from_lists(nbrs)
    return _Skeleton(n_max, adj_start, adj_flat, enc_pu, enc_pv,
                     tuple(edges), tuple(deg), tuple(core_start),
                     tuple(core_count), tuple(port_ids), tuple(link))


@lru_cache(maxsize=512)
def _tutte_skeleton(g: Graph) -> _Skeleton:
    return _build_skeleton(g, linked_pairs=False)


@lru_cache(maxsize=512)
def _spec_skeleton(g: Graph) -> _Skeleton:
    return _build_skeleton(g, linked_pairs=True)


def _extract_factor(g: Graph, sk: _Skeleton, match) -> Factor:
    hits = np.nonzero(match[sk.enc_pu] == sk.enc_pv)[0]
    el = sk.edge_list
    return Factor._trusted(g, frozenset(el[int(i)] for i in hits))


# ---------------------------------------------------------------------------
# perfect matching and the f-factor family


def has_perfect_matching(g: Graph, engine=None):
    """A factor with every degree exactly 1, or None.  Exact."""
    n = g.n
    if n % 2 == 1:
        return None
    if n == 0:
        return Factor._trusted(g, frozenset())
    adj_start, adj_flat = _csr_of(g)
    match = np.full(n, -1, np.int32)
    excluded = np.zeros(n, np.uint8)
    r = solve_csr(n, adj_start, adj_flat, match, excluded, perfect_only=True,
                  engine=engine)
    if r < 0:
        return None
    chosen = frozenset((v, int(match[v])) for v in range(n) if v < match[v])
    return Factor._trusted(g, chosen)


class TutteGadgetMap:
    """An f-factor expansion gadget with its edge back-mapping.

    ``back_map`` sends each encoding edge of the gadget to the original
    edge it stands for; ``ports_of``/``cores_of`` give the block layout.
    """

    __slots__ = ("gadget", "back_map", "ports_of", "cores_of")

    def __init__(self, gadget: Graph, back_map: dict, ports_of: tuple,
                 cores_of: tuple):
        self.gadget = gadget
        self.back_map = back_map
        self.ports_of = ports_of
        self.cores_of = cores_of

    def __repr__(self):
        return (f"TutteGadgetMap(gadget_n={self.gadget.n}, "
                f"encoding_edges={len(self.back_map)})")


def tutte_gadget(g: Graph, f_fn) -> TutteGadgetMap:
    """Build the expansion gadget for (g, f).

    Requires 0 <= f(v) <= d(v) for every v; the gadget has
    sum(2 d(v) - f(v)) vertices and has a perfect matching iff g has an
    f-factor.
    """
    f = tuple(f_fn)
    if len(f) != g.n:
        raise ValueError(f"f has {len(f)} entries for {g.n} vertices")
    sk = _tutte_skeleton(g)
    for v in range(g.n):
        if not 0 <= f[v] <= sk.degrees[v]:
            raise ValueError(
                f"f({v}) = {f[v]} outside [0, {sk.degrees[v]}]; "
                "callers must pre-filter infeasible f")

    # keep the first d(v) - f(v) cores of each block, renumber contiguously
    keep = []
    for v in range(g.n):
        cs = sk.core_start[v]
        keep.extend(range(cs, cs + sk.degrees[v] - f[v]))
        keep.extend(sk.port_ids[v])
    keep.sort()
    renum = {old: new for new, old in enumerate(keep)}

    edges = set()
    back_map = {}
    for ei, (u, v) in enumerate(sk.edge_list):
        pu = renum[int(sk.enc_pu[ei])]
        pv = renum[int(sk.enc_pv[ei])]
        e = (pu, pv) if pu < pv else (pv, pu)
        edges.add(e)
        back_map[e] = (u, v)
    ports_of = []
    cores_of = []
    for v in range(g.n):
        cs = sk.core_start[v]
        cores = tuple(renum[c] for c in range(cs, cs + sk.degrees[v] - f[v]))
        ports = tuple(renum[p] for p in sk.port_ids[v])
        cores_of.append(cores)
        ports_of.append(ports)
        for c in cores:
            for p in ports:
                edges.add((c, p) if c < p else (p, c))
    gadget = Graph._trusted(len(keep), frozenset(edges))
    return TutteGadgetMap(gadget, back_map, tuple(ports_of), tuple(cores_of))


def has_f_factor(g: Graph, f_fn, engine=None):
    """A factor with d_F(v) = f(v) for every v, or None.

    Route: feasibility pre-checks (bounds and parity), then the
    expansion gadget and a perfect-matching run, then pull-back of the
    matched encoding edges.  Infeasible f yields None, never an error.
    """
    f = tuple(f_fn)
    if len(f) != g.n:
        raise ValueError(f"f has {len(f)} entries for {g.n} vertices")
    sk = _tutte_skeleton(g)
    deg = sk.degrees
    total = 0
    for v in range(g.n):
        fv = f[v]
        if fv < 0 or fv > deg[v]:
            return None
        total += fv
    if total % 2 == 1:
        return None
    n_max = sk.n_max
    excluded = np.zeros(n_max, np.uint8)
    for v in range(g.n):
        fv = f[v]
        if fv:
            hi = sk.core_start[v] + deg[v]
            excluded[hi - fv:hi] = 1
    match = np.full(n_max, -1, np.int32)
    r = solve_csr(n_max, sk.adj_start, sk.adj_flat, match, excluded,
                  perfect_only=True, engine=engine)
    if r < 0:
        return None
    return _extract_factor(g, sk, match)


def has_f_factor_bruteforce(g: Graph, f_fn):
    """Oracle twin of has_f_factor: exhaustive scan of all edge subsets
    in Gray-code order, maintaining degrees incrementally."""
    f = tuple(f_fn)
    if len(f) != g.n:
        raise ValueError(f"f has {len(f)} entries for {g.n} vertices")
    edges = sorted(g.edges)
    m = len(edges)
    if m > _BRUTE_EDGE_CAP:
        raise ScaleExceededError(f"brute force capped at {_BRUTE_EDGE_CAP} edges, got {m}")
    deg = [0] * g.n
    bad = sum(1 for v in range(g.n) if f[v] != 0)
    if bad == 0:
        return Factor._trusted(g, frozenset())
    chosen = bytearray(m)
    for i in range(1, 1 << m):
        e = (i & -i).bit_length() - 1
        u, v = edges[e]
        delta = -1 if chosen[e] else 1
        chosen[e] ^= 1
        for w in (u, v):
            if deg[w] == f[w]:
                bad += 1
            deg[w] += delta
            if deg[w] == f[w]:
                bad -= 1
        if bad == 0:
            return Factor._trusted(
                g, frozenset(edges[j] for j in range(m) if chosen[j]))
    return None


def has_gf_factor(g: Graph, g_fn, f_fn, engine=None):
    """A factor with g(v) <= d_F(v) <= f(v) for every v, or None.

    Iterates the degree targets of the box [g, f] (clamped to vertex
    degrees) in lexicographic order through has_f_factor; parity-odd
    targets are rejected by the f-factor pre-check.
    """
    glo = tuple(g_fn)
    fhi = tuple(f_fn)
    if len(glo) != g.n or len(fhi) != g.n:
        raise ValueError("g and f must assign a value to every vertex")
    sk = _tutte_skeleton(g)
    ranges = []
    size = 1
    for v in range(g.n):
        if glo[v] > fhi[v]:
            raise ValueError(f"need g <= f pointwise, got {glo[v]} > {fhi[v]} at {v}")
        lo = max(glo[v], 0)
        hi = min(fhi[v], sk.degrees[v])
        if lo > hi:
            return None
        ranges.append(range(lo, hi + 1))
        size *= hi - lo + 1
        if size > _TARGET_SPACE_CAP:
            raise ScaleExceededError("degree-target space larger than 2^20")
    for target in product(*ranges):
        found = has_f_factor(g, target, engine=engine)
        if found is not None:
            return found
    return None


def has_gf_factor_bruteforce(g: Graph, g_fn, f_fn):
    """Oracle twin of has_gf_factor: exhaustive edge-subset scan."""
    glo = tuple(g_fn)
    fhi = tuple(f_fn)
    if len(glo) != g.n or len(fhi) != g.n:
        raise ValueError("g and f must assign a value to every vertex")
    if any(a > b for a, b in zip(glo, fhi)):
        raise ValueError("need g <= f pointwise")
    edges = sorted(g.edges)
    m = len(edges)
    if m > _BRUTE_EDGE_CAP:
        raise ScaleExceededError(f"brute force capped at {_BRUTE_EDGE_CAP} edges, got {m}")
    deg = [0] * g.n

    def ok(v):
        return glo[v] <= deg[v] <= fhi[v]

    bad = sum(1 for v in range(g.n) if not ok(v))
    if bad == 0:
        return Factor._trusted(g, frozenset())
    chosen = bytearray(m)
    for i in range(1, 1 << m):
        e = (i & -i).bit_length() - 1
        u, v = edges[e]
        delta = -1 if chosen[e] else 1
        chosen[e] ^= 1
        for w in (u, v):
            if ok(w):
                bad += 1
            deg[w] += delta
            if ok(w):
                bad -= 1
        if bad == 0:
            return Factor._trusted(
                g, frozenset(edges[j] for j in range(m) if chosen[j]))
    return None


# ---------------------------------------------------------------------------
# {1} / {0,2} degree specs


def has_H_factor_bruteforce(g: Graph, spec):
    """A factor whose every degree lies in its spec set, by exhaustive
    edge-subset scan."""
    spec = tuple(spec)
    if len(spec) != g.n:
        raise ValueError(f"spec has {len(spec)} entries for {g.n} vertices")
    edges = sorted(g.edges)
    m = len(edges)
    if m > _BRUTE_EDGE_CAP:
        raise ScaleExceededError(f"brute force capped at {_BRUTE_EDGE_CAP} edges, got {m}")
    allowed = [frozenset({1}) if s is ONE else frozenset({0, 2}) for s in spec]
    deg = [0] * g.n
    bad = sum(1 for v in range(g.n) if 0 not in allowed[v])
    if bad == 0:
        return Factor._trusted(g, frozenset())
    chosen = bytearray(m)
    for i in range(1, 1 << m):
        e = (i & -i).bit_length() - 1
        u, v = edges[e]
        delta = -1 if chosen[e] else 1
        chosen[e] ^= 1
        for w in (u, v):
            if deg[w] in allowed[w]:
                bad += 1
            deg[w] += delta
            if deg[w] in allowed[w]:
                bad -= 1
        if bad == 0:
            return Factor._trusted(
                g, frozenset(edges[j] for j in range(m) if chosen[j]))
    return None


def has_H_factor(g: Graph, spec, engine=None):
    """A factor whose every degree lies in its spec set, via the direct
    expansion gadget (no triangle lift), or None."""
    spec = tuple(spec)
    if len(spec) != g.n:
        raise ValueError(f"spec has {len(spec)} entries for {g.n} vertices")
    sk = _spec_skeleton(g)
    deg = sk.degrees
    ones = 0
    for v in range(g.n):
        if spec[v] is ONE:
            if deg[v] == 0:
                return None
            ones += 1
        elif spec[v] is not ZERO_TWO:
            raise ValueError(f"not a spec value: {spec[v]!r}")
    if ones % 2 == 1:
        return None

    excluded = np.zeros(sk.n_max, np.uint8)
    for v in range(g.n):
        d = deg[v]
        cs = sk.core_start[v]
        plains = sk.core_count[v]
        if spec[v] is ONE:
            # keep d-1 plain cores, drop the linked pair
            drop = plains - (d - 1)
            if drop:
                excluded[cs + plains - drop:cs + plains] = 1
            if sk.link[v] is not None:
                c1, c2 = sk.link[v]
                excluded[c1] = 1
                excluded[c2] = 1
        else:
            # keep d-2 plain cores (d>=2) or all d of them (d<=1)
            want = d - 2 if d >= 2 else d
            drop = plains - want
            if drop:
                excluded[cs + plains - drop:cs + plains] = 1
    match = np.full(sk.n_max, -1, np.int32)
    r = solve_csr(sk.n_max, sk.adj_start, sk.adj_flat, match, excluded,
                  perfect_only=True, engine=engine)
    if r < 0:
        return None
    return _extract_factor(g, sk, match)


def has_H_factor_via_lift(g: Graph, spec, engine=None):
    """A spec factor found through the triangle lift: build G_L and the
    induced degree function h_H, solve that f-factor problem, and
    project the result back down."""
    lifted = triangle_lift(g)
    h = lift_degree_spec(lifted, spec)
    found = has_f_factor(lifted.lifted, h, engine=engine)
    if found is None:
        return None
    return project_factor(found)


# ---------------------------------------------------------------------------
# transport between a factor and its lift


def lift_factor(f: Factor, spec) -> Factor:
    """Lift a spec factor F of G to the triangle lift.

    Adds x_i y_i for every vertex of factor degree 1 or 2, and the pair
    x_i v_i, y_i v_i for every vertex of factor degree 0; the result is
    an h_H-factor of G_L (verified before returning).
    """
    spec = tuple(spec)
    g = f.host
    n = g.n
    if len(spec) != n:
        raise ValueError(f"spec has {len(spec)} entries for {n} vertices")
    degs = factor_degrees(f)
    for v in range(n):
        want = {1} if spec[v] is ONE else {0, 2}
        if degs[v] not in want:
            raise ValueError(
                f"not a factor for the given spec: degree {degs[v]} at vertex {v}")
    lifted = triangle_lift(g)
    extra = set()
    for i in range(n):
        if degs[i] in (1, 2):
            extra.add((n + i, 2 * n + i))
        else:
            extra.add((i, n + i))
            extra.add((i, 2 * n + i))
    out = Factor._trusted(lifted.lifted, f.chosen | extra)
    if factor_degrees(out) != lift_degree_spec(lifted, spec):
        raise RuntimeError("lifted factor failed its degree check")
    return out


@lru_cache(maxsize=512)
def _recognize_lift(host: Graph):
    """The base graph if ``host`` is structurally a triangle lift, else None."""
    if host.n % 3 != 0:
        return None
    n = host.n // 3
    base_edges = frozenset(e for e in host.edges if e[1] < n)
    expected = set(base_edges)
    for i in range(n):
        expected.add((i, n + i))
        expected.add((i, 2 * n + i))
        expected.add((n + i, 2 * n + i))
    if host.edges != frozenset(expected):
        return None
    return Graph._trusted(n, base_edges)


def project_factor(f_lifted: Factor) -> Factor:
    """Project an h_H-factor of a triangle lift down to the base: keep
    exactly the base edges.  The host must be structurally a lift, and
    the input must have lift-shaped degrees (1 on every x_i, y_i; 1 or 2
    on base vertices); the projection is verified to be a spec factor."""
    base = _recognize_lift(f_lifted.host)
    if base is None:
        raise ValueError("host is not a recognized lift")
    n = base.n
    degs = factor_degrees(f_lifted)
    for i in range(n):
        if degs[i] not in (1, 2):
            raise ValueError(
                f"not an h_H-factor: base vertex {i} has degree {degs[i]}")
        if degs[n + i] != 1 or degs[2 * n + i] != 1:
            raise ValueError(
                f"not an h_H-factor: lift vertices of {i} have degrees "
                f"{degs[n + i]}, {degs[2 * n + i]}")
    chosen = frozenset(e for e in f_lifted.chosen if e[1] < n)
    out = Factor._trusted(base, chosen)
    out_degs = factor_degrees(out)
    for i in range(n):
        want = (1,) if degs[i] == 1 else (0, 2)
        if out_degs[i] not in want:
            raise RuntimeError("projected factor failed its degree check")
    return out
