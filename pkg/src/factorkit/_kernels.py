"""Numba-compiled inner loops.

Importing this module requires numba; callers guard the import and fall
back to the pure-Python twins (same logic, same results, slower).  Each
kernel is a straight transcription of its Python counterpart, kept free
of Python objects so numba can compile it.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def match_csr(n, adj_start, adj_flat, match, excluded, perfect_only):
    """Maximum-cardinality matching, augmenting-path search with blossom
    contraction (O(V^3) overall).

    Adjacency is CSR: neighbors of v are adj_flat[adj_start[v]:adj_start[v+1]].
    ``match`` is int32 in/out (-1 means unmatched); preseeded pairs are kept.
    Vertices with ``excluded[v] == 1`` are treated as absent; they must
    enter unmatched and never get matched.

    Returns the number of matched pairs, or -1 immediately when
    ``perfect_only`` is nonzero and some live vertex cannot be augmented
    (augmenting never unmatches a vertex, so the graph has no perfect
    matching in that case).
    """
    p = np.empty(n, np.int32)
    base = np.empty(n, np.int32)
    used = np.empty(n, np.uint8)
    blossom = np.empty(n, np.uint8)
    seen = np.empty(n, np.uint8)
    q = np.empty(n, np.int32)

    for root in range(n):
        if match[root] >= 0 or excluded[root] == 1:
            continue
        # cheap greedy pairing before the full search
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
                    # odd cycle: find the lowest common ancestor of the
                    # two alternating paths, then contract the blossom
                    for i in range(n):
                        seen[i] = 0
                    a = v
                    while True:
                        a = base[a]
                        seen[a] = 1
                        if match[a] < 0:
                            break
                        a = p[match[a]]
                    b = to
                    cur = -1
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
                        # exposed vertex reached: flip the path
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
        if not found and perfect_only != 0:
            return -1

    pairs = 0
    for i in range(n):
        if match[i] >= 0:
            pairs += 1
    return pairs // 2


@njit(cache=True)
def achievable_spec_table(n, eu, ev):
    """Which {1}/{0,2} degree patterns are realized by some edge subset.

    Scans all 2^m subsets of the m-edge graph with endpoint arrays
    eu/ev in Gray-code order, maintaining degrees incrementally.
    Output: uint8 array of size 2^n; entry s becomes 1 iff some subset
    has every degree <= 2 and its degree-1 vertices are exactly the set
    bits of s (such a subset is a factor for the spec sending those
    vertices to {1} and all others to {0,2}).
    """
    m = eu.shape[0]
    table = np.zeros(1 << n, np.uint8)
    deg = np.zeros(n, np.int32)
    chosen = np.zeros(m, np.uint8)
    ones_mask = 0
    over = 0  # number of vertices with degree >= 3
    table[0] = 1  # empty subset: all degrees 0
    total = 1 << m
    for i in range(1, total):
        # Gray step: toggle the edge indexed by the lowest set bit of i
        e = 0
        ii = i
        while ii & 1 == 0:
            e += 1
            ii >>= 1
        u = eu[e]
        v = ev[e]
        if chosen[e] == 0:
            chosen[e] = 1
            d = deg[u]
            deg[u] = d + 1
            if d == 0:
                ones_mask |= 1 << u
            elif d == 1:
                ones_mask &= ~(1 << u)
            elif d == 2:
                over += 1
            d = deg[v]
            deg[v] = d + 1
            if d == 0:
                ones_mask |= 1 << v
            elif d == 1:
                ones_mask &= ~(1 << v)
            elif d == 2:
                over += 1
        else:
            chosen[e] = 0
            d = deg[u]
            deg[u] = d - 1
            if d == 1:
                ones_mask &= ~(1 << u)
            elif d == 2:
                ones_mask |= 1 << u
            elif d == 3:
                over -= 1
            d = deg[v]
            deg[v] = d - 1
            if d == 1:
                ones_mask &= ~(1 << v)
            elif d == 2:
                ones_mask |= 1 << v
            elif d == 3:
                over -= 1
        if over == 0:
            table[ones_mask] = 1
    return table


@njit(cache=True)
def achievable_degree_table(n, eu, ev, strides, size):
    """Mark every degree vector realized by some edge subset.

    ``strides`` gives a mixed-radix encoding (radix deg_G(v)+1 per
    vertex); since subset degrees never exceed graph degrees, the code
    of any realized vector is < size.  Output: uint8 array where entry
    c is 1 iff the degree vector encoded by c is realized.
    """
    m = eu.shape[0]
    table = np.zeros(size, np.uint8)
    chosen = np.zeros(m, np.uint8)
    idx = 0
    table[0] = 1
    total = 1 << m
    for i in range(1, total):
        e = 0
        ii = i
        while ii & 1 == 0:
            e += 1
            ii >>= 1
        step = strides[eu[e]] + strides[ev[e]]
        if chosen[e] == 0:
            chosen[e] = 1
            idx += step
        else:
            chosen[e] = 0
            idx -= step
        table[idx] = 1
    return table
