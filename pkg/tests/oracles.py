"""Brute-force reference implementations used only by the tests.

Nothing in here shares code with the package beyond the Slope/Marking
containers, so agreement with the package is a genuine cross-check.
"""
from collections import deque
from math import gcd

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from rdcentroid.farey import Slope


def box_slopes(n):
    out = []
    for q in range(0, n + 1):
        for p in range(-n, n + 1):
            if gcd(p, q) != 1:
                continue
            if q == 0 and p != 1:
                continue
            out.append(Slope(p, q))
    return out


def box_distance_matrix(n):
    """All-pairs BFS distances in the Farey graph induced on the n-box.

    Edges are found by brute force over all pairs (|det| == 1).
    """
    verts = box_slopes(n)
    P = np.array([v.p for v in verts], dtype=np.int64)
    Q = np.array([v.q for v in verts], dtype=np.int64)
    rows, cols = [], []
    for i in range(len(verts)):
        d = np.abs(P[i] * Q - Q[i] * P)
        (js,) = np.nonzero(d == 1)
        rows.extend([i] * len(js))
        cols.extend(js.tolist())
    adj = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(len(verts), len(verts)))
    dist = shortest_path(adj, method="D", unweighted=True, directed=False)
    return verts, dist


def _bezout(p, q):
    # smallest s >= 0 with p*s = 1 (mod q), found by search
    if q == 0:
        return 0, 1
    for s in range(0, q + 1):
        if (p * s - 1) % q == 0:
            return (p * s - 1) // q, s
    raise AssertionError((p, q))


def farey_bfs(a, b, limit=12):
    """Plain BFS in the Farey graph restricted to a coordinate window.

    Neighbours of p/q are (r + kp)/(s + kq) for one Bezout pair (r, s).
    The window is four times the endpoints' size, far beyond where
    geodesics live.
    """
    if a == b:
        return 0
    window = 4 * max(abs(a.p), abs(a.q), abs(b.p), abs(b.q), 1) + 4

    def nbrs(v):
        p, q = v
        r, s = _bezout(p, q)
        res = []
        for k in range(-2 * window - 2, 2 * window + 3):
            u = Slope.of(r + k * p, s + k * q)
            if abs(u.p) <= window and u.q <= window:
                res.append(u)
        return res

    seen = {a: 0}
    dq = deque([a])
    while dq:
        v = dq.popleft()
        if seen[v] >= limit:
            continue
        for w in nbrs(v):
            if w not in seen:
                seen[w] = seen[v] + 1
                if w == b:
                    return seen[w]
                dq.append(w)
    return None
