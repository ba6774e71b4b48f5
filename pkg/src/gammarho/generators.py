"""Graph generators: named small graphs, seeded random families (trees,
connected graphs, maximal outerplanar, bicubic, biconvex), the tight
biconvex family with gamma = 2*rho, and exhaustive enumeration of small
connected bicubic graphs up to isomorphism.

Randomness always flows through random.Random(seed); the same seed gives
the same graph on any platform.
"""

from __future__ import annotations

import math
import random
from itertools import combinations, permutations

from .biconvex import ConvexOrdering, cb_decompose, trim_core
from .graphs import Graph


# ---------------------------------------------------------------- named ----

def gen_path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def gen_complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def gen_star(n: int) -> Graph:
    return gen_complete_bipartite(1, n - 1)


def generalized_petersen(n: int, k: int) -> Graph:
    """Outer n-cycle 0..n-1, inner vertices n..2n-1 joined by spokes, inner
    edges i to i+k (mod n)."""
    if n < 3 or not 1 <= k < n:
        raise ValueError("need n >= 3 and 1 <= k < n")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph.from_edges(2 * n, edges)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def heawood() -> Graph:
    """14-cycle plus the chords of the LCF code [5, -5]^7."""
    edges = [(i, (i + 1) % 14) for i in range(14)]
    for i in range(0, 14, 2):
        edges.append((i, (i + 5) % 14))
    return Graph.from_edges(14, edges)


def gen_rook(n: int) -> Graph:
    """K_n box K_n: cells of an n x n board, adjacent in the same row or
    column.  gamma = n while rho = 1."""
    edges = []
    for r in range(n):
        for c1, c2 in combinations(range(n), 2):
            edges.append((r * n + c1, r * n + c2))
            edges.append((c1 * n + r, c2 * n + r))
    return Graph.from_edges(n * n, edges)


def gen_sun() -> Graph:
    """Hexagon with the long chords 1-3, 3-5, 5-1: the smallest maximal
    outerplanar graph with gamma = 2*rho."""
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(1, 3), (3, 5), (5, 1)]
    return Graph.from_edges(6, edges)


# --------------------------------------------------------------- random ----

def gen_random_tree(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(n, [(rng.randrange(v), v) for v in range(1, n)])


def gen_random_connected(n: int, seed: int) -> Graph:
    """G(n, p) with p drawn from [0.15, 0.6], resampled until connected."""
    rng = random.Random(seed)
    for _ in range(10000):
        p = rng.uniform(0.15, 0.6)
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if g.is_connected():
            return g
    raise RuntimeError("could not draw a connected graph")


_CATALAN = [math.comb(2 * i, i) // (i + 1) for i in range(40)]


def gen_random_mop(n: int, seed: int) -> Graph:
    """Uniformly random triangulation of a convex n-gon (equivalently a
    maximal outerplanar graph with boundary 0..n-1).

    The apex for the base edge of an m-gon splits it into sub-polygons
    counted by Catalan numbers, so drawing the apex with those exact
    integer weights gives the uniform distribution.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    rng = random.Random(seed)
    edges = {(i, (i + 1) % n) for i in range(n)}

    def fill(seg: list[int]) -> None:
        m = len(seg)
        if m < 3:
            return
        weights = [_CATALAN[k - 1] * _CATALAN[m - k - 2] for k in range(1, m - 1)]
        r = rng.randrange(sum(weights))
        k = 1
        for w in weights:
            if r < w:
                break
            r -= w
            k += 1
        edges.add((seg[0], seg[k]))
        edges.add((seg[k], seg[-1]))
        fill(seg[:k + 1])
        fill(seg[k:])

    fill(list(range(n)))
    return Graph.from_edges(n, edges)


def gen_random_bicubic(n: int, seed: int) -> Graph:
    """Connected cubic bipartite graph on n vertices (sides 0..n/2-1 and
    n/2..n-1) via the configuration model, rejecting multi-edges and
    disconnected draws."""
    if n % 2 or n < 6:
        raise ValueError("need even n >= 6")
    half = n // 2
    rng = random.Random(seed)
    x_stubs = [v for v in range(half) for _ in range(3)]
    for _ in range(5000):
        y_stubs = [half + v for v in range(half) for _ in range(3)]
        rng.shuffle(y_stubs)
        pairs = set(zip(x_stubs, y_stubs))
        if len(pairs) < 3 * half:
            continue
        g = Graph.from_edges(n, pairs)
        if g.is_connected():
            return g
    raise RuntimeError("configuration model kept producing bad draws")


def gen_random_biconvex(nx: int, ny: int, seed: int) -> tuple[Graph, ConvexOrdering]:
    """Connected biconvex graph with X = 0..nx-1, Y = nx..nx+ny-1 and the
    natural orders.

    Neighborhoods are staircase intervals over X: both endpoints grow
    monotonically, consecutive intervals overlap, the first is pinned at 0
    and the last reaches nx-1.  That shape makes both convexity conditions
    and the flank-nesting structure automatic, so the block decomposition
    is always available; the final loop just re-checks that.
    """
    if nx < 1 or ny < 1:
        raise ValueError("need nx, ny >= 1")
    rng = random.Random(seed)
    for _ in range(200):
        lo, hi = 0, rng.randint(0, min(nx - 1, 3))
        intervals = [(lo, hi)]
        for _ in range(ny - 1):
            lo = rng.randint(lo, hi)
            base = max(hi, lo)
            hi = rng.randint(base, min(nx - 1, base + 3))
            intervals.append((lo, hi))
        lo, _ = intervals[-1]
        intervals[-1] = (lo, nx - 1)
        edges = [
            (x, nx + j)
            for j, (a, b) in enumerate(intervals)
            for x in range(a, b + 1)
        ]
        g = Graph.from_edges(nx + ny, edges)
        ordering = ConvexOrdering(tuple(range(nx)), tuple(range(nx, nx + ny)))
        if not g.is_connected():
            continue
        try:
            cb_decompose(g, trim_core(g, ordering))
        except Exception:
            continue
        return g, ordering
    raise RuntimeError("staircase sampler failed to produce a usable graph")


def gen_tight_family(k: int) -> tuple[Graph, ConvexOrdering]:
    """The extremal biconvex family with gamma = 2k and rho = k: k disjoint
    copies of K_{2,2}.

    One vertex of a K_{2,2} covers only three of its four vertices, so each
    copy needs two dominators; each copy has diameter 2, so it contributes
    at most one packing vertex.  Joining consecutive copies with an edge
    would break this: the connector endpoint picks up an outside dominator
    and gamma drops below 2k already at k = 2 (in fact no connected graph
    on 4k vertices can have gamma = 2k and rho = k at once, since the
    gamma = n/2 graphs are C_4 and the coronas, whose packing numbers are
    n/2 as well).
    """
    if k < 1:
        raise ValueError("need k >= 1")

    def x(i: int) -> int:  # 1-based
        return i - 1

    def y(j: int) -> int:
        return 2 * k + j - 1

    edges = []
    for i in range(1, k + 1):
        for a in (2 * i - 1, 2 * i):
            for b in (2 * i - 1, 2 * i):
                edges.append((x(a), y(b)))
    g = Graph.from_edges(4 * k, edges)
    ordering = ConvexOrdering(tuple(range(2 * k)), tuple(range(2 * k, 4 * k)))
    return g, ordering


# ----------------------------------------------------- exhaustive lists ----

def _bicubic_canonical(rows: tuple[int, ...], m: int) -> tuple:
    """Canonical form of a bicubic bipartite adjacency matrix (rows as
    bitmasks) under row permutations, column permutations, and swapping
    the sides.  Column order is normalized by sorting the column vectors,
    so minimizing over row permutations (and the transpose) is complete."""

    def transpose(rs: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(
            sum(((rs[i] >> j) & 1) << i for i in range(m)) for j in range(m)
        )

    best = None
    for mat in (rows, transpose(rows)):
        for perm in permutations(range(m)):
            permuted = [mat[p] for p in perm]
            cols = tuple(sorted(
                tuple((permuted[i] >> j) & 1 for i in range(m))
                for j in range(m)
            ))
            if best is None or cols < best:
                best = cols
    return best


def enumerate_bicubic(n: int) -> list[Graph]:
    """Every connected cubic bipartite graph on n vertices, one per
    isomorphism class, in a deterministic order.  Supported for
    n in {6, 8, 10, 12}; larger orders come from external corpora."""
    if n not in (6, 8, 10, 12):
        raise ValueError("exhaustive enumeration supports n in {6, 8, 10, 12}")
    m = n // 2
    row_types = [sum(1 << c for c in combo) for combo in combinations(range(m), 3)]

    seen: set[tuple] = set()
    chosen: list[int] = []

    def colsums() -> list[int]:
        return [sum((r >> j) & 1 for r in chosen) for j in range(m)]

    def extend(start: int) -> None:
        if len(chosen) == m:
            if all(s == 3 for s in colsums()):
                g = Graph.from_edges(
                    n,
                    [(i, m + j) for i, r in enumerate(chosen)
                     for j in range(m) if (r >> j) & 1],
                )
                if g.is_connected():
                    seen.add(_bicubic_canonical(tuple(chosen), m))
            return
        left = m - len(chosen)
        sums = colsums()
        if any(s > 3 or 3 - s > left for s in sums):
            return
        for idx in range(start, len(row_types)):
            chosen.append(row_types[idx])
            extend(idx)  # rows kept nondecreasing; permutations canonicalize
            chosen.pop()

    extend(0)

    graphs = []
    for cols in sorted(seen):
        edges = [
            (i, m + j)
            for j, col in enumerate(cols)
            for i, bit in enumerate(col)
            if bit
        ]
        graphs.append(Graph.from_edges(n, edges))
    return graphs
