"""Exact minimum odd-covers and linear-forest decompositions at desk scale.

Minimum path (or cycle) odd-covers are shortest XOR-combinations of the
generator vectors (all paths, or all cycles, on the universe) reaching the
target edge vector.  The search is breadth-first over the 2^C(n,2) edge
space with a byte distance table; since layer D holds every vector of
distance exactly D, the minimum k splits as k = ceil(k/2) + floor(k/2) and
can be detected meet-in-the-middle: some vector at distance ceil(k/2) XORs
with the target into distance <= floor(k/2).  That keeps n = 7 (2^21
states, 6846 path generators) tractable; direct lookups cover n <= 6.

Engines are cached per (n, kind): the table is target-independent, so
exhaustive sweeps over many graphs on the same universe reuse one BFS.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Sequence

import numpy as np

from .core import (
    Edge,
    EdgeVector,
    Graph,
    InternalInvariantError,
    OddCover,
    degree_profile,
    edge_index,
    lower_bound,
    max_subgraph_density,
    verify_cover,
)

MAX_ORACLE_N = 7


def _path_mask(n: int, seq: Sequence[int]) -> int:
    mask = 0
    for i in range(len(seq) - 1):
        mask |= 1 << edge_index(n, seq[i], seq[i + 1])
    return mask


def _cycle_mask(n: int, seq: Sequence[int]) -> int:
    return _path_mask(n, seq) | (1 << edge_index(n, seq[-1], seq[0]))


@lru_cache(maxsize=None)
def _path_generators(n: int) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    masks = []
    seqs = []
    for k in range(2, n + 1):
        for perm in permutations(range(n), k):
            if perm[0] < perm[-1]:  # one orientation per undirected path
                masks.append(_path_mask(n, perm))
                seqs.append(perm)
    return tuple(masks), tuple(seqs)


@lru_cache(maxsize=None)
def _cycle_generators(n: int) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    masks = []
    seqs = []
    for k in range(3, n + 1):
        for vs in combinations(range(n), k):
            first = vs[0]
            for perm in permutations(vs[1:]):
                if perm[0] < perm[-1]:  # fix rotation and reflection
                    seq = (first,) + perm
                    masks.append(_cycle_mask(n, seq))
                    seqs.append(seq)
    return tuple(masks), tuple(seqs)


def enumerate_paths(n: int) -> list[EdgeVector]:
    """Edge vectors of every path on >= 2 vertices of the n-universe."""
    if n > MAX_ORACLE_N:
        raise ValueError(f"path enumeration capped at n <= {MAX_ORACLE_N}")
    masks, _ = _path_generators(n)
    return [EdgeVector(n, m) for m in masks]


def enumerate_cycles(n: int) -> list[EdgeVector]:
    """Edge vectors of every cycle on >= 3 vertices of the n-universe."""
    if n > MAX_ORACLE_N:
        raise ValueError(f"cycle enumeration capped at n <= {MAX_ORACLE_N}")
    masks, _ = _cycle_generators(n)
    return [EdgeVector(n, m) for m in masks]


class _XorSearch:
    """Layered BFS over the edge space generated by a fixed vector set."""

    def __init__(self, n_bits: int, masks: Sequence[int]):
        self.size = 1 << n_bits
        self.gens = np.asarray(masks, dtype=np.uint32)
        self.dist = np.full(self.size, 255, dtype=np.uint8)
        self.dist[0] = 0
        self.layers: list[np.ndarray] = [np.zeros(1, dtype=np.uint32)]
        self.exhausted = False

    def _extend(self) -> None:
        if self.exhausted:
            return
        frontier = self.layers[-1]
        d = len(self.layers)
        found = []
        for gm in self.gens:
            cand = frontier ^ gm
            new = cand[self.dist[cand] == 255]
            if new.size:
                self.dist[new] = d
                found.append(new)
        layer = (
            np.sort(np.concatenate(found))
            if found
            else np.zeros(0, dtype=np.uint32)
        )
        self.layers.append(layer)
        if layer.size == 0:
            self.exhausted = True

    def min_count(self, target: int, max_k: int) -> int | None:
        """Minimum number of generators XORing to target, or None past max_k."""
        if target == 0:
            return 0
        t = np.uint32(target)
        for k in range(1, max_k + 1):
            h = (k + 1) // 2
            while len(self.layers) - 1 < h and not self.exhausted:
                self._extend()
            if len(self.layers) - 1 < h:
                dt = int(self.dist[target])
                return dt if dt != 255 and dt <= max_k else None
            layer = self.layers[h]
            if layer.size and np.any(self.dist[layer ^ t] <= k - h):
                return k
        return None

    def witness(self, target: int, k: int) -> list[int]:
        """Generator indices for a known-optimal combination of size k."""
        if k == 0:
            return []
        if int(self.dist[target]) == k:
            return self._walk(target)
        h = (k + 1) // 2
        layer = self.layers[h]
        hits = layer[self.dist[layer ^ np.uint32(target)] <= k - h]
        if not hits.size:
            raise InternalInvariantError("witness split vanished")
        x = int(hits[0])
        return self._walk(x) + self._walk(x ^ target)

    def _walk(self, x: int) -> list[int]:
        out = []
        while x:
            d = int(self.dist[x])
            for gi in range(len(self.gens)):
                gm = int(self.gens[gi])
                if int(self.dist[x ^ gm]) == d - 1:
                    out.append(gi)
                    x ^= gm
                    break
            else:
                raise InternalInvariantError("witness walk lost its predecessor")
        return out


@lru_cache(maxsize=None)
def _engine(n: int, kind: str) -> _XorSearch:
    masks, _ = _path_generators(n) if kind == "path" else _cycle_generators(n)
    return _XorSearch(n * (n - 1) // 2, masks)


def _solve(g: Graph, kind: str, max_k: int | None) -> tuple[int, OddCover] | None:
    if g.n > MAX_ORACLE_N:
        raise ValueError(f"exact search capped at n <= {MAX_ORACLE_N}, got {g.n}")
    if g.n < 2:
        return (0, OddCover(g, [], kind)) if g.m == 0 else None
    budget = max_k if max_k is not None else max(1, g.m)
    eng = _engine(g.n, kind)
    target = g.edge_vector().bits
    k = eng.min_count(target, budget)
    if k is None:
        return None
    _, seqs = _path_generators(g.n) if kind == "path" else _cycle_generators(g.n)
    members = [seqs[i] for i in eng.witness(target, k)]
    cover = OddCover(g, members, kind)
    if not verify_cover(cover).valid or cover.count != k:
        raise InternalInvariantError("oracle witness failed verification")
    return k, cover


def exact_p2(g: Graph, max_k: int | None = None) -> tuple[int, OddCover] | None:
    """Minimum path odd-cover with witness; None when it exceeds max_k."""
    res = _solve(g, "path", max_k)
    if res is not None and res[0] < lower_bound(g):
        raise InternalInvariantError("oracle beat the degree lower bound")
    return res


def exact_c2(g: Graph, max_k: int | None = None) -> tuple[int, OddCover] | None:
    """Minimum cycle odd-cover with witness; requires all degrees even."""
    if not g.is_even():
        raise ValueError("cycle odd-covers exist only for even-degree graphs")
    res = _solve(g, "cycle", max_k)
    if res is not None:
        delta, _, _ = degree_profile(g)
        if res[0] < delta // 2:
            raise InternalInvariantError("oracle beat the cycle lower bound")
    return res


def exact_p2_iso(
    g: Graph, extra: int, max_k: int | None = None
) -> tuple[int, OddCover] | None:
    """Minimum of exact_p2 over g with 0..extra isolated vertices added."""
    if g.n + extra > MAX_ORACLE_N:
        raise ValueError(f"padding would exceed n = {MAX_ORACLE_N}")
    best: tuple[int, OddCover] | None = None
    for pad in range(extra + 1):
        res = exact_p2(g.with_extra_vertices(pad), max_k)
        if res is not None and (best is None or res[0] < best[0]):
            best = res
    return best


def exact_linear_forests(g: Graph, k: int) -> list[list[Edge]] | None:
    """Partition E(g) into k linear forests, or None if impossible.

    Backtracking over edges in decreasing degree-sum order, pruning on
    per-color degrees (<= 2) and per-color acyclicity (disjoint-set forests),
    with canonical color order to break class symmetry.
    """
    if g.n > 10:
        raise ValueError("linear-forest search capped at n <= 10")
    if k < 0:
        raise ValueError("negative class count")
    if g.m == 0:
        return [[] for _ in range(k)]
    if k == 0:
        return None
    deg = g.degrees()
    edges = sorted(g.edges, key=lambda e: (-(deg[e[0]] + deg[e[1]]), e))
    m = len(edges)
    color = [-1] * m
    cdeg = [[0] * g.n for _ in range(k)]
    root = [list(range(g.n)) for _ in range(k)]

    def find(c: int, x: int) -> int:
        while root[c][x] != x:
            x = root[c][x]
        return x

    def assign(i: int, used: int) -> bool:
        if i == m:
            return True
        u, v = edges[i]
        for c in range(min(k, used + 1)):
            if cdeg[c][u] >= 2 or cdeg[c][v] >= 2:
                continue
            ru, rv = find(c, u), find(c, v)
            if ru == rv:
                continue
            root[c][ru] = rv
            cdeg[c][u] += 1
            cdeg[c][v] += 1
            color[i] = c
            if assign(i + 1, max(used, c + 1)):
                return True
            color[i] = -1
            cdeg[c][u] -= 1
            cdeg[c][v] -= 1
            root[c][ru] = ru
        return False

    if not assign(0, 0):
        return None
    out: list[list[Edge]] = [[] for _ in range(k)]
    for i, e in enumerate(edges):
        out[color[i]].append(e)
    return [sorted(f) for f in out]


def exact_linear_arboricity(g: Graph, k_max: int | None = None) -> tuple[int, list[list[Edge]]]:
    """Smallest k admitting a k-linear-forest partition, with a witness."""
    if g.m == 0:
        return 0, []
    delta, _, _ = degree_profile(g)
    lo = max(1, -(-delta // 2))
    hi = k_max if k_max is not None else g.m
    for k in range(lo, hi + 1):
        forests = exact_linear_forests(g, k)
        if forests is not None:
            return k, forests
    raise InternalInvariantError("no linear-forest partition up to the cap")


def arboricity_density(g: Graph) -> int:
    """Nash-Williams arboricity: max over subgraphs of ceil(e/(v-1))."""
    return max_subgraph_density(g)


def bound_gap_scan(
    n_exhaustive: int = 5, n6_samples: int = 0, seed: int = 0
) -> dict:
    """Largest observed gap of exact_p2 over max{v_odd/2, ceil(d/2), density}.

    Whether the gap can exceed one is open; this reports, never asserts.
    """
    import random

    rng = random.Random(seed)
    worst = {"gap": 0, "graphs": 0, "example": None}

    def probe(g: Graph) -> None:
        res = exact_p2(g)
        if res is None:
            return
        base = max(lower_bound(g), max_subgraph_density(g))
        gap = res[0] - base
        worst["graphs"] += 1
        if gap > worst["gap"]:
            worst["gap"] = gap
            worst["example"] = sorted(g.edges)

    for n in range(2, n_exhaustive + 1):
        pairs = list(combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            probe(Graph(n, edges))
    pairs6 = list(combinations(range(6), 2))
    for _ in range(n6_samples):
        edges = [e for e in pairs6 if rng.random() < 0.5]
        probe(Graph(6, edges))
    return dict(worst)
