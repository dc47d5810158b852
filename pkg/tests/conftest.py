"""Shared generators for the test suite."""

from __future__ import annotations

import random
from collections import Counter
from itertools import combinations

from oddcover.core import Graph, cycle_edges, path_edges


def xor_members(members, kind="path"):
    """Independent edge-parity XOR of a member list."""
    par = Counter()
    for vs in members:
        edges = cycle_edges(vs) if kind == "cycle" else path_edges(vs)
        for e in edges:
            par[e] += 1
    return {e for e, c in par.items() if c % 2 == 1}


def all_graphs(n):
    """Every labeled graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def all_even_graphs(n):
    for g in all_graphs(n):
        if g.is_even():
            yield g


def random_graph(n, p, rng):
    return Graph(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )


def random_cycle_set(n, rng, max_cycles=3):
    verts = list(range(n))
    rng.shuffle(verts)
    cycles = []
    i = 0
    for _ in range(rng.randrange(0, max_cycles + 1)):
        if len(verts) - i < 3:
            break
        size = rng.randrange(3, len(verts) - i + 1)
        cycles.append(tuple(verts[i : i + size]))
        i += size
    return cycles


def rng_for(name: str) -> random.Random:
    return random.Random(name)  # str seeding is deterministic across runs
