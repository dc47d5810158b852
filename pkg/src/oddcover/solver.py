"""End-to-end odd-cover solvers built from the cycle layers and the kit.

The main pipeline covers any graph with at most max{v_odd/2, 2*ceil(delta/2)}
paths: pair the odd-degree vertices by a matching M (peeling explicit odd
paths first when v_odd/2 exceeds the even-rounded degree), XOR M in to get
an even-degree graph, peel that into cycle layers, and spend two paths per
layer while integrating up to two matching edges alongside each layer.  A
first, simpler pipeline gives the additive delta + v_odd/2 bound; variants
produce cycle odd-covers (at most delta cycles) and isolated-vertex covers
driven by linear-forest decompositions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    Edge,
    Graph,
    InternalInvariantError,
    OddCover,
    degree_profile,
    norm_edge,
    path_edges,
    verify_cover,
)
from .cycles import odd_matching, peel_cycle_layers
from .systems import iso_cover_from_forests
from .twopaths import (
    Cycle,
    TwoPaths,
    _path_with_edge,
    _replace_edge_with_walk,
    choose_integrable_pair,
    cover_cycles,
    integrate_four_edges,
    integrate_one_edge,
    integrate_two_edges,
)


def peel_odd_path(g: Graph) -> tuple[tuple[int, ...], Graph]:
    """Remove one path joining two odd-degree vertices; v_odd drops by 2.

    Breadth-first from the smallest odd vertex to the smallest odd vertex
    reachable from it (one always exists in its component).
    """
    _, v_odd, odd = degree_profile(g)
    if v_odd == 0:
        raise ValueError("graph has no odd-degree vertices")
    u = odd[0]
    adj = g.adjacency()
    parent: dict[int, int | None] = {u: None}
    queue = [u]
    i = 0
    while i < len(queue):
        x = queue[i]
        i += 1
        for w in adj[x]:
            if w not in parent:
                parent[w] = x
                queue.append(w)
    targets = [v for v in odd[1:] if v in parent]
    if not targets:
        raise InternalInvariantError("odd vertex isolated from all others")
    v = min(targets)
    walk = [v]
    while parent[walk[-1]] is not None:
        walk.append(parent[walk[-1]])
    walk.reverse()
    return tuple(walk), g.remove_edges(path_edges(walk))


def cover_first_bound(g: Graph) -> OddCover:
    """Odd-cover with at most delta + v_odd/2 paths.

    Peels odd-joining paths until the remainder is even-degree, then spends
    two paths per cycle layer.
    """
    delta0, v_odd0, _ = degree_profile(g)
    members: list[tuple[int, ...]] = []
    cur = g
    while degree_profile(cur)[1] > 0:
        p, cur = peel_odd_path(cur)
        members.append(p)
    for layer in peel_cycle_layers(cur):
        tp = cover_cycles(layer)
        members += [tp.p, tp.q]
    cover = OddCover(g, members, "path")
    if not verify_cover(cover).valid or cover.count > delta0 + v_odd0 // 2:
        raise InternalInvariantError("additive-bound cover failed self-check")
    return cover


def _integration_rounds(matching_size: int) -> int:
    return 2 if matching_size == 2 else -(-matching_size // 2)


@dataclass(frozen=True)
class SolveBudget:
    """Round budget for isolated-vertex covers: t integration rounds leave a
    residual of maximum degree d inside the even-rounded ceiling delta_e."""

    t: int
    d: int
    delta_e: int


def solve_budget(g: Graph) -> SolveBudget:
    delta, v_odd, _ = degree_profile(g)
    delta_e = 2 * -(-delta // 2)
    t = 2 if (v_odd == 4 and delta >= 3) else -(-v_odd // 4)
    return SolveBudget(t=t, d=delta_e - 2 * t, delta_e=delta_e)


def cover_eulerian_plus_matching(
    g_prime: Graph, matching: Sequence[Edge]
) -> OddCover:
    """Odd-cover E(g_prime) XOR M for an even-degree g_prime and matching M.

    Runs the per-layer loop: two matching edges are integrated into each
    cycle layer while any remain (choosing a safe pair out of three, or
    splitting four over two layers), single edges go in alone, and leftover
    layers cost two plain paths each.  Layer budget is max(t, delta/2) with
    t = ceil(|M|/2) (t = 2 when |M| = 2), so the count is at most twice
    that.
    """
    if not g_prime.is_even():
        raise ValueError("matching integration needs all degrees even")
    m = sorted(norm_edge(u, v) for u, v in matching)
    seen: set[int] = set()
    for e in m:
        if seen & set(e):
            raise ValueError("matching edges share a vertex")
        seen |= set(e)
    layers: list[list[Cycle]] = peel_cycle_layers(g_prime)
    t = _integration_rounds(len(m))
    rounds = max(t, len(layers))
    layers += [[] for _ in range(rounds - len(layers))]

    members: list[tuple[int, ...]] = []
    i = 0
    while i < rounds:
        cs = layers[i]
        if len(m) >= 5 or len(m) == 3:
            pair, tp = choose_integrable_pair(cs, m[:3])
            members += [tp.p, tp.q]
            m = [f for f in m if f not in pair]
            i += 1
        elif len(m) == 4:
            if i + 1 >= rounds:
                raise InternalInvariantError("four edges left but one round")
            members += integrate_four_edges(cs, layers[i + 1], m)
            m = []
            i += 2
        elif len(m) == 1:
            if cs:
                tp = integrate_one_edge(cs, m[0])
                members += [tp.p, tp.q]
            else:
                members.append(m[0])
            m = []
            i += 1
        elif len(m) == 2:
            if i != 0:
                raise InternalInvariantError("pair state can only occur first")
            for f, cs2 in zip(m, (layers[0], layers[1])):
                if cs2:
                    tp = integrate_one_edge(cs2, f)
                    members += [tp.p, tp.q]
                else:
                    members.append(f)
            m = []
            i += 2
        else:
            if cs:
                tp = cover_cycles(cs)
                members += [tp.p, tp.q]
            i += 1

    target = g_prime.xor(matching)
    cover = OddCover(target, members, "path")
    if not verify_cover(cover).valid or cover.count > 2 * rounds:
        raise InternalInvariantError("matching integration failed self-check")
    return cover


def disjoint_cycles_of(g: Graph) -> list[Cycle]:
    """The components of a 2-regular-or-empty graph as cycle tuples."""
    deg = g.degrees()
    adj = g.adjacency()
    out: list[Cycle] = []
    for comp in g.components():
        live = [v for v in comp if deg[v]]
        if not live:
            continue
        if any(deg[v] != 2 for v in live):
            raise ValueError("component is not a cycle")
        start = live[0]
        walk = [start]
        prev, cur = None, start
        while True:
            nxt = next(x for x in adj[cur] if x != prev)
            if nxt == start:
                break
            walk.append(nxt)
            prev, cur = cur, nxt
        out.append(tuple(walk))
    return out


def path_odd_cover(g: Graph) -> OddCover:
    """Odd-cover with at most max{v_odd/2, 2*ceil(delta/2)} paths."""
    delta0, v_odd0, _ = degree_profile(g)
    bound = max(v_odd0 // 2, 2 * -(-delta0 // 2))
    members: list[tuple[int, ...]] = []
    cur = g
    delta, v_odd, _ = degree_profile(cur)
    delta_e = 2 * -(-delta // 2)
    while v_odd // 2 > delta_e:
        p, cur = peel_odd_path(cur)
        members.append(p)
        delta, v_odd, _ = degree_profile(cur)
        delta_e = 2 * -(-delta // 2)

    m = sorted(odd_matching(cur))
    if delta <= 2 and len(m) == 2:
        g2 = cur.xor(m)
        res = integrate_two_edges(disjoint_cycles_of(g2), m[0], m[1])
        if not isinstance(res, TwoPaths):
            raise InternalInvariantError("low-degree pair case hit the obstruction")
        members += [res.p, res.q]
    elif cur.m or m:
        sub = cover_eulerian_plus_matching(cur.xor(m), m)
        members += sub.members

    cover = OddCover(g, members, "path")
    if not verify_cover(cover).valid or cover.count > bound:
        raise InternalInvariantError("degree-bound cover failed self-check")
    return cover


def _cover_cycles_and_paths(
    cycles: Sequence[Cycle], paths: Sequence[tuple[int, ...]]
) -> TwoPaths:
    """Two paths odd-covering disjoint cycles plus one or two disjoint paths.

    Each loose path is stood in for by the edge joining its endpoints, the
    edges are integrated into the cycles (their endpoints are off every
    cycle, so the obstruction cannot occur), and the stand-ins are expanded
    back.
    """
    if len(paths) != 2:
        raise ValueError("exactly two loose paths expected")
    fps = [norm_edge(p[0], p[-1]) for p in paths]
    res = integrate_two_edges(cycles, fps[0], fps[1])
    if not isinstance(res, TwoPaths):
        raise InternalInvariantError("loose-path closing hit the obstruction")
    out = [list(res.p), list(res.q)]
    for fp, walk in zip(fps, paths):
        hit = _path_with_edge(out, fp)
        out[hit] = _replace_edge_with_walk(out[hit], fp, list(walk))
    return TwoPaths(tuple(out[0]), tuple(out[1]))


def iso_cover_general(g: Graph, la_search_n: int = 10) -> tuple[OddCover, str]:
    """Odd-cover allowing added isolated vertices, per the 2t + la(d) budget.

    t is ceil(v_odd/4) (or 2 when v_odd = 4 with delta >= 3) and
    d = 2*ceil(delta/2) - 2t.  The first t cycle layers absorb the matching;
    the residual is covered by stitching an exact minimum linear-forest
    decomposition when the graph is small enough to search (n <= la_search_n),
    else by plain layer pairs (cost d instead of la(d)).  Returns the cover
    and which branch handled the residual.
    """
    from .oracle import exact_linear_forests

    delta, v_odd, _ = degree_profile(g)
    budget = solve_budget(g)
    t, d = budget.t, budget.d

    if v_odd == 4 and delta <= 2:
        deg = g.degrees()
        comps = [c for c in g.components() if any(deg[v] for v in c)]
        loose = []
        cyc = []
        for comp in comps:
            sub = Graph(g.n, [e for e in g.edges if e[0] in comp])
            if all(deg[v] % 2 == 0 for v in comp):
                cyc += disjoint_cycles_of(sub)
            else:
                ends = [v for v in comp if deg[v] % 2 == 1]
                walk = _component_path(g, comp, ends[0])
                loose.append(walk)
        tp = _cover_cycles_and_paths(cyc, loose)
        cover = OddCover(g, [tp.p, tp.q], "path")
        if not verify_cover(cover).valid:
            raise InternalInvariantError("two-path case failed self-check")
        return cover, "two-paths"

    if d < 0:
        cover = path_odd_cover(g)
        if cover.count > v_odd // 2:
            raise InternalInvariantError("negative-budget case exceeded v_odd/2")
        return cover, "direct"

    m = sorted(odd_matching(g))
    g2 = g.xor(m)
    layers = peel_cycle_layers(g2)
    head = layers[:t]
    tail = layers[t:]
    head_edges = [e for layer in head for c in layer for e in _cyc_edges(c)]
    sub = cover_eulerian_plus_matching(Graph(g.n, head_edges), m)
    members = list(sub.members)

    branch = "layer-pairs"
    n_total = g.n
    if tail:
        tail_edges = [e for layer in tail for c in layer for e in _cyc_edges(c)]
        residual = Graph(g.n, tail_edges)
        delta_r, _, _ = degree_profile(residual)
        forests = None
        if g.n <= la_search_n:
            for k in range(max(1, -(-delta_r // 2)), d + 1):
                forests = exact_linear_forests(residual, k)
                if forests is not None:
                    break
        if forests is not None:
            isoc = iso_cover_from_forests(residual, forests)
            members += list(isoc.members)
            n_total = isoc.target.n
            branch = "linear-arboricity"
        else:
            for layer in tail:
                tp = cover_cycles(layer)
                members += [tp.p, tp.q]
    else:
        branch = "no-residual"

    cover = OddCover(Graph(n_total, g.edges), members, "path")
    if not verify_cover(cover).valid or cover.count > 2 * t + d:
        raise InternalInvariantError("isolated-vertex cover failed self-check")
    return cover, branch


def _component_path(g: Graph, comp: list[int], start: int) -> tuple[int, ...]:
    adj = g.adjacency()
    walk = [start]
    prev, cur = None, start
    while True:
        nxt = [x for x in adj[cur] if x != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        walk.append(cur)
    return tuple(walk)


def _cyc_edges(cycle: Cycle) -> list[Edge]:
    k = len(cycle)
    return [norm_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


def cycle_odd_cover(g: Graph) -> OddCover:
    """Cycle odd-cover of an even-degree graph with at most delta cycles.

    Each cycle layer is covered by two paths sharing both endpoints; closing
    both with the same endpoint edge turns them into two cycles whose XOR is
    the layer.  A layer that is a single cycle is emitted as itself.
    """
    if not g.is_even():
        raise ValueError("cycle odd-covers need all degrees even")
    delta, _, _ = degree_profile(g)
    members: list[tuple[int, ...]] = []
    for layer in peel_cycle_layers(g):
        if len(layer) == 1:
            members.append(layer[0])
        else:
            tp = cover_cycles(layer)
            members += [tp.p, tp.q]
    cover = OddCover(g, members, "cycle")
    if not verify_cover(cover).valid or cover.count > delta:
        raise InternalInvariantError("cycle cover failed self-check")
    return cover
