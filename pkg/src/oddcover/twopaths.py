"""Two-path odd-covers of vertex-disjoint cycle sets, with edge integration.

A set of vertex-disjoint cycles is odd-covered by exactly two paths: split
each cycle at two chosen vertices into complementary arcs, then chain the
arc pairs together with connector edges that appear in both paths and so
cancel.  Both paths share both endpoints, and the final endpoint can be
pinned to any prescribed vertex.

On top of that threading, this module integrates up to two extra edges into
the same two paths: the symmetric difference of a cycle set and one edge is
always two-path coverable, and for two disjoint edges it is coverable
except in a single sharp obstruction -- some cycle plus the two edges forms
a K4-subdivision in which at most one of the four chord-demarcated arcs has
an internal vertex.  `is_exceptional_k4` recognizes the obstruction,
`choose_integrable_pair` dodges it when three candidate edges are on offer
(at most one of the three pairs can be obstructed), and
`integrate_four_edges` distributes four edges over two cycle sets.

Every public function re-checks its own output: the returned paths must be
simple and their edge-parity XOR must equal the requested target, else an
InternalInvariantError is raised.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Union

from .core import Edge, InternalInvariantError, check_path, norm_edge, path_edges

Cycle = tuple[int, ...]


class TwoPaths(NamedTuple):
    p: tuple[int, ...]
    q: tuple[int, ...]


@dataclass(frozen=True)
class ExceptionalCase:
    """The K4-subdivision obstruction: which cycle, and the four arc sizes."""

    cycle_index: int
    demarcation: tuple[int, int, int, int]  # internal-vertex count per arc


class ExceptionalEndpointError(ValueError):
    """Requested common endpoint z shares a cycle with both edge endpoints."""


IntegrationResult = Union[TwoPaths, ExceptionalCase]


# ---------------------------------------------------------------------------
# cycle bookkeeping


def canon_cycle(cycle: Sequence[int]) -> Cycle:
    """Rotate/reflect so the smallest vertex comes first, smaller neighbor second."""
    vs = list(cycle)
    if len(vs) < 3 or len(set(vs)) != len(vs):
        raise ValueError(f"not a cycle: {vs}")
    i = vs.index(min(vs))
    vs = vs[i:] + vs[:i]
    if vs[-1] < vs[1]:
        vs = [vs[0]] + vs[1:][::-1]
    return tuple(vs)


def _prepare(cycles: Iterable[Sequence[int]]) -> list[Cycle]:
    out = sorted(canon_cycle(c) for c in cycles)
    seen: set[int] = set()
    for c in out:
        if seen & set(c):
            raise ValueError("cycles are not vertex-disjoint")
        seen |= set(c)
    return out


def _cycle_edges(cycle: Cycle) -> set[Edge]:
    k = len(cycle)
    return {norm_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)}


def _all_edges(cycles: Sequence[Cycle]) -> set[Edge]:
    out: set[Edge] = set()
    for c in cycles:
        out |= _cycle_edges(c)
    return out


def _arcs_between(cycle: Cycle, a: int, b: int) -> tuple[list[int], list[int]]:
    """Both arcs of the cycle from a to b, each as a vertex list a..b."""
    pos = {v: i for i, v in enumerate(cycle)}
    ia, ib, ell = pos[a], pos[b], len(cycle)
    fwd = [cycle[(ia + t) % ell] for t in range((ib - ia) % ell + 1)]
    bwd = [cycle[(ia - t) % ell] for t in range((ia - ib) % ell + 1)]
    return fwd, bwd


def _forward_arc(cycle: Cycle, a: int, b: int) -> list[int]:
    return _arcs_between(cycle, a, b)[0]


def _seg(path: Sequence[int], a: int, b: int) -> list[int]:
    """Contiguous portion of a path between two of its vertices, from a to b."""
    ia, ib = path.index(a), path.index(b)
    if ia <= ib:
        return list(path[ia : ib + 1])
    return list(path[ib : ia + 1])[::-1]


def _interior(arc: Sequence[int]) -> list[int]:
    return list(arc[1:-1])


# ---------------------------------------------------------------------------
# output checking


def _checked(
    p: Sequence[int],
    q: Sequence[int],
    target: set[Edge],
    allowed: set[int] | None = None,
) -> TwoPaths:
    paths = (tuple(p), tuple(q))
    for vs in paths:
        check_path(vs)
        if allowed is not None and not set(vs) <= allowed:
            raise InternalInvariantError(
                f"path strays outside the instance: {sorted(set(vs) - allowed)}"
            )
    parity: Counter[Edge] = Counter()
    for vs in paths:
        for e in path_edges(vs):
            parity[e] += 1
    odd = {e for e, c in parity.items() if c % 2 == 1}
    if odd != target:
        raise InternalInvariantError(
            f"two-path XOR mismatch: missing {sorted(target - odd)}, "
            f"excess {sorted(odd - target)}"
        )
    return TwoPaths(*paths)


def _path_with_edge(paths: Sequence[Sequence[int]], edge: Edge) -> int:
    """Index of the unique path containing the edge."""
    hits = []
    e = set(edge)
    for i, p in enumerate(paths):
        if any({p[t], p[t + 1]} == e for t in range(len(p) - 1)):
            hits.append(i)
    if len(hits) != 1:
        raise InternalInvariantError(f"edge {edge} found in {len(hits)} paths")
    return hits[0]


def _replace_edge_with_walk(
    path: Sequence[int], edge: Edge, walk: Sequence[int]
) -> list[int]:
    """Substitute a u-v edge of the path by a u..v walk with fresh interior."""
    e = set(edge)
    for i in range(len(path) - 1):
        if {path[i], path[i + 1]} == e:
            w = list(walk)
            if w[0] != path[i]:
                w.reverse()
            return list(path[:i]) + w + list(path[i + 2 :])
    raise InternalInvariantError(f"edge {edge} not on path {list(path)}")


def _insert_detour(path: Sequence[int], edge: Edge, arc: Sequence[int]) -> list[int]:
    """Reroute a u-v edge of the path through a vertex-disjoint arc.

    The arc keeps its own orientation relative to the normalized edge, so
    applying this to two paths sharing the edge adds the same two connector
    edges to both (they cancel in the XOR).
    """
    e = set(edge)
    lo = min(edge)
    for i in range(len(path) - 1):
        if {path[i], path[i + 1]} == e:
            w = list(arc) if path[i] == lo else list(arc)[::-1]
            return list(path[: i + 1]) + w + list(path[i + 1 :])
    raise InternalInvariantError(f"edge {edge} not on path {list(path)}")


# ---------------------------------------------------------------------------
# threading


def _thread(
    cycles: Sequence[Cycle],
    x_first: int | None = None,
    y_last: int | None = None,
    avoid: int | None = None,
) -> tuple[list[int], list[int]]:
    """Chain ordered cycles into two paths sharing both endpoints.

    Per cycle two split vertices x_i, y_i are chosen (never `avoid`), the two
    complementary arcs go one to each output path, and consecutive cycles are
    linked by a connector edge y_i -> x_{i+1} present in both paths.  x_first
    pins the first split vertex, y_last the final one.
    """
    k = len(cycles)
    P: list[int] = []
    Q: list[int] = []
    for i, cyc in enumerate(cycles):
        pool = [v for v in sorted(cyc) if v != avoid]
        x = x_first if i == 0 and x_first is not None else None
        y = y_last if i == k - 1 and y_last is not None else None
        if x is None:
            x = next(v for v in pool if v != y)
        if y is None:
            y = next(v for v in pool if v != x)
        arc1, arc2 = _arcs_between(cyc, x, y)
        if avoid is not None and avoid in arc1:
            p_arc, q_arc = arc2, arc1
        elif avoid is not None and avoid in arc2:
            p_arc, q_arc = arc1, arc2
        else:
            p_arc, q_arc = (arc1, arc2) if arc1[1] <= arc2[1] else (arc2, arc1)
        P.extend(p_arc)
        Q.extend(q_arc)
    return P, Q


def cover_cycles(cycles: Iterable[Sequence[int]]) -> TwoPaths:
    """Odd-cover a nonempty set of vertex-disjoint cycles with two paths."""
    cs = _prepare(cycles)
    if not cs:
        raise ValueError("empty cycle set")
    p, q = _thread(cs)
    return _checked(p, q, _all_edges(cs), {v for c in cs for v in c})


def cover_cycles_with_endpoint(cycles: Iterable[Sequence[int]], z: int) -> TwoPaths:
    """As cover_cycles, but both paths end at the prescribed vertex z."""
    cs = _prepare(cycles)
    if not cs:
        raise ValueError("empty cycle set")
    order = [c for c in cs if z not in c] + [c for c in cs if z in c]
    if z not in order[-1]:
        raise ValueError(f"endpoint {z} lies on no cycle")
    p, q = _thread(order, y_last=z)
    return _checked(p, q, _all_edges(cs), {v for c in cs for v in c})


# ---------------------------------------------------------------------------
# one-edge integration


def _cycle_of(cycles: Sequence[Cycle], v: int) -> int | None:
    for j, c in enumerate(cycles):
        if v in c:
            return j
    return None


def _theta_two_paths(cycle: Cycle, u: int, v: int, z: int | None) -> tuple[list[int], list[int]]:
    """Cycle plus chord uv, split into two paths both ending at z."""
    arc_a, arc_b = _arcs_between(cycle, u, v)
    if z is None:
        z = min(_interior(arc_a) + _interior(arc_b))
    if z in _interior(arc_b):
        pass
    elif z in _interior(arc_a):
        arc_a, arc_b = arc_b, arc_a
    else:
        raise ValueError(f"endpoint {z} not usable on the chorded cycle")
    iz = arc_b.index(z)
    p = [u] + arc_b[iz:][::-1]  # the chord u-v, then v ..B.. z
    q = arc_a[::-1] + arc_b[1:iz + 1]  # v ..A.. u, then u ..B.. z
    return p, q


def _plus_one(
    cycles: Sequence[Cycle], f: Edge, z: int | None
) -> tuple[list[int], list[int]]:
    """Two paths covering {f} union E(cycles) for f outside the cycle edges.

    Both paths share their last vertex (z when given).  Raises
    ExceptionalEndpointError when z is requested on the same cycle that
    carries both endpoints of f while other cycles exist.
    """
    u, v = f
    if z is not None and (z in f or _cycle_of(cycles, z) is None):
        raise ValueError(f"common endpoint {z} must lie on a cycle, off {f}")
    cu, cv = _cycle_of(cycles, u), _cycle_of(cycles, v)

    if cu is not None and cu == cv:
        if len(cycles) == 1:
            return _theta_two_paths(cycles[0], u, v, z)
        if z is not None and z in cycles[cu]:
            raise ExceptionalEndpointError(
                f"z={z} shares a cycle with both endpoints of {f}"
            )
        rest = [c for i, c in enumerate(cycles) if i != cu]
        last = rest[-1] if z is None else rest[_cycle_of(rest, z)]
        order = [cycles[cu]] + [c for c in rest if c is not last] + [last]
        zz = z if z is not None else min(set(last) - {u, v})
        p0, q0 = _thread(order, x_first=v, y_last=zz, avoid=u)
        return [u] + p0, q0

    if z is not None and cv is not None and z in cycles[cv]:
        u, v = v, u
        cu, cv = cv, cu
    if z is None and cv is None and cu is not None:
        u, v = v, u
        cu, cv = cv, cu

    rest = list(cycles)
    first = rest.pop(cv) if cv is not None else None
    if z is not None:
        zj = _cycle_of(rest, z)
        if zj is None:
            raise ExceptionalEndpointError(
                f"z={z} shares a cycle with both endpoints of {f}"
            )
        order = ([first] if first is not None else []) + [
            c for t, c in enumerate(rest) if t != zj
        ] + [rest[zj]]
    else:
        order = ([first] if first is not None else []) + rest
    zz = z if z is not None else min(set(order[-1]) - {u, v})
    p0, q0 = _thread(
        order, x_first=(v if first is not None else None), y_last=zz, avoid=u
    )
    if first is not None:
        return [u] + p0, q0
    return [u, v] + p0, [v] + q0


def _minus_one(cycles: Sequence[Cycle], f: Edge) -> tuple[list[int], list[int]]:
    """Two paths covering E(cycles) minus one cycle edge f."""
    j = next(i for i, c in enumerate(cycles) if f in _cycle_edges(c))
    walk = _cycle_minus_edge(cycles[j], f)
    if len(cycles) == 1:
        w = min(walk[1:-1])
        iw = walk.index(w)
        return walk[: iw + 1], walk[iw:]
    rest = [c for i, c in enumerate(cycles) if i != j]
    p, q = _plus_one(rest, f, None)
    paths = [p, q]
    hit = _path_with_edge(paths, f)
    paths[hit] = _replace_edge_with_walk(paths[hit], f, walk)
    return paths[0], paths[1]


def _cycle_minus_edge(cycle: Cycle, f: Edge) -> list[int]:
    """The cycle as a path from f[0] to f[1] avoiding the edge f."""
    k = len(cycle)
    for i in range(k):
        if {cycle[i], cycle[(i + 1) % k]} == set(f):
            walk = [cycle[(i + 1 + t) % k] for t in range(k)]
            return walk if walk[0] == f[0] else walk[::-1]
    raise InternalInvariantError(f"edge {f} not on cycle {cycle}")


def integrate_one_edge(
    cycles: Iterable[Sequence[int]], f: Edge, z: int | None = None
) -> TwoPaths:
    """Odd-cover {f} XOR E(cycles) with two paths.

    For f outside the cycle edges the two paths share a common endpoint,
    which can be pinned to z (see ExceptionalEndpointError for the one
    unavailable request).  For f on a cycle the construction dispatches to
    the edge-removal variant and z must be omitted.
    """
    cs = _prepare(cycles)
    if not cs:
        raise ValueError("empty cycle set")
    f = norm_edge(*f)
    if f in _all_edges(cs):
        if z is not None:
            raise ValueError("common endpoint is not supported when f lies on a cycle")
        p, q = _minus_one(cs, f)
        target = _all_edges(cs) - {f}
    else:
        p, q = _plus_one(cs, f, z)
        target = _all_edges(cs) | {f}
    allowed = {v for c in cs for v in c} | set(f)
    return _checked(p, q, target, allowed)


# ---------------------------------------------------------------------------
# two-edge integration


def is_exceptional_k4(
    cycles: Iterable[Sequence[int]], f1: Edge, f2: Edge
) -> bool:
    """Does {f1, f2} + some cycle form the obstructed K4-subdivision?

    True iff at least two cycles exist, one of them carries all four edge
    endpoints in alternating (crossing) cyclic order, and at most one of the
    four demarcated arcs has an internal vertex.
    """
    cs = _prepare(cycles)
    f1, f2 = norm_edge(*f1), norm_edge(*f2)
    if set(f1) & set(f2):
        raise ValueError("edges share a vertex")
    if len(cs) < 2:
        return False
    pts = set(f1) | set(f2)
    for cyc in cs:
        if pts <= set(cyc):
            order, arcs = _demarcation(cyc, f1, f2)
            crossing = {order[0], order[2]} in (set(f1), set(f2))
            internals = sum(1 for a in arcs if len(a) > 2)
            return crossing and internals <= 1
    return False


def _demarcation(cyc: Cycle, f1: Edge, f2: Edge) -> tuple[list[int], list[list[int]]]:
    """The four endpoints in cyclic order, and the four arcs between them."""
    pos = {v: i for i, v in enumerate(cyc)}
    order = sorted(set(f1) | set(f2), key=lambda v: pos[v])
    arcs = [_forward_arc(cyc, order[t], order[(t + 1) % 4]) for t in range(4)]
    return order, arcs


def _case_all_on_one_cycle(
    cs: list[Cycle], j: int, f1: Edge, f2: Edge
) -> IntegrationResult:
    cyc = cs[j]
    others = [c for i, c in enumerate(cs) if i != j]
    pts, S = _demarcation(cyc, f1, f2)
    crossing = {pts[0], pts[2]} in (set(f1), set(f2))
    inter = [len(a) - 2 for a in S]

    if not others:
        if crossing:
            a0, a1, a2, a3 = pts
            p = S[0] + S[1][1:] + S[2][1:]
            q = [a2] + S[3][::-1] + [a1]
            return TwoPaths(tuple(p), tuple(q))
        r = 0 if {pts[0], pts[1]} in (set(f1), set(f2)) else 1
        b = [pts[(r + t) % 4] for t in range(4)]
        T = [S[(r + t) % 4] for t in range(4)]
        u1, v1, v2, u2 = b
        r1, rv, r2, ru = T
        z1, z2 = min(_interior(r1)), min(_interior(r2))
        p = [u1] + _seg(r1, v1, z1) + _seg(r2, z2, u2) + [v2]
        q = (
            _seg(ru, u2, u1)
            + _seg(r1, u1, z1)[1:]
            + _seg(r2, z2, v2)
            + _seg(rv, v2, v1)[1:]
        )
        return TwoPaths(tuple(p), tuple(q))

    if crossing:
        if sum(1 for c in inter if c > 0) <= 1:
            return ExceptionalCase(j, tuple(inter))
        P, Q = _thread(others)
        for i in range(2):
            if inter[i] and inter[i + 2]:
                u1, u2, v1, v2 = (pts[(i + t) % 4] for t in range(4))
                ru, r2, rv, r1 = (S[(i + t) % 4] for t in range(4))
                zu, zv = min(_interior(ru)), min(_interior(rv))
                p = (
                    r1[::-1]
                    + [u2]
                    + _seg(ru, u2, zu)[1:]
                    + P
                    + _seg(rv, zv, v1)
                )
                q = r2 + [u1] + _seg(ru, u1, zu)[1:] + Q + _seg(rv, zv, v2)
                return TwoPaths(tuple(p), tuple(q))
        for i in range(4):
            if inter[i] and inter[(i + 1) % 4]:
                v2, u1, u2, v1 = (pts[(i + t) % 4] for t in range(4))
                r1, ru, r2, rv = (S[(i + t) % 4] for t in range(4))
                z1, zu = min(_interior(r1)), min(_interior(ru))
                p = [v1, u1] + _seg(ru, u1, zu)[1:] + P + _seg(r1, z1, v2) + [u2]
                q = (
                    rv[::-1]
                    + r2[::-1][1:]
                    + _seg(ru, u2, zu)[1:]
                    + Q
                    + _seg(r1, z1, u1)
                )
                return TwoPaths(tuple(p), tuple(q))
        raise InternalInvariantError("no usable arc pair in crossing case")

    P, Q = _thread(others)
    r = 0 if {pts[0], pts[1]} in (set(f1), set(f2)) else 1
    b = [pts[(r + t) % 4] for t in range(4)]
    T = [S[(r + t) % 4] for t in range(4)]
    u1, v1, v2, u2 = b
    r1, rv, r2, ru = T
    z1, z2 = min(_interior(r1)), min(_interior(r2))
    p = [u1] + _seg(r1, v1, z1) + P + _seg(r2, z2, u2) + [v2]
    q = (
        _seg(ru, u2, u1)
        + _seg(r1, u1, z1)[1:]
        + Q
        + _seg(r2, z2, v2)
        + _seg(rv, v2, v1)[1:]
    )
    return TwoPaths(tuple(p), tuple(q))


def _case_three_on_one_cycle(
    cs: list[Cycle], j: int, f1: Edge, f2: Edge
) -> TwoPaths:
    cyc = cs[j]
    on = set(cyc)
    f_on, f_mix = (f1, f2) if set(f1) <= on else (f2, f1)
    u1 = next(v for v in f_mix if v in on)
    v1 = next(v for v in f_mix if v not in on)
    u2, v2 = f_on
    pos = {v: i for i, v in enumerate(cyc)}
    q3 = sorted((u1, u2, v2), key=lambda v: pos[v])
    T = {frozenset((q3[t], q3[(t + 1) % 3])): _forward_arc(cyc, q3[t], q3[(t + 1) % 3]) for t in range(3)}
    r2 = T[frozenset((u2, v2))]
    ru = T[frozenset((u1, u2))]
    rv = T[frozenset((u1, v2))]
    y1 = min(_interior(r2))
    rest = [c for i, c in enumerate(cs) if i != j]
    if rest:
        hit = _cycle_of(rest, v1)
        if hit is not None:
            order = [c for i, c in enumerate(rest) if i != hit] + [rest[hit]]
            pr, qr = _thread(order, y_last=v1)
            tail1, tail2 = pr, qr
        else:
            pr, qr = _thread(rest)
            tail1, tail2 = pr + [v1], qr + [v1]
    else:
        tail1, tail2 = [v1], [v1]
    p = [u2] + _seg(r2, v2, y1) + tail1 + [u1]
    q = _seg(rv, v2, u1) + _seg(ru, u1, u2)[1:] + _seg(r2, u2, y1)[1:] + tail2
    return TwoPaths(tuple(p), tuple(q))


def _safe_common_endpoint(cs: list[Cycle], f: Edge) -> int:
    """A z for _plus_one that cannot trigger its exceptional clause."""
    u, v = f
    cu, cv = _cycle_of(cs, u), _cycle_of(cs, v)
    if cu is not None and cu == cv and len(cs) >= 2:
        return min(w for i, c in enumerate(cs) if i != cu for w in c)
    return min(w for c in cs for w in c if w not in f)


def _case_spread(cs: list[Cycle], f1: Edge, f2: Edge) -> TwoPaths:
    """Every cycle holds at most two of the four endpoints."""
    pts = [*f1, *f2]
    off = [v for v in pts if _cycle_of(cs, v) is None]
    if off:
        fa, fb = (f1, f2) if (f1[0] in off or f1[1] in off) else (f2, f1)
        ua = min(v for v in fa if v in off)
        va = fa[0] if fa[1] == ua else fa[1]
        if _cycle_of(cs, va) is not None:
            p, q = _plus_one(cs, fb, z=va)
            return TwoPaths(tuple(p + [ua]), tuple(q))
        z = _safe_common_endpoint(cs, fb)
        p, q = _plus_one(cs, fb, z=z)
        return TwoPaths(tuple(p + [va, ua]), tuple(q + [va]))

    counts = [sum(1 for v in pts if v in c) for c in cs]
    if counts.count(2) == 2:
        return _case_two_plus_two(cs, f1, f2)

    lone = counts.index(1)
    w = next(v for v in pts if v in cs[lone])
    fa, fb = (f1, f2) if w in f1 else (f2, f1)
    va = fa[0] if fa[1] == w else fa[1]
    rest = [c for i, c in enumerate(cs) if i != lone]
    p, q = _plus_one(rest, fb, z=va)
    shared = sorted(set(path_edges(p)) & set(path_edges(q)))
    if not shared:
        raise InternalInvariantError("reroute case found no shared edge")
    e = shared[0]
    pool = sorted(set(cs[lone]) - {w})
    xk, yk = pool[0], pool[1]
    arc1, arc2 = _arcs_between(cs[lone], xk, yk)
    p_arc, q_arc = (arc1, arc2) if w not in arc1 else (arc2, arc1)
    new_p = _insert_detour(p, e, p_arc)
    new_q = _insert_detour(q, e, q_arc)
    return TwoPaths(tuple(new_p + [w]), tuple(new_q))


def _case_two_plus_two(cs: list[Cycle], f1: Edge, f2: Edge) -> TwoPaths:
    pts = [*f1, *f2]
    counts = [sum(1 for v in pts if v in c) for c in cs]
    j1, j2 = [i for i, c in enumerate(counts) if c == 2]
    c1, c2 = cs[j1], cs[j2]
    rest = [c for i, c in enumerate(cs) if i not in (j1, j2)]

    if set(f1) <= set(c1) or set(f1) <= set(c2):
        ca, fa = (c1, f1) if set(f1) <= set(c1) else (c2, f1)
        cb, fb = (c2, f2) if ca is c1 else (c1, f2)
        z1 = min(set(ca) - set(fa))
        z2 = min(set(cb) - set(fb))
        p1, q1 = _plus_one([ca], fa, z=z1)  # both end at z1
        p2, q2 = _plus_one([cb], fb, z=z2)  # both end at z2
        if rest:
            mid_p, mid_q = _thread(rest)
            return TwoPaths(
                tuple(p1 + mid_p + p2[::-1]), tuple(q1 + mid_q + q2[::-1])
            )
        return TwoPaths(tuple(p1 + p2[::-1]), tuple(q1 + q2[::-1]))

    a1 = next(v for v in f1 if v in c1)
    b1 = f1[0] if f1[1] == a1 else f1[1]
    a2 = next(v for v in f2 if v in c1)
    b2 = f2[0] if f2[1] == a2 else f2[1]
    arc1, arc1b = _arcs_between(c1, a1, a2)
    p1_arc, q1_arc = (arc1, arc1b) if len(arc1) > 2 else (arc1b, arc1)
    arc2, arc2b = _arcs_between(c2, b2, b1)
    p2_arc, q2_arc = (arc2, arc2b) if len(arc2) > 2 else (arc2b, arc2)
    cstar = tuple(p1_arc + p2_arc)  # a1..a2, f2 jump, b2..b1, f1 closes
    sub = _integrate_two(rest + [cstar], norm_edge(a1, a2), norm_edge(b1, b2))
    if not isinstance(sub, TwoPaths):
        raise InternalInvariantError("parallel-chord reduction hit the obstruction")
    paths = [list(sub.p), list(sub.q)]
    for fp, arc in ((norm_edge(a1, a2), q1_arc), (norm_edge(b1, b2), q2_arc)):
        hit = _path_with_edge(paths, fp)
        paths[hit] = _replace_edge_with_walk(paths[hit], fp, arc)
    return TwoPaths(tuple(paths[0]), tuple(paths[1]))


def _minus_two(cs: list[Cycle], f1: Edge, f2: Edge) -> TwoPaths:
    segs = []
    broken = []
    for f in (f1, f2):
        j = next(i for i, c in enumerate(cs) if f in _cycle_edges(c))
        broken.append(j)
    if broken[0] == broken[1]:
        cyc = cs[broken[0]]
        k = len(cyc)
        cuts = sorted(
            i for i in range(k) if {cyc[i], cyc[(i + 1) % k]} in (set(f1), set(f2))
        )
        a, b = cuts
        segs.append([cyc[(a + 1 + t) % k] for t in range(b - a)])
        segs.append([cyc[(b + 1 + t) % k] for t in range(k - (b - a))])
    else:
        segs.append(_cycle_minus_edge(cs[broken[0]], f1))
        segs.append(_cycle_minus_edge(cs[broken[1]], f2))
    rest = [c for i, c in enumerate(cs) if i not in broken]
    if not rest:
        return TwoPaths(tuple(segs[0]), tuple(segs[1]))
    fps = [norm_edge(s[0], s[-1]) for s in segs]
    sub = _integrate_two(rest, fps[0], fps[1])
    if not isinstance(sub, TwoPaths):
        raise InternalInvariantError("segment-closing reduction hit the obstruction")
    paths = [list(sub.p), list(sub.q)]
    for fp, seg in zip(fps, segs):
        hit = _path_with_edge(paths, fp)
        paths[hit] = _replace_edge_with_walk(paths[hit], fp, seg)
    return TwoPaths(tuple(paths[0]), tuple(paths[1]))


def _plus_minus(cs: list[Cycle], f_in: Edge, f_out: Edge) -> TwoPaths:
    """f_in lies on a cycle, f_out does not; cover E(C) - f_in + f_out."""
    j = next(i for i, c in enumerate(cs) if f_in in _cycle_edges(c))
    cj = cs[j]
    s_walk = _cycle_minus_edge(cj, f_in)  # u1 .. v1
    rest = [c for i, c in enumerate(cs) if i != j]
    u2 = next((v for v in f_out if v in cj), None)

    if u2 is None:
        if not rest:
            return TwoPaths(tuple(s_walk), tuple(f_out))
        z = _safe_common_endpoint(rest, f_out)
        p, q = _plus_one(rest, f_out, z=z)
        return TwoPaths(tuple(p + s_walk), tuple(q + [s_walk[0]]))

    v2 = f_out[0] if f_out[1] == u2 else f_out[1]
    if not rest:
        if v2 in cj:
            ia, ib = sorted((s_walk.index(u2), s_walk.index(v2)))
            return TwoPaths(
                tuple(s_walk[: ia + 1] + s_walk[ib:]),
                tuple(s_walk[ia : ib + 1]),
            )
        iu = s_walk.index(u2)
        return TwoPaths(tuple(s_walk[: iu + 1] + [v2]), tuple(s_walk[iu:]))

    if v2 in cj:
        if s_walk.index(u2) > s_walk.index(v2):
            s_walk.reverse()
        u1, v1 = s_walk[0], s_walk[-1]
        p0, q0 = _thread(rest)
        p = _seg(s_walk, u2, v1) + p0 + [u1]
        q = [v1] + q0 + s_walk[: s_walk.index(u2) + 1] + [v2]
        return TwoPaths(tuple(p), tuple(q))

    v1 = s_walk[-1]
    if _cycle_of(rest, v2) is not None:
        order = [c for c in rest if v2 not in c] + [c for c in rest if v2 in c]
        p0, q0 = _thread(order, y_last=v2)
        return TwoPaths(tuple(s_walk + p0), tuple([v1] + q0 + [u2]))
    p0, q0 = _thread(rest)
    return TwoPaths(tuple(s_walk + p0 + [v2]), tuple([v1] + q0 + [v2, u2]))


def _integrate_two(cs: list[Cycle], f1: Edge, f2: Edge) -> IntegrationResult:
    if not cs:
        return TwoPaths(tuple(f1), tuple(f2))
    edges = _all_edges(cs)
    in1, in2 = f1 in edges, f2 in edges
    if in1 and in2:
        return _minus_two(cs, f1, f2)
    if in1 or in2:
        f_in, f_out = (f1, f2) if in1 else (f2, f1)
        return _plus_minus(cs, f_in, f_out)
    pts = [*f1, *f2]
    counts = [sum(1 for v in pts if v in c) for c in cs]
    if 4 in counts:
        return _case_all_on_one_cycle(cs, counts.index(4), f1, f2)
    if 3 in counts:
        return _case_three_on_one_cycle(cs, counts.index(3), f1, f2)
    return _case_spread(cs, f1, f2)


def integrate_two_edges(
    cycles: Iterable[Sequence[int]], f1: Edge, f2: Edge
) -> IntegrationResult:
    """Odd-cover {f1, f2} XOR E(cycles) with two paths, or report the
    K4-subdivision obstruction.

    The two edges must be vertex-disjoint but may lie on, touch, or avoid
    the cycles in any combination.
    """
    cs = _prepare(cycles)
    f1, f2 = norm_edge(*f1), norm_edge(*f2)
    if set(f1) & set(f2):
        raise ValueError("edges share a vertex")
    res = _integrate_two(cs, f1, f2)
    if isinstance(res, ExceptionalCase):
        return res
    target = _all_edges(cs) ^ {f1, f2}
    allowed = {v for c in cs for v in c} | set(f1) | set(f2)
    return _checked(res.p, res.q, target, allowed)


def choose_integrable_pair(
    cycles: Iterable[Sequence[int]], edges: Sequence[Edge]
) -> tuple[tuple[Edge, Edge], TwoPaths]:
    """Pick two of three disjoint edges whose integration succeeds.

    At most one of the three unordered pairs can be obstructed, so a fixed
    scan order always finds a working pair.
    """
    fs = [norm_edge(*f) for f in edges]
    if len(fs) != 3:
        raise ValueError("exactly three candidate edges required")
    cs = _prepare(cycles)
    for a, b in ((0, 1), (0, 2), (1, 2)):
        res = integrate_two_edges(cs, fs[a], fs[b])
        if isinstance(res, TwoPaths):
            return (fs[a], fs[b]), res
    raise InternalInvariantError("all three edge pairs were obstructed")


def integrate_four_edges(
    cycles_a: Iterable[Sequence[int]],
    cycles_b: Iterable[Sequence[int]],
    edges: Sequence[Edge],
) -> list[tuple[int, ...]]:
    """Odd-cover {f1..f4} XOR E(A) XOR E(B) with four paths.

    Two edges are routed into each cycle set; the split is chosen so that
    neither pairing is obstructed (possible for any four disjoint edges).
    """
    fs = [norm_edge(*f) for f in edges]
    if len(fs) != 4:
        raise ValueError("exactly four edges required")
    seen: set[int] = set()
    for f in fs:
        if seen & set(f):
            raise ValueError("edges are not pairwise disjoint")
        seen |= set(f)
    ca, cb = _prepare(cycles_a), _prepare(cycles_b)

    def ok(cs: list[Cycle], i: int, j: int) -> bool:
        return not is_exceptional_k4(cs, fs[i], fs[j])

    hub = next(
        x for x in range(3) if all(ok(ca, x, y) for y in range(3) if y != x)
    )
    y, z = [t for t in range(3) if t != hub]
    if ok(cb, y, 3):
        pair_a, pair_b = (hub, z), (y, 3)
    elif ok(cb, z, 3):
        pair_a, pair_b = (hub, y), (z, 3)
    else:
        raise InternalInvariantError("no workable pairing for the second set")
    res_a = integrate_two_edges(ca, fs[pair_a[0]], fs[pair_a[1]])
    res_b = integrate_two_edges(cb, fs[pair_b[0]], fs[pair_b[1]])
    if not isinstance(res_a, TwoPaths) or not isinstance(res_b, TwoPaths):
        raise InternalInvariantError("chosen pairings were obstructed after all")
    return [res_a.p, res_a.q, res_b.p, res_b.q]
