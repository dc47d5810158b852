"""Graph, path, and cycle primitives with GF(2) edge-set algebra.

Everything downstream works in the edge space of the complete graph on a
fixed vertex universe {0, ..., n-1}: a graph is a 0/1 vector indexed by the
C(n, 2) unordered pairs, and a collection of paths (or cycles) odd-covers a
graph when the XOR of their edge sets equals the graph's edge set -- every
edge hit an odd number of times, every nonedge an even number.  Covers may
freely use nonedges of the target; that freedom is what separates odd-covers
from ordinary path decompositions.

Conventions:
  Vertices are ints 0..n-1.  Edges are normalized tuples (u, v) with u < v.
  Paths and cycles are tuples of distinct vertex ids (a cycle does not
  repeat its first vertex at the end).  Edge vectors are ints used as
  bitsets; pair (u, v) with u < v maps to bit u*n - u*(u+1)/2 + (v - u - 1),
  so witnesses are bit-exact across implementations.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Edge = tuple[int, int]


class InternalInvariantError(RuntimeError):
    """A structural guarantee failed; indicates a bug, not bad input."""


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def edge_index(n: int, u: int, v: int) -> int:
    """Bit position of edge (u, v) in the C(n, 2)-bit edge vector."""
    u, v = norm_edge(u, v)
    if v >= n:
        raise ValueError(f"edge ({u},{v}) outside universe of size {n}")
    return u * n - u * (u + 1) // 2 + (v - u - 1)


def index_edge(n: int, i: int) -> Edge:
    """Inverse of edge_index (linear scan; used for diagnostics only)."""
    for u in range(n - 1):
        row = n - u - 1
        if i < row:
            return (u, u + 1 + i)
        i -= row
    raise ValueError("edge index out of range")


@dataclass(frozen=True)
class EdgeVector:
    """Subset of the C(n, 2) vertex pairs, stored as an int bitset."""

    n: int
    bits: int = 0

    def __xor__(self, other: "EdgeVector") -> "EdgeVector":
        if self.n != other.n:
            raise ValueError(f"universe mismatch: n={self.n} vs n={other.n}")
        return EdgeVector(self.n, self.bits ^ other.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "EdgeVector":
        bits = 0
        for u, v in edges:
            bits ^= 1 << edge_index(n, u, v)
        return cls(n, bits)

    def edges(self) -> list[Edge]:
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(index_edge(self.n, low.bit_length() - 1))
            bits ^= low
        return out

    def weight(self) -> int:
        return self.bits.bit_count()


def xor_edges(a: EdgeVector, b: EdgeVector) -> EdgeVector:
    """Symmetric difference of two edge sets over the same universe."""
    return a ^ b


class Graph:
    """Simple undirected graph on the fixed universe {0, ..., n-1}.

    Isolated vertices are first-class: covers routinely route paths through
    vertices that carry no edges.
    """

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        es = set()
        for u, v in edges:
            e = norm_edge(u, v)
            if e[1] >= n or e[0] < 0:
                raise ValueError(f"edge {e} outside universe of size {n}")
            if e in es:
                raise ValueError(f"duplicate edge {e}")
            es.add(e)
        self.n = n
        self.edges: frozenset[Edge] = frozenset(es)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def edge_vector(self) -> EdgeVector:
        return EdgeVector.from_edges(self.n, self.edges)

    def xor(self, edges: Iterable[Edge]) -> "Graph":
        """Graph whose edge set is the symmetric difference with `edges`."""
        es = set(self.edges)
        for u, v in edges:
            e = norm_edge(u, v)
            if e in es:
                es.remove(e)
            else:
                es.add(e)
        return Graph(self.n, es)

    def remove_edges(self, edges: Iterable[Edge]) -> "Graph":
        drop = {norm_edge(u, v) for u, v in edges}
        missing = drop - self.edges
        if missing:
            raise ValueError(f"edges not present: {sorted(missing)}")
        return Graph(self.n, self.edges - drop)

    def with_extra_vertices(self, extra: int) -> "Graph":
        return Graph(self.n + extra, self.edges)

    def is_even(self) -> bool:
        """All degrees even (the structural prerequisite for cycle covers)."""
        return all(d % 2 == 0 for d in self.degrees())

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists (isolated ones too)."""
        adj = self.adjacency()
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps


def path_edges(vertices: Sequence[int]) -> list[Edge]:
    return [norm_edge(vertices[i], vertices[i + 1]) for i in range(len(vertices) - 1)]


def cycle_edges(vertices: Sequence[int]) -> list[Edge]:
    k = len(vertices)
    return [norm_edge(vertices[i], vertices[(i + 1) % k]) for i in range(k)]


def check_path(vertices: Sequence[int], n: int | None = None) -> None:
    """Validate a path: >= 2 distinct vertices, all inside the universe."""
    if len(vertices) < 2:
        raise ValueError(f"path needs at least 2 vertices, got {list(vertices)}")
    if len(set(vertices)) != len(vertices):
        raise ValueError(f"path repeats a vertex: {list(vertices)}")
    if n is not None and any(v < 0 or v >= n for v in vertices):
        raise ValueError(f"path leaves universe of size {n}: {list(vertices)}")


def check_cycle(vertices: Sequence[int], n: int | None = None) -> None:
    if len(vertices) < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {list(vertices)}")
    if len(set(vertices)) != len(vertices):
        raise ValueError(f"cycle repeats a vertex: {list(vertices)}")
    if n is not None and any(v < 0 or v >= n for v in vertices):
        raise ValueError(f"cycle leaves universe of size {n}: {list(vertices)}")


def degree_profile(g: Graph) -> tuple[int, int, list[int]]:
    """(max degree, number of odd-degree vertices, sorted odd vertices)."""
    deg = g.degrees()
    odd = [v for v in range(g.n) if deg[v] % 2 == 1]
    return (max(deg, default=0), len(odd), odd)


@dataclass
class OddCover:
    """A claimed odd-cover: members XOR to the target's edge set."""

    target: Graph
    members: list[tuple[int, ...]]
    kind: str = "path"  # "path" | "cycle"

    @property
    def count(self) -> int:
        return len(self.members)

    def member_edges(self, i: int) -> list[Edge]:
        vs = self.members[i]
        return cycle_edges(vs) if self.kind == "cycle" else path_edges(vs)


@dataclass
class VerificationReport:
    valid: bool
    member_errors: list[str] = field(default_factory=list)
    xor_ok: bool = False
    missing_edges: list[Edge] = field(default_factory=list)
    excess_edges: list[Edge] = field(default_factory=list)
    parity: dict[Edge, int] = field(default_factory=dict)


def verify_cover(cover: OddCover) -> VerificationReport:
    """Check an odd-cover claim; failures are reported, never raised.

    The XOR test is done with an explicit per-edge parity counter so it is
    independent of the bitset algebra the solvers use.
    """
    if cover.kind not in ("path", "cycle"):
        return VerificationReport(valid=False, member_errors=[f"unknown kind {cover.kind!r}"])
    errors = []
    check = check_cycle if cover.kind == "cycle" else check_path
    parity: Counter[Edge] = Counter()
    for i, vs in enumerate(cover.members):
        try:
            check(vs, cover.target.n)
        except ValueError as exc:
            errors.append(f"member {i}: {exc}")
            continue
        for e in cover.member_edges(i):
            parity[e] += 1
    odd = {e for e, c in parity.items() if c % 2 == 1}
    missing = sorted(cover.target.edges - odd)
    excess = sorted(odd - cover.target.edges)
    xor_ok = not missing and not excess
    return VerificationReport(
        valid=xor_ok and not errors,
        member_errors=errors,
        xor_ok=xor_ok,
        missing_edges=missing,
        excess_edges=excess,
        parity=dict(parity),
    )


def max_subgraph_density(g: Graph, n_limit: int = 12) -> int:
    """ceil of max over subgraphs H (v(H) >= 2) of e(H) / (v(H) - 1).

    The maximum of the ratio is attained on an induced subgraph, so vertex
    subsets suffice.  Exponential in n; guarded by n_limit.
    """
    if g.n > n_limit:
        raise ValueError(f"density bound needs n <= {n_limit}, got n={g.n}")
    adj_bits = [0] * g.n
    for u, v in g.edges:
        adj_bits[u] |= 1 << v
        adj_bits[v] |= 1 << u
    best_num, best_den = 0, 1  # max of num/den as a fraction
    for s in range(1, 1 << g.n):
        nv = s.bit_count()
        if nv < 2:
            continue
        ne = 0
        t = s
        while t:
            low = t & -t
            v = low.bit_length() - 1
            ne += (adj_bits[v] & s).bit_count()
            t ^= low
        ne //= 2
        if ne * best_den > best_num * (nv - 1):
            best_num, best_den = ne, nv - 1
    return -(-best_num // best_den)  # ceil


def lower_bound(g: Graph, with_density: bool = False) -> int:
    """Floor on the path odd-cover number.

    Each path has at most two odd-degree vertices and maximum degree 2, so
    max{v_odd/2, ceil(delta/2)} paths are always necessary.  With
    with_density=True (n <= 12) the Nash-Williams arboricity bound
    max_H ceil(e(H)/(v(H)-1)) is folded in as well.
    """
    delta, v_odd, _ = degree_profile(g)
    bound = max(v_odd // 2, -(-delta // 2))
    if with_density:
        bound = max(bound, max_subgraph_density(g))
    return bound
