"""Zero-divisor graphs of Z_m, explicit and as a divisor-class quotient.

The explicit graph is built by iterating divisor-class pairs rather than
all vertex pairs: x ~ y iff m | x*y, and m | x*y depends only on
gcd(x, m) and gcd(y, m), so one divisibility check per class pair settles
every cross edge at once.

Eccentricities run a breadth-first search from every vertex; the searches
are advanced in lockstep as bitmask reach sets so the shallow BFS layers
(zero-divisor graphs have diameter <= 3) cost a handful of big-int ORs per
vertex instead of a Python-level queue walk.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from math import gcd

from .errors import DisconnectedGraphError, VertexCapError
from .ring_core import Modulus, zero_divisors

DEFAULT_VERTEX_CAP = 20000

EXPORT_FORMATS = ("dot", "edges", "json")


class ZeroDivisorGraph:
    """Simple graph on the nonzero zero divisors of Z_m; immutable once built."""

    def __init__(self, modulus: Modulus, vertices, adj, edge_count: int):
        self.modulus = modulus
        self.vertices: tuple[int, ...] = tuple(vertices)
        self._adj = adj  # list of neighbor index lists, parallel to vertices
        self.edge_count = edge_count
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self._ecc_idx: list[int] | None = None

    def __repr__(self):
        return (
            f"ZeroDivisorGraph(m={self.modulus.m}, vertices={len(self.vertices)}, "
            f"edges={self.edge_count})"
        )

    def degree(self, v: int) -> int:
        return len(self._adj[self._index[v]])

    def degrees(self) -> dict[int, int]:
        return {v: len(self._adj[i]) for i, v in enumerate(self.vertices)}

    def neighbors(self, v: int) -> list[int]:
        verts = self.vertices
        return sorted(verts[u] for u in self._adj[self._index[v]])

    def edges(self):
        """Yield edges as (u, v) label pairs with u < v."""
        verts = self.vertices
        for i, nbrs in enumerate(self._adj):
            vi = verts[i]
            for u in nbrs:
                if u > i:
                    yield (vi, verts[u])

    def _closed_masks(self) -> list[int]:
        n = len(self.vertices)
        nbytes = (n + 7) >> 3
        masks = []
        for i, nbrs in enumerate(self._adj):
            row = bytearray(nbytes)
            row[i >> 3] |= 1 << (i & 7)
            for u in nbrs:
                row[u >> 3] |= 1 << (u & 7)
            masks.append(int.from_bytes(row, "little"))
        return masks

    def _ecc_by_index(self) -> list[int]:
        if self._ecc_idx is not None:
            return self._ecc_idx
        n = len(self.vertices)
        if n == 0:
            self._ecc_idx = []
            return self._ecc_idx
        if n == 1:
            self._ecc_idx = [0]
            return self._ecc_idx
        full = (1 << n) - 1
        adj = self._adj
        reach = self._closed_masks()  # reach[i] after one BFS layer
        ecc = [0] * n
        active = list(range(n))
        k = 1
        while active:
            still = []
            for i in active:
                if reach[i] == full:
                    ecc[i] = k
                    reach[i] = full  # drop the per-vertex mask object
                else:
                    still.append(i)
            if not still:
                break
            # advance every unfinished BFS by one layer (Jacobi update: all
            # reads come from the previous layer, or the result depends on
            # iteration order)
            nxt = reach[:]
            progressed = False
            for i in still:
                r = reach[i]
                for u in adj[i]:
                    r |= reach[u]
                if r != reach[i]:
                    progressed = True
                nxt[i] = r
            if not progressed:
                raise DisconnectedGraphError(
                    f"zero-divisor graph of {self.modulus.m} is disconnected; "
                    "this indicates a construction bug"
                )
            reach = nxt
            k += 1
        self._ecc_idx = ecc
        return ecc

    def eccentricities(self) -> dict[int, int]:
        ecc = self._ecc_by_index()
        return {v: ecc[i] for i, v in enumerate(self.vertices)}

    def eccentricity(self, v: int) -> int:
        return self._ecc_by_index()[self._index[v]]

    def diameter(self) -> int:
        ecc = self._ecc_by_index()
        return max(ecc) if ecc else 0


@dataclass(frozen=True)
class DivisorClass:
    """One gcd class {x : gcd(x, m) = d}; members share a common neighborhood."""

    divisor: int
    size: int
    self_closed: bool  # m | d*d, so distinct members are pairwise adjacent
    degree: int
    eccentricity: int


class QuotientGraph:
    """Compressed zero-divisor graph on gcd classes."""

    def __init__(self, modulus: Modulus, classes, class_adjacency):
        self.modulus = modulus
        self.classes: tuple[DivisorClass, ...] = tuple(classes)
        self.class_adjacency: frozenset[tuple[int, int]] = frozenset(class_adjacency)
        self._by_divisor = {c.divisor: c for c in self.classes}

    def __repr__(self):
        return f"QuotientGraph(m={self.modulus.m}, classes={len(self.classes)})"

    def class_for(self, divisor: int) -> DivisorClass:
        return self._by_divisor[divisor]

    def class_of(self, x: int) -> DivisorClass:
        d = gcd(x, self.modulus.m)
        if d == 1 or x % self.modulus.m == 0:
            raise ValueError(f"{x} is not a nonzero zero divisor mod {self.modulus.m}")
        return self._by_divisor[d]

    def cross_neighbors(self, divisor: int) -> list[int]:
        """Divisors of the classes adjacent to this one, excluding itself."""
        out = []
        for d1, d2 in self.class_adjacency:
            if d1 == divisor and d2 != divisor:
                out.append(d2)
            elif d2 == divisor and d1 != divisor:
                out.append(d1)
        return sorted(out)

    def member_degree(self, x: int) -> int:
        return self.class_of(x).degree

    def member_eccentricity(self, x: int) -> int:
        return self.class_of(x).eccentricity

    def vertex_count(self) -> int:
        return sum(c.size for c in self.classes)

    def edge_count(self) -> int:
        total = 0
        for d1, d2 in self.class_adjacency:
            if d1 == d2:
                s = self._by_divisor[d1].size
                total += s * (s - 1) // 2
            else:
                total += self._by_divisor[d1].size * self._by_divisor[d2].size
        return total


def build_explicit(mod: Modulus, cap: int = DEFAULT_VERTEX_CAP) -> ZeroDivisorGraph:
    """Build the explicit graph; empty for prime m, error above the vertex cap."""
    count = mod.zero_divisor_count()
    if count > cap:
        raise VertexCapError(count, cap)
    m = mod.m
    vertices = []
    class_members: dict[int, list[int]] = {}
    for x in range(2, m):
        d = gcd(x, m)
        if d > 1:
            class_members.setdefault(d, []).append(len(vertices))
            vertices.append(x)
    divisors = sorted(class_members)
    adj: list[list[int]] = [[] for _ in range(len(vertices))]
    edge_count = 0
    for i, d1 in enumerate(divisors):
        for d2 in divisors[i:]:
            if (d1 * d2) % m:
                continue
            a = class_members[d1]
            if d1 == d2:
                s = len(a)
                edge_count += s * (s - 1) // 2
                if s > 1:
                    for idx in a:
                        adj[idx].extend(u for u in a if u != idx)
            else:
                b = class_members[d2]
                edge_count += len(a) * len(b)
                for idx in a:
                    adj[idx].extend(b)
                for idx in b:
                    adj[idx].extend(a)
    return ZeroDivisorGraph(mod, vertices, adj, edge_count)


def build_quotient(mod: Modulus) -> QuotientGraph:
    """Build the gcd-class quotient without enumerating any members."""
    m = mod.m
    items = mod.proper_divisor_items()
    sizes = {d: mod.phi_of_quotient(exps) for d, exps in items}
    divisors = [d for d, _ in items]
    adjacency = set()
    cross: dict[int, list[int]] = {d: [] for d in divisors}
    for i, d1 in enumerate(divisors):
        for d2 in divisors[i:]:
            if (d1 * d2) % m:
                continue
            adjacency.add((d1, d2))
            if d1 != d2:
                cross[d1].append(d2)
                cross[d2].append(d1)
    self_closed = {d: (d, d) in adjacency for d in divisors}

    degrees = {}
    for d in divisors:
        deg = sum(sizes[d2] for d2 in cross[d])
        if self_closed[d]:
            deg += sizes[d] - 1
        degrees[d] = deg

    eccs = _class_eccentricities(divisors, cross, sizes, self_closed)
    classes = [
        DivisorClass(d, sizes[d], self_closed[d], degrees[d], eccs[d])
        for d in divisors
    ]
    return QuotientGraph(mod, classes, adjacency)


def _class_eccentricities(divisors, cross, sizes, self_closed) -> dict[int, int]:
    # Members of one class sit at distance 1 (self-closed) or 2 (through any
    # neighbor class) from each other; cross-class distances come from BFS on
    # the class graph, where a self-loop never shortens a path.
    eccs = {}
    for src in divisors:
        dist = {src: 0}
        queue = deque([src])
        while queue:
            d = queue.popleft()
            for d2 in cross[d]:
                if d2 not in dist:
                    dist[d2] = dist[d] + 1
                    queue.append(d2)
        if len(dist) < len(divisors):
            raise DisconnectedGraphError(
                f"class {src} cannot reach every divisor class; construction bug"
            )
        ecc = max(dist.values())
        if sizes[src] >= 2:
            within = 1 if self_closed[src] else 2
            ecc = max(ecc, within)
        eccs[src] = ecc
    return eccs


def degrees(g: ZeroDivisorGraph) -> dict[int, int]:
    """Vertex -> degree map."""
    return g.degrees()


def eccentricities(g: ZeroDivisorGraph) -> dict[int, int]:
    """Vertex -> eccentricity map; 0 for the single-vertex graph."""
    return g.eccentricities()


def quotient_eccentricities(q: QuotientGraph) -> dict[int, int]:
    """Divisor -> eccentricity shared by every member of that class."""
    return {c.divisor: c.eccentricity for c in q.classes}


def export(g: ZeroDivisorGraph, fmt: str) -> str:
    """Serialize the explicit graph as dot, edge list, or json."""
    if fmt == "edges":
        lines = [f"{u} {v}" for u, v in g.edges()]
        lines.sort()
        return "\n".join(lines)
    if fmt == "dot":
        lines = [f"graph zdg_{g.modulus.m} {{"]
        for v in g.vertices:
            lines.append(f"  {v};")
        for u, v in sorted(g.edges()):
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines)
    if fmt == "json":
        eccs = g.eccentricities()
        payload = {
            "modulus": g.modulus.m,
            "vertices": list(g.vertices),
            "edges": sorted(g.edges()),
            "degrees": {str(v): d for v, d in g.degrees().items()},
            "eccentricities": {str(v): e for v, e in eccs.items()},
        }
        return json.dumps(payload, indent=2, sort_keys=True)
    raise ValueError(f"unknown export format {fmt!r}; expected one of {EXPORT_FORMATS}")


def export_quotient(q: QuotientGraph, fmt: str) -> str:
    """Serialize the quotient graph as dot, edge list, or json."""
    pairs = sorted(q.class_adjacency)
    if fmt == "edges":
        lines = [f"{d1} {d2}" for d1, d2 in pairs]
        lines.sort()
        return "\n".join(lines)
    if fmt == "dot":
        lines = [f"graph zdg_quotient_{q.modulus.m} {{"]
        for c in q.classes:
            lines.append(f'  {c.divisor} [label="d={c.divisor} size={c.size}"];')
        for d1, d2 in pairs:
            lines.append(f"  {d1} -- {d2};")
        lines.append("}")
        return "\n".join(lines)
    if fmt == "json":
        payload = {
            "modulus": q.modulus.m,
            "classes": [
                {
                    "divisor": c.divisor,
                    "size": c.size,
                    "self_closed": c.self_closed,
                    "degree": c.degree,
                    "eccentricity": c.eccentricity,
                }
                for c in q.classes
            ],
            "adjacency": [list(p) for p in pairs],
        }
        return json.dumps(payload, indent=2, sort_keys=True)
    raise ValueError(f"unknown export format {fmt!r}; expected one of {EXPORT_FORMATS}")


def is_zero_divisor_graph(obj) -> bool:
    return isinstance(obj, ZeroDivisorGraph)
