"""Base graphs, the marriage operation and the iterated family built from them."""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Union

from .errors import DegreeMismatch, InvalidParameters, NotCubic, ResourceLimit
from .graph import Graph, complete_graph, delete_vertex, is_cubic, new_graph

#: the six ways to match sorted host neighbours onto sorted guest neighbours
BIJECTIONS: tuple[tuple[int, int, int], ...] = tuple(permutations(range(3)))

BijectionPolicy = Union[str, int]

DEFAULT_MAX_ORDER = 1_000_000


def build_limit() -> int:
    env = os.environ.get("CYCLEFORGE_MAX_BUILD_VERTICES")
    return int(env) if env else DEFAULT_MAX_ORDER


def _bijection_index(policy: BijectionPolicy) -> int:
    if policy == "sorted":
        return 0
    if isinstance(policy, int) and 0 <= policy < 6:
        return policy
    raise InvalidParameters(f"bijection policy must be 'sorted' or 0..5, got {policy!r}")


# -- base graphs --------------------------------------------------------------


def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): outer cycle 0..n-1, spokes i -- n+i, inner edges n+i -- n+(i+k mod n)."""
    if n < 3 or not (1 <= k and 2 * k < n):
        raise InvalidParameters(f"GP({n},{k}) needs n >= 3 and 1 <= k < n/2")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return new_graph(2 * n, edges)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def k4() -> Graph:
    return complete_graph(4)


def _chia_thomassen_half() -> tuple[list[tuple[int, int]], dict[str, int]]:
    # Five inner triangles (apex A, sides B, C), outer triangles (D, E, F) at
    # positions 1..4 and a lone outer apex P at position 0.
    label: dict[str, int] = {}
    for p in range(5):
        for s, name in enumerate("ABC"):
            label[f"{name}{p}"] = 3 * p + s
    for p in range(1, 5):
        for s, name in enumerate("DEF"):
            label[f"{name}{p}"] = 15 + 3 * (p - 1) + s
    label["P0"] = 27

    pairs: list[tuple[str, str]] = []
    for p in range(5):
        pairs += [(f"A{p}", f"B{p}"), (f"A{p}", f"C{p}"), (f"B{p}", f"C{p}")]
        pairs.append((f"C{p}", f"B{(p + 2) % 5}"))
    for p in range(1, 5):
        pairs += [(f"D{p}", f"E{p}"), (f"D{p}", f"F{p}"), (f"E{p}", f"F{p}")]
        pairs.append((f"A{p}", f"D{p}"))
    pairs.append(("A0", "P0"))
    pairs += [("F2", "E1"), ("F4", "E3"), ("P0", "E4"), ("F1", "P0")]
    # E2 and F3 are left at degree 2 for the two edges joining the halves.
    return [(label[a], label[b]) for a, b in pairs], label


def chia_thomassen() -> Graph:
    """The 56-vertex cubic 2-connected girth-3 graph with a unique longest cycle.

    Two identical 28-vertex halves; vertex ``h*28 + x`` is vertex ``x`` of half ``h``.
    """
    half, label = _chia_thomassen_half()
    edges = list(half) + [(a + 28, b + 28) for a, b in half]
    edges.append((label["E2"], 28 + label["F3"]))
    edges.append((label["F3"], 28 + label["E2"]))
    return new_graph(56, edges)


# -- marriage -------------------------------------------------------------------


@dataclass(frozen=True)
class VertexOrigin:
    """Where each vertex of a married graph came from.

    ``pairs[h] = (i, j)``: host vertex ``i`` and guest index ``j`` in the
    compacted guest-minus-marked-vertex graph. Host vertices that were not
    replaced carry ``j = None``.
    """

    pairs: tuple[tuple[int, Optional[int]], ...]
    host_order: int
    fiber_order: int

    def __len__(self) -> int:
        return len(self.pairs)

    def host(self, h: int) -> int:
        return self.pairs[h][0]

    def fiber(self, i: int) -> list[int]:
        return [h for h, (a, j) in enumerate(self.pairs) if a == i and j is not None]

    def check_injective(self) -> bool:
        return len(set(self.pairs)) == len(self.pairs)


@dataclass(frozen=True)
class MarriagePlan:
    host: Graph
    a: int
    guest: Graph
    u: int
    bijection: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.a < self.host.n or self.host.degree(self.a) != 3:
            raise DegreeMismatch(f"host vertex {self.a} is not of degree 3")
        if not 0 <= self.u < self.guest.n or self.guest.degree(self.u) != 3:
            raise DegreeMismatch(f"guest vertex {self.u} is not of degree 3")
        if not 0 <= self.bijection < 6:
            raise InvalidParameters(f"bijection index {self.bijection} not in 0..5")

    @property
    def host_neighbors(self) -> tuple[int, ...]:
        return self.host.neighbors(self.a)

    @property
    def guest_neighbors(self) -> tuple[int, ...]:
        return self.guest.neighbors(self.u)

    def matching(self) -> list[tuple[int, int]]:
        """(host neighbour, guest neighbour) pairs, in original labels."""
        perm = BIJECTIONS[self.bijection]
        gn = self.guest_neighbors
        return [(b, gn[perm[p]]) for p, b in enumerate(self.host_neighbors)]


def marry(plan: MarriagePlan) -> tuple[Graph, VertexOrigin]:
    """Replace host vertex ``a`` by a copy of guest-minus-``u``.

    Vertex numbering follows ``disjoint_union(host - a, guest - u)``.
    """
    host_rest, hmap = delete_vertex(plan.host, plan.a)
    guest_rest, gmap = delete_vertex(plan.guest, plan.u)
    off = host_rest.n
    edges = list(host_rest.edges())
    edges += [(off + x, off + y) for x, y in guest_rest.edges()]
    edges += [(hmap[b], off + gmap[v]) for b, v in plan.matching()]
    graph = new_graph(off + guest_rest.n, edges)

    pairs: list[tuple[int, Optional[int]]] = [
        (old, None) for old in range(plan.host.n) if old != plan.a
    ]
    pairs += [(plan.a, j) for j in range(guest_rest.n)]
    return graph, VertexOrigin(tuple(pairs), plan.host.n, guest_rest.n)


def marry_all(
    g1: Graph,
    g2: Graph,
    u: int = 0,
    bijection_policy: BijectionPolicy = "sorted",
    max_order: Optional[int] = None,
) -> tuple[Graph, VertexOrigin]:
    """Marry every vertex of cubic ``g1`` with its own copy of ``(g2, u)``.

    Vertex ``(i, j)`` gets index ``i * (|g2| - 1) + j``.
    """
    if not is_cubic(g1):
        raise NotCubic("host graph must be cubic")
    if not 0 <= u < g2.n or g2.degree(u) != 3:
        raise DegreeMismatch(f"guest vertex {u} is not of degree 3")
    perm = BIJECTIONS[_bijection_index(bijection_policy)]
    limit = build_limit() if max_order is None else max_order
    f = g2.n - 1
    order = g1.n * f
    if order > limit:
        raise ResourceLimit(f"married graph would have {order} vertices (cap {limit})")

    fiber, gmap = delete_vertex(g2, u)
    ports = [gmap[v] for v in g2.neighbors(u)]
    fiber_edges = fiber.edges()

    adj: list[list[int]] = [[] for _ in range(order)]
    for i in range(g1.n):
        base = i * f
        for x, y in fiber_edges:
            adj[base + x].append(base + y)
            adj[base + y].append(base + x)
    for i in range(g1.n):
        for p, t in enumerate(g1.neighbors(i)):
            if t < i:
                continue
            q = g1.neighbors(t).index(i)
            a = i * f + ports[perm[p]]
            b = t * f + ports[perm[q]]
            adj[a].append(b)
            adj[b].append(a)
    for nbrs in adj:
        nbrs.sort()
    pairs = tuple((i, j) for i in range(g1.n) for j in range(f))
    return Graph(order, adj), VertexOrigin(pairs, g1.n, f)


def truncate(g: Graph) -> tuple[Graph, VertexOrigin]:
    """Classical truncation: every vertex replaced by a triangle."""
    return marry_all(g, k4(), 0)


def family_member(
    k: int,
    guest_vertex: int = 0,
    bijection_policy: BijectionPolicy = "sorted",
    max_order: Optional[int] = None,
) -> tuple[Graph, list[VertexOrigin]]:
    """k-th member of the iterated family seeded by :func:`chia_thomassen`.

    Origin maps are returned per level (level ``l`` maps member ``l+1`` to member ``l``).
    """
    if k < 0:
        raise InvalidParameters("iteration count must be >= 0")
    limit = build_limit() if max_order is None else max_order
    order = 56 * 17**k
    if order > limit:
        raise ResourceLimit(f"family member {k} has {order} vertices (cap {limit})")
    guest = generalized_petersen(9, 2)
    h = chia_thomassen()
    chain: list[VertexOrigin] = []
    for _ in range(k):
        h, origin = marry_all(h, guest, guest_vertex, bijection_policy, limit)
        chain.append(origin)
    return h, chain
