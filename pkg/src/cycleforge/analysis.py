"""Polynomial-time structure checks: girth, vertex connectivity, cycle projection."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .constructors import VertexOrigin
from .errors import InvalidCycle, OriginMismatch
from .graph import Graph, is_connected


@dataclass(frozen=True)
class GirthResult:
    girth: float  # int-valued, or math.inf for forests
    witness: tuple[int, ...] = ()

    @property
    def acyclic(self) -> bool:
        return self.girth == math.inf


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate so the smallest vertex is first and orient so c[1] < c[-1]."""
    m = len(cycle)
    k = min(range(m), key=cycle.__getitem__)
    rot = tuple(cycle[k:]) + tuple(cycle[:k])
    if m > 2 and rot[1] > rot[-1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


def is_simple_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    m = len(cycle)
    if m < 3 or len(set(cycle)) != m:
        return False
    if any(not 0 <= v < g.n for v in cycle):
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % m]) for i in range(m))


def _shortest_through(g: Graph, root: int, cap: float) -> float:
    """Length of the shortest closed walk found by BFS from ``root``, or inf.

    Stops once no candidate of length <= ``cap`` can appear.
    """
    dist = {root: 0}
    parent = {root: -1}
    queue = deque([root])
    best = math.inf
    while queue:
        x = queue.popleft()
        dx = dist[x]
        if 2 * dx + 1 > min(best, cap):
            break
        for y in g.neighbors(x):
            if y not in dist:
                dist[y] = dx + 1
                parent[y] = x
                queue.append(y)
            elif y != parent[x]:
                best = min(best, dx + dist[y] + 1)
    return best


def _first_cycle_of_length(g: Graph, root: int, length: int) -> tuple[int, ...]:
    # Ascending DFS yields the lexicographically smallest canonical cycle first.
    allowed = set(range(root, g.n))
    path = [root]
    on_path = {root}

    def dfs(end: int) -> Optional[tuple[int, ...]]:
        if len(path) == length:
            if g.has_edge(end, root) and path[1] < end:
                return tuple(path)
            return None
        for x in g.neighbors(end):
            if x in allowed and x not in on_path:
                path.append(x)
                on_path.add(x)
                hit = dfs(x)
                path.pop()
                on_path.discard(x)
                if hit:
                    return hit
        return None

    hit = dfs(root)
    assert hit is not None
    return hit


def girth(g: Graph) -> GirthResult:
    """Shortest cycle length with the lexicographically smallest canonical witness."""
    best = math.inf
    first_root = -1
    for r in range(g.n):
        c = _shortest_through(g, r, best)
        if c < best:
            best, first_root = c, r
    if best == math.inf:
        return GirthResult(math.inf, ())
    # first_root is the smallest vertex lying on a shortest cycle.
    return GirthResult(int(best), _first_cycle_of_length(g, first_root, int(best)))


# -- connectivity ---------------------------------------------------------------


@dataclass(frozen=True)
class ConnectivityResult:
    kappa: int
    cut: tuple[int, ...] = ()


def _local_connectivity(
    g: Graph, s: int, t: int, cap: int
) -> tuple[int, tuple[int, ...]]:
    """Max number of internally disjoint s-t paths, stopping at ``cap``.

    Unit-capacity max flow on the vertex-split digraph (v_in = 2v, v_out = 2v+1).
    When the value is below ``cap`` the matching minimum vertex cut is returned.
    """
    n = g.n
    big = n + 1
    cap_arc: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap_arc:
            out[a].append(b)
            out[b].append(a)
            cap_arc.setdefault((b, a), 0)
        cap_arc[(a, b)] = cap_arc.get((a, b), 0) + c

    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for a, b in g.edges():
        arc(2 * a + 1, 2 * b, big)
        arc(2 * b + 1, 2 * a, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            x = queue.popleft()
            for y in out[x]:
                if y not in prev and cap_arc[(x, y)] > 0:
                    prev[y] = x
                    queue.append(y)
        if sink not in prev:
            reach = prev
            cut = tuple(
                v for v in range(n) if 2 * v in reach and 2 * v + 1 not in reach
            )
            return flow, cut
        y = sink
        while y != source:
            x = prev[y]
            cap_arc[(x, y)] -= 1
            cap_arc[(y, x)] += 1
            y = x
        flow += 1
    return flow, ()


def vertex_connectivity(g: Graph) -> ConnectivityResult:
    """Vertex connectivity by Menger's theorem (Even's pair selection)."""
    n = g.n
    if n <= 1:
        return ConnectivityResult(0, ())
    if not is_connected(g):
        return ConnectivityResult(0, ())
    if g.m == n * (n - 1) // 2:
        return ConnectivityResult(n - 1, ())
    v0 = min(range(n), key=lambda v: (g.degree(v), v))
    best = g.degree(v0)
    cut = g.neighbors(v0)
    i = 0
    # Some vertex among the first best+1 lies outside every minimum cut.
    while i <= best and i < n:
        for j in range(i + 1, n):
            if g.has_edge(i, j):
                continue
            k, c = _local_connectivity(g, i, j, best)
            if k < best:
                best, cut = k, c
        i += 1
    return ConnectivityResult(best, tuple(sorted(cut)))


def articulation_points(g: Graph) -> list[int]:
    n = g.n
    disc = [-1] * n
    low = [0] * n
    points: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    if v == root:
                        children += 1
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if parent != root and low[v] >= disc[parent]:
                        points.add(parent)
        if children > 1:
            points.add(root)
    return sorted(points)


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff vertex connectivity >= k; never computes more flow than needed."""
    n = g.n
    if k <= 0:
        return True
    if n <= k:
        return False
    if not is_connected(g):
        return False
    if k == 1:
        return True
    if k == 2:
        return not articulation_points(g)
    if min(g.degrees()) < k:
        return False
    for i in range(k):
        for j in range(i + 1, n):
            if not g.has_edge(i, j) and _local_connectivity(g, i, j, k)[0] < k:
                return False
    return True


# -- projection of a cycle of a married graph back to its host -------------------


@dataclass(frozen=True)
class InternalCycle:
    host: int
    cycle: tuple[Optional[int], ...]


@dataclass(frozen=True)
class HostCycle:
    host_cycle: tuple[int, ...]
    fiber_paths: tuple[tuple[Optional[int], ...], ...] = field(default=())

    @property
    def fiber_lengths(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.fiber_paths)

    def is_cycle_of(self, host: Graph) -> bool:
        return is_simple_cycle(host, self.host_cycle)


Projection = Union[InternalCycle, HostCycle]


def project_cycle(
    h: Graph,
    origin: VertexOrigin,
    cycle: Sequence[int],
    host: Optional[Graph] = None,
) -> Projection:
    """Collapse each maximal run of one host index into a single host vertex.

    Fiber paths are lists of guest indices in traversal order. When ``host`` is
    given the collapsed sequence is also checked to be a simple cycle of it.
    """
    if len(origin) != h.n:
        raise OriginMismatch(f"origin covers {len(origin)} vertices, graph has {h.n}")
    if not is_simple_cycle(h, cycle):
        raise InvalidCycle("not a simple cycle of the graph")
    hosts = [origin.pairs[v][0] for v in cycle]
    m = len(cycle)
    if all(i == hosts[0] for i in hosts):
        return InternalCycle(hosts[0], tuple(origin.pairs[v][1] for v in cycle))

    k = next(k for k in range(m) if hosts[k] != hosts[(k + 1) % m])
    start = (k + 1) % m
    seq: list[int] = []
    paths: list[list[Optional[int]]] = []
    for step in range(m):
        v = cycle[(start + step) % m]
        i, j = origin.pairs[v]
        if not seq or seq[-1] != i:
            seq.append(i)
            paths.append([])
        paths[-1].append(j)
    if len(set(seq)) != len(seq) or len(seq) < 3:
        raise OriginMismatch("cycle revisits a fiber; origin does not describe this graph")
    proj = HostCycle(tuple(seq), tuple(tuple(p) for p in paths))
    if host is not None and not proj.is_cycle_of(host):
        raise OriginMismatch("collapsed sequence is not a cycle of the host graph")
    return proj
