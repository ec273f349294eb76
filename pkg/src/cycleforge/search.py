"""Exact exponential search: longest cycles, hamiltonian cycles and paths.

All kernels work on int bitsets (``Graph.masks``) and visit neighbours in
ascending order, so witnesses and statistics are reproducible. Cycles are
counted once per vertex set and cyclic order, i.e. up to rotation and
reflection; a cycle is emitted in canonical form (smallest vertex first,
second vertex smaller than the last).
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import (
    AcyclicGraph,
    EvenDegreePresent,
    IndexOutOfRange,
    NotCubic,
    ResourceLimit,
    SameEndpoint,
)
from .graph import Graph, delete_vertex, is_cubic

DEFAULT_SEARCH_MAX_VERTICES = 128
DEFAULT_ENUM_MAX_VERTICES = 32
DEFAULT_MAX_WITNESSES = 8

Cycle = tuple[int, ...]


def search_limit() -> int:
    env = os.environ.get("CYCLEFORGE_MAX_VERTICES")
    return int(env) if env else DEFAULT_SEARCH_MAX_VERTICES


def _popcount(x: int) -> int:
    return bin(x).count("1")


if hasattr(int, "bit_count"):  # Python >= 3.10
    _popcount = int.bit_count  # type: ignore[assignment]  # noqa: F811


def _flood(masks: tuple[int, ...], seed: int, allowed: int) -> int:
    """Vertices of ``allowed`` reachable from ``seed`` (which must lie in it)."""
    reach = seed
    frontier = seed
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= masks[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & allowed & ~reach
        reach |= frontier
    return reach


@dataclass
class SearchStats:
    nodes: int = 0
    bound_prunes: int = 0
    dead_end_prunes: int = 0

    def merge(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.bound_prunes += other.bound_prunes
        self.dead_end_prunes += other.dead_end_prunes

    def as_dict(self) -> dict[str, int]:
        return {
            "nodes": self.nodes,
            "bound_prunes": self.bound_prunes,
            "dead_end_prunes": self.dead_end_prunes,
        }


class _Budget:
    def __init__(self, stats: SearchStats, limit: Optional[int]):
        self.stats = stats
        self.limit = limit

    def tick(self) -> None:
        self.stats.nodes += 1
        if self.limit is not None and self.stats.nodes > self.limit:
            raise ResourceLimit(f"node budget {self.limit} exhausted")


def _guard(g: Graph, max_vertices: Optional[int], what: str) -> None:
    limit = search_limit() if max_vertices is None else max_vertices
    if g.n > limit:
        raise ResourceLimit(f"{what} refused: {g.n} vertices exceeds cap {limit}")


class _deep_recursion:
    # Search depth equals path length; lift the interpreter limit for it.
    def __init__(self, depth: int):
        self.depth = depth

    def __enter__(self) -> None:
        self.old = sys.getrecursionlimit()
        sys.setrecursionlimit(max(self.old, 4 * self.depth + 200))

    def __exit__(self, *exc: object) -> None:
        sys.setrecursionlimit(self.old)


# -- longest cycles ---------------------------------------------------------------


@dataclass
class CycleCensus:
    circumference: int
    count: int
    witnesses: list[Cycle] = field(default_factory=list)
    stats: SearchStats = field(default_factory=SearchStats)


class _RootedSearch:
    """Cycles whose smallest vertex is ``r``, grown from the edge r -- c1.

    The closing vertex must be a neighbour of ``r`` larger than ``c1``, which
    selects one orientation of every cycle.
    """

    def __init__(self, g: Graph, prune: bool, budget: _Budget):
        self.masks = g.masks
        self.full = (1 << g.n) - 1
        self.prune = prune
        self.budget = budget
        self.stats = budget.stats

    def _good_components(self, end: int, residual: int, close: int, need: int) -> tuple[int, int]:
        """(candidate next vertices, best bound) from ``end``.

        A continuation must stay inside one residual component that touches
        both ``end`` and a closing neighbour of the root; its size bounds the
        number of vertices still addable.
        """
        masks = self.masks
        cand = masks[end] & residual
        ok = 0
        bound = 0
        while cand:
            comp = _flood(masks, cand & -cand, residual)
            cand &= ~comp
            if comp & close:
                size = _popcount(comp)
                if size > bound:
                    bound = size
                if size >= need:
                    ok |= comp
        return masks[end] & ok, bound

    def longest(self, r: int, best: int) -> tuple[int, Optional[Cycle]]:
        masks = self.masks
        allowed = self.full & ~((1 << r) - 1)
        rn = masks[r] & allowed
        if _popcount(rn) < 2:
            return best, None
        if self.prune and _popcount(_flood(masks, 1 << r, allowed)) <= best:
            self.stats.bound_prunes += 1
            return best, None
        found: list = [best, None]
        path = [r]
        tick = self.budget.tick
        prune = self.prune
        stats = self.stats

        def dfs(end: int, visited: int, length: int, close: int) -> None:
            tick()
            nb = masks[end]
            if length >= 3 and (1 << end) & close and length > found[0]:
                found[0] = length
                found[1] = tuple(path)
            residual = allowed & ~visited
            if prune:
                cand, bound = self._good_components(
                    end, residual, close, found[0] + 1 - length
                )
                if length + bound <= found[0]:
                    stats.bound_prunes += 1
                    return
            else:
                cand = nb & residual
            while cand:
                low = cand & -cand
                cand ^= low
                x = low.bit_length() - 1
                path.append(x)
                dfs(x, visited | low, length + 1, close)
                path.pop()

        rest = rn
        while rest:
            low = rest & -rest
            rest ^= low
            c1 = low.bit_length() - 1
            close = rn & ~((2 << c1) - 1)
            if not close:
                break
            path.append(c1)
            dfs(c1, (1 << r) | low, 2, close)
            path.pop()
        return found[0], found[1]

    def count(self, r: int, target: int, keep: int) -> tuple[int, list[Cycle]]:
        masks = self.masks
        allowed = self.full & ~((1 << r) - 1)
        rn = masks[r] & allowed
        if _popcount(rn) < 2:
            return 0, []
        if self.prune and _popcount(_flood(masks, 1 << r, allowed)) < target:
            self.stats.bound_prunes += 1
            return 0, []
        total = [0]
        witnesses: list[Cycle] = []
        path = [r]
        tick = self.budget.tick
        prune = self.prune
        stats = self.stats

        def dfs(end: int, visited: int, length: int, close: int) -> None:
            tick()
            nb = masks[end]
            if length == target:
                if (1 << end) & close:
                    total[0] += 1
                    if len(witnesses) < keep:
                        witnesses.append(tuple(path))
                return
            residual = allowed & ~visited
            if prune:
                cand, bound = self._good_components(end, residual, close, target - length)
                if length + bound < target:
                    stats.bound_prunes += 1
                    return
            else:
                cand = nb & residual
            while cand:
                low = cand & -cand
                cand ^= low
                x = low.bit_length() - 1
                path.append(x)
                dfs(x, visited | low, length + 1, close)
                path.pop()

        rest = rn
        while rest:
            low = rest & -rest
            rest ^= low
            c1 = low.bit_length() - 1
            close = rn & ~((2 << c1) - 1)
            if not close:
                break
            path.append(c1)
            dfs(c1, (1 << r) | low, 2, close)
            path.pop()
        return total[0], witnesses


def _count_root_worker(args: tuple) -> tuple[int, list[Cycle], SearchStats]:
    adjacency, r, target, keep, prune = args
    g = Graph(len(adjacency), adjacency)
    stats = SearchStats()
    with _deep_recursion(g.n):
        count, wit = _RootedSearch(g, prune, _Budget(stats, None)).count(r, target, keep)
    return count, wit, stats


def longest_cycle_census(
    g: Graph,
    prune: bool = True,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
    node_budget: Optional[int] = None,
    max_vertices: Optional[int] = None,
    workers: int = 1,
) -> CycleCensus:
    """Circumference and exact number of longest cycles.

    Phase 1 finds the circumference by branch and bound; phase 2 counts the
    cycles of exactly that length, pruning partial paths that cannot reach it.
    The bound is the path length plus the size of the largest residual
    component adjacent to both open ends of the path.
    """
    _guard(g, max_vertices, "longest-cycle census")
    stats = SearchStats()
    budget = _Budget(stats, node_budget)
    searcher = _RootedSearch(g, prune, budget)
    best, witness = 0, None
    with _deep_recursion(g.n):
        for r in range(g.n):
            best, w = searcher.longest(r, best)
            if w is not None:
                witness = w
    if witness is None:
        raise AcyclicGraph("graph has no cycle")

    total = 0
    witnesses: list[Cycle] = []
    if workers > 1 and node_budget is None:
        from concurrent.futures import ProcessPoolExecutor

        jobs = [(g.adjacency, r, best, max_witnesses, prune) for r in range(g.n)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map() preserves root order, so the reduction is deterministic.
            for count, wit, st in pool.map(_count_root_worker, jobs):
                total += count
                witnesses.extend(wit[: max_witnesses - len(witnesses)])
                stats.merge(st)
    else:
        with _deep_recursion(g.n):
            for r in range(g.n):
                count, wit = searcher.count(r, best, max_witnesses - len(witnesses))
                total += count
                witnesses.extend(wit)
    return CycleCensus(best, total, witnesses, stats)


def circumference(g: Graph, **kwargs) -> int:
    return longest_cycle_census(g, max_witnesses=0, **kwargs).circumference


# -- hamiltonian cycles and paths ------------------------------------------------------


@dataclass
class HamiltonianCount:
    count: int
    witnesses: list[Cycle] = field(default_factory=list)
    stats: SearchStats = field(default_factory=SearchStats)


def _ham_feasible(masks: tuple[int, ...], unvisited: int, end: int, anchor: int) -> bool:
    """Necessary conditions for finishing a hamiltonian path from ``end`` to ``anchor``.

    ``anchor`` is the root (cycles) or the target (paths); for paths the
    target is counted inside ``unvisited``.
    """
    if not masks[end] & unvisited:
        return False
    ends = (1 << end) | (1 << anchor)
    avail = unvisited | ends
    rest = unvisited & ~(1 << anchor)
    while rest:
        low = rest & -rest
        rest ^= low
        if _popcount(masks[low.bit_length() - 1] & avail) < 2:
            return False
    low = unvisited & -unvisited
    return _flood(masks, low, unvisited) == unvisited


def count_hamiltonian_cycles(
    g: Graph,
    prune: bool = True,
    witnesses: bool = False,
    max_witnesses: Optional[int] = None,
    node_budget: Optional[int] = None,
    max_vertices: Optional[int] = None,
) -> HamiltonianCount:
    """Number of hamiltonian cycles, each counted once.

    DFS from vertex 0; the second vertex must be smaller than the last one.
    """
    _guard(g, max_vertices, "hamiltonian cycle count")
    n = g.n
    stats = SearchStats()
    if n < 3:
        return HamiltonianCount(0, [], stats)
    budget = _Budget(stats, node_budget)
    tick = budget.tick
    masks = g.masks
    full = (1 << n) - 1
    total = [0]
    found: list[Cycle] = []
    keep = (max_witnesses if max_witnesses is not None else sys.maxsize) if witnesses else 0
    path = [0]

    def dfs(end: int, visited: int, length: int, close: int) -> None:
        tick()
        if length == n:
            if (1 << end) & close:
                total[0] += 1
                if len(found) < keep:
                    found.append(tuple(path))
            return
        unvisited = full & ~visited
        if prune:
            # The closing neighbour of 0 must still be free.
            if not (close & unvisited) or not _ham_feasible(masks, unvisited, end, 0):
                stats.dead_end_prunes += 1
                return
        cand = masks[end] & unvisited
        while cand:
            low = cand & -cand
            cand ^= low
            x = low.bit_length() - 1
            path.append(x)
            dfs(x, visited | low, length + 1, close)
            path.pop()

    with _deep_recursion(n):
        rest = masks[0]
        while rest:
            low = rest & -rest
            rest ^= low
            c1 = low.bit_length() - 1
            close = masks[0] & ~((2 << c1) - 1)
            if not close:
                break
            path.append(c1)
            dfs(c1, 1 | low, 2, close)
            path.pop()
    return HamiltonianCount(total[0], found, stats)


def count_hamiltonian_paths(
    g: Graph,
    s: int,
    t: int,
    prune: bool = True,
    node_budget: Optional[int] = None,
    max_vertices: Optional[int] = None,
) -> int:
    """Number of hamiltonian paths with endpoints ``s`` and ``t``."""
    if s == t:
        raise SameEndpoint("hamiltonian path endpoints must differ")
    for v in (s, t):
        if not 0 <= v < g.n:
            raise IndexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    _guard(g, max_vertices, "hamiltonian path count")
    n = g.n
    stats = SearchStats()
    tick = _Budget(stats, node_budget).tick
    masks = g.masks
    full = (1 << n) - 1
    tbit = 1 << t
    total = [0]

    def dfs(end: int, visited: int, length: int) -> None:
        tick()
        unvisited = full & ~visited
        if length == n - 1:
            if masks[end] & tbit:
                total[0] += 1
            return
        if prune and not _ham_feasible(masks, unvisited, end, t):
            return
        cand = masks[end] & unvisited & ~tbit
        while cand:
            low = cand & -cand
            cand ^= low
            dfs(low.bit_length() - 1, visited | low, length + 1)

    with _deep_recursion(n):
        if n == 2:
            return int(g.has_edge(s, t))
        dfs(s, 1 << s, 1)
    return total[0]


# -- exhaustive enumeration oracle ------------------------------------------------------


def all_cycles(g: Graph, max_vertices: int = DEFAULT_ENUM_MAX_VERTICES) -> Iterator[Cycle]:
    """Every simple cycle exactly once, in canonical form. Brute force, no pruning."""
    if g.n > max_vertices:
        raise ResourceLimit(f"cycle enumeration refused: {g.n} vertices exceeds cap {max_vertices}")
    adj = g.adjacency
    for r in range(g.n):
        path = [r]
        on_path = {r}
        stack = [iter([x for x in adj[r] if x > r])]
        while stack:
            for x in stack[-1]:
                if x in on_path:
                    continue
                path.append(x)
                on_path.add(x)
                if len(path) >= 3 and r in adj[x] and path[1] < x:
                    yield tuple(path)
                stack.append(iter([y for y in adj[x] if y > r]))
                break
            else:
                stack.pop()
                on_path.discard(path.pop())


def census_by_enumeration(g: Graph, max_vertices: int = DEFAULT_ENUM_MAX_VERTICES) -> tuple[int, int]:
    """(circumference, number of longest cycles) from :func:`all_cycles`."""
    best, count = 0, 0
    for c in all_cycles(g, max_vertices):
        if len(c) > best:
            best, count = len(c), 1
        elif len(c) == best:
            count += 1
    if best == 0:
        raise AcyclicGraph("graph has no cycle")
    return best, count


# -- parity theorems ----------------------------------------------------------------------


def _require_odd(g: Graph) -> None:
    if any(d % 2 == 0 for d in g.degrees()):
        raise EvenDegreePresent("every vertex must have odd degree")


@dataclass
class EdgeHamIncidence:
    per_edge: dict[tuple[int, int], int]
    total: int
    passed: bool
    three_or_more: bool  # hamiltonian cubic graphs must have at least three


def smith_edge_check(g: Graph, prune: bool = True) -> EdgeHamIncidence:
    """Hamiltonian cycles through each edge; passes iff every count is even."""
    _require_odd(g)
    hc = count_hamiltonian_cycles(g, prune=prune, witnesses=True)
    per_edge = {e: 0 for e in g.edges()}
    for c in hc.witnesses:
        for k in range(len(c)):
            a, b = c[k], c[(k + 1) % len(c)]
            per_edge[(min(a, b), max(a, b))] += 1
    even = all(v % 2 == 0 for v in per_edge.values())
    three = not (is_cubic(g) and hc.count > 0) or hc.count >= 3
    return EdgeHamIncidence(per_edge, hc.count, even and three, three)


@dataclass
class ParityReport:
    total_parity: int
    per_vertex: list[int]  # parity of the count after deleting each vertex
    passed: bool


def thomason_parity_check(g: Graph, prune: bool = True) -> ParityReport:
    """Compare hamiltonian-cycle parity of G with that of every G - v."""
    _require_odd(g)
    base = count_hamiltonian_cycles(g, prune=prune).count % 2
    per_vertex = [
        count_hamiltonian_cycles(delete_vertex(g, v)[0], prune=prune).count % 2
        for v in range(g.n)
    ]
    return ParityReport(base, per_vertex, all(p == base for p in per_vertex))


@dataclass
class UniqueCycleReport:
    passed: bool
    circumference: int
    count: int
    vacuous: bool


def unique_cycle_nonhamiltonicity_check(g: Graph, **census_kwargs) -> UniqueCycleReport:
    """A cubic graph with a unique longest cycle has circumference at most n - 2."""
    if not is_cubic(g):
        raise NotCubic("check applies to cubic graphs only")
    census = longest_cycle_census(g, **census_kwargs)
    if census.count != 1:
        return UniqueCycleReport(True, census.circumference, census.count, True)
    return UniqueCycleReport(
        census.circumference <= g.n - 2, census.circumference, census.count, False
    )
