"""Immutable simple undirected graphs on dense vertex indices 0..n-1."""

from __future__ import annotations

import hashlib
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .errors import DuplicateEdge, IndexOutOfRange, MalformedInput, SelfLoop

Edge = tuple[int, int]


class Graph:
    """Simple undirected graph stored as strictly ascending adjacency tuples.

    Instances are never mutated after construction; operations such as
    :func:`delete_vertex` return new graphs.
    """

    __slots__ = ("_n", "_adj", "__dict__")

    def __init__(self, n: int, adjacency: Sequence[Sequence[int]]):
        # Trusted constructor: callers outside this module go through new_graph.
        self._n = n
        self._adj = tuple(tuple(nbrs) for nbrs in adjacency)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        return new_graph(n, edges)

    @property
    def n(self) -> int:
        return self._n

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def __len__(self) -> int:
        return self._n

    @cached_property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self._adj]

    def has_edge(self, a: int, b: int) -> bool:
        return (self.masks[a] >> b) & 1 == 1

    def edges(self) -> list[Edge]:
        """All edges (a, b) with a < b in lexicographic order."""
        return [(a, b) for a in range(self._n) for b in self._adj[a] if a < b]

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as an int bitset."""
        out = []
        for nbrs in self._adj:
            mask = 0
            for b in nbrs:
                mask |= 1 << b
            out.append(mask)
        return tuple(out)

    def digest(self) -> str:
        return hashlib.sha256(to_graph6(self)).hexdigest()

    def check(self) -> None:
        """Assert the structural invariants; used by tests and debug paths."""
        for a, nbrs in enumerate(self._adj):
            assert all(x < y for x, y in zip(nbrs, nbrs[1:])), f"unsorted at {a}"
            for b in nbrs:
                assert 0 <= b < self._n and b != a
                assert a in self._adj[b], f"asymmetric edge {a}-{b}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


def new_graph(n: int, edges: Iterable[Edge]) -> Graph:
    """Build a graph, rejecting out-of-range endpoints, loops and repeated pairs."""
    if n < 0:
        raise IndexOutOfRange(f"negative order {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for a, b in edges:
        if not (0 <= a < n and 0 <= b < n):
            raise IndexOutOfRange(f"edge ({a}, {b}) outside 0..{n - 1}")
        if a == b:
            raise SelfLoop(f"self-loop at {a}")
        if b in adj[a]:
            raise DuplicateEdge(f"edge ({min(a, b)}, {max(a, b)}) repeated")
        adj[a].add(b)
        adj[b].add(a)
    return Graph(n, [sorted(s) for s in adj])


def empty_graph(n: int = 0) -> Graph:
    return Graph(n, [() for _ in range(n)])


def cycle_graph(n: int) -> Graph:
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return new_graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def complete_bipartite(p: int, q: int) -> Graph:
    return new_graph(p + q, [(a, p + b) for a in range(p) for b in range(q)])


def delete_vertex(g: Graph, v: int) -> tuple[Graph, tuple[Optional[int], ...]]:
    """Remove ``v`` and compact the remaining indices in order.

    Returns the new graph and the old-to-new index map, with ``None`` at ``v``.
    """
    if not 0 <= v < g.n:
        raise IndexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    remap = tuple(None if x == v else (x if x < v else x - 1) for x in range(g.n))
    adj = [
        [remap[b] for b in nbrs if b != v]
        for a, nbrs in enumerate(g.adjacency)
        if a != v
    ]
    return Graph(g.n - 1, adj), remap


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``vertices``, relabelled in ascending order.

    Returns the subgraph and the tuple of original labels (new -> old).
    """
    keep = tuple(sorted(set(vertices)))
    index = {old: new for new, old in enumerate(keep)}
    adj = [[index[b] for b in g.neighbors(a) if b in index] for a in keep]
    return Graph(len(keep), adj), keep


def disjoint_union(a: Graph, b: Graph) -> Graph:
    off = a.n
    adj = list(a.adjacency) + [tuple(x + off for x in nbrs) for nbrs in b.adjacency]
    return Graph(a.n + b.n, adj)


def add_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    return new_graph(g.n, list(g.edges()) + list(edges))


def is_cubic(g: Graph) -> bool:
    return all(len(nbrs) == 3 for nbrs in g.adjacency)


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in g.neighbors(x):
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


# -- plain edge-list text ----------------------------------------------------


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{a} {b}" for a, b in g.edges())
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``a b``; ``#`` starts a comment."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise MalformedInput("empty edge list")
    try:
        header = [int(t) for t in rows[0]]
        pairs = [(int(r[0]), int(r[1])) for r in rows[1:] if len(r) == 2]
    except ValueError as exc:
        raise MalformedInput(f"non-integer token: {exc}") from None
    if len(header) != 2 or len(pairs) != len(rows) - 1:
        raise MalformedInput("expected 'n m' header and 'a b' rows")
    n, m = header
    if m != len(pairs):
        raise MalformedInput(f"header announces {m} edges, found {len(pairs)}")
    return new_graph(n, pairs)


# graph6 lives in its own module but is re-exported here for convenience.
from .graph6 import from_graph6, to_graph6  # noqa: E402


def iter_graph6_lines(text: str) -> Iterator[Graph]:
    for line in text.splitlines():
        line = line.strip()
        if line:
            yield from_graph6(line.encode("ascii"))
