"""Small simple undirected graphs with bitset adjacency.

Vertices are ``0..n-1``.  Row ``adj[v]`` is a Python ``int`` whose bit ``u``
is set iff ``uv`` is an edge.  Python integers are unbounded, so the same
representation doubles as the large-graph fallback used by the readers and
writers; the solvers refuse anything above :data:`BITSET_TIER`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

BITSET_TIER = 64


class GraphError(ValueError):
    """Malformed graph input or an out-of-range vertex."""


def bits_of(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class VertexSet:
    """An immutable subset of ``0..n-1`` stored as a bitmask."""

    bits: int = 0

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if v < 0:
                raise GraphError(f"negative vertex {v}")
            mask |= 1 << v
        return cls(mask)

    def __iter__(self) -> Iterator[int]:
        return bits_of(self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.bits >> v & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & ~other.bits)

    def sorted(self) -> list[int]:
        return list(bits_of(self.bits))

    def __repr__(self) -> str:
        return f"VertexSet({self.sorted()})"


SetLike = Union[VertexSet, Iterable[int]]


def as_mask(s: SetLike) -> int:
    if isinstance(s, VertexSet):
        return s.bits
    if isinstance(s, int):
        raise TypeError("pass a VertexSet or an iterable of vertices, not a bare int")
    return VertexSet.of(s).bits


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.  Build with :func:`build_graph`."""

    n: int
    adj: tuple[int, ...]

    @property
    def full(self) -> int:
        """Bitmask of all vertices."""
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def neighbors(self, v: int) -> list[int]:
        return list(bits_of(self.adj[v]))

    def closed(self, v: int) -> int:
        """Closed neighborhood of ``v`` as a mask."""
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits_of(self.adj[u] >> (u + 1) << (u + 1))]

    def max_degree(self) -> int:
        return max((popcount(r) for r in self.adj), default=0)

    def vertices(self) -> VertexSet:
        return VertexSet(self.full)

    def check_subset(self, s: SetLike) -> int:
        mask = as_mask(s)
        if mask >> self.n:
            raise GraphError(f"vertex set {VertexSet(mask).sorted()} not inside 0..{self.n - 1}")
        return mask

    def add_edge(self, u: int, v: int) -> "Graph":
        return build_graph(self.n, self.edges() + [(u, v)])

    def remove_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Graph on ``n`` vertices; duplicate edges collapse, loops are rejected."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj = [0] * n
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def from_adjacency(adj: Sequence[int]) -> Graph:
    """Wrap raw bit rows, validating symmetry and loop-freedom."""
    n = len(adj)
    for v, row in enumerate(adj):
        if row >> n:
            raise GraphError(f"row {v} references a vertex >= {n}")
        if row >> v & 1:
            raise GraphError(f"loop at {v}")
        for u in bits_of(row):
            if not adj[u] >> v & 1:
                raise GraphError(f"asymmetric edge ({v}, {u})")
    return Graph(n, tuple(adj))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel_graph(rim: int) -> Graph:
    """Hub ``0`` joined to every vertex of a cycle ``1..rim``."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return build_graph(rim + 1, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.adj + tuple(row << shift for row in h.adj))


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel: old vertex ``v`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm is not a permutation of the vertex set")
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in bits_of(g.adj[v]):
            row |= 1 << perm[u]
        adj[perm[v]] = row
    return Graph(g.n, tuple(adj))


def induced_subgraph(g: Graph, s: SetLike) -> tuple[Graph, list[int]]:
    """``G[s]`` relabeled to ``0..|s|-1`` in increasing order of old label.

    Returns the subgraph and the map ``new -> old``.
    """
    mask = g.check_subset(s)
    old = list(bits_of(mask))
    new_of = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        row = 0
        for u in bits_of(g.adj[v] & mask):
            row |= 1 << new_of[u]
        adj.append(row)
    return Graph(len(old), tuple(adj)), old


def is_complete_on(g: Graph, s: SetLike) -> bool:
    """True iff every two vertices of ``s`` are adjacent."""
    mask = g.check_subset(s)
    for v in bits_of(mask):
        if (mask & ~(1 << v)) & ~g.adj[v]:
            return False
    return True


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``G[within]`` as masks, ordered by least vertex."""
    remaining = g.full if within is None else within
    parts = []
    while remaining:
        seed = remaining & -remaining
        comp = frontier = seed
        while frontier:
            grow = 0
            for v in bits_of(frontier):
                grow |= g.adj[v]
            frontier = grow & remaining & ~comp
            comp |= frontier
        parts.append(comp)
        remaining &= ~comp
    return parts


def connected_components(g: Graph) -> list[VertexSet]:
    return [VertexSet(c) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(component_masks(g)) == 1


def cut_vertices(g: Graph) -> int:
    """Mask of articulation points of ``g``."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cuts = 0
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(bits_of(g.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            for u in it:
                if disc[u] < 0:
                    disc[u] = low[u] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((u, v, iter(bits_of(g.adj[u]))))
                    break
                if u != parent:
                    low[v] = min(low[v], disc[u])
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if parent != root and low[v] >= disc[parent]:
                        cuts |= 1 << parent
        if root_children > 1:
            cuts |= 1 << root
    return cuts


def blocks(g: Graph) -> list[int]:
    """Biconnected components (as vertex masks); bridges are 2-vertex blocks.

    Isolated vertices are omitted.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    out = []
    for root in range(n):
        if disc[root] >= 0 or not g.adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(bits_of(g.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            for u in it:
                if disc[u] < 0:
                    disc[u] = low[u] = timer
                    timer += 1
                    edge_stack.append((v, u))
                    stack.append((u, v, iter(bits_of(g.adj[u]))))
                    break
                if u != parent and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] >= disc[parent]:
                        mask = 0
                        while True:
                            a, b = edge_stack.pop()
                            mask |= (1 << a) | (1 << b)
                            if (a, b) == (parent, v):
                                break
                        out.append(mask)
    return out
