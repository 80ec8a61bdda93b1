"""Outerplanarity: a fast planarity route and a forbidden-subdivision oracle.

The fast route adds an apex vertex joined to every vertex and runs the
Demoucron-Malgrange-Pertuiset face-embedding test on each block of the
result.  The oracle looks directly for a subdivided K4 or K2,3 and returns
the paths it found, so a negative answer comes with checkable evidence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graph import (
    Graph,
    GraphError,
    SetLike,
    VertexSet,
    bits_of,
    blocks,
    component_masks,
    popcount,
)

ORACLE_CAP = 12


# -- planarity ---------------------------------------------------------------


def _find_cycle(adj: list[int], mask: int) -> list[int]:
    """Some cycle inside a 2-connected vertex set ``mask``."""
    start = next(bits_of(mask))
    parent = {start: -1}
    stack = [start]
    depth = {start: 0}
    while stack:
        v = stack.pop()
        for u in bits_of(adj[v] & mask):
            if u == parent[v]:
                continue
            if u in parent:
                # back edge closes a cycle through the DFS tree
                a, b = v, u
                path_a, path_b = [a], [b]
                while depth[a] > depth[b]:
                    a = parent[a]
                    path_a.append(a)
                while depth[b] > depth[a]:
                    b = parent[b]
                    path_b.append(b)
                while a != b:
                    a, b = parent[a], parent[b]
                    path_a.append(a)
                    path_b.append(b)
                return path_a + path_b[-2::-1]
            parent[u] = v
            depth[u] = depth[v] + 1
            stack.append(u)
    raise AssertionError("no cycle in a 2-connected block")


def _block_is_planar(adj: list[int], mask: int) -> bool:
    if popcount(mask) <= 4:
        return True
    sub = [adj[v] & mask if mask >> v & 1 else 0 for v in range(len(adj))]
    edges = sum(popcount(r) for r in sub) // 2
    nv = popcount(mask)
    if edges > 3 * nv - 6:
        return False
    cycle = _find_cycle(sub, mask)
    placed = 0
    emb = [0] * len(adj)  # embedded edges
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        placed |= 1 << a
        emb[a] |= 1 << b
        emb[b] |= 1 << a
    faces: list[list[int]] = [list(cycle), list(cycle)]
    embedded_edges = len(cycle)
    while embedded_edges < edges:
        fragments = _fragments(sub, mask, placed, emb)
        chosen = None
        for attach, interior, chord in fragments:
            ok = [i for i, f in enumerate(faces) if attach & ~_mask(f) == 0]
            if not ok:
                return False
            if chosen is None or len(ok) == 1:
                chosen = (attach, interior, chord, ok[0])
                if len(ok) == 1:
                    break
        attach, interior, chord, fi = chosen
        path = chord if chord else _fragment_path(sub, attach, interior)
        face = faces[fi]
        i, j = face.index(path[0]), face.index(path[-1])
        k = len(face)
        arc1 = [face[(i + t) % k] for t in range((j - i) % k + 1)]
        arc2 = [face[(j + t) % k] for t in range((i - j) % k + 1)]
        inner = path[1:-1]
        faces[fi] = arc1 + inner[::-1]
        faces.append(arc2 + inner)
        for a, b in zip(path, path[1:]):
            emb[a] |= 1 << b
            emb[b] |= 1 << a
            placed |= (1 << a) | (1 << b)
        embedded_edges += len(path) - 1
    return True


def _mask(vs: list[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _fragments(sub, mask, placed, emb):
    out = []
    for v in bits_of(placed):
        for u in bits_of(sub[v] & placed & ~emb[v]):
            if v < u:
                out.append(((1 << v) | (1 << u), 0, [v, u]))
    free = mask & ~placed
    while free:
        seed = free & -free
        comp = frontier = seed
        while frontier:
            grow = 0
            for v in bits_of(frontier):
                grow |= sub[v]
            frontier = grow & free & ~comp
            comp |= frontier
        attach = 0
        for v in bits_of(comp):
            attach |= sub[v] & placed
        out.append((attach, comp, None))
        free &= ~comp
    return out


def _fragment_path(sub, attach, interior):
    a = next(bits_of(attach))
    others = attach & ~(1 << a)
    prev = {}
    queue = []
    for c in bits_of(sub[a] & interior):
        prev[c] = a
        queue.append(c)
    for c in queue:
        hit = sub[c] & others
        if hit:
            b = next(bits_of(hit))
            path = [b, c]
            while path[-1] != a:
                path.append(prev[path[-1]])
            return path[::-1]
        for d in bits_of(sub[c] & interior):
            if d not in prev:
                prev[d] = c
                queue.append(d)
    raise AssertionError("fragment with fewer than two attachments in a block")


def is_planar(g: Graph) -> bool:
    adj = list(g.adj)
    return all(_block_is_planar(adj, b) for b in blocks(g))


def with_apex(g: Graph) -> Graph:
    """``g`` plus a new vertex ``n`` adjacent to all others."""
    n = g.n
    adj = tuple(row | (1 << n) for row in g.adj) + ((1 << n) - 1,)
    return Graph(n + 1, adj)


def is_outerplanar(g: Graph) -> bool:
    """True iff ``g`` embeds with every vertex on the outer face."""
    for comp in component_masks(g):
        k = popcount(comp)
        if k <= 3:
            continue
        edges = sum(popcount(g.adj[v] & comp) for v in bits_of(comp)) // 2
        if edges > 2 * k - 3:
            return False
        if not is_planar(with_apex(_restrict(g, comp))):
            return False
    return True


def _restrict(g: Graph, comp: int) -> Graph:
    old = list(bits_of(comp))
    pos = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        row = 0
        for u in bits_of(g.adj[v] & comp):
            row |= 1 << pos[u]
        adj.append(row)
    return Graph(len(old), tuple(adj))


# -- forbidden subdivision oracle ---------------------------------------------


K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
K23_EDGES = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]


@dataclass(frozen=True)
class ForbiddenWitness:
    """A subdivided K4 or K2,3 inside a graph.

    ``branch`` lists the branch vertices in pattern order (for K2,3 the two
    degree-3 vertices come first); ``paths[i]`` realizes pattern edge ``i``.
    """

    kind: str
    branch: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...] = field(default_factory=tuple)

    @property
    def branch_vertices(self) -> VertexSet:
        return VertexSet.of(self.branch)

    def pattern(self) -> list[tuple[int, int]]:
        return K4_EDGES if self.kind == "K4" else K23_EDGES

    def to_json(self) -> dict:
        return {"kind": self.kind, "branch_vertices": list(self.branch),
                "paths": [list(p) for p in self.paths]}


def verify_forbidden_witness(g: Graph, w: ForbiddenWitness) -> bool:
    """Independent structural re-check of a witness."""
    if w.kind not in ("K4", "K23"):
        return False
    pattern = w.pattern()
    size = 4 if w.kind == "K4" else 5
    if len(w.branch) != size or len(set(w.branch)) != size or len(w.paths) != len(pattern):
        return False
    interiors: set[int] = set()
    for (i, j), p in zip(pattern, w.paths):
        if len(p) < 2 or p[0] != w.branch[i] or p[-1] != w.branch[j]:
            return False
        if len(set(p)) != len(p):
            return False
        if any(not g.has_edge(a, b) for a, b in zip(p, p[1:])):
            return False
        inner = set(p[1:-1])
        if inner & set(w.branch) or inner & interiors:
            return False
        interiors |= inner
    return True


def _paths(adj: list[int], a: int, b: int, avail: int):
    """Simple paths ``a .. b`` whose interior uses only ``avail``."""
    if adj[a] >> b & 1:
        yield [a, b]
    stack = [(a, [a], avail)]
    while stack:
        v, path, free = stack.pop()
        for u in bits_of(adj[v] & free):
            nxt = path + [u]
            rest = free & ~(1 << u)
            if adj[u] >> b & 1:
                yield nxt + [b]
            stack.append((u, nxt, rest))


def _realize(adj, branch, pattern, free):
    """Backtrack: internally disjoint paths for each pattern edge."""
    if not pattern:
        return []
    (i, j), rest = pattern[0], pattern[1:]
    for p in _paths(adj, branch[i], branch[j], free):
        used = 0
        for v in p[1:-1]:
            used |= 1 << v
        tail = _realize(adj, branch, rest, free & ~used)
        if tail is not None:
            return [p] + tail
    return None


def _reachable_within(adj, a, b, free):
    seen = frontier = 1 << a
    while frontier:
        grow = 0
        for v in bits_of(frontier):
            grow |= adj[v]
        if grow >> b & 1:
            return True
        frontier = grow & free & ~seen
        seen |= frontier
    return False


def find_forbidden_subdivision(g: Graph, cap: int = ORACLE_CAP) -> ForbiddenWitness | None:
    """Search each block for a subdivided K4, then for a subdivided K2,3."""
    if g.n > cap:
        raise GraphError(f"subdivision oracle limited to n <= {cap}, got {g.n}")
    adj = list(g.adj)
    for block in blocks(g):
        if popcount(block) < 4:
            continue
        sub = [adj[v] & block for v in range(g.n)]
        deg3 = [v for v in bits_of(block) if popcount(sub[v]) >= 3]
        for quad in itertools.combinations(deg3, 4):
            bmask = _mask(list(quad))
            found = _realize(sub, quad, K4_EDGES, block & ~bmask)
            if found is not None:
                return ForbiddenWitness("K4", tuple(quad), tuple(tuple(p) for p in found))
        if popcount(block) < 5:
            continue
        deg2 = [v for v in bits_of(block) if popcount(sub[v]) >= 2]
        for a, b in itertools.combinations(deg3, 2):
            others = [v for v in deg2 if v != a and v != b]
            for trio in itertools.combinations(others, 3):
                branch = (a, b) + trio
                free = block & ~_mask(list(branch))
                if not all(_reachable_within(sub, x, t, free) for x in (a, b) for t in trio):
                    continue
                found = _realize(sub, branch, K23_EDGES, free)
                if found is not None:
                    return ForbiddenWitness("K23", branch, tuple(tuple(p) for p in found))
    return None


# -- bipartite counting bound -------------------------------------------------


@dataclass(frozen=True)
class BipartiteBoundCheck:
    hypothesis_met: bool
    bound_holds: bool
    x_size: int
    y_size: int


def check_bipartite_outerplanar_bound(g: Graph, x: SetLike, y: SetLike) -> BipartiteBoundCheck:
    """Test ``|Y| <= 2|X| - 2`` and whether the outerplanar hypotheses hold.

    The hypotheses are: ``g`` outerplanar, ``|X| >= 2`` and every vertex of
    ``Y`` has degree at least 2.  Whenever they hold the bound must hold.
    """
    xm, ym = g.check_subset(x), g.check_subset(y)
    if xm & ym or (xm | ym) != g.full:
        raise GraphError("x and y must partition the vertex set")
    for v in range(g.n):
        side = xm if xm >> v & 1 else ym
        if g.adj[v] & side:
            raise GraphError(f"edge inside one side at vertex {v}; not a bipartite layout")
    nx_, ny = popcount(xm), popcount(ym)
    hyp = nx_ >= 2 and all(g.degree(v) >= 2 for v in bits_of(ym)) and is_outerplanar(g)
    return BipartiteBoundCheck(hyp, ny <= 2 * nx_ - 2, nx_, ny)
