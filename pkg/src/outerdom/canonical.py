"""Canonical labeling by partition refinement and individualization.

The search tree is the usual one: refine the ordered partition to an
equitable one, individualize each vertex of the first non-singleton cell,
recurse.  Leaves are compared by their relabeled adjacency rows and the
largest one wins.  Equal leaves yield automorphisms, which prune sibling
branches lying in the same orbit of the pointwise stabilizer of the path.
"""

from __future__ import annotations

from .formats import to_graph6
from .graph import BITSET_TIER, Graph, GraphError, bits_of, popcount


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                key = tuple(popcount(row & m) for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                out.extend(groups[k] for k in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _leaf_code(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    code = []
    for v in order:
        row = 0
        for u in bits_of(adj[v]):
            row |= 1 << pos[u]
        code.append(row)
    return tuple(code)


class _Search:
    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.n
        self.first: tuple[tuple[int, ...], list[int]] | None = None
        self.best: tuple[tuple[int, ...], list[int]] | None = None
        self.automorphisms: list[list[int]] = []

    def _record(self, a: list[int], b: list[int]) -> None:
        sigma = [0] * self.n
        for x, y in zip(a, b):
            sigma[x] = y
        if any(sigma[v] != v for v in range(self.n)):
            self.automorphisms.append(sigma)

    def run(self) -> list[int]:
        cells = _refine(self.adj, [list(range(self.n))]) if self.n else []
        self._descend(cells, [])
        assert self.best is not None
        return self.best[1]

    def _descend(self, cells: list[list[int]], fixed: list[int]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _leaf_code(self.adj, order)
            if self.first is None:
                self.first = self.best = (code, order)
                return
            if code == self.first[0]:
                self._record(self.first[1], order)
            elif code == self.best[0]:
                self._record(self.best[1], order)
            elif code > self.best[0]:
                self.best = (code, order)
            return
        cell = cells[target]
        tried: list[int] = []
        parent = list(range(self.n))
        seen = 0

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for v in cell:
            if tried:
                # fold in automorphisms discovered since the last sibling
                for s in self.automorphisms[seen:]:
                    if all(s[x] == x for x in fixed):
                        for x in cell:
                            a, b = find(x), find(s[x])
                            if a != b:
                                parent[a] = b
                seen = len(self.automorphisms)
                root = find(v)
                if any(find(t) == root for t in tried):
                    continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            self._descend(_refine(self.adj, child), fixed + [v])


def canonical_labeling(g: Graph) -> tuple[list[int], list[list[int]]]:
    """Return ``(order, automorphisms)``.

    ``order[i]`` is the vertex placed at canonical position ``i``; the
    automorphisms are those discovered during the search (permutations as
    lists) and need not generate the full group.
    """
    if g.n > BITSET_TIER:
        raise GraphError(f"canonical labeling limited to n <= {BITSET_TIER}, got {g.n}")
    search = _Search(g)
    order = search.run() if g.n else []
    return order, search.automorphisms


def relabel_canonically(g: Graph, order: list[int]) -> Graph:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in bits_of(g.adj[v]):
            row |= 1 << pos[u]
        adj[pos[v]] = row
    return Graph(g.n, tuple(adj))


def canonical_form(g: Graph) -> bytes:
    """graph6 bytes of the canonical relabeling; equal iff isomorphic."""
    order, _ = canonical_labeling(g)
    return to_graph6(relabel_canonically(g, order))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)
