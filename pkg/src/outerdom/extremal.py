"""The extremal family G_k and its detection.

Labeling used by :func:`build_extremal` for ``G_k`` (``n = 5k + 1``)::

    hub                     0
    spokes v_1..v_k         1..k
    rim w_1..w_2k           k+1..3k       (w_{2i-1}, w_{2i} belong to v_i)
    triangle u_i^1, u_i^2   3k+2i-1, 3k+2i

Edges: hub to every rim vertex, each spoke to its two rim vertices, and a
triangle on each spoke with its two private vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, SetLike, VertexSet, bits_of, build_graph, popcount
from .secure import _defends_fast, _epn_mask, secure_certificate_mask


@dataclass(frozen=True)
class ExtremalWitness:
    """A labeling exhibiting G_k as a spanning subgraph.

    ``rim[2i]`` and ``rim[2i+1]`` are the rim vertices of ``spokes[i]`` and
    ``triangles[i]`` its triangle pair.
    """

    hub: int
    spokes: tuple[int, ...]
    rim: tuple[int, ...]
    triangles: tuple[tuple[int, int], ...]

    @property
    def k(self) -> int:
        return len(self.spokes)

    def secure_set(self) -> VertexSet:
        return VertexSet.of((self.hub,) + self.spokes)

    def edges(self) -> list[tuple[int, int]]:
        out = [(self.hub, w) for w in self.rim]
        for i, s in enumerate(self.spokes):
            a, b = self.triangles[i]
            out += [(s, self.rim[2 * i]), (s, self.rim[2 * i + 1]), (s, a), (s, b), (a, b)]
        return out

    def to_json(self) -> dict:
        return {"k": self.k, "hub": self.hub, "spokes": list(self.spokes),
                "rim": list(self.rim), "triangles": [list(t) for t in self.triangles]}

    @classmethod
    def from_json(cls, doc: dict) -> "ExtremalWitness":
        return cls(int(doc["hub"]), tuple(doc["spokes"]), tuple(doc["rim"]),
                   tuple((int(a), int(b)) for a, b in doc["triangles"]))


def verify_witness(g: Graph, w: ExtremalWitness) -> bool:
    """Every labeled G_k edge is present in ``g`` and the labels cover ``V(g)`` once."""
    k = w.k
    if k < 2 or len(w.rim) != 2 * k or len(w.triangles) != k:
        return False
    labels = [w.hub, *w.spokes, *w.rim, *(x for t in w.triangles for x in t)]
    if sorted(labels) != list(range(g.n)):
        return False
    return all(g.has_edge(a, b) for a, b in w.edges())


def build_extremal(k: int) -> tuple[Graph, ExtremalWitness]:
    """``G_k`` on ``5k+1`` vertices with ``7k`` edges, plus its own labeling."""
    if k < 2:
        raise GraphError(f"G_k needs k >= 2, got {k}")
    spokes = tuple(range(1, k + 1))
    rim = tuple(range(k + 1, 3 * k + 1))
    triangles = tuple((3 * k + 2 * i - 1, 3 * k + 2 * i) for i in range(1, k + 1))
    w = ExtremalWitness(0, spokes, rim, triangles)
    return build_graph(5 * k + 1, w.edges()), w


# -- partition bookkeeping ------------------------------------------------------


@dataclass(frozen=True)
class PartitionProfile:
    s2: VertexSet
    s1: VertexSet
    s0: VertexSet
    c_set: VertexSet
    x: int
    y: int
    # outside vertices each member of S defends, and how many of them lie in C
    defended: dict[int, int]
    defended_in_c: dict[int, int]

    @property
    def x2(self) -> int:
        return len(self.s2)

    @property
    def x1(self) -> int:
        return len(self.s1)

    @property
    def x0(self) -> int:
        return len(self.s0)

    @property
    def c(self) -> int:
        return len(self.c_set)

    @property
    def count_identity(self) -> bool:
        """``y == 2*x2 + x1 + c``."""
        return self.y == 2 * self.x2 + self.x1 + self.c

    @property
    def eq_tight(self) -> bool:
        """``c == 2*x2 + 3*x1 + 4*x0 - 4``, the balance forced when ``|S| = (n+4)/5``."""
        return self.c == 2 * self.x2 + 3 * self.x1 + 4 * self.x0 - 4

    def to_json(self) -> dict:
        return {
            "S2": self.s2.sorted(), "S1": self.s1.sorted(), "S0": self.s0.sorted(),
            "C": self.c_set.sorted(),
            "x2": self.x2, "x1": self.x1, "x0": self.x0, "c": self.c,
            "x": self.x, "y": self.y,
            "count_identity": self.count_identity, "eq_tight": self.eq_tight,
            "defended": {str(v): n for v, n in sorted(self.defended.items())},
            "defended_in_C": {str(v): n for v, n in sorted(self.defended_in_c.items())},
        }


def partition_profile(g: Graph, s: SetLike) -> PartitionProfile:
    """Split a secure dominating set by private-neighbor count.

    Raises :class:`GraphError` if ``s`` is not secure dominating or some
    member has more than two external private neighbors (impossible in an
    outerplanar graph).
    """
    mask = g.check_subset(s)
    if secure_certificate_mask(g, mask) is None:
        raise GraphError("partition profile needs a secure dominating set")
    parts = [0, 0, 0]
    for v in bits_of(mask):
        size = popcount(_epn_mask(g, v, mask))
        if size > 2:
            raise GraphError(f"vertex {v} has {size} external private neighbors; graph is not outerplanar")
        parts[size] |= 1 << v
    outside = g.full & ~mask
    c_mask = 0
    for u in bits_of(outside):
        if popcount(g.adj[u] & mask) >= 2:
            c_mask |= 1 << u
    defended, defended_in_c = {}, {}
    for v in bits_of(mask):
        hits = [u for u in bits_of(g.adj[v] & outside) if _defends_fast(g, v, u, mask)]
        defended[v] = len(hits)
        defended_in_c[v] = sum(1 for u in hits if c_mask >> u & 1)
    return PartitionProfile(
        VertexSet(parts[2]), VertexSet(parts[1]), VertexSet(parts[0]), VertexSet(c_mask),
        popcount(mask), popcount(outside), defended, defended_in_c,
    )


# -- detection ------------------------------------------------------------------


def _k_of(n: int) -> int:
    if n < 11 or (n - 1) % 5:
        raise GraphError(f"n = {n} is not of the form 5k+1 with k >= 2")
    return (n - 1) // 5


def detect_extremal_structural(g: Graph) -> ExtremalWitness | None:
    """Look for a spanning G_k following the hub / rim / spoke / triangle layout.

    Tries hubs in increasing order.  For a hub, groups are built one at a time:
    the smallest unused rim vertex ``r`` (a hub neighbor), a larger partner
    ``r'`` from the hub neighborhood, a spoke adjacent to both, then a
    triangle pair on that spoke.  The first complete labeling in this
    lexicographic order is returned, so for ``build_extremal(k)`` the result
    is its own labeling.
    """
    k = _k_of(g.n)
    adj = g.adj
    for hub in range(g.n):
        if popcount(adj[hub]) < 2 * k:
            continue
        found = _groups(adj, hub, adj[hub], 1 << hub, -1, k)
        if found is not None:
            spokes = tuple(s for _, _, s, _ in found)
            rim = tuple(x for r, r2, _, _ in found for x in (r, r2))
            tris = tuple(t for _, _, _, t in found)
            return ExtremalWitness(hub, spokes, rim, tris)
    return None


def _groups(adj, hub, ring, used, last, left):
    if left == 0:
        return []
    free_ring = ring & ~used
    if popcount(free_ring) < 2 * left:
        return None
    for r in bits_of(free_ring):
        if r <= last:
            continue
        for r2 in bits_of(free_ring >> (r + 1) << (r + 1)):
            for s in bits_of(adj[r] & adj[r2] & ~used):
                avail = ~(used | (1 << r) | (1 << r2) | (1 << s))
                cand = adj[s] & avail
                for t1 in bits_of(cand):
                    for t2 in bits_of(cand & adj[t1] >> (t1 + 1) << (t1 + 1)):
                        taken = used | (1 << r) | (1 << r2) | (1 << s) | (1 << t1) | (1 << t2)
                        rest = _groups(adj, hub, ring, taken, r, left - 1)
                        if rest is not None:
                            return [(r, r2, s, (t1, t2))] + rest
    return None


def _canonical_groups(w: ExtremalWitness) -> ExtremalWitness:
    groups = []
    for i, s in enumerate(w.spokes):
        pair = tuple(sorted(w.rim[2 * i:2 * i + 2]))
        groups.append((pair, s, tuple(sorted(w.triangles[i]))))
    groups.sort()
    return ExtremalWitness(w.hub, tuple(g[1] for g in groups),
                           tuple(x for g in groups for x in g[0]), tuple(g[2] for g in groups))


def spanning_subgraph_oracle(g: Graph, k: int) -> ExtremalWitness | None:
    """Generic backtracking embedding of G_k onto all of ``V(g)``.

    Knows nothing about the hub/spoke structure beyond the pattern graph:
    pattern vertices are placed one at a time (each adjacent to an already
    placed one), candidates must be adjacent to the images of all placed
    pattern neighbors and have at least the pattern degree.
    """
    if k < 2:
        raise GraphError(f"G_k needs k >= 2, got {k}")
    pattern, labels = build_extremal(k)
    if g.n != pattern.n:
        raise GraphError(f"host has {g.n} vertices, G_{k} has {pattern.n}")
    order = [0]
    for i in range(k):
        order += [labels.rim[2 * i], labels.rim[2 * i + 1], labels.spokes[i], *labels.triangles[i]]
    host_deg = [popcount(r) for r in g.adj]
    pat_deg = [popcount(r) for r in pattern.adj]
    image = [-1] * pattern.n
    placed_before = []
    seen = 0
    for p in order:
        placed_before.append([q for q in bits_of(pattern.adj[p]) if seen >> q & 1])
        seen |= 1 << p

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        cand = g.full & ~used
        for q in placed_before[i]:
            cand &= g.adj[image[q]]
        for h in bits_of(cand):
            if host_deg[h] < pat_deg[p]:
                continue
            image[p] = h
            if extend(i + 1, used | (1 << h)):
                return True
        image[p] = -1
        return False

    if not extend(0, 0):
        return None
    w = ExtremalWitness(
        image[0],
        tuple(image[s] for s in labels.spokes),
        tuple(image[r] for r in labels.rim),
        tuple((image[a], image[b]) for a, b in labels.triangles),
    )
    return _canonical_groups(w)
