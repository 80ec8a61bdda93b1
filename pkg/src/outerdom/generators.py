"""Random graph generators used by tests, sweeps and demos."""

from __future__ import annotations

import random

from .graph import Graph, build_graph, is_connected, permute


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_maximal_outerplanar(n: int, rng: random.Random) -> Graph:
    """Random triangulation of the polygon ``0..n-1`` (``2n - 3`` edges for ``n >= 3``)."""
    edges = [(i, i + 1) for i in range(n - 1)]
    if n >= 3:
        edges.append((n - 1, 0))
    stack = [list(range(n))]
    while stack:
        poly = stack.pop()
        if len(poly) < 4:
            continue
        i = rng.randrange(len(poly))
        j = (i + rng.randrange(2, len(poly) - 1)) % len(poly)
        a, b = min(i, j), max(i, j)
        edges.append((poly[a], poly[b]))
        stack.append(poly[a:b + 1])
        stack.append(poly[b:] + poly[:a + 1])
    return build_graph(n, edges)


def random_outerplanar(n: int, rng: random.Random, keep: float | None = None) -> Graph:
    """Connected outerplanar graph: triangulate, delete edges, relabel.

    Each edge survives with probability ``keep`` (drawn uniformly from
    ``[0.5, 1]`` when omitted); disconnected draws are rejected.
    """
    while True:
        q = rng.uniform(0.5, 1.0) if keep is None else keep
        base = random_maximal_outerplanar(n, rng)
        g = build_graph(n, [e for e in base.edges() if rng.random() < q])
        if is_connected(g):
            perm = list(range(n))
            rng.shuffle(perm)
            return permute(g, perm)
