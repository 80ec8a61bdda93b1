"""Outerplanarity by planarity of G plus an apex, and K4 / K2,3 subdivision
witnesses when it fails."""

from __future__ import annotations

import random

from outerdom import find_forbidden_subdivision, is_outerplanar, verify_forbidden_witness
from outerdom.generators import random_maximal_outerplanar
from outerdom.graph import complete_bipartite, cycle_graph, wheel_graph


def main() -> None:
    for name, g in [("C8", cycle_graph(8)), ("K2,3", complete_bipartite(2, 3)), ("W6", wheel_graph(6))]:
        ok = is_outerplanar(g)
        line = f"{name}: outerplanar={ok}"
        if not ok:
            w = find_forbidden_subdivision(g)
            assert verify_forbidden_witness(g, w)
            line += f", {w.kind} subdivision on branch vertices {sorted(w.branch_vertices)}"
        print(line)

    rng = random.Random(3)
    g = random_maximal_outerplanar(10, rng)
    print(f"\nmaximal outerplanar graph: m={g.m} = 2n-3")
    for u, v in rng.sample(g.edges(), 2):
        g = g.remove_edge(u, v)
    print(f"after deleting two edges: m={g.m}")
    non_edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    keep = [e for e in non_edges if is_outerplanar(g.add_edge(*e))]
    print(f"  {len(keep)} of {len(non_edges)} possible new edges keep it outerplanar")
    u, v = next(e for e in non_edges if e not in keep)
    w = find_forbidden_subdivision(g.add_edge(u, v))
    print(f"  adding {u}-{v} creates a {w.kind} subdivision: {w.to_json()}")


if __name__ == "__main__":
    main()
