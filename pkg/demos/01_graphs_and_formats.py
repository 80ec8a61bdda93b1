"""Build a few graphs, round-trip them through graph6 and edge lists, and
check that canonical forms ignore vertex labels."""

from __future__ import annotations

import random

from outerdom import canonical_form, format_edgelist, from_graph6, parse_edgelist, permute, to_graph6
from outerdom.graph import cycle_graph, path_graph, wheel_graph


def main() -> None:
    wheel = wheel_graph(5)
    code = to_graph6(wheel)
    print(f"W5 has n={wheel.n}, m={wheel.m}, graph6 {code.decode()}")
    assert from_graph6(code).edges() == wheel.edges()

    text = format_edgelist(path_graph(4))
    print("P4 as an edge list:\n" + text.rstrip())
    assert parse_edgelist(text).edges() == path_graph(4).edges()

    # relabel a 7-cycle at random; the canonical form must not move
    rng = random.Random(1)
    c7 = cycle_graph(7)
    perm = list(range(7))
    rng.shuffle(perm)
    shuffled = permute(c7, perm)
    print(f"C7 edges after relabeling: {shuffled.edges()}")
    print("same canonical form:", canonical_form(c7) == canonical_form(shuffled))


if __name__ == "__main__":
    main()
