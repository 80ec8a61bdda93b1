"""The family G_k meets the lower bound ceil((n+4)/5); a detector and a
generic embedding search both recognize it after relabeling."""

from __future__ import annotations

import random

from outerdom import (
    build_extremal,
    detect_extremal_structural,
    gamma_s,
    lower_bound,
    partition_profile,
    permute,
    spanning_subgraph_oracle,
)


def main() -> None:
    for k in (2, 3, 4):
        g, w = build_extremal(k)
        res = gamma_s(g, use_outerplanar_bound=False)
        prof = partition_profile(g, res.certificate)
        print(f"k={k}: n={g.n} m={g.m} gamma_s={res.value} bound={lower_bound(g.n)} "
              f"x2={prof.x2} x1={prof.x1} x0={prof.x0} c={prof.c} balanced={prof.eq_tight}")

    g, _ = build_extremal(2)
    perm = list(range(g.n))
    random.Random(5).shuffle(perm)
    h = permute(g, perm)
    print("\nrelabeled G_2")
    print("  detector:", detect_extremal_structural(h).to_json())
    print("  oracle:  ", spanning_subgraph_oracle(h, 2).to_json())


if __name__ == "__main__":
    main()
