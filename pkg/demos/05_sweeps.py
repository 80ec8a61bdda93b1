"""Exhaustive sweeps over small connected outerplanar graphs: the lower
bound on gamma_s and the bipartite counting bound."""

from __future__ import annotations

import sys

from outerdom import verify_lemma1, verify_lower_bound


def main(n_max: int = 8) -> None:
    bound = verify_lower_bound(n_max)
    print(bound.table())
    print()
    print(verify_lemma1(n_max).table())


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 8)
