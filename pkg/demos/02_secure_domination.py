"""Exact gamma and gamma_s on small graphs, with certificates checked by the
swap definition alone."""

from __future__ import annotations

from outerdom import (
    defends_by_epn,
    defends_by_private_cover,
    defends_by_swap,
    gamma,
    gamma_s,
    is_secure_dominating,
    verify_certificate,
)
from outerdom.graph import build_graph, cycle_graph, path_graph


def main() -> None:
    for name, g in [("P4", path_graph(4)), ("C6", cycle_graph(6)), ("P11", path_graph(11))]:
        d, s = gamma(g), gamma_s(g)
        print(f"{name}: gamma={d.value} gamma_s={s.value} set={s.certificate.sorted()} "
              f"defenders={dict(s.secure.defender)}")
        assert verify_certificate(g, s.secure)

    # K4 minus one edge shows why the clique test needs a secure set to be exact
    g = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)])
    print("\nK4 - {1,2}, S = {0}, v = 0, u = 3")
    print("  swap:         ", defends_by_swap(g, 0, 3, [0]))
    print("  private cover:", defends_by_private_cover(g, 0, 3, [0]))
    print("  epn clique:   ", defends_by_epn(g, 0, 3, [0]))
    print("  {0} secure?   ", is_secure_dominating(g, [0]) is not None)


if __name__ == "__main__":
    main()
