"""Exact domination and secure domination numbers.

Both solvers try target sizes in increasing order and, for each size, walk
vertex combinations in lexicographic order, so the first hit is the
lexicographically smallest optimum.  A branch is cut as soon as some vertex
can no longer be dominated by the vertices still available.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import BITSET_TIER, Graph, GraphError, VertexSet, bits_of, component_masks, popcount
from .outerplanarity import _restrict, is_outerplanar
from .secure import SecureCertificate, _defends_fast, _dominates, secure_certificate_mask

BRUTEFORCE_CAP = 16


@dataclass(frozen=True)
class SolveResult:
    value: int
    certificate: VertexSet
    secure: SecureCertificate | None
    nodes_explored: int

    def to_json(self) -> dict:
        out = {"value": self.value, "set": self.certificate.sorted(),
               "nodes_explored": self.nodes_explored}
        if self.secure is not None:
            out["certificate"] = self.secure.to_json()
        return out


def _check_tier(g: Graph) -> None:
    if g.n < 1:
        raise GraphError("solver needs at least one vertex")
    if g.n > BITSET_TIER:
        raise GraphError(f"solver limited to n <= {BITSET_TIER}, got {g.n}")


class _SizeSearch:
    """Lexicographic DFS over ``k``-subsets of ``comp`` that dominate ``comp``."""

    def __init__(self, g: Graph, comp: int, accept=None):
        self.g = g
        self.comp = comp
        self.verts = list(bits_of(comp))
        self.closed = [g.adj[v] | (1 << v) for v in range(g.n)]
        # suffix[i]: mask of verts[i:]
        self.suffix = [0] * (len(self.verts) + 1)
        for i in range(len(self.verts) - 1, -1, -1):
            self.suffix[i] = self.suffix[i + 1] | (1 << self.verts[i])
        self.accept = accept
        self.nodes = 0

    def run(self, k: int) -> int | None:
        return self._go(0, 0, 0, k)

    def _go(self, start: int, chosen: int, dominated: int, left: int) -> int | None:
        self.nodes += 1
        undominated = self.comp & ~dominated
        if left == 0:
            if not undominated and (self.accept is None or self.accept(chosen)):
                return chosen
            return None
        remaining = self.suffix[start]
        if popcount(remaining) < left:
            return None
        limit = None
        for w in bits_of(undominated):
            reach = self.closed[w] & remaining
            if not reach:
                return None
            top = reach.bit_length() - 1
            if limit is None or top < limit:
                limit = top
        for i in range(start, len(self.verts) - left + 1):
            v = self.verts[i]
            if limit is not None and v > limit:
                break
            hit = self._go(i + 1, chosen | (1 << v), dominated | self.closed[v], left - 1)
            if hit is not None:
                return hit
        return None


def _solve_component(g: Graph, comp: int, lower: int, accept) -> tuple[int, int]:
    search = _SizeSearch(g, comp, accept)
    for k in range(max(lower, 1), popcount(comp) + 1):
        found = search.run(k)
        if found is not None:
            return found, search.nodes
    raise AssertionError("the whole component always qualifies")


def _component_lower(g: Graph, comp: int) -> int:
    size = popcount(comp)
    delta = max(popcount(g.adj[v]) for v in bits_of(comp))
    return -(-size // (delta + 1))


def gamma(g: Graph) -> SolveResult:
    """Domination number with the lexicographically smallest minimum set."""
    _check_tier(g)
    total = nodes = 0
    for comp in component_masks(g):
        found, used = _solve_component(g, comp, _component_lower(g, comp), None)
        total |= found
        nodes += used
    return SolveResult(popcount(total), VertexSet(total), None, nodes)


def gamma_s(g: Graph, use_outerplanar_bound: bool = True) -> SolveResult:
    """Secure domination number with a certificate.

    With ``use_outerplanar_bound`` the search for an outerplanar component on
    at least four vertices starts at ``ceil((n+4)/5)``.  Verification sweeps
    turn this off so that they never assume what they are checking.
    """
    _check_tier(g)
    total = nodes = 0
    for comp in component_masks(g):
        lower = _component_lower(g, comp)
        size = popcount(comp)
        if use_outerplanar_bound and size >= 4 and is_outerplanar(_restrict(g, comp)):
            lower = max(lower, -(-(size + 4) // 5))

        def accept(s: int, comp: int = comp) -> bool:
            return _secure_within(g, comp, s)

        found, used = _solve_component(g, comp, lower, accept)
        total |= found
        nodes += used
    cert = secure_certificate_mask(g, total)
    assert cert is not None
    return SolveResult(popcount(total), VertexSet(total), cert, nodes)


def _secure_within(g: Graph, comp: int, s: int) -> bool:
    # s dominates comp here; every outside vertex of comp needs a defender
    for u in bits_of(comp & ~s):
        if not any(_defends_fast(g, v, u, s) for v in bits_of(g.adj[u] & s)):
            return False
    return True


def gamma_s_bruteforce(g: Graph) -> SolveResult:
    """Reference value: scan all subsets by size using only the swap definition."""
    if g.n > BRUTEFORCE_CAP:
        raise GraphError(f"brute force limited to n <= {BRUTEFORCE_CAP}, got {g.n}")
    if g.n < 1:
        raise GraphError("solver needs at least one vertex")
    tried = 0
    for k in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            tried += 1
            s = 0
            for v in combo:
                s |= 1 << v
            if not _dominates(g, s):
                continue
            if all(
                any(_dominates(g, s & ~(1 << v) | (1 << u)) for v in bits_of(g.adj[u] & s))
                for u in bits_of(g.full & ~s)
            ):
                cert = secure_certificate_mask(g, s, use_swap=True)
                return SolveResult(k, VertexSet(s), cert, tried)
    raise AssertionError("V(G) is always secure dominating")
