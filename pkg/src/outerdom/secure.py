"""Domination, external private neighbors and the defense relation.

Two independent checks decide whether ``v`` in ``S`` defends ``u`` outside it:
:func:`defends_by_swap` performs the swap and re-tests domination, while
:func:`defends_by_epn` uses the clique criterion on ``epn(v, S) | {u, v}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .graph import Graph, GraphError, SetLike, VertexSet, bits_of, is_complete_on


class NotDominatingError(GraphError):
    """Raised when a predicate that presumes a dominating set receives another."""


def dominated_mask(g: Graph, s: int) -> int:
    """Vertices in ``s`` or adjacent to it."""
    dom = s
    for v in bits_of(s):
        dom |= g.adj[v]
    return dom


def _dominates(g: Graph, s: int) -> bool:
    return dominated_mask(g, s) == g.full


def is_dominating(g: Graph, s: SetLike) -> bool:
    return _dominates(g, g.check_subset(s))


def _epn_mask(g: Graph, v: int, s: int) -> int:
    others = s & ~(1 << v)
    out = 0
    for u in bits_of(g.adj[v] & ~s):
        if not g.adj[u] & others:
            out |= 1 << u
    return out


def epn(g: Graph, v: int, s: SetLike) -> VertexSet:
    """External private neighbors of ``v``: outside vertices seeing only ``v`` in ``s``."""
    mask = g.check_subset(s)
    if not mask >> v & 1:
        raise GraphError(f"vertex {v} is not in the set")
    return VertexSet(_epn_mask(g, v, mask))


def _check_roles(g: Graph, v: int, u: int, s: int) -> None:
    if not (0 <= v < g.n and 0 <= u < g.n):
        raise GraphError(f"vertices ({v}, {u}) outside 0..{g.n - 1}")
    if not s >> v & 1:
        raise GraphError(f"defender {v} must belong to the set")
    if s >> u & 1:
        raise GraphError(f"defended vertex {u} must lie outside the set")


def defends_by_swap(g: Graph, v: int, u: int, s: SetLike) -> bool:
    """``uv`` is an edge and ``(S - v) + u`` still dominates."""
    mask = g.check_subset(s)
    _check_roles(g, v, u, mask)
    if not g.has_edge(u, v):
        return False
    return _dominates(g, mask & ~(1 << v) | (1 << u))


def defends_by_epn(g: Graph, v: int, u: int, s: SetLike) -> bool:
    """``uv`` is an edge and ``epn(v, S) | {u, v}`` induces a clique.

    ``s`` must dominate ``g``; anything else raises :class:`NotDominatingError`.
    """
    mask = g.check_subset(s)
    _check_roles(g, v, u, mask)
    if not _dominates(g, mask):
        raise NotDominatingError("epn defense criterion needs a dominating set")
    if not g.has_edge(u, v):
        return False
    return is_complete_on(g, VertexSet(_epn_mask(g, v, mask) | (1 << u) | (1 << v)))


def defends_by_private_cover(g: Graph, v: int, u: int, s: SetLike) -> bool:
    """``uv`` is an edge and ``u`` sees every other private neighbor of ``v``.

    This is the exact local form of the swap condition for any dominating
    set.  The clique test of :func:`defends_by_epn` asks for more (the
    private neighbors pairwise adjacent) and so can refuse a valid swap when
    ``s`` is dominating but not secure, e.g. ``K4`` minus an edge with
    ``s = {0}``, ``v = 0``, ``u = 3``.  On secure dominating sets the two agree.
    """
    mask = g.check_subset(s)
    _check_roles(g, v, u, mask)
    if not _dominates(g, mask):
        raise NotDominatingError("private-cover criterion needs a dominating set")
    if not g.has_edge(u, v):
        return False
    return not _epn_mask(g, v, mask) & ~(1 << u) & ~g.adj[u]


def _defends_fast(g: Graph, v: int, u: int, s: int) -> bool:
    # hot-loop form of defends_by_epn for an already dominating s
    if not g.adj[u] >> v & 1:
        return False
    clique = _epn_mask(g, v, s) | (1 << u) | (1 << v)
    for a in bits_of(clique):
        if clique & ~(1 << a) & ~g.adj[a]:
            return False
    return True


@dataclass(frozen=True)
class SecureCertificate:
    """A secure dominating set with a defender for every outside vertex."""

    s: VertexSet
    defender: Mapping[int, int]

    def to_json(self) -> dict:
        return {"set": self.s.sorted(),
                "defender": {str(u): v for u, v in sorted(self.defender.items())}}


def secure_certificate_mask(g: Graph, s: int, use_swap: bool = False) -> SecureCertificate | None:
    if not _dominates(g, s):
        return None
    defender = {}
    for u in bits_of(g.full & ~s):
        for v in bits_of(g.adj[u] & s):
            ok = (_dominates(g, s & ~(1 << v) | (1 << u)) if use_swap
                  else _defends_fast(g, v, u, s))
            if ok:
                defender[u] = v
                break
        else:
            return None
    return SecureCertificate(VertexSet(s), defender)


def is_secure_dominating(g: Graph, s: SetLike, use_swap: bool = False) -> SecureCertificate | None:
    """Certificate naming the smallest defender of each outside vertex, or ``None``.

    ``use_swap`` switches the defense test to the direct swap check.
    """
    return secure_certificate_mask(g, g.check_subset(s), use_swap)


def first_undefended(g: Graph, s: SetLike) -> int | None:
    """Smallest outside vertex with no defender (or undominated); ``None`` if secure."""
    mask = g.check_subset(s)
    dominated = _dominates(g, mask)
    for u in bits_of(g.full & ~mask):
        if not g.adj[u] & mask:
            return u
        if dominated and not any(_defends_fast(g, v, u, mask) for v in bits_of(g.adj[u] & mask)):
            return u
    return None


def verify_certificate(g: Graph, cert: SecureCertificate) -> bool:
    """Re-check a certificate with the swap definition only."""
    s = g.check_subset(cert.s)
    if not _dominates(g, s):
        return False
    outside = set(bits_of(g.full & ~s))
    if set(cert.defender) != outside:
        return False
    for u, v in cert.defender.items():
        if not (s >> v & 1) or not g.has_edge(u, v):
            return False
        if not _dominates(g, s & ~(1 << v) | (1 << u)):
            return False
    return True
