"""Isomorphism-free generation of connected graphs and the verification sweeps.

Generation is canonical augmentation by one vertex.  A child ``C`` of a
parent ``P`` (``P`` plus a new vertex joined to a nonempty subset) is kept
only when ``P`` is isomorphic to ``C - d``, where ``d`` is the non-cut vertex
of ``C`` with the largest canonical position.  That makes ``P`` the unique
admissible parent class of ``C``; repeats arising from the same parent are
dropped with a per-parent set of canonical forms.

Outerplanarity is inherited by ``C - d``, so the outerplanar stream prunes
non-outerplanar children during the augmentation instead of filtering the
full connected stream; the output is the same set.
"""

from __future__ import annotations

import itertools
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from .canonical import canonical_form, canonical_labeling, relabel_canonically
from .formats import from_graph6, graph6_str, to_graph6
from .extremal import partition_profile
from .graph import (
    Graph,
    GraphError,
    VertexSet,
    bits_of,
    complete_graph,
    cut_vertices,
    is_connected,
    popcount,
)
from .generators import random_graph
from .outerplanarity import check_bipartite_outerplanar_bound, is_outerplanar
from .secure import (
    _dominates,
    _epn_mask,
    defends_by_epn,
    defends_by_private_cover,
    defends_by_swap,
    secure_certificate_mask,
    verify_certificate,
)
from .solver import gamma_s

log = logging.getLogger(__name__)

MAX_N = 10
SWEEP_MAX_N = 9


def _delete_vertex(g: Graph, d: int) -> Graph:
    adj = []
    low = (1 << d) - 1
    for v in range(g.n):
        if v == d:
            continue
        row = g.adj[v]
        adj.append(row & low | (row >> (d + 1)) << d)
    return Graph(g.n - 1, tuple(adj))


def _children(parent: Graph, admit: Callable[[Graph, int], bool] | None) -> list[Graph]:
    m = parent.n
    pcode = canonical_form(parent)
    seen: set[bytes] = set()
    out = []
    for nbrs in range(1, 1 << m):
        adj = tuple(row | (1 << m) if nbrs >> v & 1 else row for v, row in enumerate(parent.adj))
        child = Graph(m + 1, adj + (nbrs,))
        if admit is not None and not admit(child, nbrs):
            continue
        order, _ = canonical_labeling(child)
        pos = [0] * child.n
        for i, v in enumerate(order):
            pos[v] = i
        cuts = cut_vertices(child)
        d = max((v for v in range(child.n) if not cuts >> v & 1), key=pos.__getitem__)
        if d != m:
            if popcount(child.adj[d]) != popcount(nbrs):
                continue
            if canonical_form(_delete_vertex(child, d)) != pcode:
                continue
        code = to_graph6(relabel_canonically(child, order))
        if code in seen:
            continue
        seen.add(code)
        out.append(child)
    return out


def _augment(n: int, admit) -> Iterator[Graph]:
    if not 1 <= n <= MAX_N:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_N}, got {n}")
    if n == MAX_N:
        log.warning("enumerating n=%d runs for a long time in pure Python", n)

    def walk(g: Graph) -> Iterator[Graph]:
        if g.n == n:
            yield g
            return
        for child in _children(g, admit):
            yield from walk(child)

    yield from walk(Graph(1, (0,)))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One graph per isomorphism class of connected graphs on ``n`` vertices."""
    return _augment(n, None)


def _outerplanar_child(child: Graph, nbrs: int) -> bool:
    n = child.n
    new = n - 1
    if n >= 2 and child.m > 2 * n - 3:
        return False
    # the new vertex may not close a K4 or share three neighbors with anyone
    for a in bits_of(nbrs):
        for b in bits_of(nbrs & child.adj[a]):
            if nbrs & child.adj[a] & child.adj[b]:
                return False
    for a in range(new):
        if popcount(child.adj[a] & nbrs) >= 3:
            return False
    return is_outerplanar(child)


def enumerate_outerplanar(n: int) -> Iterator[Graph]:
    """One graph per isomorphism class of connected outerplanar graphs on ``n`` vertices."""
    return _augment(n, _outerplanar_child)


def enumerate_bruteforce_counts(n: int) -> tuple[int, int]:
    """Count (all, connected) unlabeled graphs on ``n`` vertices by orbit marking.

    Walks every labeled edge set; each not yet marked is a new class, whose
    whole orbit under the ``n!`` relabelings is then marked.  Independent of
    the canonical labeling code.  Practical up to ``n = 7``.
    """
    pairs = [(i, j) for j in range(n) for i in range(j)]
    index = {p: e for e, p in enumerate(pairs)}
    ne = len(pairs)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    # image[p, e]: position of edge e after relabeling by perms[p]
    image = np.empty((len(perms), ne), dtype=np.int64)
    for e, (i, j) in enumerate(pairs):
        a, b = perms[:, i], perms[:, j]
        lo, hi = np.minimum(a, b), np.maximum(a, b)
        image[:, e] = [index[(int(x), int(y))] for x, y in zip(lo, hi)]
    weights = np.left_shift(np.int64(1), image)
    marked = np.zeros(1 << ne, dtype=bool)
    total = connected = 0
    cursor = 0
    while True:
        free = np.flatnonzero(~marked[cursor:])
        if free.size == 0:
            break
        mask = cursor + int(free[0])
        cursor = mask
        edges = [e for e in range(ne) if mask >> e & 1]
        orbit = weights[:, edges].sum(axis=1) if edges else np.zeros(len(perms), dtype=np.int64)
        marked[orbit] = True
        total += 1
        adj = [0] * n
        for e in edges:
            i, j = pairs[e]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        if is_connected(Graph(n, tuple(adj))):
            connected += 1
    return total, connected


# -- sweep reports --------------------------------------------------------------


@dataclass
class SweepReport:
    kind: str
    n_range: tuple[int, int]
    generated: dict[int, int] = field(default_factory=dict)
    kept: dict[int, int] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)
    extremal_hits: dict[int, list[str]] = field(default_factory=dict)
    exceptions: list[dict] = field(default_factory=list)
    property_failures: list[dict] = field(default_factory=list)
    checks: dict[int, int] = field(default_factory=dict)
    wall_time: dict[int, float] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.property_failures

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n_range": list(self.n_range),
            "generated": {str(k): v for k, v in sorted(self.generated.items())},
            "kept": {str(k): v for k, v in sorted(self.kept.items())},
            "checks": {str(k): v for k, v in sorted(self.checks.items())},
            "violations": sorted(self.violations, key=lambda r: r.get("graph6", "")),
            "extremal_hits": {str(k): sorted(v) for k, v in sorted(self.extremal_hits.items())},
            "exceptions": self.exceptions,
            "property_failures": sorted(self.property_failures, key=lambda r: r.get("graph6", "")),
            "wall_time": {str(k): round(v, 3) for k, v in sorted(self.wall_time.items())},
        }

    def table(self) -> str:
        lines = [f"{self.kind}: n = {self.n_range[0]}..{self.n_range[1]}",
                 f"{'n':>3} {'generated':>10} {'kept':>8} {'checks':>10} {'hits':>6} {'secs':>8}"]
        for n in sorted(self.generated):
            lines.append(
                f"{n:>3} {self.generated[n]:>10} {self.kept.get(n, 0):>8} "
                f"{self.checks.get(n, 0):>10} {len(self.extremal_hits.get(n, [])):>6} "
                f"{self.wall_time.get(n, 0.0):>8.2f}"
            )
        lines.append(f"violations: {len(self.violations)}  property failures: {len(self.property_failures)}")
        for ex in self.exceptions:
            lines.append(f"exception: {ex}")
        return "\n".join(lines)


def lower_bound(n: int) -> int:
    """``ceil((n + 4) / 5)``."""
    return -(-(n + 4) // 5)


def _bound_job(g6: str) -> dict:
    g = from_graph6(g6)
    res = gamma_s(g, use_outerplanar_bound=False)
    s = res.certificate.bits
    out = {"graph6": g6, "gamma_s": res.value, "bound": lower_bound(g.n), "problems": []}
    if not verify_certificate(g, res.secure):
        out["problems"].append("certificate failed re-validation")
    if res.value != len(res.secure.s):
        out["problems"].append("certificate size differs from value")
    for v in bits_of(s):
        if popcount(_epn_mask(g, v, s)) > 2:
            out["problems"].append(f"|epn({v})| > 2")
    if not out["problems"]:
        prof = partition_profile(g, res.certificate)
        if not prof.count_identity or prof.x != prof.x2 + prof.x1 + prof.x0:
            out["problems"].append("partition counts inconsistent")
        if res.value == lower_bound(g.n) and (g.n + 4) % 5 == 0 and not prof.eq_tight:
            out["problems"].append("tight instance breaks c = 2x2 + 3x1 + 4x0 - 4")
    return out


def _map(fn, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 64:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (8 * jobs))))


def verify_lower_bound(n_max: int = SWEEP_MAX_N, jobs: int = 1, emit=None, n_min: int = 4) -> SweepReport:
    """Check ``gamma_s >= ceil((n+4)/5)`` on every connected outerplanar graph.

    ``K3`` is recorded under ``exceptions``: it is outerplanar with
    ``gamma_s = 1 < 2``, and the statement only covers ``n >= 4``.
    """
    if not 4 <= n_max <= MAX_N:
        raise GraphError(f"n_max must lie in 4..{MAX_N}")
    report = SweepReport("lower-bound", (n_min, n_max))
    k3 = gamma_s(complete_graph(3), use_outerplanar_bound=False)
    report.exceptions.append({"graph6": graph6_str(complete_graph(3)), "gamma_s": k3.value,
                              "bound": lower_bound(3), "reason": "n < 4"})
    for n in range(n_min, n_max + 1):
        start = time.perf_counter()
        stream = [graph6_str(g) for g in enumerate_outerplanar(n)]
        if emit is not None:
            emit.writelines(s + "\n" for s in stream)
        results = _map(_bound_job, stream, jobs)
        report.generated[n] = report.kept[n] = len(stream)
        report.checks[n] = len(results)
        hits = []
        for r in results:
            if r["gamma_s"] < r["bound"]:
                report.violations.append({k: r[k] for k in ("graph6", "gamma_s", "bound")})
            elif r["gamma_s"] == r["bound"]:
                hits.append(r["graph6"])
            for p in r["problems"]:
                report.property_failures.append({"graph6": r["graph6"], "problem": p})
        report.extremal_hits[n] = hits
        report.wall_time[n] = time.perf_counter() - start
        log.info("n=%d: %d outerplanar graphs, %.1fs", n, len(stream), report.wall_time[n])
    return report


def two_coloring(g: Graph) -> int | None:
    """Mask of one color class of a proper 2-coloring, or ``None``."""
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = [root]
        for v in queue:
            for u in bits_of(g.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return sum(1 << v for v in range(g.n) if color[v] == 0)


def verify_lemma1(n_max: int = SWEEP_MAX_N, emit=None) -> SweepReport:
    """``|Y| <= 2|X| - 2`` on connected bipartite outerplanar graphs, both side assignments."""
    if not 2 <= n_max <= MAX_N:
        raise GraphError(f"n_max must lie in 2..{MAX_N}")
    report = SweepReport("lemma1", (2, n_max))
    for n in range(2, n_max + 1):
        start = time.perf_counter()
        gen = kept = met = 0
        for g in enumerate_outerplanar(n):
            gen += 1
            side = two_coloring(g)
            if side is None:
                continue
            kept += 1
            if emit is not None:
                emit.write(graph6_str(g) + "\n")
            for x in (side, g.full & ~side):
                check = check_bipartite_outerplanar_bound(g, VertexSet(x), VertexSet(g.full & ~x))
                met += check.hypothesis_met
                if check.hypothesis_met and not check.bound_holds:
                    report.violations.append({"graph6": graph6_str(g), "x": list(bits_of(x)),
                                              "x_size": check.x_size, "y_size": check.y_size})
        report.generated[n], report.kept[n], report.checks[n] = gen, kept, met
        report.wall_time[n] = time.perf_counter() - start
    return report


CRITERIA = {"clique": defends_by_epn, "cover": defends_by_private_cover}


def _thm2_disagreements(g: Graph, criterion: str = "clique",
                        secure_only: bool = False) -> tuple[int, list[dict]]:
    local = CRITERIA[criterion]
    checked = 0
    bad = []
    for s in range(1, 1 << g.n):
        if not _dominates(g, s):
            continue
        if secure_only and secure_certificate_mask(g, s) is None:
            continue
        for v in bits_of(s):
            for u in bits_of(g.full & ~s):
                checked += 1
                if defends_by_swap(g, v, u, VertexSet(s)) != local(g, v, u, VertexSet(s)):
                    bad.append({"graph6": graph6_str(g), "set": list(bits_of(s)), "v": v, "u": u})
    return checked, bad


def verify_thm2_equivalence(n_max: int = 6, criterion: str = "clique",
                            secure_only: bool = False) -> SweepReport:
    """Compare the swap test with a local criterion on every dominating set.

    ``criterion`` is ``"clique"`` (:func:`defends_by_epn`) or ``"cover"``
    (:func:`defends_by_private_cover`).  The clique test disagrees with the
    swap test on some dominating sets that are not secure; ``secure_only``
    restricts the sweep to secure dominating sets, where they agree.
    """
    if not 1 <= n_max <= 7:
        raise GraphError("exhaustive defense sweep supports n_max <= 7")
    report = SweepReport(f"thm2-{criterion}" + ("-secure" if secure_only else ""), (1, n_max))
    for n in range(1, n_max + 1):
        start = time.perf_counter()
        gen = checks = 0
        for g in enumerate_connected(n):
            gen += 1
            c, bad = _thm2_disagreements(g, criterion, secure_only)
            checks += c
            report.violations.extend(bad)
        report.generated[n] = report.kept[n] = gen
        report.checks[n] = checks
        report.wall_time[n] = time.perf_counter() - start
    return report


def verify_thm2_random(n: int = 10, trials: int = 10_000, seed: int = 0,
                       criterion: str = "clique", secure_only: bool = False) -> SweepReport:
    """Randomized agreement check: random graph, random dominating set, random ``(v, u)``."""
    local = CRITERIA[criterion]
    rng = random.Random(seed)
    report = SweepReport(f"thm2-random-{criterion}" + ("-secure" if secure_only else ""), (n, n))
    start = time.perf_counter()
    done = 0
    while done < trials:
        g = random_graph(n, rng.uniform(0.15, 0.7), rng)
        s = sum(1 << v for v in range(n) if rng.random() < rng.uniform(0.1, 0.6))
        if s in (0, g.full) or not _dominates(g, s):
            continue
        if secure_only and secure_certificate_mask(g, s) is None:
            continue
        inside = list(bits_of(s))
        outside = list(bits_of(g.full & ~s))
        v, u = rng.choice(inside), rng.choice(outside)
        if rng.random() < 0.7 and g.adj[u] & s:
            v = rng.choice(list(bits_of(g.adj[u] & s)))
        done += 1
        if defends_by_swap(g, v, u, VertexSet(s)) != local(g, v, u, VertexSet(s)):
            report.violations.append({"graph6": graph6_str(g), "set": inside, "v": v, "u": u})
    report.generated[n] = report.checks[n] = done
    report.wall_time[n] = time.perf_counter() - start
    return report
