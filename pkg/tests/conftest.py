from __future__ import annotations

import functools
import itertools
import random

import pytest

from outerdom import build_extremal, enumerate_connected, enumerate_outerplanar
from outerdom.graph import Graph


@functools.lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(enumerate_connected(n))


@functools.lru_cache(maxsize=None)
def outerplanar_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(enumerate_outerplanar(n))


def dominates(g: Graph, vertices) -> bool:
    s = set(vertices)
    return all(u in s or any(g.has_edge(u, v) for v in s) for u in range(g.n))


def brute_gamma(g: Graph) -> int:
    return min(k for k in range(1, g.n + 1)
               for c in itertools.combinations(range(g.n), k) if dominates(g, c))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture(scope="session")
def g2():
    return build_extremal(2)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
