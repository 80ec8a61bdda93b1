import random

import pytest

from outerdom import GraphError, build_extremal, gamma, gamma_s, gamma_s_bruteforce, verify_certificate
from outerdom.generators import random_graph, random_outerplanar
from outerdom.graph import (
    Graph,
    build_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
)

from conftest import brute_gamma, connected_graphs


def test_gamma_examples(g2):
    assert gamma(complete_graph(3)).value == 1
    assert gamma(path_graph(4)).value == brute_gamma(path_graph(4)) == 2
    assert gamma(g2[0]).value == brute_gamma(g2[0]) == 3


def test_gamma_s_examples():
    k3 = gamma_s(complete_graph(3))
    assert k3.value == 1 and k3.certificate.sorted() == [0]
    p4 = gamma_s(path_graph(4))
    # brute force over all 16 subsets gives 2, smallest set {0, 2}
    assert (p4.value, p4.certificate.sorted()) == (2, [0, 2])
    assert gamma_s(cycle_graph(4)).value == gamma_s_bruteforce(cycle_graph(4)).value == 2


@pytest.mark.parametrize("k", [2, 3])
def test_extremal_values(k):
    g, w = build_extremal(k)
    res = gamma_s(g, use_outerplanar_bound=False)
    assert res.value == k + 1
    assert res.certificate == w.secure_set()
    assert verify_certificate(g, res.secure)


def test_bruteforce_small_cases():
    two = disjoint_union(complete_graph(3), complete_graph(3))
    assert gamma_s_bruteforce(two).value == 2
    with pytest.raises(GraphError):
        gamma_s_bruteforce(path_graph(17))


def test_tier_limits():
    with pytest.raises(GraphError):
        gamma(Graph(0, ()))
    with pytest.raises(GraphError):
        gamma_s(path_graph(65))


def test_result_invariants():
    rng = random.Random(19)
    for _ in range(200):
        g = random_graph(rng.randint(1, 10), rng.random(), rng)
        d, s = gamma(g), gamma_s(g)
        assert d.value <= s.value <= g.n
        assert len(s.certificate) == s.value and verify_certificate(g, s.secure)
        assert len(d.certificate) == d.value
        assert gamma_s_bruteforce(g).value == s.value


@pytest.mark.parametrize("n", range(1, 8))
def test_matches_bruteforce_exhaustively(n):
    for g in connected_graphs(n):
        a, b = gamma_s(g, use_outerplanar_bound=False), gamma_s_bruteforce(g)
        assert (a.value, a.certificate) == (b.value, b.certificate)


def test_matches_bruteforce_randomly():
    rng = random.Random(20)
    for _ in range(1000):
        n = rng.randint(9, 12)
        g = random_graph(n, rng.uniform(0.15, 0.6), rng)
        assert gamma_s(g).value == gamma_s_bruteforce(g).value


def test_bound_start_does_not_change_answers():
    rng = random.Random(21)
    for _ in range(300):
        g = random_outerplanar(rng.randint(4, 14), rng)
        a, b = gamma_s(g), gamma_s(g, use_outerplanar_bound=False)
        assert (a.value, a.certificate) == (b.value, b.certificate)


def test_edge_monotonicity():
    rng = random.Random(22)
    for _ in range(1000):
        g = random_graph(rng.randint(2, 9), rng.uniform(0.1, 0.6), rng)
        u, v = rng.sample(range(g.n), 2)
        assert gamma_s(g.add_edge(u, v)).value <= gamma_s(g).value


def test_component_additivity():
    rng = random.Random(23)
    for _ in range(200):
        a = random_graph(rng.randint(1, 7), rng.random(), rng)
        b = random_graph(rng.randint(1, 7), rng.random(), rng)
        assert gamma_s(disjoint_union(a, b)).value == gamma_s(a).value + gamma_s(b).value
        assert gamma(disjoint_union(a, b)).value == gamma(a).value + gamma(b).value


def test_disconnected_certificate_is_lexicographic_minimum():
    g = disjoint_union(path_graph(4), complete_graph(3))
    assert gamma_s(g).certificate == gamma_s_bruteforce(g).certificate


def test_isolated_vertices():
    g = build_graph(3, [])
    assert gamma(g).value == gamma_s(g).value == 3
