import itertools
import json
import random

import pytest

from outerdom import (
    ExtremalWitness,
    GraphError,
    build_extremal,
    detect_extremal_structural,
    gamma_s,
    is_outerplanar,
    is_secure_dominating,
    partition_profile,
    spanning_subgraph_oracle,
    verify_certificate,
    verify_witness,
)
from outerdom.generators import random_outerplanar
from outerdom.graph import Graph, build_graph, complete_graph, path_graph, permute

from conftest import outerplanar_graphs


@pytest.mark.parametrize("k", [2, 3, 4])
def test_build_extremal_shape(k):
    g, w = build_extremal(k)
    assert (g.n, g.m) == (5 * k + 1, 7 * k)
    assert verify_witness(g, w) and is_outerplanar(g)
    assert w.secure_set().sorted() == list(range(k + 1))
    assert g.degree(0) == 2 * k and all(g.degree(s) == 4 for s in w.spokes)
    assert verify_certificate(g, is_secure_dominating(g, w.secure_set()))


@pytest.mark.parametrize("k", [-1, 0, 1])
def test_build_extremal_rejects_small_k(k):
    with pytest.raises(GraphError):
        build_extremal(k)


def test_profile_of_g2(g2):
    g, w = g2
    prof = partition_profile(g, w.secure_set())
    assert (prof.x2, prof.x1, prof.x0, prof.c) == (2, 0, 1, 4)
    assert prof.s0.sorted() == [0] and prof.c_set.sorted() == list(w.rim)
    assert prof.count_identity and prof.eq_tight
    assert prof.defended_in_c == {0: 4, 1: 0, 2: 0}


def test_profile_of_triangle():
    prof = partition_profile(complete_graph(3), [0])
    assert (prof.x2, prof.x1, prof.x0, prof.c) == (1, 0, 0, 0)
    assert prof.count_identity


def test_profile_errors():
    with pytest.raises(GraphError):
        partition_profile(path_graph(4), [1])
    star = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 3)])
    with pytest.raises(GraphError):
        partition_profile(star, [0])


def test_tight_minimum_sets_balance():
    # every minimum secure set of an 11-vertex instance meeting the bound has c = 2x2+3x1+4x0-4
    rng = random.Random(24)
    tight = 0
    for _ in range(300):
        g = random_outerplanar(11, rng)
        if gamma_s(g).value != 3:
            continue
        for combo in itertools.combinations(range(11), 3):
            if is_secure_dominating(g, combo) is not None:
                tight += 1
                assert partition_profile(g, combo).eq_tight
    assert tight >= 1
    for k in (2, 3):
        g, w = build_extremal(k)
        assert partition_profile(g, w.secure_set()).eq_tight


def test_detector_on_construction_returns_its_labeling():
    for k in (2, 3, 4):
        g, w = build_extremal(k)
        assert detect_extremal_structural(g) == w
        assert spanning_subgraph_oracle(g, k) == w


def test_detector_negative_and_positive_examples(g2):
    g, w = g2
    assert detect_extremal_structural(path_graph(11)) is None
    assert spanning_subgraph_oracle(path_graph(11), 2) is None
    bigger = g.add_edge(3, 4)
    found = detect_extremal_structural(bigger)
    assert found is not None and verify_witness(bigger, found)
    assert spanning_subgraph_oracle(complete_graph(11), 2) is not None
    assert spanning_subgraph_oracle(Graph(11, (0,) * 11), 2) is None


def test_detector_size_errors():
    with pytest.raises(GraphError):
        detect_extremal_structural(path_graph(10))
    with pytest.raises(GraphError):
        spanning_subgraph_oracle(path_graph(10), 2)


def test_detector_survives_relabeling(g2):
    g, _ = g2
    rng = random.Random(25)
    for _ in range(50):
        perm = list(range(11))
        rng.shuffle(perm)
        h = permute(g, perm)
        a, b = detect_extremal_structural(h), spanning_subgraph_oracle(h, 2)
        assert a is not None and b is not None
        assert verify_witness(h, a) and verify_witness(h, b)


def test_detector_matches_oracle_randomly():
    rng = random.Random(26)
    for _ in range(300):
        g = random_outerplanar(11, rng)
        a, b = detect_extremal_structural(g), spanning_subgraph_oracle(g, 2)
        assert (a is None) == (b is None)
        if a is not None:
            assert verify_witness(g, a) and verify_witness(g, b)


def test_witness_json_round_trip(g2):
    _, w = g2
    doc = json.loads(json.dumps(w.to_json()))
    assert ExtremalWitness.from_json(doc) == w


def test_tampered_witness_rejected(g2):
    g, w = g2
    assert not verify_witness(g.remove_edge(0, 3), w)
    swapped = ExtremalWitness(w.hub, w.spokes, w.rim, ((w.triangles[0][0], w.triangles[0][0]), w.triangles[1]))
    assert not verify_witness(g, swapped)


@pytest.mark.parametrize("n", range(4, 9))
def test_single_private_neighbor_members_defend_little(n):
    for g in outerplanar_graphs(n):
        prof = partition_profile(g, gamma_s(g, use_outerplanar_bound=False).certificate)
        for v in prof.s1:
            assert prof.defended_in_c[v] <= 2
            assert prof.defended[v] <= 3
        # members with two private neighbors defend nothing in C
        assert all(prof.defended_in_c[v] == 0 for v in prof.s2)
