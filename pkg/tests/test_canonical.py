import itertools
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from outerdom import are_isomorphic, canonical_form
from outerdom.generators import random_graph
from outerdom.graph import build_graph, complete_graph, cycle_graph, path_graph, permute


def test_p4_relabelings_agree():
    a = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    b = build_graph(4, [(3, 1), (1, 0), (0, 2)])
    assert canonical_form(a) == canonical_form(b)


def test_k3_vs_p3():
    assert canonical_form(complete_graph(3)) != canonical_form(path_graph(3))


def test_paw_single_orbit():
    paw = build_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    forms = {canonical_form(permute(paw, p)) for p in itertools.permutations(range(4))}
    assert len(forms) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 11), st.floats(0.0, 1.0), st.randoms(use_true_random=False))
def test_invariant_under_relabeling(n, p, rnd):
    g = random_graph(n, p, rnd)
    code = canonical_form(g)
    for _ in range(1000 // 60 + 1):
        perm = list(range(n))
        rnd.shuffle(perm)
        assert canonical_form(permute(g, perm)) == code


def test_thousand_permutations_of_one_graph():
    rng = random.Random(11)
    g = random_graph(10, 0.35, rng)
    code = canonical_form(g)
    for _ in range(1000):
        perm = list(range(10))
        rng.shuffle(perm)
        assert canonical_form(permute(g, perm)) == code


def test_separates_non_isomorphic_regular_graphs():
    # C6 and two triangles are both 2-regular on six vertices
    two_triangles = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not are_isomorphic(cycle_graph(6), two_triangles)
    # the prism and K_{3,3} are both 3-regular on six vertices
    prism = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    k33 = build_graph(6, [(i, j) for i in range(3) for j in range(3, 6)])
    assert not are_isomorphic(prism, k33)


def test_canonical_form_is_a_complete_invariant_on_six_vertices():
    # brute force: isomorphism classes by minimum over all relabelings
    def brute(g):
        return min(tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in g.edges()))
                   for p in itertools.permutations(range(g.n)))

    rng = random.Random(5)
    graphs = [random_graph(6, rng.choice([0.3, 0.5, 0.7]), rng) for _ in range(80)]
    keys = [(canonical_form(g), brute(g)) for g in graphs]
    for (c1, b1), (c2, b2) in itertools.combinations(keys, 2):
        assert (c1 == c2) == (b1 == b2)
    assert len({b for _, b in keys}) < len(keys)  # some pairs really are isomorphic
