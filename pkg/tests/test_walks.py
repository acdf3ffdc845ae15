import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from goodlabel.graph import Graph, GraphError, complete, cycle, hypercube, path
from goodlabel.labeller import hypercube_labelling, random_refinement
from goodlabel.walks import (
    Labelling,
    LabellingError,
    WalkBudgetExceeded,
    count_nice_walks,
    enumerate_nondecreasing_paths,
    find_duplicate_nice_walks,
    is_good,
    is_valid_witness,
    iter_nice_walks,
    parse_labelling,
    write_labelling,
)

from conftest import labelled_graphs, labels_dict, random_graph, random_labels
from oracles import brute_count_nice_walks, brute_is_good, brute_nondecreasing_paths, is_nice

A, B, C = 0, 1, 2


def k3(ab, bc, ca):
    g = complete(3)
    return g, Labelling(g, {(A, B): ab, (B, C): bc, (C, A): ca})


# -- labelling plumbing ---------------------------------------------------------

def test_labelling_validation():
    g = path(3)
    with pytest.raises(LabellingError):
        Labelling(g, {(0, 1): 1})
    with pytest.raises(LabellingError):
        Labelling(g, {(0, 1): 1, (1, 2): 0.5})
    with pytest.raises(LabellingError):
        Labelling(g, {(0, 1): 1, (1, 2): 2, (0, 2): 3})
    with pytest.raises(LabellingError):
        Labelling(g, {(0, 1): 1, (1, 0): 1, (1, 2): 2})


def test_labelling_file_round_trip():
    g = complete(3)
    phi = parse_labelling("# labels\n0 1 3\n2 1 0.25\n0 2 -7/3\n", g)
    assert phi[1, 2] == Fraction(1, 4) and phi[2, 0] == Fraction(-7, 3) and phi[0, 1] == 3
    assert parse_labelling(write_labelling(phi), g) == phi
    assert write_labelling(phi) == "0 1 3\n0 2 -7/3\n1 2 1/4"


@pytest.mark.parametrize(
    "text",
    ["0 1 1\n1 2 2", "0 1 1\n1 2 2\n0 2 3\n2 0 4", "0 1 1\n1 2 x\n0 2 3", "0 1\n1 2 2\n0 2 3", "0 1 1\n1 2 2\n0 5 3"],
)
def test_labelling_file_errors(text):
    with pytest.raises(LabellingError):
        parse_labelling(text, complete(3))


# -- counting -------------------------------------------------------------------

def test_count_examples():
    g = path(2)
    assert count_nice_walks(g, Labelling.from_sequence(g, [5]), 1) == 2
    assert count_nice_walks(*k3(1, 2, 3), 2) == 3
    assert count_nice_walks(*k3(7, 7, 7), 2) == 6
    assert brute_count_nice_walks(3, complete(3).edges, labels_dict(k3(1, 2, 3)[1]), 2) == 3
    assert brute_count_nice_walks(3, complete(3).edges, labels_dict(k3(7, 7, 7)[1]), 2) == 6


def test_count_rejects_bad_k():
    with pytest.raises(GraphError):
        count_nice_walks(*k3(1, 2, 3), 0)


@given(labelled_graphs(max_n=6), st.integers(1, 4))
def test_count_matches_brute_force(gphi, k):
    g, phi = gphi
    assert count_nice_walks(g, phi, k) == brute_count_nice_walks(g.n, g.edges, labels_dict(phi), k)


@given(labelled_graphs(max_n=7))
def test_count_k1_is_twice_edges(gphi):
    g, phi = gphi
    assert count_nice_walks(g, phi, 1) == 2 * g.m


@given(labelled_graphs(max_n=7))
def test_count_k2_local_formula(gphi):
    g, phi = gphi
    expected = 0
    for v in range(g.n):
        inc = [phi[v, w] for w in g.adjacency[v]]
        expected += sum(1 for i, x in enumerate(inc) for j, y in enumerate(inc) if i != j and x <= y)
    assert count_nice_walks(g, phi, 2) == expected


@given(labelled_graphs(max_n=6), st.integers(1, 4))
def test_iter_nice_walks_are_nice_and_complete(gphi, k):
    g, phi = gphi
    walks = list(iter_nice_walks(g, phi, k))
    assert walks == sorted(walks)
    assert len(walks) == len(set(walks)) == count_nice_walks(g, phi, k)
    assert all(is_nice(w, labels_dict(phi)) for w in walks)


@given(labelled_graphs(max_n=6, max_label=3), st.integers(1, 4))
def test_reversal_nice_iff_constant(gphi, k):
    g, phi = gphi
    for w in iter_nice_walks(g, phi, k):
        seq = [phi[a, b] for a, b in zip(w, w[1:])]
        assert is_nice(w[::-1], labels_dict(phi)) == (len(set(seq)) == 1)


# -- nondecreasing paths -----------------------------------------------------------

def test_enumerate_path_examples():
    g = path(3)
    phi = Labelling(g, {(A, B): 1, (B, C): 2})
    assert enumerate_nondecreasing_paths(g, phi, A).paths == {B: [[A, B]], C: [[A, B, C]]}
    assert enumerate_nondecreasing_paths(g, phi, C).paths == {B: [[C, B]]}


def test_enumerate_k3_two_paths():
    g, phi = k3(1, 2, 3)
    res = enumerate_nondecreasing_paths(g, phi, A)
    assert sorted(res.paths[C]) == [[A, B, C], [A, C]]
    assert not res.truncated


def test_enumerate_cap_truncates():
    g, phi = hypercube_labelling(3)
    full = enumerate_nondecreasing_paths(g, phi, 0)
    assert full.explored == 7
    res = enumerate_nondecreasing_paths(g, phi, 0, cap=3)
    assert res.truncated and res.explored == 3
    assert not enumerate_nondecreasing_paths(g, phi, 0, cap=7).truncated
    with pytest.raises(GraphError):
        enumerate_nondecreasing_paths(g, phi, 8)


@given(labelled_graphs(max_n=6, max_label=3))
def test_enumerate_matches_permutation_oracle(gphi):
    g, phi = gphi
    oracle = brute_nondecreasing_paths(g.n, g.edges, labels_dict(phi))
    for u in range(g.n):
        got = enumerate_nondecreasing_paths(g, phi, u).paths
        expected = {v: sorted(list(p) for p in ps) for (s, v), ps in oracle.items() if s == u}
        assert {v: sorted(ps) for v, ps in got.items()} == expected


# -- goodness -------------------------------------------------------------------

@pytest.mark.parametrize("seed", range(10))
def test_trees_are_good_under_any_labelling(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 12)
    tree = Graph.from_edges(n, [(v, rng.randrange(v)) for v in range(1, n)])
    assert is_good(tree, random_labels(tree, rng, ties=seed % 2 == 0)).good


def test_k3_bad_with_witness():
    g, phi = k3(1, 2, 3)
    v = is_good(g, phi)
    assert v.bad
    assert (v.witness.u, v.witness.v) == (A, C)
    assert v.witness.paths == ((A, C), (A, B, C))
    assert is_valid_witness(g, phi, v.witness)


def test_hypercube_dimension_labelling_good():
    g, phi = hypercube_labelling(3)
    assert is_good(g, phi).good


def test_cap_gives_inconclusive():
    g, phi = hypercube_labelling(4)
    v = is_good(g, phi, cap=10)
    assert v.status == "inconclusive" and v.cap_hit and v.paths_explored == 10


@given(labelled_graphs(max_n=6, max_label=4))
def test_is_good_matches_oracle(gphi):
    g, phi = gphi
    v = is_good(g, phi)
    assert v.good == brute_is_good(g.n, g.edges, labels_dict(phi))
    if v.bad:
        assert is_valid_witness(g, phi, v.witness)


@given(labelled_graphs(max_n=6))
def test_is_good_is_deterministic(gphi):
    g, phi = gphi
    assert is_good(g, phi) == is_good(g, phi)


@given(labelled_graphs(max_n=6, max_label=3), st.integers(0, 2**32))
def test_tie_refinement_preserves_goodness(gphi, seed):
    g, phi = gphi
    assume(is_good(g, phi).good)
    refined = random_refinement(phi, seed)
    assert len(set(refined.values())) == g.m
    assert is_good(g, refined).good


@pytest.mark.parametrize("seed", range(5))
def test_tie_refinement_on_hypercube(seed):
    g, phi = hypercube_labelling(4)
    assert is_good(g, random_refinement(phi, seed)).good


# -- duplicate nice walks ---------------------------------------------------------

def test_duplicates_examples():
    g, phi = k3(1, 2, 3)
    assert find_duplicate_nice_walks(g, phi, 2) is None
    c4 = cycle(4)
    assert find_duplicate_nice_walks(c4, Labelling.from_sequence(c4, [1] * 4), 3) is None
    p5 = path(5)
    rng = random.Random(0)
    for k in range(1, 6):
        assert find_duplicate_nice_walks(p5, random_labels(p5, rng, ties=True), k) is None


def test_duplicates_c4_oracle():
    # every nice 3-walk on C4 with equal labels, bucketed by ordered ends
    c4 = cycle(4)
    phi = Labelling.from_sequence(c4, [1] * 4)
    ends = [(w[0], w[-1]) for w in iter_nice_walks(c4, phi, 3)]
    assert len(ends) == len(set(ends)) == 8


def test_duplicates_found_and_budget():
    g = complete(4)
    phi = Labelling.from_sequence(g, [1] * g.m)
    u, v, w1, w2 = find_duplicate_nice_walks(g, phi, 2)
    assert (w1[0], w1[-1]) == (w2[0], w2[-1]) == (u, v) and w1 != w2
    with pytest.raises(WalkBudgetExceeded):
        find_duplicate_nice_walks(g, phi, 4, budget=3)


@given(labelled_graphs(max_n=6, max_label=3), st.integers(1, 4))
def test_duplicate_walks_imply_bad(gphi, k):
    g, phi = gphi
    found = find_duplicate_nice_walks(g, phi, k)
    if found is not None:
        u, v, w1, w2 = found
        assert w1 != w2 and w1[0] == w2[0] == u and w1[-1] == w2[-1] == v
        assert is_nice(w1, labels_dict(phi)) and is_nice(w2, labels_dict(phi))
        assert is_good(g, phi).bad


@pytest.mark.parametrize("seed", range(20))
def test_duplicate_soundness_on_denser_graphs(seed):
    rng = random.Random(seed)
    g = random_graph(8, 0.6, seed)
    phi = random_labels(g, rng, ties=seed % 2 == 1)
    for k in range(1, 5):
        if find_duplicate_nice_walks(g, phi, k) is not None:
            assert is_good(g, phi).bad
