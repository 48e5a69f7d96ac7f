import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from canonparam import fixtures
from canonparam.plmap import (
    R,
    R_inverse,
    adapted_words,
    braid_path,
    braid_rule,
    branch_forms,
    enumerate_leaves,
    enumerate_regions,
    format_form,
    locate_region,
    parse_form,
    region_adjacency_graph,
    region_by_number,
    region_involution,
    replay,
    tau,
    transition_eval,
    walls_adjacent,
)
from canonparam.words import is_w0_word, neighbors

J, JP = adapted_words(4)


def tropical_braid(a, b, c):
    """The braid exponent change written with a single min."""
    m = min(a, c)
    return (b + c - m, m, a + b - m)


def random_walk_path(start, end, rng, steps=30):
    """Random moves away from ``start`` followed by a shortest path to ``end``."""
    moves, w = [], start
    for _ in range(steps):
        mv, w = rng.choice(sorted(neighbors(w)))
        moves.append(mv)
    return moves + braid_path(w, end), w


def random_point(rng, hi=20):
    return tuple(rng.randint(0, hi) for _ in range(10))


def test_adapted_words():
    assert J == (1, 3, 2, 4, 1, 3, 2, 4, 1, 3)
    assert JP == (2, 4, 1, 3, 2, 4, 1, 3, 2, 4)
    assert adapted_words(2) == ((1, 2, 1), (2, 1, 2))


@settings(max_examples=200)
@given(st.integers(0, 50), st.integers(0, 50), st.integers(0, 50))
def test_braid_rule_matches_min_formula(a, b, c):
    assert braid_rule(a, b, c) == tropical_braid(a, b, c)
    # applying the rule twice returns to the start
    assert braid_rule(*braid_rule(a, b, c)) == (a, b, c)


def test_braid_path_examples():
    assert braid_path((1, 2, 1), (1, 2, 1)) == []
    path = braid_path((1, 2, 1), (2, 1, 2))
    assert len(path) == 1 and path[0].kind == "braid"
    with pytest.raises(ValueError):
        braid_path((1, 2, 1), (1, 2))


def test_reference_path_joins_the_adapted_words():
    mp = fixtures.move_path()
    assert mp.start == J and mp.end == JP
    assert mp.braid_labels() == "ABCDEFGHIJ"


@pytest.mark.parametrize("point,image", [
    ((1, 2, 0, 0, 0, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0, 0, 0, 2, 1)),
    ((4, 2, 0, 3, 0, 0, 0, 0, 3, 0), (0, 4, 0, 0, 0, 0, 2, 0, 3, 4)),
    ((0, 8, 0, 0, 1, 0, 1, 1, 2, 7), (2, 0, 0, 2, 0, 6, 1, 0, 1, 1)),
])
def test_R_examples(point, image):
    assert R(point) == image
    assert R_inverse(image) == point


def test_tau_is_involution():
    rng = random.Random(1)
    for _ in range(50):
        x = random_point(rng)
        assert tau(tau(x)) == x


def test_R_inverse_is_transition_back():
    rng = random.Random(2)
    for _ in range(100):
        y = random_point(rng)
        assert R_inverse(y) == transition_eval(JP, J, y)


def test_path_independence():
    rng = random.Random(3)
    for _ in range(1000):
        x = random_point(rng)
        ref = R(x)
        assert transition_eval(J, JP, x) == ref
        moves, _ = random_walk_path(J, JP, rng, steps=rng.randint(0, 12))
        assert replay(x, J, moves) == ref


def test_R_inverse_after_R_is_identity():
    rng = random.Random(4)
    for _ in range(1000):
        x = random_point(rng, 30)
        assert R_inverse(R(x)) == x
        assert R(R_inverse(x)) == x


def test_rank3_round_trip():
    j3, jp3 = adapted_words(3)
    assert is_w0_word(j3, 3) and is_w0_word(jp3, 3)
    rng = random.Random(5)
    for _ in range(100):
        x = tuple(rng.randint(0, 9) for _ in range(6))
        assert transition_eval(jp3, j3, transition_eval(j3, jp3, x)) == x


def test_branch_forms():
    expected = {"A": "a-e", "B": "c-g", "C": "f-j", "D": "d-h", "E": "b-f",
                "F": "f-j", "G": "c-g", "H": "e-i", "J": "f-j"}
    forms = branch_forms()
    for name, text in expected.items():
        x, y = text.split("-")
        assert forms[name] == tuple(
            int(ch == x) - int(ch == y) for ch in "abcdefghij"), name
    assert not any(forms["I"])


def test_form_names_round_trip():
    for name in ("A", "BC", "CD", "BCDH", "a", "j"):
        assert format_form(parse_form(name)) == name


def test_leaf_and_region_counts():
    leaves = enumerate_leaves()
    regions = enumerate_regions()
    assert len(leaves) == 204
    assert len(regions) == 144
    assert sorted(r.number for r in regions) == list(range(1, 145))
    census = {}
    for r in regions:
        census[len(r.inequalities)] = census.get(len(r.inequalities), 0) + 1
    assert census == {6: 62, 7: 70, 8: 10, 11: 2}
    assert sum(r.simplicial for r in regions) == 62
    assert {r.number for r in regions if r.simplicial} == set(range(1, 63))


def test_regions_match_inequality_table():
    table = fixtures.table3()
    for r in enumerate_regions():
        left, right = r.named()
        assert (set(left), set(right)) == tuple(map(set, table[r.number])), r.number


def test_simplicial_walls_match_wall_table():
    table = fixtures.table5()
    for r in enumerate_regions():
        if not r.simplicial:
            continue
        left, right, coords = r.named_walls()
        tl, tr, tc = table[r.number]
        assert (set(left), set(right), coords) == (set(tl), set(tr), tc), r.number


def test_region_maps_agree_with_R():
    rng = random.Random(6)
    for _ in range(300):
        x = random_point(rng)
        best, matches = locate_region(x)
        for m in matches:
            assert region_by_number(m).apply(x) == R(x)


@pytest.mark.parametrize("point", [(0,) * 10, (1, 5, 8, 5, 8, 10, 1, 3, 1, 1)])
def test_locate_returns_a_containing_region(point):
    best, matches = locate_region(point)
    assert best == min(matches)
    assert region_by_number(best).contains(point)


def test_locate_trace_points():
    states = fixtures.trace_states()
    hits = []
    for s in states:
        if s.region is not None:
            best, matches = locate_region(s.at([1] * 10))
            assert s.region in matches
            hits.append(s.region)
    assert hits == [144, 136, 139, 144, 133, 142, 104, 49]


def test_region_json_shape():
    d = region_by_number(1).to_json()
    assert d["id"] == 1 and d["simplicial"] is True
    assert len(d["walls"]) == 10
    assert set(d) == {"id", "key", "signs", "matrix", "inequalities", "simplicial", "walls"}


def hyperplane_name(form):
    try:
        return format_form(form)
    except ValueError:
        return format_form(tuple(-x for x in form))


def test_region_28_41_adjacency():
    r28, r41 = region_by_number(28), region_by_number(41)
    found = walls_adjacent(r28.walls, r41.walls)
    assert found is not None
    q, pairs = found
    assert hyperplane_name(q) == "C"
    named = {(hyperplane_name(a), hyperplane_name(b)) for a, b in pairs}
    assert ("CD", "D") in named or ("D", "CD") in named
    assert ("f", "j") in named or ("j", "f") in named
    # the remaining walls are shared outright
    assert sum(a == b for a, b in pairs) == 7


def test_region_graph_involution_is_automorphism():
    g = region_adjacency_graph()
    edges = {frozenset(e) for e in g.edges}
    assert len(g.vertices) == 62
    for a, b in g.edges:
        assert frozenset((region_involution(a), region_involution(b))) in edges


def test_region_graph_is_connected():
    g = region_adjacency_graph().to_networkx()
    assert nx.is_connected(g)
