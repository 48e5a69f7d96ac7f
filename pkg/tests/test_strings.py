import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from canonparam import fixtures
from canonparam.cones import cone_spec, root_order
from canonparam.pbw import l_word
from canonparam.plmap import adapted_words, locate_region, transition_eval
from canonparam.rectangles import region_for_class, vector_vj, vector_vP
from canonparam.strings import (
    ParamForm,
    apply_Ftilde,
    linear_matrix_on_cone,
    string_to_lusztig,
    string_to_target,
    string_trace,
    to_other_form,
)
from canonparam.words import commutation_classes

EXAMPLE = (3, 2, 1, 4, 3, 2, 3, 4, 1, 3)
J, JP = adapted_words(4)
REPS = [c.representative for c in commutation_classes(4)]


def trace_vectors(word, a):
    return [s.state.coords for s in string_trace(word, a)]


def test_example_final_value():
    spec = cone_spec(EXAMPLE, 4)
    a = tuple(sum(row) for row in spec.Q)
    assert string_to_lusztig(EXAMPLE, a) == (3, 1, 3, 3, 1, 2, 1, 1, 2, 7)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 5), min_size=10, max_size=10))
def test_trace_matches_symbolic_states(coeffs):
    spec = cone_spec(EXAMPLE, 4)
    a = tuple(sum(spec.Q[r][t] * coeffs[t] for t in range(10)) for r in range(10))
    got = trace_vectors(EXAMPLE, a)
    want = [s.at(coeffs) for s in fixtures.trace_states()]
    assert got == want


def test_trace_region_hits_at_unit_coefficients():
    spec = cone_spec(EXAMPLE, 4)
    a = tuple(sum(row) for row in spec.Q)
    steps = string_trace(EXAMPLE, a)
    located = [s.state.coords for s in steps if s.locate]
    expected = [s.region for s in fixtures.trace_states() if s.region is not None]
    assert len(located) == len(expected)
    for coords, region in zip(located, expected):
        assert region in locate_region(coords)[1]


def test_Ftilde_examples():
    zero = ParamForm("j", (0,) * 10)
    assert apply_Ftilde(zero, 1, 3) == ParamForm("j", (3,) + (0,) * 9)
    assert apply_Ftilde(zero, 3, 2) == ParamForm("j", (0, 2) + (0,) * 8)
    # even generators need the j' form
    assert apply_Ftilde(zero, 2, 1) == ParamForm("j'", (1,) + (0,) * 9)
    assert apply_Ftilde(zero, 4, 1) == ParamForm("j'", (0, 1) + (0,) * 8)
    with pytest.raises(ValueError):
        apply_Ftilde(zero, 5, 1)
    with pytest.raises(ValueError):
        apply_Ftilde(zero, 1, -1)


def test_form_conversion_round_trip():
    rng = random.Random(0)
    for _ in range(50):
        x = tuple(rng.randint(0, 9) for _ in range(10))
        s = ParamForm("j", x)
        back = to_other_form(to_other_form(s))
        assert back == s


def test_single_generator_strings():
    # F_i^a . 1 has exponent a on the root alpha_i and 0 elsewhere, in every word
    for i in range(1, 5):
        for word in (J, JP, EXAMPLE):
            a = [0] * 10
            a[word.index(i)] = 4
            target = l_word(4)
            out = string_to_target(word, target, a)
            expect = [0] * 10
            expect[root_order(target).index((i, i + 1))] = 4
            assert out == tuple(expect)


def test_target_example_l_word():
    spec = cone_spec(EXAMPLE, 4)
    a = tuple(sum(row) for row in spec.Q)
    out = string_to_target(EXAMPLE, l_word(4), a)
    assert out == transition_eval(J, l_word(4), (3, 1, 3, 3, 1, 2, 1, 1, 2, 7))


def test_rank3_strings():
    j3, _ = adapted_words(3)
    assert string_to_lusztig(j3, (0,) * 6) == (0,) * 6
    with pytest.raises(ValueError):
        string_trace((1, 2), (1, 1))


@pytest.mark.parametrize("rep", REPS)
def test_linear_on_cone_and_rays(rep):
    cert = linear_matrix_on_cone(rep, samples=100, seed=7)
    assert cert.samples >= 100
    spec = cone_spec(rep, 4)
    expected = []
    for lab, quiver in zip(spec.labels, spec.quivers):
        expected.append(vector_vP(quiver) if quiver is not None else None)
    # spanning vectors of quivers map to v_P; those of unpaired letters to some v_j
    vj = {vector_vj(t) for t in range(1, 5)}
    for img, want in zip(cert.images, expected):
        if want is None:
            assert img in vj
        else:
            assert img == want
    region = region_for_class(rep)
    rays = set(cert.images)
    assert len(rays) == 10
    for ray in rays:
        on = sum(1 for w in region.walls if sum(x * y for x, y in zip(w, ray)) == 0)
        assert on == 9
        assert all(sum(x * y for x, y in zip(w, ray)) >= 0 for w in region.walls)


def test_linear_matrix_example_row():
    cert = linear_matrix_on_cone(EXAMPLE, target=l_word(4), samples=100)
    assert len(cert.matrix) == 10
    assert cert.matrix[0] == (-1, 0, 0, 1, 0, 0, 0, 0, 0, 0)
