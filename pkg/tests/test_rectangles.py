import pytest

from canonparam import fixtures
from canonparam.chambers import PartialQuiver, partial_quivers
from canonparam.rectangles import (
    J_ROOT_ORDER,
    Rectangle,
    assemble,
    class_walls,
    correspondence,
    incidence,
    incidence_table,
    phi_plus,
    phi_plus_j,
    rectangle_vectors,
    region_for_class,
    rho,
    rho_j,
    vector_vj,
    vector_vP,
    wall_form,
    wall_universe,
)
from canonparam.words import class_of, commutation_classes


def test_rectangle_validation():
    Rectangle(0, 1, 4, 5)
    with pytest.raises(ValueError):
        Rectangle(0, 1, 3, 5)
    with pytest.raises(ValueError):
        rho("X", 1, 3, 4)
    with pytest.raises(ValueError):
        rho("L", 3, 3, 4)


def test_rho_examples():
    assert rho_j(1, 4) == Rectangle(0, 1, 4, 5)
    # every component rectangle fits inside the rank-4 triangle
    for P in partial_quivers(4):
        E = assemble(P)
        for box in E.boxes:
            assert 0 <= box.rect.p and box.rect.s <= 5


def test_j_root_order():
    assert J_ROOT_ORDER == ((1, 2), (3, 4), (1, 4), (3, 5), (2, 4), (1, 5), (2, 5), (1, 3), (4, 5), (2, 3))


def test_phi_plus_rank5_example():
    assert phi_plus(PartialQuiver.parse("LRLL-")) == {(1, 3), (1, 4), (2, 5), (3, 7), (5, 6)}


def test_phi_plus_j():
    assert phi_plus_j(1, 4) == {(1, 2), (2, 4), (4, 5)}


def test_parity_switch_centre():
    E = assemble(PartialQuiver("LRL"))
    assert E.centre == (8, -2)
    assert E.v_line == 5


@pytest.mark.parametrize("label,vector", [
    ("LLL", (1, 0, 0, 0, 0, 0, 0, 0, 0, 0)),
    ("LRL", (1, 1, 0, 0, 0, 0, 1, 1, 0, 0)),
])
def test_vector_examples(label, vector):
    assert vector_vP(PartialQuiver(label)) == vector


def test_vj_examples():
    assert vector_vj(1) == (1, 0, 0, 0, 1, 0, 0, 0, 1, 0)
    assert vector_vj(4) == (0, 0, 0, 1, 0, 0, 0, 1, 0, 0)


def test_every_vector_has_one_entry_per_chamber_or_string():
    for P in partial_quivers(4):
        assert sum(vector_vP(P)) == len(phi_plus(P))


def test_vectors_match_table():
    assert rectangle_vectors() == fixtures.table6()


def test_wall_forms():
    assert wall_form("a") == (1,) + (0,) * 9
    assert wall_form("I") == (0,) * 10
    assert wall_form("F") == wall_form("C")
    assert incidence((1, 0, 0, 0, 1, 0, 0, 0, 1, 0), "A")
    assert not incidence((1,) + (0,) * 9, "a")


def test_wall_universe_size():
    assert len(wall_universe()) == 32


def test_incidence_matches_table():
    cols, rows = fixtures.table7()
    assert set(rows) == {name for _, name in wall_universe()}
    assert incidence_table(list(rows), list(cols)) == rows


def test_each_vector_is_off_exactly_one_wall_of_its_class():
    for c in commutation_classes(4):
        walls = class_walls(c.representative)
        assert len(walls) == 10
        for vec, form in walls:
            assert sum(x * y for x, y in zip(vec, form)) != 0


@pytest.mark.parametrize("word,region", [
    ((1, 3, 2, 4, 1, 3, 2, 4, 1, 3), 4),
    ((1, 3, 2, 1, 3, 4, 3, 2, 1, 3), 1),
])
def test_class_region_examples(word, region):
    assert region_for_class(word).number == region


def test_correspondence_matches_table_up_to_class():
    corr = correspondence()
    assert sorted(corr.values()) == list(range(1, 63))
    for region, word in fixtures.table8().items():
        assert corr[class_of(word, 4).representative] == region
