from math import factorial

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from canonparam.words import (
    Move,
    RankError,
    apply_move,
    class_graph,
    class_of,
    commutation_classes,
    enumerate_w0_words,
    format_word,
    involution,
    is_reduced,
    is_w0_word,
    longest_word,
    neighbors,
    parse_word,
    permutation_of,
)


def staircase_count(n):
    """Standard Young tableaux of shape (n, n-1, ..., 1) via the hook length formula."""
    shape = list(range(n, 0, -1))
    cells = sum(shape)
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            arm = row - j - 1
            leg = sum(1 for r in shape[i + 1:] if r > j)
            hooks *= arm + leg + 1
    return factorial(cells) // hooks


def dfs_reduced_words(n):
    """Reduced words of w0 built letter by letter, each step an ascent of the permutation."""
    out = []

    def walk(perm, word):
        if len(word) == n * (n + 1) // 2:
            out.append(tuple(word))
            return
        for i in range(1, n + 1):
            if perm[i - 1] < perm[i]:
                p = list(perm)
                p[i - 1], p[i] = p[i], p[i - 1]
                walk(tuple(p), word + [i])

    walk(tuple(range(1, n + 2)), [])
    return set(out)


def brute_classes(n):
    words = sorted(dfs_reduced_words(n))
    parent = {w: w for w in words}

    def find(w):
        while parent[w] != w:
            w = parent[w]
        return w

    for w in words:
        for p in range(len(w) - 1):
            if abs(w[p] - w[p + 1]) > 1:
                u = w[:p] + (w[p + 1], w[p]) + w[p + 2:]
                parent[find(w)] = find(u)
    return len({find(w) for w in words})


def test_permutation_examples():
    assert permutation_of((1, 3, 2, 1, 3, 2), 3) == (4, 3, 2, 1)
    assert permutation_of((), 4) == (1, 2, 3, 4, 5)
    assert permutation_of((1, 1), 2) == (1, 2, 3)
    assert not is_reduced((1, 1), 2)
    assert is_w0_word((1, 3, 2, 1, 3, 2), 3)


def test_letter_out_of_range():
    with pytest.raises(ValueError):
        permutation_of((1, 5), 3)


def test_rank_guard():
    with pytest.raises(RankError):
        enumerate_w0_words(6)


def test_word_format_round_trip():
    w = (1, 3, 2, 4, 1, 3, 2, 4, 1, 3)
    assert format_word(w) == "1,3,2,4,1,3,2,4,1,3"
    assert parse_word(format_word(w)) == w
    assert parse_word("1324132413") == w


def test_neighbors_examples():
    assert (Move(0, "braid"), (2, 1, 2)) in neighbors((1, 2, 1))
    assert neighbors((2, 1, 2)) == {(Move(0, "braid"), (1, 2, 1))}
    j = (1, 3, 2, 4, 1, 3, 2, 4, 1, 3)
    assert (Move(0, "commute"), (3, 1, 2, 4, 1, 3, 2, 4, 1, 3)) in neighbors(j)


def test_apply_move_rejects_invalid():
    with pytest.raises(ValueError):
        apply_move((1, 2, 1), Move(0, "commute"))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_word_counts_against_oracles(n):
    words = enumerate_w0_words(n)
    assert len(words) == staircase_count(n)
    assert words == dfs_reduced_words(n)


def test_known_counts():
    assert [len(enumerate_w0_words(n)) for n in (1, 2, 3, 4)] == [1, 2, 16, 768]


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 8), (4, 62)])
def test_class_counts(n, count):
    assert len(commutation_classes(n)) == count


def test_class_count_rank3_brute_force():
    assert brute_classes(3) == len(commutation_classes(3))


def test_classes_partition_words():
    classes = commutation_classes(4)
    union = set()
    for c in classes:
        assert not union & c.members
        union |= c.members
        assert c.representative == min(c.members)
    assert union == enumerate_w0_words(4)


def test_class_graph_examples():
    g = class_graph(4)
    a = class_of((2, 3, 1, 2, 1, 3, 4, 3, 2, 1), 4).representative
    b = class_of((2, 3, 1, 2, 3, 4, 3, 2, 1, 2), 4).representative
    assert g.adjacent(a, b)
    g2 = class_graph(2)
    assert len(g2.vertices) == 2 and len(g2.edges) == 1
    nxg = g.to_networkx()
    assert nxg.number_of_nodes() == 62 and nx.is_connected(nxg)


def test_involution_preserves_w0():
    w = longest_word(4)
    assert is_w0_word(w, 4)
    assert is_w0_word(involution(w, 4), 4)
    assert involution(involution(w, 4), 4) == w


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 40), min_size=1, max_size=12))
def test_random_moves_stay_in_w0(choices):
    w = longest_word(4)
    for c in choices:
        nb = sorted(neighbors(w))
        w = nb[c % len(nb)][1]
        assert is_w0_word(w, 4)
    assert w in enumerate_w0_words(4)
