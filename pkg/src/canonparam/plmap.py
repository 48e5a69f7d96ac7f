"""Piecewise-linear transition maps between PBW parametrizations.

A long braid move rewrites the affected triple of exponents by

    (a, b, c) -> (b + c - a, a, b)   if a <= c
    (a, b, c) -> (b, c, b + a - c)   if a >= c

and a commutation move swaps two exponents. Composing these along a path of
moves gives the transition map between the parametrizations of two words.

For rank 4 the map ``R`` between the adapted words ``j = 1324132413`` and
``j' = 2413241324`` is split into regions of linearity by branching
symbolically at each long braid move of a fixed path.

Linear forms are integer tuples over the coordinates ``a..j``. The forms

    A = a - e, B = c - g, C = f - j, D = d - h, E = b - f, H = e - i

span every branching form; ``"AB^2CDEH"`` denotes ``A + 2B + C + D + E + H``.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import sympy

from . import fixtures
from .polyhedra import implies, interior_point, irredundant, primitive, strictly_feasible
from .words import (MoveGraph, Move, Word, apply_move, enumerate_w0_words, format_word, is_w0_word,
                    neighbors)

__all__ = [
    "COORDS",
    "ALPHA",
    "BASIS",
    "coordinate_form",
    "parse_form",
    "alpha_coefficients",
    "format_form",
    "signed_name",
    "adapted_words",
    "braid_rule",
    "replay",
    "braid_path",
    "transition_eval",
    "R",
    "R_inverse",
    "tau",
    "g_forms",
    "branch_forms",
    "Leaf",
    "Region",
    "enumerate_leaves",
    "enumerate_regions",
    "region_by_number",
    "locate_region",
    "simplicial_walls",
    "walls_adjacent",
    "region_adjacency_graph",
    "region_involution",
]

COORDS = "abcdefghij"
K4 = 10


def coordinate_form(ch: str, k: int = K4) -> tuple[int, ...]:
    v = [0] * k
    v[COORDS.index(ch)] = 1
    return tuple(v)


def _diff(x: str, y: str) -> tuple[int, ...]:
    return tuple(p - q for p, q in zip(coordinate_form(x), coordinate_form(y)))


ALPHA = {
    "A": _diff("a", "e"),
    "B": _diff("c", "g"),
    "C": _diff("f", "j"),
    "D": _diff("d", "h"),
    "E": _diff("b", "f"),
    "H": _diff("e", "i"),
}
BASIS = "ABCDEH"


def _add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def _sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def _scale(c, u):
    return tuple(c * x for x in u)


def _neg(u):
    return tuple(-x for x in u)


def _dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def parse_form(name: str) -> tuple[int, ...]:
    """``"AB^2CDEH"`` or a coordinate letter ``"a"`` -> integer form."""
    name = name.strip().replace("²", "^2")
    if len(name) == 1 and name in COORDS:
        return coordinate_form(name)
    total = (0,) * K4
    pos = 0
    while pos < len(name):
        letter = name[pos]
        if letter not in ALPHA:
            raise ValueError(f"unknown form letter {letter!r} in {name!r}")
        pos += 1
        coef = 1
        if pos < len(name) and name[pos] == "^":
            end = pos + 1
            while end < len(name) and name[end].isdigit():
                end += 1
            coef = int(name[pos + 1:end])
            pos = end
        total = _add(total, _scale(coef, ALPHA[letter]))
    return total


@lru_cache(maxsize=None)
def _basis_solver():
    M = sympy.Matrix([ALPHA[x] for x in BASIS]).T  # 10 x 6
    rows = [COORDS.index(c) for c in "acfdbe"]
    sub = M.extract(rows, list(range(6)))
    return rows, sub.inv()


def alpha_coefficients(form) -> dict[str, Fraction] | None:
    """Coefficients of a form in the basis A, B, C, D, E, H; ``None`` if outside the span."""
    rows, inv = _basis_solver()
    rhs = sympy.Matrix([form[r] for r in rows])
    sol = inv * rhs
    coeffs = {x: Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for x, c in zip(BASIS, sol)}
    rebuilt = [sum(coeffs[x] * ALPHA[x][t] for x in BASIS) for t in range(K4)]
    if any(rebuilt[t] != form[t] for t in range(K4)):
        return None
    return coeffs


def format_form(form) -> str:
    """Name of a form with nonnegative integer coefficients in the A..H basis."""
    nz = [t for t, x in enumerate(form) if x]
    if len(nz) == 1 and form[nz[0]] == 1:
        return COORDS[nz[0]]
    coeffs = alpha_coefficients(form)
    if coeffs is None or any(c < 0 or c.denominator != 1 for c in coeffs.values()):
        raise ValueError(f"form {form} has no nonnegative name")
    out = []
    for x in BASIS:
        c = int(coeffs[x])
        if c:
            out.append(x if c == 1 else f"{x}^{c}")
    return "".join(out) or "0"


def signed_name(form) -> tuple[str, str]:
    """For a constraint ``form >= 0`` return ``(name, side)``; side ``"<="`` means ``name <= 0``."""
    try:
        return format_form(primitive(form)), ">="
    except ValueError:
        return format_form(primitive(_neg(form))), "<="


# ---------------------------------------------------------------------------
# Numeric evaluation


def adapted_words(n: int) -> tuple[Word, Word]:
    """The words ``j`` (odd letters first) and ``j'`` (even letters first) of ``w0``."""
    odd = tuple(range(1, n + 1, 2))
    even = tuple(range(2, n + 1, 2))
    k = n * (n + 1) // 2

    def build(first, second):
        out = []
        while len(out) < k:
            out.extend(first)
            first, second = second, first
        return tuple(out[:k])

    j, jp = build(odd, even), build(even, odd)
    assert is_w0_word(j, n) and is_w0_word(jp, n)
    return j, jp


def braid_rule(a, b, c):
    """Exponent change for one long braid move."""
    if a <= c:
        return (b + c - a, a, b)
    return (b, c, b + a - c)


def replay(point, word, moves) -> tuple:
    """Carry ``point`` (exponents for ``word``) along a list of moves."""
    x = list(point)
    w = tuple(word)
    if len(x) != len(w):
        raise ValueError(f"vector has length {len(x)}, expected {len(w)}")
    for mv in moves:
        p = mv.pos
        if mv.kind == "commute":
            x[p], x[p + 1] = x[p + 1], x[p]
        else:
            x[p:p + 3] = braid_rule(*x[p:p + 3])
        w = apply_move(w, mv)
    return tuple(x)


@lru_cache(maxsize=4096)
def _bfs_path(w1: Word, w2: Word) -> tuple:
    if w1 == w2:
        return ()
    prev = {w1: None}
    queue = deque([w1])
    while queue:
        w = queue.popleft()
        for mv, u in sorted(neighbors(w)):
            if u not in prev:
                prev[u] = (w, mv)
                if u == w2:
                    path = []
                    while prev[u] is not None:
                        u, m = prev[u]
                        path.append(m)
                    return tuple(reversed(path))
                queue.append(u)
    raise ValueError(f"no path from {format_word(w1)} to {format_word(w2)}")


def braid_path(word1, word2) -> list[Move]:
    """A shortest sequence of moves from ``word1`` to ``word2``."""
    w1, w2 = tuple(word1), tuple(word2)
    n = max(w1 + w2)
    if len(w1) != len(w2) or not is_w0_word(w1, n) or not is_w0_word(w2, n):
        raise ValueError("both words must be reduced words of w0 of the same rank")
    return list(_bfs_path(w1, w2))


def transition_eval(word1, word2, point, path=None) -> tuple:
    """Exponents for ``word2`` of the element with exponents ``point`` for ``word1``."""
    moves = braid_path(word1, word2) if path is None else path
    return replay(point, word1, moves)


def R(point) -> tuple:
    """Transition from ``j`` to ``j'`` at rank 4, along the fixed reference path."""
    mp = fixtures.move_path()
    return replay(point, mp.start, mp.moves)


def tau(point) -> tuple:
    """Swap coordinates in pairs ``(a b)(c d)(e f)(g h)(i j)``."""
    x = list(point)
    for t in range(0, len(x) - 1, 2):
        x[t], x[t + 1] = x[t + 1], x[t]
    return tuple(x)


def R_inverse(point) -> tuple:
    return tau(R(tau(point)))


# ---------------------------------------------------------------------------
# Symbolic branching


def _identity(k):
    return tuple(tuple(1 if s == t else 0 for s in range(k)) for t in range(k))


def g_forms() -> tuple:
    """Replay the reference path with ``(a,b,c) -> (b,c,b)`` at every long braid."""
    mp = fixtures.move_path()
    x = list(_identity(K4))
    for mv in mp.moves:
        p = mv.pos
        if mv.kind == "commute":
            x[p], x[p + 1] = x[p + 1], x[p]
        else:
            a, b, c = x[p:p + 3]
            x[p:p + 3] = [b, c, b]
    return tuple(x)


def branch_forms() -> dict[str, tuple]:
    """First-minus-third form at each labelled long braid of the ``g`` replay."""
    mp = fixtures.move_path()
    x = list(_identity(K4))
    out = {}
    for mv, lab in zip(mp.moves, mp.labels):
        p = mv.pos
        if mv.kind == "commute":
            x[p], x[p + 1] = x[p + 1], x[p]
        else:
            a, b, c = x[p:p + 3]
            out[lab] = _sub(a, c)
            x[p:p + 3] = [b, c, b]
    return out


@dataclass(frozen=True)
class Leaf:
    """One consistent sequence of branch choices.

    ``signs`` has one character per long braid: ``-`` for first <= third,
    ``+`` for first >= third, ``0`` when the two are identically equal.
    """

    signs: str
    constraints: tuple  # forms required to be >= 0
    matrix: tuple


@lru_cache(maxsize=None)
def enumerate_leaves() -> tuple[Leaf, ...]:
    """Depth-first branching along the reference path, pruning systems without interior."""
    mp = fixtures.move_path()
    moves = mp.moves
    leaves = []

    def walk(t, forms, cons, signs):
        while t < len(moves) and moves[t].kind == "commute":
            p = moves[t].pos
            forms = forms[:p] + (forms[p + 1], forms[p]) + forms[p + 2:]
            t += 1
        if t == len(moves):
            leaves.append(Leaf(signs, cons, forms))
            return
        p = moves[t].pos
        x, y, z = forms[p:p + 3]
        d = _sub(x, z)
        if not any(d):
            walk(t + 1, forms[:p] + (y, z, y) + forms[p + 3:], cons, signs + "0")
            return
        options = (
            ("-", _neg(d), (_sub(_add(y, z), x), x, y)),
            ("+", d, (y, z, _sub(_add(y, x), z))),
        )
        for sign, c, triple in options:
            new = cons + (primitive(c),)
            if strictly_feasible(new):
                walk(t + 1, forms[:p] + triple + forms[p + 3:], new, signs + sign)

    walk(0, _identity(K4), (), "")
    return tuple(leaves)


@dataclass(frozen=True)
class Region:
    """A region of linearity of ``R``: closed cone ``{v : f.v >= 0 for f in inequalities}``."""

    number: int | None
    key: str
    signs: tuple
    matrix: tuple
    inequalities: tuple
    simplicial: bool
    walls: tuple = field(default=())

    def contains(self, point) -> bool:
        return all(_dot(f, point) >= 0 for f in self.inequalities)

    def apply(self, point) -> tuple:
        return tuple(_dot(row, point) for row in self.matrix)

    def named(self) -> tuple[tuple[str, ...], tuple[str, ...]]:
        """Inequalities as (names <= 0, names >= 0), each side sorted."""
        left, right = [], []
        for f in self.inequalities:
            name, side = signed_name(f)
            (left if side == "<=" else right).append(name)
        return tuple(sorted(left, key=_name_key)), tuple(sorted(right, key=_name_key))

    def named_walls(self) -> tuple[tuple[str, ...], tuple[str, ...], str]:
        if not self.simplicial:
            raise ValueError(f"region {self.number} is not simplicial")
        left, right = self.named()
        coords = "".join(sorted(format_form(f) for f in self.walls[len(self.inequalities):]))
        return left, right, coords

    def to_json(self) -> dict:
        left, right = self.named()
        return {
            "id": self.number,
            "key": self.key,
            "signs": list(self.signs),
            "matrix": [list(r) for r in self.matrix],
            "inequalities": {"le0": list(left), "ge0": list(right)},
            "simplicial": self.simplicial,
            "walls": [format_form(f) if _is_coordinate(f) else "%s%s" % signed_name(f)[::-1]
                      for f in self.walls],
        }


def _is_coordinate(f):
    return sum(1 for x in f if x) == 1 and max(f) == 1


def _name_key(name):
    return (len(name.replace("^2", "")), name)


def _named_key(left, right):
    return (frozenset(left), frozenset(right))


def _hull_inequalities(group: list[Leaf]) -> list[tuple]:
    """Irredundant inequalities of the union of leaf cones sharing one linear map."""
    candidates = []
    for leaf in group:
        for c in leaf.constraints:
            if c not in candidates:
                candidates.append(c)
    valid = [c for c in candidates if all(implies(leaf.constraints, c) for leaf in group)]
    return irredundant(valid)


def _coordinate_walls(ineqs) -> list[tuple]:
    coords = [coordinate_form(ch) for ch in COORDS]
    keep = []
    for idx, c in enumerate(coords):
        others = list(ineqs) + coords[:idx] + coords[idx + 1:]
        if not implies(others, c):
            keep.append(c)
    return keep


@lru_cache(maxsize=None)
def enumerate_regions() -> tuple[Region, ...]:
    """The 144 regions of linearity of ``R``, numbered to match the reference table."""
    groups: dict[tuple, list[Leaf]] = {}
    for leaf in enumerate_leaves():
        groups.setdefault(leaf.matrix, []).append(leaf)
    reference = {_named_key(*v): num for num, v in fixtures.table3().items()}
    regions = []
    for matrix, group in groups.items():
        ineqs = tuple(sorted(_hull_inequalities(group)))
        proto = Region(None, "", (), matrix, ineqs, False)
        left, right = proto.named()
        key = hashlib.sha1(("|".join(left) + "||" + "|".join(right)).encode()).hexdigest()[:12]
        simplicial = len(ineqs) == 6
        walls = ineqs + tuple(_coordinate_walls(ineqs)) if simplicial else ()
        regions.append(Region(reference.get(_named_key(left, right)), key,
                              tuple(sorted(leaf.signs for leaf in group)), matrix, ineqs, simplicial, walls))
    regions.sort(key=lambda r: (r.number is None, r.number or 0, r.key))
    return tuple(regions)


def region_by_number(number: int) -> Region:
    for r in enumerate_regions():
        if r.number == number:
            return r
    raise KeyError(number)


def locate_region(point) -> tuple[int, list]:
    """Lowest-numbered region containing ``point`` and the list of all matches."""
    matches = [r.number for r in enumerate_regions() if r.contains(point)]
    if not matches:
        raise AssertionError(f"no region contains {point}")
    return min(matches), matches


def simplicial_walls(region: Region) -> tuple:
    """The 6 main walls followed by the 4 coordinate walls (inward normals)."""
    if not region.simplicial:
        raise ValueError(f"region {region.number} is not simplicial")
    return region.walls


def _in_span(u, w, q) -> bool:
    """Whether ``u = x w + y q`` for rationals ``x, y`` (``w``, ``q`` independent)."""
    k = len(w)
    for s in range(k):
        for t in range(s + 1, k):
            det = w[s] * q[t] - w[t] * q[s]
            if det:
                x = Fraction(u[s] * q[t] - u[t] * q[s], det)
                y = Fraction(w[s] * u[t] - w[t] * u[s], det)
                return all(u[r] == x * w[r] + y * q[r] for r in range(k))
    raise ValueError("dependent walls")


def walls_adjacent(walls1, walls2) -> tuple | None:
    """Common wall ``Q`` and matching ``Q_i -> Q_i + lambda_i Q`` of the remaining walls.

    Walls are primitive integer forms compared as hyperplanes. Returns
    ``(Q, pairs)`` or ``None``.
    """
    import networkx as nx

    for q in walls1:
        nq = _neg(q)
        if q not in walls2 and nq not in walls2:
            continue
        rest1 = [w for w in walls1 if w != q]
        rest2 = [w for w in walls2 if w not in (q, nq)]
        g = nx.Graph()
        left = [("x", s) for s in range(len(rest1))]
        g.add_nodes_from(left)
        g.add_nodes_from(("y", t) for t in range(len(rest2)))
        for s, w in enumerate(rest1):
            for t, u in enumerate(rest2):
                if _in_span(u, w, q):
                    g.add_edge(("x", s), ("y", t))
        match = nx.bipartite.maximum_matching(g, top_nodes=left)
        if all(node in match for node in left):
            pairs = [(rest1[s], rest2[match[("x", s)][1]]) for s in range(len(rest1))]
            return q, pairs
    return None


@lru_cache(maxsize=None)
def region_adjacency_graph() -> MoveGraph:
    """Simplicial regions (by number) joined when their walls match across a common wall."""
    simp = [r for r in enumerate_regions() if r.simplicial]
    edges = set()
    for s, r1 in enumerate(simp):
        for r2 in simp[s + 1:]:
            if walls_adjacent(r1.walls, r2.walls) is not None:
                edges.add((min(r1.number, r2.number), max(r1.number, r2.number)))
    return MoveGraph(tuple(r.number for r in simp), frozenset(edges))


def region_involution(m: int) -> int:
    return 63 - m
