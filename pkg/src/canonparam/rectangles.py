"""The rectangle algorithm for spanning vectors, and the rank-4 wall incidences.

Picture the triangle of numbers in which line ``m`` (for ``m = 0..n+1``) is the
horizontal line at height ``m`` and the numbers ``1..n`` sit between them. A
``(p, q, r, s)``-rectangle has its sides at 45 degrees, top vertex on line
``p``, left vertex on line ``q``, right vertex on line ``r`` and bottom vertex on
line ``s``. Reading the numbers of a column downwards gives the positive root
``alpha_i + ... + alpha_j``.

Geometry is done on the diagonal lattice ``sigma = line + x``,
``tau = line - x``, where every rectangle is an axis-parallel box:

* left vertex  = (sigma_min, tau_max)
* top vertex   = (sigma_min, tau_min)
* right vertex = (sigma_max, tau_min)
* bottom vertex = (sigma_max, tau_max)

Vertices have even ``sigma`` and ``tau``. Column ``k`` is the vertical line
``x = k + 1/2``; only odd ``k`` are read (this is the global form of the rule
"start with the first column if ``q`` is odd").

>>> sorted(phi_plus(PartialQuiver.parse("LRLL-")))
[(1, 3), (1, 4), (2, 5), (3, 7), (5, 6)]
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chambers import PartialQuiver, partial_quivers, quivers_of_word
from .cones import root_order
from .words import format_word

__all__ = [
    "Rectangle",
    "Box",
    "DiagramE",
    "rho",
    "rho_j",
    "assemble",
    "phi_plus",
    "phi_plus_by_corner",
    "phi_plus_j",
    "J_ROOT_ORDER",
    "vector_vP",
    "vector_vj",
    "rectangle_vectors",
    "wall_form",
    "incidence",
    "wall_universe",
    "incidence_table",
    "class_walls",
    "region_for_class",
    "correspondence",
]


@dataclass(frozen=True)
class Rectangle:
    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        if not (self.p < self.q < self.s and self.p < self.r < self.s and self.p + self.s == self.q + self.r):
            raise ValueError(f"invalid rectangle {self}")


def rho(direction: str, a: int, b: int, n: int) -> Rectangle:
    """Rectangle of a component spanning edges ``a+1..b-1``."""
    if not a < b:
        raise ValueError("degenerate component")
    if direction == "L":
        return Rectangle(0, a, n + 2 - b, n + a - b + 2)
    if direction == "R":
        return Rectangle(b - a - 1, b - 1, n + 1 - a, n + 1)
    raise ValueError(f"bad direction {direction!r}")


def rho_j(j: int, n: int) -> Rectangle:
    return Rectangle(0, j, n + 1 - j, n + 1)


@dataclass(frozen=True)
class Box:
    """A placed rectangle: ``sigma`` in ``[s0, s1]``, ``tau`` in ``[t0, t1]``."""

    label: str
    rect: Rectangle
    s0: int
    s1: int
    t0: int
    t1: int

    @classmethod
    def from_left(cls, label, rect, x):
        s0, t1 = rect.q + x, rect.q - x
        return cls(label, rect, s0, s0 + 2 * (rect.r - rect.p), t1 - 2 * (rect.q - rect.p), t1)

    @classmethod
    def from_right(cls, label, rect, x):
        s1, t0 = rect.r + x, rect.r - x
        return cls(label, rect, s1 - 2 * (rect.r - rect.p), s1, t0, t0 + 2 * (rect.q - rect.p))

    @property
    def left(self):
        return (self.s0, self.t1)

    @property
    def right(self):
        return (self.s1, self.t0)

    def closed_contains(self, s, t) -> bool:
        return self.s0 <= s <= self.s1 and self.t0 <= t <= self.t1


def _x(vertex):
    return (vertex[0] - vertex[1]) // 2


@dataclass(frozen=True)
class DiagramE:
    boxes: tuple
    centre: tuple | None  # (sigma, tau) of C, None when no parity switch exists
    left_corners: tuple
    right_corners: tuple

    @property
    def v_line(self):
        """The column position ``x`` of the vertical line through the centre."""
        return None if self.centre is None else (self.centre[0] - self.centre[1]) / 2

    def inside(self, s, t) -> bool:
        return any(b.closed_contains(s, t) for b in self.boxes)


def _switch(counts):
    flips = [idx for idx in range(1, len(counts)) if counts[idx] % 2 != counts[idx - 1] % 2]
    if len(flips) > 1:
        raise AssertionError(f"box parities {counts} switch more than once")
    return flips[0] if flips else None


def assemble(P: PartialQuiver) -> DiagramE:
    n = P.n
    boxes = []
    for idx, (d, lo, hi) in enumerate(P.components()):
        rect = rho(d, lo - 1, hi + 1, n)
        label = f"{d}{sum(1 for c in P.components()[:idx + 1] if c[0] == d)}"
        if not boxes:
            box = Box.from_left(label, rect, rect.q)
        elif d == "R":  # previous component is L: share leftmost corners
            prev = boxes[-1]
            if prev.rect.q != rect.q:
                raise AssertionError(f"left corners of {prev.label} and {label} are on different lines")
            box = Box.from_left(label, rect, _x(prev.left))
        else:  # previous component is R: share rightmost corners
            prev = boxes[-1]
            if prev.rect.r != rect.r:
                raise AssertionError(f"right corners of {prev.label} and {label} are on different lines")
            box = Box.from_right(label, rect, _x(prev.right))
        boxes.append(box)

    sig = sorted({v for b in boxes for v in (b.s0, b.s1)})
    tau = sorted({v for b in boxes for v in (b.t0, b.t1)})

    def cell(i, j):
        sm, tm = (sig[i] + sig[i + 1]) / 2, (tau[j] + tau[j + 1]) / 2
        return any(b.s0 < sm < b.s1 and b.t0 < tm < b.t1 for b in boxes)

    tau_counts = [sum(cell(i, j) for i in range(len(sig) - 1)) for j in range(len(tau) - 1)]
    sig_counts = [sum(cell(i, j) for j in range(len(tau) - 1)) for i in range(len(sig) - 1)]
    jt, js = _switch(tau_counts), _switch(sig_counts)
    if (jt is None) != (js is None):
        raise AssertionError("only one family of diagonals switches parity")
    centre = None if jt is None else (sig[js], tau[jt])

    def occupied(s, t):
        return any(b.s0 < s < b.s1 and b.t0 < t < b.t1 for b in boxes)

    lefts, rights = set(), set()
    for b in boxes:
        s, t = b.left
        if occupied(s + 1, t - 1) and not (occupied(s - 1, t - 1) or occupied(s - 1, t + 1) or occupied(s + 1, t + 1)):
            lefts.add((s, t))
        s, t = b.right
        if occupied(s - 1, t + 1) and not (occupied(s + 1, t + 1) or occupied(s + 1, t - 1) or occupied(s - 1, t - 1)):
            rights.add((s, t))
    return DiagramE(tuple(boxes), centre, tuple(sorted(lefts)), tuple(sorted(rights)))


def _extend(E: DiagramE, start, step, along_sigma, grid):
    """Walk from ``start`` along one lattice direction while staying in the closed union."""
    s, t = start
    pos = s if along_sigma else t
    stops = [g for g in grid if (g - pos) * step > 0]
    stops.sort(key=lambda g: g * step)
    end = pos
    for g in stops:
        mid = (end + g) / 2
        ok = E.inside(mid, t) if along_sigma else E.inside(s, mid)
        if not ok:
            break
        end = g
    return end


def _read(s0, s1, t0, t1, n, side=None, v=None) -> set:
    """Roots read from the odd columns of a box, optionally on one side of ``x = v``."""
    roots = set()
    xmin, xmax = (s0 - t1) // 2, (s1 - t0) // 2
    for k in range(xmin, xmax):
        if k % 2 == 0:
            continue
        x = k + 0.5
        if side == "left" and not x < v:
            continue
        if side == "right" and not x > v:
            continue
        lines = [m for m in range(0, n + 2) if s0 <= m + k < s1 and t0 + 1 <= m - k <= t1]
        if not lines:
            continue
        lo, hi = min(lines), max(lines)
        if lines != list(range(lo, hi + 1)) or lo < 1 or hi > n:
            raise AssertionError(f"column {k} reads lines {lines}")
        roots.add((lo, hi + 1))
    return roots


def phi_plus_by_corner(P: PartialQuiver) -> dict:
    """Roots contributed by each extremal corner, keyed by ``(side, sigma, tau)``."""
    E = assemble(P)
    n = P.n
    sig = sorted({v for b in E.boxes for v in (b.s0, b.s1)})
    tau = sorted({v for b in E.boxes for v in (b.t0, b.t1)})
    v = E.v_line
    out = {}
    for s, t in E.left_corners:
        t_end = _extend(E, (s, t), -1, False, tau)
        s_end = _extend(E, (s, t), +1, True, sig)
        out[("left", s, t)] = _read(s, s_end, t_end, t, n, "left" if v is not None else None, v)
    for s, t in E.right_corners:
        s_end = _extend(E, (s, t), -1, True, sig)
        t_end = _extend(E, (s, t), +1, False, tau)
        out[("right", s, t)] = _read(s_end, s, t, t_end, n, "right" if v is not None else None, v)
    return out


def phi_plus(P: PartialQuiver) -> frozenset:
    roots = set()
    for part in phi_plus_by_corner(P).values():
        roots |= part
    return frozenset(roots)


def phi_plus_j(j: int, n: int) -> frozenset:
    rect = rho_j(j, n)
    b = Box.from_left(str(j), rect, rect.q)
    return frozenset(_read(b.s0, b.s1, b.t0, b.t1, n))


# ---------------------------------------------------------------------------
# Rank 4

J_WORD = (1, 3, 2, 4, 1, 3, 2, 4, 1, 3)
J_ROOT_ORDER = root_order(J_WORD)


def _indicator(roots) -> tuple[int, ...]:
    return tuple(1 if r in roots else 0 for r in J_ROOT_ORDER)


def vector_vP(P) -> tuple[int, ...]:
    if isinstance(P, str):
        P = PartialQuiver.parse(P)
    if P.n != 4:
        raise ValueError("vectors are indexed by the rank-4 root order")
    return _indicator(phi_plus(P))


def vector_vj(j: int) -> tuple[int, ...]:
    return _indicator(phi_plus_j(j, 4))


@lru_cache(maxsize=None)
def rectangle_vectors() -> dict[str, tuple[int, ...]]:
    """All 26 rank-4 vectors keyed by quiver string or ``"1".."4"``."""
    out = {str(P): vector_vP(P) for P in partial_quivers(4)}
    out.update({str(j): vector_vj(j) for j in range(1, 5)})
    return out


_EXTRA = {"F": "C", "G": "B", "J": "C"}


def wall_form(name: str) -> tuple[int, ...]:
    """Integer form of a wall name such as ``"BCDH"`` or ``"a"``."""
    from .plmap import parse_form
    if name == "I":
        return (0,) * 10
    return parse_form("".join(_EXTRA.get(ch, ch) for ch in name))


def incidence(vector, wall) -> bool:
    """Whether ``vector`` lies on the wall (named or given as a form)."""
    form = wall_form(wall) if isinstance(wall, str) else wall
    return sum(x * y for x, y in zip(vector, form)) == 0


@lru_cache(maxsize=None)
def wall_universe() -> tuple:
    """Walls (primitive forms up to sign) of all simplicial regions, with names."""
    from .plmap import enumerate_regions, format_form, signed_name
    from .polyhedra import primitive
    seen = {}
    for r in enumerate_regions():
        for w in r.walls:
            name = signed_name(w)[0] if sum(1 for x in w if x) > 1 else format_form(w)
            form = wall_form(name)
            seen[form] = name
    return tuple(sorted(seen.items(), key=lambda kv: (kv[1].islower(), len(kv[1]), kv[1])))


def incidence_table(rows=None, columns=None) -> dict[str, str]:
    """``x``/``.`` marks per wall name over the vector columns."""
    vecs = rectangle_vectors()
    if columns is None:
        columns = list(vecs)
    if rows is None:
        rows = [name for _, name in wall_universe()]
    return {name: "".join("x" if incidence(vecs[c], name) else "." for c in columns) for name in rows}


def class_walls(word) -> list:
    """For each of the 10 vectors of a word, the unique universe wall holding the other 9."""
    word = tuple(word)
    vecs = [vector_vP(P) for P in sorted(quivers_of_word(word, 4), key=str)]
    vecs += [vector_vj(j) for j in range(1, 5)]
    universe = wall_universe()
    walls = []
    for idx in range(len(vecs)):
        others = vecs[:idx] + vecs[idx + 1:]
        hits = [form for form, _ in universe if all(incidence(u, form) for u in others)]
        if len(hits) != 1:
            raise AssertionError(f"{len(hits)} walls contain the other vectors for {format_word(word)}")
        walls.append((vecs[idx], hits[0]))
    return walls


def region_for_class(word):
    """The simplicial region bounded by the walls attached to a word's vectors."""
    from .plmap import enumerate_regions
    from .polyhedra import primitive
    target = {primitive(form) for _, form in class_walls(word)}
    for r in enumerate_regions():
        if r.simplicial and {_unsigned(w) for w in r.walls} == {_unsigned(w) for w in target}:
            return r
    raise AssertionError(f"no simplicial region for {format_word(word)}")


def _unsigned(form):
    for x in form:
        if x:
            return form if x > 0 else tuple(-y for y in form)
    return form


def correspondence() -> dict[tuple, int]:
    """Class representative -> simplicial region number."""
    from .words import commutation_classes
    return {c.representative: region_for_class(c.representative).number for c in commutation_classes(4)}
