"""Lusztig cones ``{a : P a >= 0}`` of reduced words and their spanning vectors.

Positive roots are pairs ``(p, q)`` standing for ``alpha_p + ... + alpha_{q-1}``.
Rows of ``P`` come first for each consecutive-occurrence pair ``(s, s')``
ordered by ``s``, then one row per simple root ``alpha_1 .. alpha_n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

import sympy

from .chambers import PartialQuiver, chamber_set_to_quiver, chamber_sets, consecutive_pairs
from .words import Word, is_w0_word, format_word

__all__ = [
    "ConeSpec",
    "root_order",
    "build_P",
    "invert_exact",
    "cone_spec",
    "spanning_vector",
    "cone_contains",
    "component_roots",
    "quiver_roots",
]

Root = tuple[int, int]


def root_order(word) -> tuple[Root, ...]:
    """``alpha^t = s_{i_1} ... s_{i_{t-1}}(alpha_{i_t})`` as ``(p, q)`` pairs."""
    n = max(word) if word else 0
    perm = list(range(n + 2))  # perm[x] = w(x) for the running prefix w
    roots = []
    for i in word:
        p, q = perm[i], perm[i + 1]
        if p > q:
            raise ValueError(f"{format_word(word)} is not reduced")
        roots.append((p, q))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return tuple(roots)


def _word_rank(word, n):
    if n is None:
        n = max(word)
    if not is_w0_word(word, n):
        raise ValueError(f"{format_word(word)} is not a reduced word of w0 for rank {n}")
    return n


def build_P(word, n: int | None = None) -> tuple[list[list[int]], list]:
    """Inequality matrix of the cone and its row labels."""
    word = tuple(word)
    n = _word_rank(word, n)
    k = len(word)
    rows, labels = [], []
    for s, t in consecutive_pairs(word):
        i = word[s - 1]
        row = [0] * k
        for p in range(s + 1, t):
            if abs(word[p - 1] - i) == 1:
                row[p - 1] = 1
        row[s - 1] = row[t - 1] = -1
        rows.append(row)
        labels.append((s, t))
    roots = root_order(word)
    for j in range(1, n + 1):
        row = [0] * k
        row[roots.index((j, j + 1))] = 1
        rows.append(row)
        labels.append(j)
    return rows, labels


def invert_exact(P) -> list[list[int]]:
    """Integer inverse of a unimodular matrix; entries are checked to be nonnegative."""
    M = sympy.Matrix(P)
    det = M.det()
    if det not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det = {det})")
    Q = M.inv()
    out = [[int(x) for x in Q.row(r)] for r in range(Q.rows)]
    if any(x < 0 for row in out for x in row):
        raise ValueError("inverse has negative entries")
    return out


@dataclass(frozen=True)
class ConeSpec:
    word: Word
    n: int
    P: tuple
    Q: tuple
    labels: tuple  # (s, s') pairs then simple-root indices 1..n
    quivers: tuple  # partial quiver per chamber row (None for simple rows)

    def column(self, label) -> tuple[int, ...]:
        """Spanning vector: the column of ``Q`` matching a row label, quiver or integer."""
        if isinstance(label, PartialQuiver):
            idx = self.quivers.index(label)
        else:
            idx = self.labels.index(label)
        return tuple(row[idx] for row in self.Q)


def cone_spec(word, n: int | None = None) -> ConeSpec:
    word = tuple(word)
    n = _word_rank(word, n)
    P, labels = build_P(word, n)
    Q = invert_exact(P)
    cs = dict(chamber_sets(word, n).chambers)
    quivers = tuple(chamber_set_to_quiver(cs[lab], n) if isinstance(lab, tuple) else None for lab in labels)
    return ConeSpec(word, n, tuple(map(tuple, P)), tuple(map(tuple, Q)), tuple(labels), quivers)


def component_roots(a: int, b: int, n: int) -> set[Root]:
    """Roots ``(p, q)`` with ``p <= a < b <= q``."""
    return {(p, q) for p in range(1, a + 1) for q in range(b, n + 2)}


def quiver_roots(P: PartialQuiver) -> dict[Root, int]:
    """Multiplicity ``ceil(m/2)`` of each root, ``m`` counting components that contain it."""
    n = P.n
    counts: dict[Root, int] = {}
    for _, lo, hi in P.components():
        for r in component_roots(lo - 1, hi + 1, n):
            counts[r] = counts.get(r, 0) + 1
    return {r: ceil(m / 2) for r, m in counts.items()}


def spanning_vector(word, label, n: int | None = None) -> tuple[int, ...]:
    """Spanning vector of the cone for a partial quiver of the word, or a simple index ``j``."""
    word = tuple(word)
    n = _word_rank(word, n)
    roots = root_order(word)
    if isinstance(label, PartialQuiver):
        from .chambers import quivers_of_word
        if label not in quivers_of_word(word, n):
            raise ValueError(f"quiver {label} does not arise from {format_word(word)}")
        mult = quiver_roots(label)
        return tuple(mult.get(r, 0) for r in roots)
    j = int(label)
    if not 1 <= j <= n:
        raise ValueError(f"simple index {j} out of range")
    return tuple(1 if p <= j < j + 1 <= q else 0 for p, q in roots)


def cone_contains(word, a, n: int | None = None) -> bool:
    word = tuple(word)
    if len(a) != len(word):
        raise ValueError(f"vector has length {len(a)}, expected {len(word)}")
    P, _ = build_P(word, n)
    return all(sum(x * y for x, y in zip(row, a)) >= 0 for row in P)
