"""Reduced words for the longest element of the symmetric group.

A word is a tuple of letters in ``[1, n]``; letter ``i`` stands for the simple
transposition ``s_i``. Words of ``w0`` are connected by commutation moves
(``ij -> ji`` for ``|i - j| > 1``) and long braid moves (``iji -> jij`` for
``|i - j| = 1``).

>>> len(enumerate_w0_words(3))
16
>>> len(commutation_classes(4))
62
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

__all__ = [
    "MAX_RANK",
    "Move",
    "CommutationClass",
    "MoveGraph",
    "format_word",
    "parse_word",
    "permutation_of",
    "is_reduced",
    "is_w0_word",
    "longest_word",
    "neighbors",
    "apply_move",
    "enumerate_w0_words",
    "commutation_classes",
    "class_of",
    "class_graph",
    "involution",
    "RankError",
]

Word = tuple[int, ...]

MAX_RANK = 5


class RankError(ValueError):
    """Raised when a rank is outside the supported range."""


def _check_rank(n: int) -> None:
    if n < 1:
        raise RankError(f"rank must be positive, got {n}")
    if n > MAX_RANK:
        raise RankError(f"rank {n} exceeds the supported maximum {MAX_RANK}")


def format_word(word) -> str:
    return ",".join(str(x) for x in word)


def parse_word(text: str) -> Word:
    """Parse ``"1,3,2"`` (or ``"132"`` for single digits) into a tuple."""
    text = text.strip().strip("[]()")
    if "," in text or " " in text:
        parts = text.replace(",", " ").split()
    else:
        parts = list(text)
    return tuple(int(p) for p in parts)


def permutation_of(word, n: int) -> tuple[int, ...]:
    """Row contents after applying the crossings of ``word`` to ``1..n+1``.

    Letter ``i`` swaps the entries in rows ``i`` and ``i+1``.

    >>> permutation_of((1, 3, 2, 1, 3, 2), 3)
    (4, 3, 2, 1)
    >>> permutation_of((), 4)
    (1, 2, 3, 4, 5)
    """
    rows = list(range(1, n + 2))
    for i in word:
        if not 1 <= i <= n:
            raise ValueError(f"letter {i} out of range [1, {n}]")
        rows[i - 1], rows[i] = rows[i], rows[i - 1]
    return tuple(rows)


def _inversions(perm) -> int:
    return sum(1 for x in range(len(perm)) for y in range(x + 1, len(perm)) if perm[x] > perm[y])


def is_reduced(word, n: int) -> bool:
    return _inversions(permutation_of(word, n)) == len(word)


def is_w0_word(word, n: int) -> bool:
    return len(word) == n * (n + 1) // 2 and permutation_of(word, n) == tuple(range(n + 1, 0, -1)) \
        and is_reduced(word, n)


def longest_word(n: int) -> Word:
    """The reduced word ``1, 21, 321, ...`` of ``w0``."""
    return tuple(x for m in range(1, n + 1) for x in range(m, 0, -1))


def involution(word, n: int) -> Word:
    """Letterwise ``i -> n+1-i``."""
    return tuple(n + 1 - x for x in word)


@dataclass(frozen=True, order=True)
class Move:
    """A move at position ``pos``: ``"commute"`` swaps two letters, ``"braid"`` rewrites three."""

    pos: int
    kind: str

    def __str__(self):
        return f"{self.kind}@{self.pos}"


def apply_move(word, move: Move) -> Word:
    w = list(word)
    p = move.pos
    if move.kind == "commute":
        a, b = w[p], w[p + 1]
        if abs(a - b) <= 1:
            raise ValueError(f"letters {a},{b} at {p} do not commute")
        w[p], w[p + 1] = b, a
    elif move.kind == "braid":
        a, b, c = w[p:p + 3]
        if not (a == c and abs(a - b) == 1):
            raise ValueError(f"no long braid at {p} in {format_word(word)}")
        w[p:p + 3] = [b, a, b]
    else:
        raise ValueError(f"unknown move kind {move.kind!r}")
    return tuple(w)


def _moves(word, commute=True, braid=True):
    k = len(word)
    for p in range(k - 1):
        if commute and abs(word[p] - word[p + 1]) > 1:
            yield Move(p, "commute")
        if braid and p + 2 < k and word[p] == word[p + 2] and abs(word[p] - word[p + 1]) == 1:
            yield Move(p, "braid")


def neighbors(word) -> set[tuple[Move, Word]]:
    """All words one commutation or one long braid move away."""
    word = tuple(word)
    return {(m, apply_move(word, m)) for m in _moves(word)}


@lru_cache(maxsize=None)
def _w0_words(n: int) -> frozenset:
    seed = longest_word(n)
    seen = {seed}
    queue = deque([seed])
    while queue:
        w = queue.popleft()
        for m in _moves(w):
            u = apply_move(w, m)
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return frozenset(seen)


def enumerate_w0_words(n: int) -> frozenset:
    """All reduced words of ``w0`` in ``S_{n+1}`` (closure of one word under moves)."""
    _check_rank(n)
    return _w0_words(n)


@dataclass(frozen=True)
class CommutationClass:
    """Words of ``w0`` equivalent under commutation moves."""

    representative: Word
    members: frozenset = field(repr=False, compare=False)
    n: int = 0

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def signature(self) -> frozenset:
        """The family of chamber sets shared by all members."""
        from .chambers import chamber_family
        return chamber_family(self.representative, self.n)


def _commutation_component(word) -> frozenset:
    seen = {word}
    stack = [word]
    while stack:
        w = stack.pop()
        for m in _moves(w, braid=False):
            u = apply_move(w, m)
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return frozenset(seen)


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple:
    remaining = set(_w0_words(n))
    out = []
    while remaining:
        w = min(remaining)
        comp = _commutation_component(w)
        remaining -= comp
        out.append(CommutationClass(min(comp), comp, n))
    out.sort(key=lambda c: c.representative)
    return tuple(out)


def commutation_classes(n: int) -> list[CommutationClass]:
    """Commutation classes of ``w0`` words ordered by lexicographically least member."""
    _check_rank(n)
    return list(_classes(n))


@lru_cache(maxsize=None)
def _class_index(n: int) -> dict:
    return {w: idx for idx, c in enumerate(_classes(n)) for w in c.members}


def class_of(word, n: int) -> CommutationClass:
    _check_rank(n)
    word = tuple(word)
    try:
        return _classes(n)[_class_index(n)[word]]
    except KeyError:
        raise ValueError(f"{format_word(word)} is not a reduced word of w0 for rank {n}") from None


@dataclass(frozen=True)
class MoveGraph:
    """Undirected simple graph; ``edges`` holds sorted vertex pairs."""

    vertices: tuple
    edges: frozenset

    def adjacent(self, u, v) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def to_networkx(self):
        import networkx as nx
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g


def class_graph(n: int) -> MoveGraph:
    """Classes (by representative) joined when one long braid move links members."""
    _check_rank(n)
    index = _class_index(n)
    classes = _classes(n)
    edges = set()
    for c in classes:
        for w in c.members:
            for m in _moves(w, commute=False):
                other = classes[index[apply_move(w, m)]].representative
                if other != c.representative:
                    edges.add(tuple(sorted((c.representative, other))))
    return MoveGraph(tuple(c.representative for c in classes), frozenset(edges))
