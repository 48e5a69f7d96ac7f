"""Chamber sets of wiring diagrams and partial quivers.

String ``r`` starts in row ``r``; a crossing with letter ``i`` swaps the strings
in rows ``i`` and ``i+1``. Between two consecutive occurrences ``s < s'`` of a
letter ``i`` there is a bounded chamber, labelled by the strings lying below it.

Partial quivers have edges numbered ``2..n`` from right to left and are written
left to right, so ``"LR-"`` (rank 4) has edge 4 = L, edge 3 = R, edge 2 blank.

>>> sorted(format_set(c) for _, c in chamber_sets((1, 3, 2, 1, 3, 2), 3).chambers)
['13', '134', '3']
>>> format_set(l_map(PartialQuiver.parse("RRR"), 4))
'15'
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .words import Word, format_word, is_w0_word

__all__ = [
    "ChamberDiagram",
    "PartialQuiver",
    "format_set",
    "parse_set",
    "chamber_sets",
    "chamber_family",
    "consecutive_pairs",
    "l_map",
    "partial_quivers",
    "chamber_set_to_quiver",
    "quivers_of_word",
]


def format_set(s) -> str:
    return "".join(str(x) for x in sorted(s))


def parse_set(text: str) -> frozenset:
    return frozenset(int(ch) for ch in text.strip())


def consecutive_pairs(word) -> list[tuple[int, int]]:
    """Pairs ``(s, s')`` (1-based) of consecutive occurrences of a letter, sorted by ``s``."""
    last = {}
    pairs = []
    for pos, x in enumerate(word, start=1):
        if x in last:
            pairs.append((last[x], pos))
        last[x] = pos
    return sorted(pairs)


@dataclass(frozen=True)
class ChamberDiagram:
    word: Word
    n: int
    chambers: tuple  # ((s, s'), frozenset) in order of s

    def to_json(self) -> dict:
        return {
            "word": format_word(self.word),
            "chambers": [{"pair": [s, t], "set": format_set(c)} for (s, t), c in self.chambers],
        }


def chamber_sets(word, n: int) -> ChamberDiagram:
    word = tuple(word)
    if not is_w0_word(word, n):
        raise ValueError(f"{format_word(word)} is not a reduced word of w0 for rank {n}")
    rows = list(range(1, n + 2))
    snapshots = [tuple(rows)]
    for i in word:
        rows[i - 1], rows[i] = rows[i], rows[i - 1]
        snapshots.append(tuple(rows))
    chambers = []
    for s, t in consecutive_pairs(word):
        i = word[s - 1]
        below = frozenset(snapshots[s][i:])
        chambers.append(((s, t), below))
    return ChamberDiagram(word, n, tuple(chambers))


def chamber_family(word, n: int) -> frozenset:
    return frozenset(c for _, c in chamber_sets(word, n).chambers)


@dataclass(frozen=True)
class PartialQuiver:
    """Edge labels written left to right, i.e. ``labels[0]`` is edge ``n``."""

    labels: str

    def __post_init__(self):
        if not self.labels or set(self.labels) - set("LR-"):
            raise ValueError(f"bad quiver {self.labels!r}")
        directed = [k for k, ch in enumerate(self.labels) if ch != "-"]
        if not directed or directed != list(range(directed[0], directed[-1] + 1)):
            raise ValueError(f"directed part of {self.labels!r} must be nonempty and contiguous")

    @classmethod
    def parse(cls, text: str) -> "PartialQuiver":
        return cls(text.strip().replace("−", "-"))

    @property
    def n(self) -> int:
        return len(self.labels) + 1

    def edge(self, e: int) -> str:
        """Label of edge ``e`` in ``[2, n]``."""
        return self.labels[self.n - e]

    def directed_edges(self) -> list[int]:
        """Directed edge numbers, ascending (right to left)."""
        return [e for e in range(2, self.n + 1) if self.edge(e) != "-"]

    def components(self) -> list[tuple[str, int, int]]:
        """Maximal same-direction runs ``(direction, lowest edge, highest edge)``, left to right."""
        runs = []
        for e in reversed(self.directed_edges()):
            d = self.edge(e)
            if runs and runs[-1][0] == d:
                runs[-1] = (d, e, runs[-1][2])
            else:
                runs.append((d, e, e))
        return runs

    def __str__(self):
        return self.labels


def l_map(P: PartialQuiver, n: int) -> frozenset:
    """The chamber set attached to a partial quiver."""
    if P.n != n:
        raise ValueError(f"quiver {P} has rank {P.n}, expected {n}")
    directed = P.directed_edges()
    out = {e for e in directed if P.edge(e) == "L"}
    low, high = directed[0], directed[-1]
    if P.edge(low) == "R":
        out.update(range(1, low))
    if P.edge(high) == "R":
        out.update(range(high + 1, n + 2))
    return frozenset(out)


def _quiver_key(P: PartialQuiver):
    s = P.labels
    first = min(k for k, ch in enumerate(s) if ch != "-")
    return (-len(P.directed_edges()), first, s.count("R"), s)


@lru_cache(maxsize=None)
def _quivers(n: int) -> tuple:
    if n < 2:
        raise ValueError("partial quivers need rank at least 2")
    m = n - 1
    out = []
    for start in range(m):
        for stop in range(start + 1, m + 1):
            for bits in range(1 << (stop - start)):
                mid = "".join("R" if bits >> (stop - start - 1 - t) & 1 else "L" for t in range(stop - start))
                out.append(PartialQuiver("-" * start + mid + "-" * (m - stop)))
    return tuple(sorted(out, key=_quiver_key))


def partial_quivers(n: int) -> list[PartialQuiver]:
    return list(_quivers(n))


@lru_cache(maxsize=None)
def _inverse_l(n: int) -> dict:
    table = {}
    for P in _quivers(n):
        S = l_map(P, n)
        if S in table:
            raise AssertionError(f"l is not injective: {table[S]} and {P}")
        table[S] = P
    return table


def chamber_set_to_quiver(S, n: int) -> PartialQuiver:
    try:
        return _inverse_l(n)[frozenset(S)]
    except KeyError:
        raise ValueError(f"{format_set(S)} is not a chamber set for rank {n}") from None


def quivers_of_word(word, n: int) -> frozenset:
    family = [c for _, c in chamber_sets(word, n).chambers]
    if len(set(family)) != len(family):
        raise AssertionError(f"repeated chamber set in {format_word(word)}")
    return frozenset(chamber_set_to_quiver(c, n) for c in family)
