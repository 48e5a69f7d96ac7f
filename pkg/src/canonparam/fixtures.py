"""Loaders for the transcribed reference tables shipped in ``canonparam/tables``."""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .words import Move, apply_move, parse_word

__all__ = [
    "FIXTURE_FILES",
    "fixture_text",
    "MovePath",
    "move_path",
    "table3",
    "table5",
    "table6",
    "table7",
    "table8",
    "split_sides",
    "cone_example",
    "TraceState",
    "trace_states",
]

FIXTURE_FILES = {
    "moves": "table1.txt",
    "regions": "table3.txt",
    "walls": "table5.txt",
    "vectors": "table6.csv",
    "incidence": "table7.txt",
    "correspondence": "table8.csv",
    "cone_example": "cone_example.txt",
    "trace": "trace.txt",
}

_override: dict[str, str] = {}


def fixture_text(name: str) -> str:
    """Raw text of a fixture (by key of ``FIXTURE_FILES``)."""
    if name in _override:
        return _override[name]
    return resources.files("canonparam").joinpath("tables").joinpath(FIXTURE_FILES[name]).read_text()


def _lines(name):
    return [ln for ln in fixture_text(name).splitlines() if ln.strip() and not ln.startswith("#")]


@dataclass(frozen=True)
class MovePath:
    words: tuple  # successive words
    moves: tuple  # Move between words[t] and words[t+1]
    labels: tuple  # braid label of each move, "" for commutations

    @property
    def start(self):
        return self.words[0]

    @property
    def end(self):
        return self.words[-1]

    def braid_labels(self) -> str:
        return "".join(lab for lab in self.labels if lab)


@lru_cache(maxsize=None)
def _move_path(text: str) -> MovePath:
    words, marks, labels = [], [], []
    for ln in text.splitlines():
        if not ln.strip() or ln.startswith("#"):
            continue
        m = re.match(r"^([\d\s\[\]]+?)\s*([A-Z]?)\s*$", ln)
        if not m:
            raise ValueError(f"unparsable move line {ln!r}")
        body = m.group(1)
        bracket = body.find("[")
        words.append(parse_word(body.replace("[", " ").replace("]", " ")))
        marks.append(len(re.findall(r"\d", body[:bracket])) if bracket >= 0 else None)
        labels.append(m.group(2))
    moves, move_labels = [], []
    for t in range(len(words) - 1):
        w, u = words[t], words[t + 1]
        if marks[t] is not None:
            mv = Move(marks[t], "braid")
        else:
            diff = [p for p in range(len(w)) if w[p] != u[p]]
            if len(diff) != 2 or diff[1] != diff[0] + 1:
                raise ValueError(f"rows {t} and {t + 1} do not differ by one commutation")
            mv = Move(diff[0], "commute")
        if apply_move(w, mv) != u:
            raise ValueError(f"move {mv} does not take row {t} to row {t + 1}")
        moves.append(mv)
        move_labels.append(labels[t])
    return MovePath(tuple(words), tuple(moves), tuple(move_labels))


def move_path() -> MovePath:
    """The fixed path of moves between the two adapted rank-4 words."""
    return _move_path(fixture_text("moves"))


def split_sides(text: str) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """``"A, BC || B"`` -> ``(("A", "BC"), ("B",))``; a lone ``-`` is an empty side."""
    left, right = text.split("||")

    def side(s):
        s = s.strip().strip("[]").strip()
        if s in ("", "-"):
            return ()
        return tuple(x.strip() for x in s.split(","))

    return side(left), side(right)


def table3() -> dict[int, tuple]:
    """Region number -> (forms <= 0, forms >= 0)."""
    out = {}
    for ln in _lines("regions"):
        num, rest = ln.split(":", 1)
        out[int(num)] = split_sides(rest)
    return out


def table5() -> dict[int, tuple]:
    """Region number -> (forms <= 0, forms >= 0, coordinate walls)."""
    out = {}
    for ln in _lines("walls"):
        num, rest = ln.split(":", 1)
        main, coords = rest.rsplit("]", 1)
        left, right = split_sides(main + "]")
        out[int(num)] = (left, right, coords.strip())
    return out


def table6() -> dict[str, tuple[int, ...]]:
    """Quiver string or ``"1".."4"`` -> 0/1 vector."""
    rows = list(csv.reader(io.StringIO(fixture_text("vectors"))))
    return {r[0]: tuple(int(x) for x in r[1:]) for r in rows[1:] if r}


def table7() -> tuple[tuple[str, ...], dict[str, str]]:
    """Column labels and, per wall, a string of ``x`` (on wall) / ``.`` marks."""
    cols = ()
    for ln in fixture_text("incidence").splitlines():
        if ln.startswith("# columns:"):
            cols = tuple(ln.split(":", 1)[1].split())
    rows = {}
    for ln in _lines("incidence"):
        name, marks = ln.split()
        if len(marks) != len(cols):
            raise ValueError(f"row {name} has {len(marks)} entries, expected {len(cols)}")
        rows[name] = marks
    return cols, rows


def table8() -> dict[int, tuple[int, ...]]:
    """Simplicial region number -> reduced word."""
    rows = list(csv.reader(io.StringIO(fixture_text("correspondence"))))
    return {int(r[0]): parse_word(r[1]) for r in rows[1:] if r}


def cone_example() -> tuple:
    """``(word, P, Q)`` of the worked cone example."""
    word, P, Q, cur = None, [], [], None
    for ln in _lines("cone_example"):
        if ln.startswith("word:"):
            word = parse_word(ln.split(":", 1)[1])
        elif ln.strip() in ("P:", "Q:"):
            cur = P if ln.strip() == "P:" else Q
        else:
            cur.append(tuple(int(x) for x in ln.split()))
    return word, tuple(P), tuple(Q)


@dataclass(frozen=True)
class TraceState:
    name: str
    coords: tuple  # per coordinate, the letters a..j summed there
    region: int | None

    def at(self, coeffs) -> tuple:
        """Instantiate at cone coefficients ``coeffs`` (indexed by ``a..j``)."""
        return tuple(sum(coeffs[ord(ch) - ord("a")] for ch in c) for c in self.coords)


def trace_states() -> list[TraceState]:
    out = []
    for ln in _lines("trace"):
        name, rest = ln.split(":", 1)
        region = None
        if "@" in rest:
            rest, r = rest.split("@")
            region = int(r)
        coords = []
        for term in rest.split(","):
            term = term.strip()
            coords.append("" if term == "0" else term.replace("+", ""))
        out.append(TraceState(name.strip(), tuple(coords), region))
    return out
