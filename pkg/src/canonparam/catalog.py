"""End-to-end verification against the shipped reference tables, and data export."""

from __future__ import annotations

import csv
import io
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass, field

from . import fixtures
from .chambers import chamber_family, l_map, partial_quivers
from .cones import cone_spec
from .plmap import (
    enumerate_leaves,
    enumerate_regions,
    parse_form,
    region_adjacency_graph,
    region_by_number,
    region_involution,
    locate_region,
    walls_adjacent,
)
from .rectangles import correspondence, incidence_table, rectangle_vectors, wall_universe
from .words import class_graph, class_of, commutation_classes, enumerate_w0_words, format_word

__all__ = ["CheckResult", "VerifyReport", "GROUPS", "verify_all", "EXPORT_TARGETS", "EXPORT_FORMATS", "export"]


@dataclass
class CheckResult:
    name: str
    group: str
    expected: object
    computed: object
    passed: bool
    seconds: float = 0.0


@dataclass
class VerifyReport:
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {"passed": self.passed, "checks": [asdict(c) for c in self.checks]}

    def lines(self) -> list[str]:
        return [f"{'PASS' if c.passed else 'FAIL'}  {c.group:<8} {c.name}: expected {c.expected}, got {c.computed}"
                for c in self.checks]


def _cmp(expected, computed):
    return expected, computed, expected == computed


def _mismatches(expected: dict, computed: dict, limit=3):
    keys = sorted(set(expected) | set(computed), key=str)
    bad = [k for k in keys if expected.get(k) != computed.get(k)]
    shown = {str(k): {"fixture": expected.get(k), "computed": computed.get(k)} for k in bad[:limit]}
    return len(bad), shown


def _table_check(expected, computed):
    nbad, shown = _mismatches(expected, computed)
    return f"{len(expected)} rows", (f"{len(computed)} rows" if not nbad else f"{nbad} mismatches {shown}"), nbad == 0


# --- checks ------------------------------------------------------------------


def _check_words():
    return _cmp(768, len(enumerate_w0_words(4)))


def _check_classes():
    return _cmp(62, len(commutation_classes(4)))


def _check_chamber_bijection():
    n = 4
    sets = set()
    for c in commutation_classes(n):
        sets |= chamber_family(c.representative, n)
    images = [l_map(P, n) for P in partial_quivers(n)]
    ok = len(set(images)) == len(images) and set(images) == sets
    return "26 quivers <-> 26 chamber sets", f"{len(partial_quivers(n))} quivers, {len(sets)} chamber sets", ok


def _check_cone_example():
    word, P, Q = fixtures.cone_example()
    spec = cone_spec(word, 4)
    ok = spec.P == P and spec.Q == Q
    return "P and Q of the worked example", "match" if ok else "differ", ok


def _check_pq_identity():
    bad = []
    for c in commutation_classes(4):
        s = cone_spec(c.representative, 4)
        k = len(s.P)
        ident = all(sum(s.P[r][t] * s.Q[t][col] for t in range(k)) == (r == col)
                    for r in range(k) for col in range(k))
        if not ident or any(x < 0 for row in s.Q for x in row):
            bad.append(format_word(c.representative))
    return "62 words with PQ = I, Q >= 0", f"{62 - len(bad)} ok" + (f", bad {bad[:3]}" if bad else ""), not bad


def _check_leaves():
    return _cmp(204, len(enumerate_leaves()))


def _check_regions():
    return _cmp(144, len(enumerate_regions()))


def _check_census():
    got = dict(sorted(Counter(len(r.inequalities) for r in enumerate_regions()).items()))
    return _cmp({6: 62, 7: 70, 8: 10, 11: 2}, got)


def _check_table3():
    expected = {num: (frozenset(l), frozenset(r)) for num, (l, r) in fixtures.table3().items()}
    computed = {}
    for r in enumerate_regions():
        left, right = r.named()
        computed[r.number if r.number is not None else f"unmatched {r.key}"] = (frozenset(left), frozenset(right))
    exp = {k: (sorted(v[0]), sorted(v[1])) for k, v in expected.items()}
    got = {k: (sorted(v[0]), sorted(v[1])) for k, v in computed.items()}
    return _table_check(exp, got)


def _check_table5():
    exp = {num: (sorted(l), sorted(r), c) for num, (l, r, c) in fixtures.table5().items()}
    got = {}
    for r in enumerate_regions():
        if r.simplicial:
            left, right, coords = r.named_walls()
            got[r.number] = (sorted(left), sorted(right), coords)
    return _table_check(exp, got)


def _check_table6():
    return _table_check(fixtures.table6(), rectangle_vectors())


def _check_table7():
    cols, rows = fixtures.table7()
    names = [name for _, name in wall_universe()]
    got = incidence_table(rows=names, columns=cols)
    return _table_check(rows, got)


def _check_table8():
    exp = {num: format_word(class_of(w, 4).representative) for num, w in fixtures.table8().items()}
    got = {num: format_word(rep) for rep, num in correspondence().items()}
    return _table_check(exp, got)


def _check_isomorphism():
    corr = correspondence()
    mapped = {tuple(sorted((corr[u], corr[v]))) for u, v in class_graph(4).edges}
    g = region_adjacency_graph()
    ok = len(set(corr.values())) == 62 and mapped == set(g.edges)
    return f"{len(g.edges)} edges matched", f"{len(mapped & set(g.edges))} of {len(mapped)} class edges", ok


def _check_involution():
    g = region_adjacency_graph()
    image = {tuple(sorted((region_involution(u), region_involution(v)))) for u, v in g.edges}
    return "automorphism", "automorphism" if image == set(g.edges) else "not preserved", image == set(g.edges)


def _check_edge_28_41():
    hit = walls_adjacent(region_by_number(28).walls, region_by_number(41).walls)
    alpha_c = parse_form("C")
    ok = hit is not None and hit[0] in (alpha_c, tuple(-x for x in alpha_c))
    return "adjacent across C", ("adjacent across C" if ok else repr(hit and hit[0])), ok


def _trace_run(coeffs):
    from .strings import string_trace
    word, _, Q = fixtures.cone_example()
    a = tuple(sum(Q[r][c] * coeffs[c] for c in range(len(coeffs))) for r in range(len(Q)))
    return string_trace(word, a)


def _check_trace_states():
    states = fixtures.trace_states()
    unit = [1] * 10
    steps = _trace_run(unit)
    exp = {s.name: s.at(unit) for s in states}
    got = {s.name: t.state.coords for s, t in zip(states, steps)}
    if len(steps) != len(states):
        got["length"] = len(steps)
    return _table_check(exp, got)


def _check_trace_regions():
    states = fixtures.trace_states()
    steps = _trace_run([1] * 10)
    exp = [s.region for s in states if s.region is not None]
    got = []
    for s, t in zip(states, steps):
        if t.locate:
            _, matches = locate_region(t.state.coords)
            got.append(s.region if s.region in matches else matches)
    return _cmp(exp, got)


def _check_trace_final():
    return _cmp((3, 1, 3, 3, 1, 2, 1, 1, 2, 7), _trace_run([1] * 10)[-1].state.coords)


def _check_linearity():
    from .strings import linear_matrix_on_cone
    bad = []
    for c in commutation_classes(4):
        try:
            linear_matrix_on_cone(c.representative, samples=100, seed=_seed)
        except AssertionError:
            bad.append(format_word(c.representative))
    return "62 classes linear", f"{62 - len(bad)} linear" + (f", bad {bad[:3]}" if bad else ""), not bad


def _check_tight():
    from .pbw import tight_check
    bad = []
    for c in commutation_classes(4):
        s = cone_spec(c.representative, 4)
        a = tuple(sum(row) for row in s.Q)
        r = tight_check(c.representative, a)
        if not r.ok:
            bad.append(format_word(c.representative))
    return "62 tight monomials", f"{62 - len(bad)} tight" + (f", bad {bad[:3]}" if bad else ""), not bad


_seed = 0

CHECKS = [
    ("words", "reduced words of w0 (rank 4)", _check_words),
    ("words", "commutation classes (rank 4)", _check_classes),
    ("chambers", "chamber sets vs partial quivers", _check_chamber_bijection),
    ("cones", "worked cone matrices", _check_cone_example),
    ("cones", "P Q = I over all classes", _check_pq_identity),
    ("regions", "consistent sign leaves", _check_leaves),
    ("regions", "regions of linearity", _check_regions),
    ("regions", "inequality census", _check_census),
    ("tables", "region inequalities (table3)", _check_table3),
    ("tables", "simplicial walls (table5)", _check_table5),
    ("tables", "rectangle vectors (table6)", _check_table6),
    ("tables", "wall incidence (table7)", _check_table7),
    ("tables", "class to region (table8)", _check_table8),
    ("graph", "class graph isomorphic to region graph", _check_isomorphism),
    ("graph", "involution m -> 63 - m", _check_involution),
    ("graph", "regions 28 and 41 share wall C", _check_edge_28_41),
    ("trace", "worked trace states", _check_trace_states),
    ("trace", "worked trace regions", _check_trace_regions),
    ("trace", "worked trace result", _check_trace_final),
    ("trace", "string map linear on every cone", _check_linearity),
    ("tight", "tight monomials at unit coefficients", _check_tight),
]

GROUPS = tuple(dict.fromkeys(g for g, _, _ in CHECKS))


def verify_all(only=None, seed: int = 0, progress=None) -> VerifyReport:
    """Run the checks in a fixed order; ``only`` restricts to some groups."""
    global _seed
    if only is not None:
        only = set(only)
        unknown = only - set(GROUPS)
        if unknown:
            raise ValueError(f"unknown check groups {sorted(unknown)}; choose from {list(GROUPS)}")
    _seed = seed
    report = VerifyReport()
    for group, name, fn in CHECKS:
        if only is not None and group not in only:
            continue
        t = time.perf_counter()
        try:
            expected, computed, ok = fn()
        except Exception as exc:  # a crashing check is a failing check
            expected, computed, ok = "no error", f"{type(exc).__name__}: {exc}", False
        res = CheckResult(name, group, _plain(expected), _plain(computed), bool(ok), round(time.perf_counter() - t, 3))
        report.checks.append(res)
        if progress is not None:
            progress(res)
    return report


def _plain(x):
    """JSON-friendly copy of a check value."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_plain(v) for v in x]
    return x


# --- export ------------------------------------------------------------------

EXPORT_TARGETS = ("words", "classes", "regions", "walls", "vectors", "incidence", "correspondence", "graph")
EXPORT_FORMATS = ("json", "csv", "dot")


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _records(what, n):
    """``(header, rows, json_value)`` for a table-like target."""
    if what == "words":
        words = sorted(enumerate_w0_words(n))
        return ["word"], [[format_word(w)] for w in words], [format_word(w) for w in words]
    if what == "classes":
        corr = correspondence() if n == 4 else {}
        rows = [[idx + 1, format_word(c.representative), c.size, corr.get(c.representative, "")]
                for idx, c in enumerate(commutation_classes(n))]
        header = ["id", "representative", "size", "region"]
        return header, rows, [dict(zip(header, r)) for r in rows]
    _need_rank4(what, n)
    if what == "regions":
        regs = enumerate_regions()
        rows = [[r.number, int(r.simplicial), len(r.inequalities), " ".join(r.named()[0]), " ".join(r.named()[1])]
                for r in regs]
        return ["region", "simplicial", "inequalities", "le0", "ge0"], rows, [r.to_json() for r in regs]
    if what == "walls":
        rows = []
        for r in enumerate_regions():
            if r.simplicial:
                left, right, coords = r.named_walls()
                rows.append([r.number, " ".join(left), " ".join(right), coords])
        header = ["region", "le0", "ge0", "coordinate_walls"]
        return header, rows, [dict(zip(header, r)) for r in rows]
    if what == "vectors":
        vecs = rectangle_vectors()
        rows = [[label] + list(v) for label, v in vecs.items()]
        return ["label"] + list("abcdefghij"), rows, {k: list(v) for k, v in vecs.items()}
    if what == "incidence":
        cols = list(rectangle_vectors())
        table = incidence_table(columns=cols)
        rows = [[name] + list(marks) for name, marks in table.items()]
        return ["wall"] + cols, rows, {"columns": cols, "rows": table}
    if what == "correspondence":
        pairs = sorted((num, rep) for rep, num in correspondence().items())
        rows = [[num, format_word(rep)] for num, rep in pairs]
        return ["region", "word"], rows, [{"region": a, "word": b} for a, b in rows]
    raise ValueError(what)


def _need_rank4(what, n):
    if n != 4:
        raise ValueError(f"export of {what} is only available for rank 4")


def export(what: str, fmt: str, n: int = 4) -> str:
    """Serialize one target deterministically."""
    if what not in EXPORT_TARGETS:
        raise ValueError(f"unknown export target {what!r}; choose from {list(EXPORT_TARGETS)}")
    if fmt not in EXPORT_FORMATS:
        raise ValueError(f"unknown format {fmt!r}; choose from {list(EXPORT_FORMATS)}")
    if what == "graph":
        _need_rank4(what, n)
        g = region_adjacency_graph()
        nodes = sorted(g.vertices)
        edges = sorted(g.edges)
        if fmt == "json":
            return json.dumps({"nodes": nodes, "edges": [list(e) for e in edges]}, indent=1) + "\n"
        if fmt == "csv":
            return _csv(["source", "target"], [list(e) for e in edges])
        lines = ["graph regions {"] + [f"  {v};" for v in nodes] + [f"  {u} -- {v};" for u, v in edges] + ["}"]
        return "\n".join(lines) + "\n"
    if fmt == "dot":
        raise ValueError("dot output is only available for the graph target")
    header, rows, value = _records(what, n)
    if fmt == "csv":
        return _csv(header, rows)
    return json.dumps(value, indent=1) + "\n"
