"""Command-line interface: ``canonparam <command> ...`` (or ``python -m canonparam``).

Exit codes: 0 success, 1 a verification or predicate failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import __version__

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _vector(text: str) -> tuple[int, ...]:
    parts = text.strip().strip("[]()").replace(",", " ").split()
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError(f"cannot parse vector {text!r}") from None


def _word(text: str):
    from .words import parse_word
    try:
        return parse_word(text)
    except ValueError:
        raise UsageError(f"cannot parse word {text!r}") from None


_FACTOR = re.compile(r"^F?(\d)(\d)(?:\^\(?(\d+)\)?)?$")


def _factors(tokens) -> list:
    """``12^2 23`` or ``F12^(2),F23`` -> ``[((1, 2), 2), ((2, 3), 1)]``."""
    out = []
    for tok in " ".join(tokens).replace(",", " ").split():
        m = _FACTOR.match(tok)
        if not m:
            raise UsageError(f"cannot parse factor {tok!r}; use pq or pq^e, e.g. 12^2")
        out.append(((int(m.group(1)), int(m.group(2))), int(m.group(3) or 1)))
    return out


def _emit(args, text: str):
    if not text.endswith("\n"):
        text += "\n"
    path = getattr(args, "emit", None)
    if path and path not in ("json", "csv"):
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt(args, default="text"):
    """Output format; ``--emit json`` / ``--emit csv`` select a format on stdout."""
    if getattr(args, "format", None):
        return args.format
    if getattr(args, "emit", None) in ("json", "csv"):
        return args.emit
    return default


def _rows(rows) -> str:
    return "\n".join(" ".join(f"{x:>3}" for x in r) for r in rows)


# --- commands ------------------------------------------------------------------


def cmd_words(args):
    from .catalog import export
    from .words import enumerate_w0_words, format_word
    words = sorted(enumerate_w0_words(args.rank))
    if args.count:
        _emit(args, str(len(words)))
    elif _fmt(args) in ("json", "csv"):
        _emit(args, export("words", _fmt(args), args.rank))
    else:
        _emit(args, "\n".join(format_word(w) for w in words))
    return EXIT_OK


def cmd_classes(args):
    from .catalog import export
    from .words import commutation_classes, format_word
    classes = commutation_classes(args.rank)
    if args.count:
        _emit(args, str(len(classes)))
    elif _fmt(args) in ("json", "csv"):
        _emit(args, export("classes", _fmt(args), args.rank))
    else:
        _emit(args, "\n".join(f"{i + 1:>3}  {format_word(c.representative)}  ({c.size} words)"
                              for i, c in enumerate(classes)))
    return EXIT_OK


def cmd_chambers(args):
    from .chambers import chamber_set_to_quiver, chamber_sets, format_set
    word = _word(args.word)
    d = chamber_sets(word, args.rank)
    if _fmt(args) == "json":
        _emit(args, json.dumps(d.to_json(), indent=1))
    else:
        _emit(args, "\n".join(f"({s},{t})  {format_set(c):<12} {chamber_set_to_quiver(c, args.rank)}"
                              for (s, t), c in d.chambers))
    return EXIT_OK


def cmd_cone(args):
    from .cones import cone_contains, cone_spec
    word = _word(args.word)
    if args.action == "contains":
        ok = cone_contains(word, _vector(args.vector), args.rank)
        _emit(args, "yes" if ok else "no")
        return EXIT_OK if ok else EXIT_FAIL
    spec = cone_spec(word, args.rank)
    names = [f"({lab[0]},{lab[1]}) {q}" if isinstance(lab, tuple) else f"simple {lab}"
             for lab, q in zip(spec.labels, spec.quivers)]
    if _fmt(args) == "json":
        _emit(args, json.dumps({"word": list(word), "rows": names, "P": [list(r) for r in spec.P],
                                "Q": [list(r) for r in spec.Q]}, indent=1))
        return EXIT_OK
    out = ["rows of P:"] + [f"  {nm}" for nm in names]
    out += ["P =", _rows(spec.P), "Q =", _rows(spec.Q)]
    out += ["spanning vectors (columns of Q):"]
    out += [f"  {nm:<14} {spec.column(lab)}" for nm, lab in zip(names, spec.labels)]
    _emit(args, "\n".join(out))
    return EXIT_OK


def cmd_plmap(args):
    from .catalog import export
    from .plmap import locate_region, region_by_number, transition_eval
    if args.action == "eval":
        _emit(args, ",".join(map(str, transition_eval(_word(args.word1), _word(args.word2), _vector(args.vector)))))
    elif args.action == "regions":
        fmt = _fmt(args, "json")
        if fmt in ("json", "csv"):
            _emit(args, export("regions", fmt))
        else:
            raise UsageError(f"unsupported format {fmt}")
    elif args.action == "locate":
        point = _vector(args.vector)
        if len(point) != 10:
            raise UsageError("a point has 10 coordinates")
        best, matches = locate_region(point)
        r = region_by_number(best)
        _emit(args, f"region {best} (all containing regions: {', '.join(map(str, matches))})\n"
                    f"image {','.join(map(str, r.apply(point)))}")
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(args.action)
    return EXIT_OK


def cmd_rect(args):
    from . import fixtures
    from .catalog import export
    from .chambers import PartialQuiver
    from .rectangles import correspondence, incidence_table, phi_plus, phi_plus_j, vector_vP, vector_vj
    from .words import format_word
    if args.action == "vector":
        label = args.label
        if label.isdigit():
            vec, roots = vector_vj(int(label)), phi_plus_j(int(label), 4)
        else:
            P = PartialQuiver.parse(label)
            vec, roots = vector_vP(P), phi_plus(P)
        _emit(args, f"{','.join(map(str, vec))}\nroots {' '.join(f'{p}{q}' for p, q in sorted(roots))}")
    elif args.action == "table6":
        _emit(args, export("vectors", "csv"))
    elif args.action == "table7":
        cols, ref = fixtures.table7()
        table = incidence_table(columns=cols)
        names = [n for n in ref if n in table] + [n for n in table if n not in ref]
        lines = ["wall," + ",".join(cols)] + [f"{n}," + ",".join(table[n]) for n in names]
        _emit(args, "\n".join(lines))
    elif args.action == "table8":
        rows = sorted((num, rep) for rep, num in correspondence().items())
        _emit(args, "region,word\n" + "\n".join(f'{num},"{format_word(rep)}"' for num, rep in rows))
    return EXIT_OK


def cmd_string(args):
    from .strings import string_to_target, string_trace
    word, a = _word(args.word), _vector(args.vector)
    if args.trace:
        steps = string_trace(word, a)
        lines = []
        for k, st in enumerate(steps, start=1):
            mark = "  <- locate" if st.locate else ""
            lines.append(f"c{k:<3} {st.state.form:<3} {st.note:<7} {','.join(map(str, st.state.coords))}{mark}")
        if args.target:
            lines.append("target " + ",".join(map(str, string_to_target(word, _word(args.target), a))))
        _emit(args, "\n".join(lines))
        return EXIT_OK
    if args.target:
        out = string_to_target(word, _word(args.target), a)
    else:
        from .strings import string_to_lusztig
        out = string_to_lusztig(word, a)
    _emit(args, ",".join(map(str, out)))
    return EXIT_OK


def _monomial(c, roots):
    parts = [f"F{p}{q}" + (f"^({e})" if e > 1 else "") for (p, q), e in zip(roots, c) if e]
    return " ".join(parts) or "1"


def cmd_pbw(args):
    from .pbw import l_order, straighten, tight_check
    if args.action == "straighten":
        factors = _factors(args.factors)
        exp = straighten(factors, args.rank, strategy=args.strategy)
        roots = l_order(args.rank)
        if _fmt(args) == "json":
            _emit(args, json.dumps([{"exponents": list(c), "coefficient": {str(e): x for e, x in sorted(p.coeffs.items())}}
                                    for c, p in exp.items()], indent=1))
        else:
            _emit(args, "\n".join(f"({str(p)}) {_monomial(c, roots)}" for c, p in exp.items()) or "0")
        return EXIT_OK
    word, a = _word(args.word), _vector(args.vector)
    r = tight_check(word, a)
    lines = [
        f"terms {r.terms}, all coefficients in Z[v]: {'yes' if r.in_Zv else 'no'}",
        f"unit terms unique: {'yes' if r.unique else 'no'}",
        f"witness {','.join(map(str, r.witness)) if r.witness else '-'} (coefficient {r.coefficient})",
        f"expected {','.join(map(str, r.expected))}",
        "tight: " + ("yes" if r.ok else "no"),
    ]
    _emit(args, "\n".join(lines))
    return EXIT_OK if r.ok else EXIT_FAIL


def cmd_verify(args):
    from .catalog import GROUPS, verify_all
    only = None
    if args.only:
        only = [g.strip() for g in args.only.split(",") if g.strip()]
        bad = [g for g in only if g not in GROUPS]
        if bad:
            raise UsageError(f"unknown check group(s) {bad}; choose from {', '.join(GROUPS)}")
    as_json = _fmt(args) == "json" or (args.emit and args.emit.endswith(".json"))

    def progress(c):
        if not as_json and not args.emit:
            print(f"{'PASS' if c.passed else 'FAIL'}  {c.group:<8} {c.name}"
                  + ("" if c.passed else f": expected {c.expected}, got {c.computed}"), flush=True)

    report = verify_all(only, seed=args.seed, progress=progress)
    if as_json:
        _emit(args, json.dumps(report.to_json(), indent=1))
    elif args.emit:
        _emit(args, "\n".join(report.lines()))
    print(f"{sum(c.passed for c in report.checks)}/{len(report.checks)} checks passed", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_export(args):
    from .catalog import export
    _emit(args, export(args.what, _fmt(args, "json"), args.rank))
    return EXIT_OK


# --- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    from .catalog import EXPORT_FORMATS, EXPORT_TARGETS, GROUPS

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank", type=int, default=argparse.SUPPRESS, help="rank n of type A_n (default 4)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for sampled certificates")
    common.add_argument("--emit", default=argparse.SUPPRESS, metavar="PATH",
                        help="write output to PATH (the values json/csv pick a stdout format)")

    p = argparse.ArgumentParser(prog="canonparam", parents=[common],
                                description="Reduced words, Lusztig cones, regions of linearity and tight monomials.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("words", parents=[common], help="reduced words of w0")
    s.add_argument("--count", action="store_true")
    s.add_argument("--format", choices=["text", "json", "csv"])
    s.set_defaults(func=cmd_words)

    s = sub.add_parser("classes", parents=[common], help="commutation classes of w0 words")
    s.add_argument("--count", action="store_true")
    s.add_argument("--format", choices=["text", "json", "csv"])
    s.set_defaults(func=cmd_classes)

    s = sub.add_parser("chambers", parents=[common], help="chamber sets and partial quivers of a word")
    s.add_argument("word")
    s.add_argument("--format", choices=["text", "json"])
    s.set_defaults(func=cmd_chambers)

    s = sub.add_parser("cone", parents=[common], help="Lusztig cone of a word")
    cs = s.add_subparsers(dest="action", required=True)
    c = cs.add_parser("show", parents=[common], help="P, Q and spanning vectors")
    c.add_argument("word")
    c.add_argument("--format", choices=["text", "json"])
    c = cs.add_parser("contains", parents=[common], help="exit 0 if the vector is in the cone, else 1")
    c.add_argument("word")
    c.add_argument("vector")
    s.set_defaults(func=cmd_cone)

    s = sub.add_parser("plmap", parents=[common], help="transition maps and regions of linearity (rank 4)")
    ps = s.add_subparsers(dest="action", required=True)
    c = ps.add_parser("eval", parents=[common], help="transition map between two reduced words")
    c.add_argument("word1")
    c.add_argument("word2")
    c.add_argument("vector")
    c = ps.add_parser("regions", parents=[common], help="all 144 regions")
    c.add_argument("--format", choices=["json", "csv"])
    c = ps.add_parser("locate", parents=[common], help="region containing a point")
    c.add_argument("vector")
    s.set_defaults(func=cmd_plmap)

    s = sub.add_parser("rect", parents=[common], help="rectangle-algorithm vectors and tables (rank 4)")
    rs = s.add_subparsers(dest="action", required=True)
    c = rs.add_parser("vector", parents=[common], help="vector of a partial quiver or of j in 1..4")
    c.add_argument("label")
    for name, text in (("table6", "all 26 vectors"), ("table7", "wall incidence"), ("table8", "class-region map")):
        rs.add_parser(name, parents=[common], help=text)
    s.set_defaults(func=cmd_rect)

    s = sub.add_parser("string", parents=[common], help="string parameters to PBW exponents")
    ss = s.add_subparsers(dest="action", required=True)
    c = ss.add_parser("eval", parents=[common])
    c.add_argument("word")
    c.add_argument("vector")
    c.add_argument("--target", help="reduced word for the output exponents (default j)")
    c.add_argument("--trace", action="store_true", help="list every intermediate vector")
    s.set_defaults(func=cmd_string)

    s = sub.add_parser("pbw", parents=[common], help="PBW straightening and tight monomials")
    bs = s.add_subparsers(dest="action", required=True)
    c = bs.add_parser("straighten", parents=[common], help="expand a product of divided powers, e.g. 12 23^2")
    c.add_argument("factors", nargs="+")
    c.add_argument("--strategy", choices=["insert", "first", "last"], default="insert")
    c.add_argument("--format", choices=["text", "json"])
    c = bs.add_parser("tight", parents=[common], help="check F_i1^(a1)...F_ik^(ak) against S_i^l(a)")
    c.add_argument("word")
    c.add_argument("vector")
    s.set_defaults(func=cmd_pbw)

    s = sub.add_parser("verify", parents=[common], help="run all reference checks")
    s.add_argument("--only", help=f"comma-separated groups: {', '.join(GROUPS)}")
    s.add_argument("--format", choices=["text", "json"])
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("export", parents=[common], help="serialize computed data")
    s.add_argument("what", choices=EXPORT_TARGETS)
    s.add_argument("--format", choices=EXPORT_FORMATS)
    s.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for name, default in (("rank", 4), ("seed", 0), ("emit", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
