"""Exact feasibility questions for homogeneous cones ``{x : f.x >= 0}``.

All tests reduce to one question: is there ``x`` with ``f.x > 0`` for every form
``f`` of a finite list? By Gordan's alternative, exactly one of these holds:

* some rational ``x`` has ``F x > 0``;
* some ``y >= 0``, ``y != 0`` has ``F^T y = 0``.

A floating-point LP proposes one side and the answer is accepted only after an
exact certificate check in rational arithmetic. When no certificate can be
rebuilt, sympy's rational simplex settles the question directly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np
import sympy
from scipy.optimize import linprog as float_linprog
from sympy.solvers.simplex import linprog as exact_linprog

__all__ = ["strictly_feasible", "interior_point", "irredundant", "primitive", "implies", "stats"]

stats = {"certified": 0, "exact": 0}


def primitive(form) -> tuple[int, ...]:
    """Scale a rational form to coprime integers, keeping its sign."""
    fr = [Fraction(x) for x in form]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def _exact(forms):
    # Free variables are split as x = xp - xm because sympy's simplex only
    # handles the default nonnegative bounds reliably. Variables: xp, xm, s.
    dim = len(forms[0])
    A = [[-x for x in f] + [x for x in f] + [1] for f in forms]
    A.append([0] * (2 * dim) + [1])
    value, sol = exact_linprog([0] * (2 * dim) + [-1], A, [0] * len(forms) + [1])
    if value < 0:
        x = [sympy.Rational(sol[t]) - sympy.Rational(sol[dim + t]) for t in range(dim)]
        return tuple(Fraction(int(v.p), int(v.q)) for v in x)
    return None


def _point_certificate(forms, x):
    for den in (1, 12, 360, 10**6):
        q = [Fraction(v).limit_denominator(den) for v in x]
        if all(sum(c * v for c, v in zip(f, q)) > 0 for f in forms):
            return tuple(q)
    return None


def _gordan_certificate(F) -> bool:
    """Look for ``y >= 0`` with ``sum(y) = 1`` and ``F^T y = 0``, checked exactly."""
    m, dim = F.shape
    A_eq = np.vstack([F.T, np.ones((1, m))])
    b_eq = np.zeros(dim + 1)
    b_eq[-1] = 1
    res = float_linprog(np.zeros(m), A_eq=A_eq, b_eq=b_eq, bounds=[(0, None)] * m, method="highs")
    if res.status != 0:
        return False
    support = [i for i in range(m) if res.x[i] > 1e-9]
    M = sympy.Matrix([[int(F[i, d]) for i in support] for d in range(dim)] + [[1] * len(support)])
    rhs = sympy.Matrix([0] * dim + [1])
    try:
        sol, params = M.gauss_jordan_solve(rhs)
    except ValueError:
        return False
    if params.shape[0]:
        sol = sol.subs({p: 0 for p in params})
    return all(v >= 0 for v in sol) and M * sol == rhs


@lru_cache(maxsize=500_000)
def _solve(forms: tuple) -> tuple | None:
    F = np.array(forms, dtype=float)
    m, dim = F.shape
    A = np.hstack([-F, np.ones((m, 1))])
    c = np.zeros(dim + 1)
    c[-1] = -1
    res = float_linprog(c, A_ub=A, b_ub=np.zeros(m), bounds=[(-1, 1)] * dim + [(0, 1)], method="highs")
    if res.status == 0:
        if -res.fun > 1e-9:
            cert = _point_certificate(forms, res.x[:dim])
            if cert is not None:
                stats["certified"] += 1
                return cert
        elif _gordan_certificate(F):
            stats["certified"] += 1
            return None
    stats["exact"] += 1
    return _exact(forms)


def interior_point(forms) -> tuple | None:
    """A rational point where every form is strictly positive, or ``None``."""
    forms = tuple(sorted(set(tuple(int(x) for x in f) for f in forms)))
    if not forms:
        return ()
    if any(not any(f) for f in forms):
        return None
    return _solve(forms)


def strictly_feasible(forms) -> bool:
    return interior_point(forms) is not None


def implies(forms, target) -> bool:
    """Whether ``f >= 0`` for all ``forms`` forces ``target >= 0``.

    Assumes the system has nonempty interior.
    """
    target = tuple(target)
    if primitive(target) in {primitive(f) for f in forms}:
        return True
    return not strictly_feasible(list(forms) + [tuple(-x for x in target)])


def irredundant(forms) -> list[tuple[int, ...]]:
    """Drop duplicates and forms implied by the others (system must have interior)."""
    uniq = []
    for f in forms:
        p = primitive(f)
        if p not in uniq:
            uniq.append(p)
    keep = []
    for idx, f in enumerate(uniq):
        others = uniq[:idx] + uniq[idx + 1:]
        if not implies(others, f):
            keep.append(f)
    return keep
