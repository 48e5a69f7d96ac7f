"""Root vectors of ``U^-`` in type A and straightening of divided-power monomials.

Root vectors ``F_pq`` (``1 <= p < q <= n+1``, weight ``-(alpha_p + ... + alpha_{q-1})``)
are ordered by the reduced word ``l = (n, n-1, n, n-2, n-1, n, ..., 1, 2, ..., n)``.
A monomial ``F_g1^(f1) F_g2^(f2) ...`` is rewritten into l-ordered monomials with
six commutation rules for an out-of-order pair ``F_pq^(M) F_rs^(N)``:

* ``a``: ``q < r``: the factors commute,
* ``c``: ``p = r < q < s`` or ``p < r < q = s``: swap with ``v^(-MN)``,
* ``d``: ``q = r``: ``sum_t v^((M-t)(N-t)) F_rs^(N-t) F_ps^(t) F_pq^(M-t)``,
* ``e``: ``p < r < s < q``: the factors commute,
* ``f``: ``p < r < q < s``:
  ``sum_t v^(-t(t-1)/2) (v^-1 - v)^t [t]! F_rq^(t) F_rs^(N-t) F_pq^(M-t) F_ps^(t)``,

together with ``F_g^(a) F_g^(b) = [a+b choose a] F_g^(a+b)``. Quantum integers
are balanced: ``[a] = v^(a-1) + v^(a-3) + ... + v^(1-a)``.

>>> l_order(2)
((2, 3), (1, 3), (1, 2))
>>> {c: str(p) for c, p in straighten([((1, 2), 1), ((2, 3), 1)], 2).items()}
{(0, 1, 0): '1', (1, 0, 1): 'v'}
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from functools import lru_cache

from .words import RankError, Word

__all__ = [
    "LaurentPoly",
    "quantum_int",
    "quantum_factorial",
    "quantum_binomial",
    "l_word",
    "l_order",
    "root_position",
    "relation_case",
    "relation_terms",
    "BudgetExceeded",
    "Straightener",
    "straighten",
    "straighten_unit",
    "root_vector_expand",
    "TightResult",
    "tight_check",
]


# --- Laurent polynomials -----------------------------------------------------
# Internally a polynomial is a plain dict {exponent: nonzero int}; LaurentPoly
# wraps one for the public interface.


def _padd(acc: dict, poly: dict, scale: dict | None = None):
    """``acc += poly * scale`` in place (``scale`` defaults to 1)."""
    if scale is None:
        for e, c in poly.items():
            x = acc.get(e, 0) + c
            if x:
                acc[e] = x
            else:
                acc.pop(e, None)
        return
    for e1, c1 in scale.items():
        for e2, c2 in poly.items():
            e = e1 + e2
            x = acc.get(e, 0) + c1 * c2
            if x:
                acc[e] = x
            else:
                acc.pop(e, None)


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    _padd(out, a, b)
    return out


class LaurentPoly:
    """An element of ``Z[v, v^-1]`` with a canonical (zero-free) coefficient map."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self._c = {int(e): int(c) for e, c in dict(coeffs).items() if c}

    @classmethod
    def v(cls, k: int = 1, c: int = 1) -> LaurentPoly:
        return cls({k: c})

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        _padd(out, other._c)
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(_pmul(self._c, other._c))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        out = LaurentPoly(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    def bar(self) -> LaurentPoly:
        """The involution ``v -> v^-1``."""
        return LaurentPoly({-e: c for e, c in self._c.items()})

    def at(self, x):
        return sum(c * x**e for e, c in self._c.items())

    def min_degree(self):
        return min(self._c) if self._c else None

    def max_degree(self):
        return max(self._c) if self._c else None

    def in_Zv(self) -> bool:
        """No negative powers of ``v``."""
        return all(e >= 0 for e in self._c)

    def is_unit_mod_v(self) -> bool:
        """Lies in ``1 + vZ[v]``."""
        return self.in_Zv() and self._c.get(0, 0) == 1

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c):
            c = self._c[e]
            mono = "" if e == 0 else ("v" if e == 1 else f"v^{e}")
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}{mono}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


@lru_cache(maxsize=None)
def _qint(a: int) -> dict:
    return {e: 1 for e in range(-(a - 1), a, 2)} if a > 0 else {}


@lru_cache(maxsize=None)
def _qfact(a: int) -> dict:
    out = {0: 1}
    for k in range(2, a + 1):
        out = _pmul(out, _qint(k))
    return out


@lru_cache(maxsize=None)
def _qbinom(m: int, t: int) -> dict:
    if t < 0 or t > m:
        return {}
    if t == 0 or t == m:
        return {0: 1}
    # [m, t] = v^(-t) [m-1, t] + v^(m-t) [m-1, t-1]
    out: dict = {}
    _padd(out, _qbinom(m - 1, t), {-t: 1})
    _padd(out, _qbinom(m - 1, t - 1), {m - t: 1})
    return out


def _check_nonneg(*xs):
    for x in xs:
        if not isinstance(x, int) or x < 0:
            raise ValueError(f"expected a nonnegative integer, got {x!r}")


def quantum_int(a: int) -> LaurentPoly:
    _check_nonneg(a)
    return LaurentPoly(_qint(a))


def quantum_factorial(a: int) -> LaurentPoly:
    _check_nonneg(a)
    return LaurentPoly(_qfact(a))


def quantum_binomial(m: int, t: int) -> LaurentPoly:
    _check_nonneg(m, t)
    if t > m:
        raise ValueError(f"binomial ({m} choose {t}) needs t <= m")
    return LaurentPoly(_qbinom(m, t))


# --- root vectors ------------------------------------------------------------


PBW_MAX_RANK = 4  # the relation set is only validated up to A4


def _check_rank(n):
    if not isinstance(n, int) or not 1 <= n <= PBW_MAX_RANK:
        raise RankError(f"rank must be between 1 and {PBW_MAX_RANK}, got {n}")


def l_word(n: int) -> Word:
    """``(n, n-1, n, n-2, n-1, n, ..., 1, 2, ..., n)``."""
    _check_rank(n)
    return tuple(i for m in range(n, 0, -1) for i in range(m, n + 1))


@lru_cache(maxsize=None)
def l_order(n: int) -> tuple:
    """Positive roots ``(p, q)`` in the order ``s_l1 ... s_l(t-1) (alpha_lt)``."""
    word = l_word(n)
    out = []
    for t, lt in enumerate(word):
        i, j = lt, lt + 1  # e_i - e_j
        for k in reversed(word[:t]):
            i = k + 1 if i == k else (k if i == k + 1 else i)
            j = k + 1 if j == k else (k if j == k + 1 else j)
        if i > j:
            raise AssertionError("l is not reduced")
        out.append((i, j))
    return tuple(out)


def root_position(root, n: int) -> int:
    try:
        return l_order(n).index(tuple(root))
    except ValueError:
        raise ValueError(f"{root} is not a positive root for rank {n}") from None


def relation_case(left, right) -> str:
    """Which rule rewrites ``F_left F_right`` when ``left`` comes after ``right``.

    The preconditions are checked literally and exactly one must hold.
    """
    (p, q), (r, s) = left, right
    cases = {
        "a": q < r or r < p < q < s,
        "b": r < p < q == s,
        "c": p == r < q < s or p < r < q == s,
        "d": q == r,
        "e": s < p or p < r < s < q,
        "f": p < r < q < s,
    }
    hits = [k for k, ok in cases.items() if ok]
    if len(hits) != 1:
        raise AssertionError(f"no unique relation for F{p}{q} F{r}{s}: {hits}")
    return hits[0]


@lru_cache(maxsize=None)
def _relation(left, M, right, N):
    """``F_left^(M) F_right^(N)`` as ``[(coefficient dict, ((root, exp), ...))]``."""
    (p, q), (r, s) = left, right
    kind = relation_case(left, right)
    terms = []

    def add(coef, factors):
        terms.append((coef, tuple((g, e) for g, e in factors if e)))

    if kind in ("a", "e"):
        add({0: 1}, [(right, N), (left, M)])
    elif kind == "b":
        add({M * N: 1}, [(right, N), (left, M)])
    elif kind == "c":
        add({-M * N: 1}, [(right, N), (left, M)])
    elif kind == "d":
        for t in range(min(M, N) + 1):
            add({(M - t) * (N - t): 1}, [(right, N - t), ((p, s), t), (left, M - t)])
    else:
        for t in range(min(M, N) + 1):
            coef = {-t * (t - 1) // 2: 1}
            for _ in range(t):
                coef = _pmul(coef, {-1: 1, 1: -1})
            coef = _pmul(coef, _qfact(t))
            add(coef, [((r, q), t), (right, N - t), (left, M - t), ((p, s), t)])
    return tuple(terms)


def relation_terms(left, M, right, N) -> list:
    """Public form of a single rule: ``[(LaurentPoly, [(root, exp), ...]), ...]``."""
    return [(LaurentPoly(c), list(f)) for c, f in _relation(tuple(left), M, tuple(right), N)]


# --- straightening -----------------------------------------------------------


class BudgetExceeded(RuntimeError):
    pass


def _wrap(expansion: dict) -> dict:
    return {c: LaurentPoly(p) for c, p in sorted(expansion.items())}


def _normalize(mono, pos):
    """Drop zero exponents and merge adjacent equal roots; returns (coef, mono)."""
    coef = {0: 1}
    out = []
    for g, e in mono:
        if not e:
            continue
        if out and out[-1][0] == g:
            a = out[-1][1]
            coef = _pmul(coef, _qbinom(a + e, e))
            out[-1] = (g, a + e)
        else:
            out.append((g, e))
    return coef, tuple(out)


def _to_vector(mono, pos, k):
    c = [0] * k
    for g, e in mono:
        c[pos[g]] += e
    return tuple(c)


@dataclass
class Straightener:
    """Rewriting engine for one rank with a shared memo and a step budget."""

    n: int
    budget: int = 10**7
    steps: int = 0
    _memo: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        _check_rank(self.n)
        self.roots = l_order(self.n)
        self.pos = {g: t for t, g in enumerate(self.roots)}
        self.k = len(self.roots)

    def _tick(self, what):
        self.steps += 1
        if self.steps > self.budget:
            raise BudgetExceeded(f"step budget {self.budget} exceeded at {what}")

    def reset(self):
        self.steps = 0

    def clear(self):
        self._memo.clear()

    # Memoized insertion: F_g^(f) times an ordered monomial c.
    def insert(self, g: int, f: int, c: tuple) -> dict:
        key = (g, f, c)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        m = next((t for t, x in enumerate(c) if x), None)
        if m is None or g < m:
            d = list(c)
            d[g] += f
            out = {tuple(d): {0: 1}}
        elif g == m:
            d = list(c)
            d[g] += f
            out = {tuple(d): _qbinom(c[m] + f, f)}
        else:
            self._tick(f"F{self.roots[g]}^({f}) F{self.roots[m]}^({c[m]})")
            rest = list(c)
            rest[m] = 0
            rest = tuple(rest)
            out = {}
            for coef, factors in _relation(self.roots[g], f, self.roots[m], c[m]):
                cur = {rest: {0: 1}}
                for root, e in reversed(factors):
                    nxt: dict = {}
                    for d, lam in cur.items():
                        for d2, mu in self.insert(self.pos[root], e, d).items():
                            acc = nxt.setdefault(d2, {})
                            _padd(acc, mu, lam)
                            if not acc:
                                del nxt[d2]
                    cur = nxt
                for d, lam in cur.items():
                    acc = out.setdefault(d, {})
                    _padd(acc, lam, coef)
                    if not acc:
                        del out[d]
        self._memo[key] = out
        return out

    def multiply(self, factors) -> dict:
        """Expansion of a product of ``(root, exponent)`` factors, rightmost first."""
        cur = {(0,) * self.k: {0: 1}}
        for root, e in reversed(list(factors)):
            if e < 0:
                raise ValueError("exponents must be nonnegative")
            if not e:
                continue
            g = self.pos[tuple(root)]
            nxt: dict = {}
            for d, lam in cur.items():
                for d2, mu in self.insert(g, e, d).items():
                    acc = nxt.setdefault(d2, {})
                    _padd(acc, mu, lam)
                    if not acc:
                        del nxt[d2]
            cur = nxt
        return cur

    # Literal rewriting of whole monomials at one adjacent pair per step.
    def rewrite(self, factors, strategy: str = "first") -> dict:
        if strategy not in ("first", "last"):
            raise ValueError(f"unknown strategy {strategy!r}")
        pos = self.pos
        coef, mono = _normalize([(tuple(g), e) for g, e in factors], pos)
        work = {mono: coef}
        done: dict = {}
        while work:
            mono, lam = work.popitem()
            pairs = [i for i in range(len(mono) - 1) if pos[mono[i][0]] > pos[mono[i + 1][0]]]
            if not pairs:
                vec = _to_vector(mono, pos, self.k)
                acc = done.setdefault(vec, {})
                _padd(acc, lam)
                if not acc:
                    del done[vec]
                continue
            i = pairs[0] if strategy == "first" else pairs[-1]
            (g1, M), (g2, N) = mono[i], mono[i + 1]
            self._tick(f"F{g1}^({M}) F{g2}^({N}) in {mono}")
            for c, repl in _relation(g1, M, g2, N):
                c2, new = _normalize(list(mono[:i]) + list(repl) + list(mono[i + 2:]), pos)
                acc = work.setdefault(new, {})
                _padd(acc, lam, _pmul(c, c2))
                if not acc:
                    del work[new]
        return done


def _parse_factors(factors):
    out = []
    for root, e in factors:
        root = tuple(root)
        if len(root) != 2 or not root[0] < root[1]:
            raise ValueError(f"bad root index {root}")
        if e < 0:
            raise ValueError("exponents must be nonnegative")
        out.append((root, e))
    return out


def straighten(factors, n: int, strategy: str = "insert", budget: int = 10**7) -> dict:
    """Expansion ``{exponent vector in l-order: LaurentPoly}`` of a product of divided powers.

    ``strategy`` is ``"insert"`` (memoized insertion into an ordered tail),
    ``"first"`` or ``"last"`` (rewrite the first or last out-of-order adjacent pair).
    """
    factors = _parse_factors(factors)
    eng = Straightener(n, budget)
    for root, _ in factors:
        root_position(root, n)
    if strategy == "insert":
        return _wrap(eng.multiply(factors))
    return _wrap(eng.rewrite(factors, strategy))


def straighten_unit(roots, n: int, budget: int = 10**7) -> dict:
    """Straighten a product of undivided root vectors using only exponent-1 rules.

    An ordered product with ``c_t`` equal factors ``F_t`` equals ``prod [c_t]!`` times
    the divided-power monomial, so the result is directly comparable to ``straighten``
    after scaling by the factorials of the input exponents.
    """
    eng = Straightener(n, budget)
    pos = eng.pos
    work = {tuple(tuple(g) for g in roots): {0: 1}}
    done: dict = {}
    while work:
        mono, lam = work.popitem()
        i = next((t for t in range(len(mono) - 1) if pos[mono[t]] > pos[mono[t + 1]]), None)
        if i is None:
            vec = [0] * eng.k
            for g in mono:
                vec[pos[g]] += 1
            scale = {0: 1}
            for x in vec:
                scale = _pmul(scale, _qfact(x))
            acc = done.setdefault(tuple(vec), {})
            _padd(acc, lam, scale)
            if not acc:
                del done[tuple(vec)]
            continue
        eng._tick(mono)
        for c, repl in _relation(mono[i], 1, mono[i + 1], 1):
            new = mono[:i] + tuple(g for g, _ in repl) + mono[i + 2:]
            acc = work.setdefault(new, {})
            _padd(acc, lam, c)
            if not acc:
                del work[new]
    return _wrap(done)


def root_vector_expand(p: int, q: int) -> str:
    """``F_pq`` as nested q-brackets ``F_p F_(p+1,q) - v F_(p+1,q) F_p`` of simple generators."""
    if not (isinstance(p, int) and isinstance(q, int) and 1 <= p < q):
        raise ValueError(f"bad root index ({p}, {q})")
    if q == p + 1:
        return f"F{p}"
    inner = root_vector_expand(p + 1, q)
    if q > p + 2:
        inner = f"({inner})"
    return f"F{p}{inner} - v{inner}F{p}"


# --- tight monomials ---------------------------------------------------------


@dataclass(frozen=True)
class TightResult:
    unique: bool
    witness: tuple | None
    coefficient: LaurentPoly | None
    expected: tuple
    in_Zv: bool
    terms: int
    steps: int

    @property
    def ok(self) -> bool:
        return self.unique and self.in_Zv and self.witness == self.expected


_engines: dict = {}


def _engine(n, budget):
    eng = _engines.get(n)
    if eng is None or eng.budget != budget:
        eng = _engines[n] = Straightener(n, budget)
    if len(eng._memo) > 2_000_000:
        eng.clear()
    eng.reset()
    return eng


def tight_check(word, a, budget: int = 10**7, check_cone: bool = True) -> TightResult:
    """Straighten ``F_i1^(a1) ... F_ik^(ak)`` and compare its unique unit term with ``S_i^l(a)``."""
    from .cones import cone_contains
    from .strings import string_to_target
    from .words import is_w0_word

    word, a = tuple(word), tuple(a)
    n = next((m for m in range(1, PBW_MAX_RANK + 1) if m * (m + 1) // 2 == len(word)), None)
    if n is None or not is_w0_word(word, n):
        raise ValueError("word is not a reduced word of w0")
    if len(a) != len(word) or any(x < 0 for x in a):
        raise ValueError("a must be a nonnegative vector of the word's length")
    if check_cone and not cone_contains(word, a, n):
        raise ValueError("a is not in the cone of the word")
    eng = _engine(n, budget)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))
    exp = eng.multiply([((i, i + 1), x) for i, x in zip(word, a)])
    polys = {c: LaurentPoly(p) for c, p in exp.items()}
    in_Zv = all(p.in_Zv() for p in polys.values())
    units = sorted(c for c, p in polys.items() if p.is_unit_mod_v())
    expected = tuple(string_to_target(word, l_word(n), a))
    witness = units[0] if len(units) == 1 else None
    return TightResult(
        unique=len(units) == 1,
        witness=witness,
        coefficient=polys[witness] if witness is not None else None,
        expected=expected,
        in_Zv=in_Zv,
        terms=len(polys),
        steps=eng.steps,
    )
