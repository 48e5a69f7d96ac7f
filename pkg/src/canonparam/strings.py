"""From string parameters to PBW exponents via the adapted words.

In the words ``j`` (odd letters first) and ``j'`` (even letters first) each
letter of the leading block can be moved to the front, so modulo ``v L`` the
operator ``F~_i`` just adds 1 to the exponent of the first occurrence of ``i``:

* odd ``i`` acts on exponents for ``j``,
* even ``i`` acts on exponents for ``j'``.

Processing ``a_k, ..., a_1`` from the right and switching between ``j`` and
``j'`` only when the next generator needs it computes the map ``S_i^j``.

>>> string_to_lusztig((3, 2, 1, 4, 3, 2, 3, 4, 1, 3), (1, 5, 8, 5, 8, 10, 1, 3, 1, 1))
(3, 1, 3, 3, 1, 2, 1, 1, 2, 7)
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import sympy

from .cones import cone_spec
from .plmap import R, adapted_words, tau, transition_eval
from .words import Word, format_word, is_w0_word

__all__ = [
    "ParamForm",
    "TraceStep",
    "to_other_form",
    "apply_Ftilde",
    "string_trace",
    "string_to_lusztig",
    "string_to_target",
    "LinearCertificate",
    "linear_matrix_on_cone",
]


@dataclass(frozen=True)
class ParamForm:
    """Exponents for ``j`` (``form == "j"``) or for ``j'`` (``form == "j'"``)."""

    form: str
    coords: tuple


@dataclass(frozen=True)
class TraceStep:
    """One intermediate vector; ``locate`` marks the vector whose region decides ``R``."""

    state: ParamForm
    note: str
    locate: bool = False


def _rank(k):
    n = int(round(((8 * k + 1) ** 0.5 - 1) / 2))
    if n * (n + 1) // 2 != k:
        raise ValueError(f"length {k} is not a w0 length")
    return n


def _convert_steps(state: ParamForm) -> list[TraceStep]:
    n = _rank(len(state.coords))
    j, jp = adapted_words(n)
    if state.form == "j":
        if n == 4:
            out = R(state.coords)
        else:
            out = transition_eval(j, jp, state.coords)
        return [TraceStep(ParamForm("j'", out), "R")]
    if n == 4:
        c1 = tau(state.coords)
        c2 = R(c1)
        return [TraceStep(ParamForm("j", c1), "tau", True), TraceStep(ParamForm("j'", c2), "R"),
                TraceStep(ParamForm("j", tau(c2)), "tau")]
    return [TraceStep(ParamForm("j", transition_eval(jp, j, state.coords)), "R^-1")]


def to_other_form(state: ParamForm) -> ParamForm:
    return _convert_steps(state)[-1].state


def _slot(i: int, n: int) -> tuple[str, int]:
    j, jp = adapted_words(n)
    word, form = (j, "j") if i % 2 else (jp, "j'")
    return form, word.index(i)


def apply_Ftilde(state: ParamForm, i: int, x: int) -> ParamForm:
    """Add ``x`` to the exponent of the leading ``i``, converting form first if needed."""
    n = _rank(len(state.coords))
    if not 1 <= i <= n:
        raise ValueError(f"generator {i} out of range")
    if x < 0:
        raise ValueError("exponent must be nonnegative")
    form, pos = _slot(i, n)
    if state.form != form:
        state = to_other_form(state)
    c = list(state.coords)
    c[pos] += x
    return ParamForm(form, tuple(c))


def string_trace(word, a) -> list[TraceStep]:
    """Every intermediate vector of the right-to-left evaluation, conversions included."""
    word = tuple(word)
    n = _rank(len(word))
    if not is_w0_word(word, n):
        raise ValueError(f"{format_word(word)} is not a reduced word of w0")
    if len(a) != len(word) or any(x < 0 for x in a):
        raise ValueError("string vector must be nonnegative of the word's length")
    state = ParamForm("j", (0,) * len(word))
    steps = []
    for t in range(len(word) - 1, -1, -1):
        i = word[t]
        form, pos = _slot(i, n)
        if state.form != form:
            conv = _convert_steps(state)
            if state.form == "j" and steps:
                steps[-1] = TraceStep(steps[-1].state, steps[-1].note, True)
            steps.extend(conv)
            state = conv[-1].state
        c = list(state.coords)
        c[pos] += a[t]
        state = ParamForm(form, tuple(c))
        steps.append(TraceStep(state, f"F{i}^a{t + 1}"))
    if state.form != "j":
        conv = _convert_steps(state)
        steps.extend(conv)
    return steps


def string_to_lusztig(word, a) -> tuple:
    """``S_i^j(a)``: exponents for ``j`` of ``F~_{i_1}^{a_1} ... F~_{i_k}^{a_k} . 1``."""
    steps = string_trace(word, a)
    return steps[-1].state.coords if steps else tuple(a)


def string_to_target(word, target, a) -> tuple:
    """Exponents for any reduced word ``target`` of the same element."""
    n = _rank(len(word))
    j, _ = adapted_words(n)
    return transition_eval(j, tuple(target), string_to_lusztig(word, a))


@dataclass(frozen=True)
class LinearCertificate:
    matrix: tuple  # rows over the cone coordinates a_1..a_k
    samples: int
    images: tuple  # images of the spanning vectors, in Q-column order


def linear_matrix_on_cone(word, target=None, samples: int = 100, seed: int = 0, max_coeff: int = 5):
    """Fit the linear map through the spanning vectors and certify it at sampled cone points."""
    word = tuple(word)
    n = _rank(len(word))
    if target is None:
        target = adapted_words(n)[0]
    spec = cone_spec(word, n)
    cols = [tuple(row[c] for row in spec.Q) for c in range(len(word))]
    images = [string_to_target(word, target, v) for v in cols]
    # M Q = images (columns) and Q = P^-1, so M = images * P.
    Img = sympy.Matrix(images).T
    M = Img * sympy.Matrix(spec.P)
    matrix = tuple(tuple(int(x) for x in M.row(r)) for r in range(M.rows))
    rng = random.Random(seed)
    for _ in range(samples):
        coeffs = [rng.randint(0, max_coeff) for _ in cols]
        point = tuple(sum(c * v[t] for c, v in zip(coeffs, cols)) for t in range(len(word)))
        want = string_to_target(word, target, point)
        got = tuple(sum(m * x for m, x in zip(row, point)) for row in matrix)
        if want != got:
            raise AssertionError(f"not linear on the cone of {format_word(word)} at {point}")
    return LinearCertificate(matrix, samples, tuple(images))
