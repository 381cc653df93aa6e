"""Random generators shared by the tests. Everything is exact and seeded."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from laguerre3.cubics import Collineation4, CollineationType
from laguerre3.projline import ChainKind, NormalForm, ProjPoint
from laguerre3.ternion import Ternion

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=9)
nonzero_rationals = rationals.filter(lambda x: x != 0)
ternions = st.builds(Ternion, rationals, rationals, rationals)
units = st.builds(Ternion, nonzero_rationals, rationals, rationals)
nilpotents = st.builds(lambda a, b: Ternion(0, a, b), rationals, rationals)
# seeded generators: hypothesis picks and shrinks the seed
rngs = st.integers(0, 2**32 - 1).map(random.Random)


def rat(rng: random.Random, num: int = 9, den: int = 5) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def nonzero(rng: random.Random, num: int = 9, den: int = 5) -> Fraction:
    while True:
        x = rat(rng, num, den)
        if x:
            return x


def ternion(rng: random.Random) -> Ternion:
    return Ternion(rat(rng), rat(rng), rat(rng))


def unit(rng: random.Random) -> Ternion:
    return Ternion(nonzero(rng), rat(rng), rat(rng))


def proj_point(rng: random.Random) -> ProjPoint:
    if rng.random() < 0.8:
        return ProjPoint.proper(ternion(rng))
    return ProjPoint.improper(Ternion(0, rat(rng), rat(rng)))


def normal_form(rng: random.Random, kind: ChainKind | None = None) -> NormalForm:
    kind = kind or rng.choice(list(ChainKind))
    a02, a12, a03, a13 = (rat(rng) for _ in range(4))
    if kind is ChainKind.LINE:
        return NormalForm.line(a02, a12, a03, a13)
    if kind is ChainKind.PARABOLA:
        return NormalForm.parabola(nonzero(rng), a02, a12, a03, a13)
    return NormalForm.cubic(nonzero(rng, 4, 2), a02, a12, a03, a13, rat(rng))


def _maybe(rng: random.Random, enforce: bool, value, fallback):
    # enforce the condition, or satisfy it by luck one time in four
    return value if enforce or rng.random() < 0.25 else fallback


def type_matrix(rng: random.Random, base: CollineationType, level: int | None = None, scale: bool = True) -> Collineation4:
    """A random regular matrix of the given shape satisfying at least ``level`` table rows."""
    if level is None:
        level = rng.randint(0, 3)
    r1, r2, r3 = (level >= k for k in (1, 2, 3))
    if base is CollineationType.I:
        a01, a02, a03, a13, a23 = (rat(rng) for _ in range(5))
        a11 = _maybe(rng, r2, Fraction(1), nonzero(rng))
        a33 = _maybe(rng, r1, a11, nonzero(rng))
        a01 = _maybe(rng, r3, Fraction(0), a01)
        a23 = _maybe(rng, r2, -a01, a23)
        a13 = _maybe(rng, r3, 2 * a02, a13)
        rows = [[1, a01, a02, a03], [0, a11, 0, a13], [0, 0, a11, a23], [0, 0, 0, a33]]
    elif base is CollineationType.II:
        a01, a02, a03, a12, a13 = (rat(rng) for _ in range(5))
        a11 = _maybe(rng, r2, Fraction(1), nonzero(rng))
        a22 = _maybe(rng, r1, a11, nonzero(rng))
        a12 = _maybe(rng, r3, Fraction(0), a12)
        a01 = _maybe(rng, r2, 2 * a12, a01)
        a13 = _maybe(rng, r3, 2 * a02, a13)
        rows = [[1, a01, a02, a03], [0, a11, a12, a13], [0, 0, a22, 0], [0, 0, 0, a22]]
    else:
        a02, a03, a12, a13, a23 = (rat(rng) for _ in range(5))
        a22 = _maybe(rng, r2, Fraction(1), nonzero(rng))
        a33 = _maybe(rng, r1, a22 * a22, nonzero(rng))
        a12 = _maybe(rng, r3, Fraction(0), a12)
        a23 = _maybe(rng, r2, 2 * a12, a23)
        a13 = _maybe(rng, r3, 2 * a02, a13)
        rows = [[1, 0, a02, a03], [0, 1, a12, a13], [0, 0, a22, a23], [0, 0, 0, a33]]
    m = Collineation4(rows)
    return m.scaled(nonzero(rng)) if scale else m


def flag_matrix(rng: random.Random) -> Collineation4:
    """A random regular upper triangular matrix."""
    rows = [[nonzero(rng) if i == j else (rat(rng) if j > i else 0) for j in range(4)] for i in range(4)]
    return Collineation4(rows)


def cubic_curve(rng: random.Random, admissible: bool):
    """A cubic parametrization ``k0 + k1 t + k2 t^2 + k3 t^3`` in L with ``x1 = alpha t + beta``.

    In terms of x1 the leading coefficients are ``a22 / alpha^2`` and
    ``a33 / alpha^3``, so the curve is admissible iff ``a33 = a22^2 / alpha``.
    A non-admissible curve may also have a quadratic term in x1.
    """
    from laguerre3.bridge import PolyCurve

    while True:
        alpha = nonzero(rng)
        a22 = nonzero(rng, 4, 2)
        a33 = a22 * a22 / alpha
        k2 = Ternion(0, a22, rat(rng))
        k3 = Ternion(0, 0, a33)
        if not admissible:
            if rng.random() < 0.8:
                k3 = Ternion(0, 0, a33 + nonzero(rng))
            else:
                k3 = Ternion(nonzero(rng), 0, a33)
        k1 = Ternion(alpha, rat(rng), rat(rng))
        # skip curves lying in a plane
        if _det3(k1, k2, k3):
            return PolyCurve((ternion(rng), k1, k2, k3))


def _det3(u: Ternion, v: Ternion, w: Ternion) -> Fraction:
    return (
        u.c0 * (v.c1 * w.c2 - v.c2 * w.c1)
        - u.c1 * (v.c0 * w.c2 - v.c2 * w.c0)
        + u.c2 * (v.c0 * w.c1 - v.c1 * w.c0)
    )
