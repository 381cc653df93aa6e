"""Twisted cubics of real projective 3-space and their contact at a point.

Conventions: points are row vectors and collineations act from the right,
``x -> x A``. The canonical cubic is ``C = {R(s^3, s^2 t, s t^2, t^3)}``; it
passes through ``f = R(0,0,0,1)`` with tangent ``F: x0 = x1 = 0`` and
osculating plane ``Phi: x0 = 0`` there. A collineation keeps this flag
exactly when its matrix is upper triangular.

Contact of order ``m`` between ``C`` and ``C^A`` at ``f`` means that the
coefficients of ``s^0 ... s^m`` vanish in both ``G1(g(s))`` and ``G2(g(s))``,
where ``g(s) = (s^3, s^2, s, 1) A`` and ``G1 = x0 x3 - x1 x2``,
``G2 = x1 x3 - x2^2`` are two quadrics cutting out ``C``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import _exact as ex
from ._exact import Rat
from .errors import (
    BothZero,
    DegenerateSelection,
    NoSolution,
    NotATypeMatrix,
    NotFlagPreserving,
    SingularMatrix,
    WrongType,
)

__all__ = [
    "HPoint3",
    "Collineation4",
    "CollineationType",
    "TypeTag",
    "SeriesPair",
    "INFINITE",
    "F_POINT",
    "canonical_cubic",
    "contact_series",
    "contact_order_at_f",
    "table_predicate",
    "table_rows",
    "matching_types",
    "classify_type",
    "factor_type_I",
    "factor_I12",
    "factor_I123",
    "sigma",
    "gamma1",
    "gamma2",
    "sym_cube",
    "unique_collineation",
    "tangent_line",
    "osculating_plane",
    "frame_from_points",
]

INFINITE = math.inf


@dataclass(frozen=True)
class HPoint3:
    """Homogeneous point of P3(R); equality is up to a nonzero factor."""

    coords: tuple[Rat, ...]

    def __post_init__(self):
        c = tuple(ex.q(x) for x in self.coords)
        if len(c) != 4:
            raise ValueError("need four homogeneous coordinates")
        if not any(c):
            raise BothZero("the zero vector is not a point")
        object.__setattr__(self, "coords", c)

    @classmethod
    def of(cls, *xs) -> HPoint3:
        return cls(tuple(xs))

    def normalized(self) -> tuple[Rat, ...]:
        lead = next(x for x in self.coords if x != 0)
        return tuple(x / lead for x in self.coords)

    def __eq__(self, other):
        if not isinstance(other, HPoint3):
            return NotImplemented
        return self.normalized() == other.normalized()

    def __hash__(self):
        return hash(self.normalized())

    def __getitem__(self, i):
        return self.coords[i]

    @property
    def at_infinity(self) -> bool:
        return self.coords[0] == 0

    @property
    def affine(self) -> tuple[Rat, Rat, Rat]:
        x0, x1, x2, x3 = self.coords
        if x0 == 0:
            raise ValueError(f"{self} lies in the plane at infinity")
        return x1 / x0, x2 / x0, x3 / x0

    def __str__(self):
        return "R(" + ", ".join(str(x) for x in self.coords) + ")"


F_POINT = HPoint3.of(0, 0, 0, 1)


@dataclass(frozen=True)
class Collineation4:
    """Regular 4x4 rational matrix acting on row vectors."""

    rows: ex.Matrix

    def __post_init__(self):
        m = ex.matrix(self.rows)
        if len(m) != 4 or any(len(r) != 4 for r in m):
            raise ValueError("need a 4x4 matrix")
        object.__setattr__(self, "rows", m)
        if ex.det(m) == 0:
            raise SingularMatrix("collineation matrix is singular")

    @classmethod
    def identity(cls) -> Collineation4:
        return cls(ex.identity(4))

    @classmethod
    def elementary(cls, entries: dict[tuple[int, int], object]) -> Collineation4:
        """Identity with some entries overwritten."""
        m = [list(r) for r in ex.identity(4)]
        for (i, j), v in entries.items():
            m[i][j] = ex.q(v)
        return cls(m)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: Collineation4) -> Collineation4:
        return Collineation4(ex.matmul(self.rows, other.rows))

    def inverse(self) -> Collineation4:
        return Collineation4(ex.inverse(self.rows))

    @property
    def det(self) -> Rat:
        return ex.det(self.rows)

    def scaled(self, k) -> Collineation4:
        k = ex.q(k)
        return Collineation4(tuple(tuple(x * k for x in r) for r in self.rows))

    def normalized(self) -> Collineation4:
        """Scaled so that the (0, 0) entry is 1."""
        if self.rows[0][0] == 0:
            raise NotATypeMatrix("the (0,0) entry vanishes")
        return self.scaled(1 / self.rows[0][0])

    def projectively_equal(self, other: Collineation4) -> bool:
        a = [x for r in self.rows for x in r]
        b = [x for r in other.rows for x in r]
        k = next(i for i, x in enumerate(a) if x != 0)
        if b[k] == 0:
            return False
        r = a[k] / b[k]
        return all(x == r * y for x, y in zip(a, b))

    def is_flag_preserving(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(4) for j in range(i))

    def apply(self, p: HPoint3) -> HPoint3:
        return HPoint3(ex.vecmat(p.coords, self.rows))

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, data) -> Collineation4:
        return cls(data)

    def __str__(self):
        cells = [[str(x) for x in r] for r in self.rows]
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[" + "  ".join(c.rjust(w) for c in r) + "]" for r in cells)


def canonical_cubic(s, t) -> HPoint3:
    s, t = ex.q(s), ex.q(t)
    if s == 0 and t == 0:
        raise BothZero("(s, t) = (0, 0) is not a parameter")
    return HPoint3((s ** 3, s * s * t, s * t * t, t ** 3))


# -- contact -----------------------------------------------------------------

@dataclass(frozen=True)
class SeriesPair:
    """``G1(g(s))`` and ``G2(g(s))`` as exact polynomials in s."""

    g1: ex.Poly
    g2: ex.Poly

    def coefficient(self, which: int, k: int) -> Rat:
        return ex.coeff(self.g1 if which == 1 else self.g2, k)

    def __str__(self):
        return f"G1(g(s)) = {ex.poly_str(self.g1)}\nG2(g(s)) = {ex.poly_str(self.g2)}"


def _require_flag(a: Collineation4) -> None:
    if not a.is_flag_preserving():
        raise NotFlagPreserving("matrix does not fix the flag (f, F, Phi); it must be upper triangular")


def contact_series(a: Collineation4) -> SeriesPair:
    _require_flag(a)
    # g_j(s) = A0j s^3 + A1j s^2 + A2j s + A3j
    g = [ex.poly((a[3, j], a[2, j], a[1, j], a[0, j])) for j in range(4)]
    g1 = ex.poly_sub(ex.poly_mul(g[0], g[3]), ex.poly_mul(g[1], g[2]))
    g2 = ex.poly_sub(ex.poly_mul(g[1], g[3]), ex.poly_mul(g[2], g[2]))
    return SeriesPair(g1, g2)


def _order(p: ex.Poly) -> float:
    return next((k for k, c in enumerate(p) if c != 0), INFINITE)


def contact_order_at_f(a: Collineation4) -> int | float:
    """Largest m such that both series vanish through ``s^m``; ``INFINITE`` if ``C^A = C``."""
    series = contact_series(a)
    low = min(_order(series.g1), _order(series.g2))
    return low if low == INFINITE else low - 1


class CollineationType(enum.Enum):
    I = "I"
    II = "II"
    III = "III"


_TYPE_ORDER = (CollineationType.I, CollineationType.II, CollineationType.III)


def _matches(n: Collineation4, base: CollineationType) -> bool:
    if base is CollineationType.I:
        return n[1, 2] == 0 and n[2, 2] == n[1, 1]
    if base is CollineationType.II:
        return n[2, 3] == 0 and n[3, 3] == n[2, 2]
    return n[0, 1] == 0 and n[1, 1] == 1


def matching_types(a: Collineation4) -> list[CollineationType]:
    """All type shapes (I, II, III) that ``a`` fits after normalizing ``a[0,0]`` to 1."""
    if not a.is_flag_preserving():
        return []
    n = a.normalized()
    return [t for t in _TYPE_ORDER if _matches(n, t)]


def table_rows(a: Collineation4, base: CollineationType) -> tuple[bool, bool, bool]:
    """Truth values of the three rows of the contact table for the given shape."""
    n = a.normalized()
    if base is CollineationType.I:
        return (
            n[3, 3] == n[1, 1],
            n[1, 1] == 1 and n[2, 3] == -n[0, 1],
            n[0, 1] == 0 and n[1, 3] == 2 * n[0, 2],
        )
    if base is CollineationType.II:
        return (
            n[2, 2] == n[1, 1],
            n[1, 1] == 1 and n[0, 1] == 2 * n[1, 2],
            n[1, 2] == 0 and n[1, 3] == 2 * n[0, 2],
        )
    return (
        n[3, 3] == n[2, 2] ** 2,
        n[2, 2] == 1 and n[2, 3] == 2 * n[1, 2],
        n[1, 2] == 0 and n[1, 3] == 2 * n[0, 2],
    )


def _resolve_base(a: Collineation4, base: CollineationType | str | None) -> CollineationType:
    types = matching_types(a)
    if base is None:
        if not types:
            raise NotATypeMatrix("matrix fits none of the shapes I, II, III")
        return types[0]
    base = CollineationType(base) if not isinstance(base, CollineationType) else base
    if base not in types:
        raise NotATypeMatrix(f"matrix does not have shape {base.value}")
    return base


def table_predicate(a: Collineation4, order: int, base: CollineationType | str | None = None) -> bool:
    """Whether the table rows ``1 .. order-1`` hold, i.e. the table predicts contact >= order."""
    if order not in (2, 3, 4):
        raise ValueError("the table covers orders 2, 3 and 4")
    rows = table_rows(a, _resolve_base(a, base))
    return all(rows[: order - 1])


@dataclass(frozen=True)
class TypeTag:
    base: CollineationType | None
    level: int = 0

    def __str__(self):
        if self.base is None:
            return "None"
        return ".".join([self.base.value, *(str(k) for k in range(1, self.level + 1))])


def classify_type(a: Collineation4) -> TypeTag:
    types = matching_types(a)
    if not types:
        return TypeTag(None, 0)
    base = types[0]
    level = 0
    for ok in table_rows(a, base):
        if not ok:
            break
        level += 1
    return TypeTag(base, level)


# -- factorizations ----------------------------------------------------------

class TypeIFactors(NamedTuple):
    affinity: Collineation4
    shear: Collineation4
    stretching: Collineation4
    translation: Collineation4

    def product(self) -> Collineation4:
        return self.affinity @ self.shear @ self.stretching @ self.translation


class I12Factors(NamedTuple):
    shear_x1: Collineation4
    shear_x2: Collineation4
    translation_p1: Collineation4
    translation: Collineation4

    def product(self) -> Collineation4:
        return self.shear_x1 @ self.shear_x2 @ self.translation_p1 @ self.translation


class I123Factors(NamedTuple):
    shear: Collineation4
    translation_x2: Collineation4
    translation_x3: Collineation4

    def product(self) -> Collineation4:
        return self.shear @ self.translation_x2 @ self.translation_x3


def _type_I_level(a: Collineation4, level: int) -> Collineation4:
    if CollineationType.I not in matching_types(a) or not all(table_rows(a, CollineationType.I)[:level]):
        want = TypeTag(CollineationType.I, level)
        raise WrongType(f"need type {want}, got {classify_type(a)}")
    return a.normalized()


def factor_type_I(a: Collineation4) -> TypeIFactors:
    """Perspective affinity, shear, stretching and translation whose product is ``a``."""
    n = _type_I_level(a, 0)
    a11, a33 = n[1, 1], n[3, 3]
    return TypeIFactors(
        Collineation4.elementary({(3, 3): a33 / a11}),
        Collineation4.elementary({(1, 3): n[1, 3] / a11, (2, 3): n[2, 3] / a11}),
        Collineation4.elementary({(1, 1): a11, (2, 2): a11, (3, 3): a11}),
        Collineation4.elementary({(0, 1): n[0, 1], (0, 2): n[0, 2], (0, 3): n[0, 3]}),
    )


def factor_I12(a: Collineation4) -> I12Factors:
    n = _type_I_level(a, 2)
    a01 = n[0, 1]
    return I12Factors(
        Collineation4.elementary({(1, 3): n[1, 3]}),
        Collineation4.elementary({(2, 3): -a01}),
        Collineation4.elementary({(0, 1): a01}),
        Collineation4.elementary({(0, 2): n[0, 2], (0, 3): n[0, 3]}),
    )


def factor_I123(a: Collineation4) -> I123Factors:
    n = _type_I_level(a, 3)
    a02 = n[0, 2]
    return I123Factors(
        Collineation4.elementary({(1, 3): 2 * a02}),
        Collineation4.elementary({(0, 2): a02}),
        Collineation4.elementary({(0, 3): n[0, 3]}),
    )


# -- one-parameter groups ----------------------------------------------------

def sigma(c) -> Collineation4:
    """Shear ``x3 -> x3 + c (x1 + x2)`` with axis ``x1 + x2 = 0`` in the direction of f."""
    return Collineation4.elementary({(1, 3): c, (2, 3): c})


def gamma1(a) -> Collineation4:
    a = ex.q(a)
    return Collineation4.elementary({(2, 3): -a}) @ Collineation4.elementary({(0, 1): a})


def gamma2(a) -> Collineation4:
    a = ex.q(a)
    return Collineation4.elementary({(1, 3): 2 * a}) @ Collineation4.elementary({(0, 2): a})


# -- reparametrizations and unique representatives ----------------------------

def sym_cube(m: Sequence[Sequence]) -> Collineation4:
    """The matrix S with ``canonical_cubic((s,t) m) = canonical_cubic(s,t) S``."""
    (m00, m01), (m10, m11) = ex.matrix(m)
    if m00 * m11 - m01 * m10 == 0:
        raise SingularMatrix("parameter change is singular")
    # (s,t) m = (sigma, tau); expand sigma^(3-j) tau^j as a cubic form, index = power of t
    sig, tau = (m00, m10), (m01, m11)
    cols = []
    for j in range(4):
        form: ex.Poly = (Rat(1),)
        for lin in [sig] * (3 - j) + [tau] * j:
            form = ex.poly_mul(form, ex.poly(lin))
        cols.append([ex.coeff(form, i) for i in range(4)])
    return Collineation4(tuple(tuple(cols[j][i] for j in range(4)) for i in range(4)))


def _reparam(p: Rat, q: Rat) -> Collineation4:
    return sym_cube(((p, q), (0, 1)))


def unique_collineation(b: Collineation4, want: CollineationType | str) -> Collineation4:
    """The collineation of shape ``want`` that maps C onto the same curve as ``b``.

    Candidates are ``S(m) b`` with ``m = [[p, q], [0, 1]]``, the parameter
    changes fixing the parameter of f. Each shape imposes one diagonal
    condition (fixing p) and one linear condition (then fixing q).
    """
    _require_flag(b)
    want = CollineationType(want) if not isinstance(want, CollineationType) else want
    n = b.normalized()
    if want is CollineationType.I:
        # (S B)22 = (S B)11  ->  p b22 = p^2 b11 ;  (S B)12 = 0  ->  p b12 + 2 q b22 = 0
        p = n[2, 2] / n[1, 1]
        q = -p * n[1, 2] / (2 * n[2, 2])
    elif want is CollineationType.II:
        # (S B)33 = (S B)22  ->  b33 = p b22 ;  (S B)23 = 0  ->  p b23 + 3 q b33 = 0
        p = n[3, 3] / n[2, 2]
        q = -p * n[2, 3] / (3 * n[3, 3])
    else:
        # (S B)11 = (S B)00  ->  p^2 b11 = p^3 b00 ;  (S B)01 = 0  ->  p b01 + q b11 = 0
        p = n[1, 1] / n[0, 0]
        q = -p * n[0, 1] / n[1, 1]
    a = (_reparam(p, q) @ n).normalized()
    if not _matches(a, want):
        raise NoSolution(f"elimination did not produce a matrix of shape {want.value}")
    return a


# -- frames ------------------------------------------------------------------

def _param(u) -> tuple[Rat, Rat]:
    if u is None or u == "inf" or u == "oo" or (isinstance(u, float) and math.isinf(u)):
        return Rat(0), Rat(1)
    if isinstance(u, (tuple, list)):
        s, t = (ex.q(x) for x in u)
        if s == 0 and t == 0:
            raise BothZero("(0, 0) is not a parameter")
        return s, t
    return Rat(1), ex.q(u)


def tangent_line(u) -> tuple[tuple[Rat, ...], tuple[Rat, ...]]:
    """Two vectors spanning the tangent of C at parameter u (the partial derivatives)."""
    s, t = _param(u)
    return (3 * s * s, 2 * s * t, t * t, Rat(0)), (Rat(0), s * s, 2 * s * t, 3 * t * t)


def osculating_plane(u) -> tuple[Rat, ...]:
    """Coefficients n of the osculating plane ``n . x = 0`` of C at parameter u."""
    s, t = _param(u)
    second = ((6 * s, 2 * t, 0, 0), (0, 2 * s, 2 * t, 0), (0, 0, 2 * s, 6 * t))
    n = ex.null_vector(ex.matrix(second))
    lead = next(x for x in n if x != 0)
    return tuple(x / lead for x in n)


def _meet(line, plane) -> tuple[Rat, ...]:
    a, b = line
    na = sum(x * y for x, y in zip(plane, a))
    nb = sum(x * y for x, y in zip(plane, b))
    return tuple(nb * x - na * y for x, y in zip(a, b))


def frame_from_points(u0, u3, u) -> Collineation4:
    """Coordinate change taking the frame built on C from parameters u0, u3, u to the standard one.

    With ``p0, p3, p`` the points of C at those parameters, ``p1`` is where
    the tangent at ``p0`` meets the osculating plane at ``p3`` and ``p2`` the
    other way round. The returned matrix sends ``p0, p1, p2, p3`` to the base
    points and ``p`` to ``R(1,1,1,1)``; it maps C onto itself.
    """
    params = [_param(x) for x in (u0, u3, u)]
    for i in range(3):
        for j in range(i):
            (s1, t1), (s2, t2) = params[i], params[j]
            if s1 * t2 == s2 * t1:
                raise DegenerateSelection("the three parameters must be distinct")
    p0, p3, p = (canonical_cubic(*x).coords for x in params)
    p1 = _meet(tangent_line(params[0]), osculating_plane(params[1]))
    p2 = _meet(tangent_line(params[1]), osculating_plane(params[0]))
    basis = (p0, p1, p2, p3)
    try:
        lam = ex.solve(tuple(zip(*basis)), p)
    except SingularMatrix as err:
        raise DegenerateSelection("the constructed points do not form a frame") from err
    if any(x == 0 for x in lam):
        raise DegenerateSelection("unit point lies on a face of the reference simplex")
    k = tuple(tuple(l * x for x in row) for l, row in zip(lam, basis))
    return Collineation4(k).inverse()
