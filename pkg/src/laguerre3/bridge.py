"""Between the chain geometry on L and the projective closure P3(R).

A proper point ``x1 + x2 e + x3 e^2`` is identified with ``R(1, x1, x2, x3)``.
The flag at infinity consists of ``f = R(0,0,0,1)`` (the direction of the
vertical lines), ``F`` (the line at infinity of the singular planes) and the
plane at infinity ``Phi``.

Several predicates here are decided along two independent routes that must
agree: one through chain normal forms and improper points, one through
contact of the projectively extended curves at f. Disagreement raises
:class:`InternalInconsistency`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import _exact as ex
from ._exact import Rat
from .cubics import Collineation4, HPoint3, contact_order_at_f
from .errors import (
    AtInfinity,
    InternalInconsistency,
    InvalidCoefficients,
    KindMismatch,
    NotACubic,
    NotCubics,
    NotParabolas,
    ZeroA,
    ZeroDirection,
)
from .projline import (
    Chain,
    ChainKind,
    Matrix2L,
    NormalForm,
    chain_from_normal_form,
    match_normal_form,
)
from .ternion import EPS, ONE, ZERO, Ternion

__all__ = [
    "affine_to_projective",
    "projective_to_affine",
    "AffineLine",
    "AffinePlane",
    "LineKind",
    "PlaneKind",
    "line_kind",
    "plane_kind",
    "PolyCurve",
    "Extension",
    "projective_extension",
    "is_admissible_parabola",
    "is_admissible_cubic",
    "admissible_parabola_paths",
    "admissible_cubic_paths",
    "project_parabola",
    "same_improper_point_parabolas",
    "same_improper_point_cubics",
    "improper_point_paths",
    "normalizing_projectivity",
    "chains_touch",
    "touch_paths",
    "touch_by_projectivity",
    "extension_contact_order",
    "chain_from_curve",
]


def affine_to_projective(z) -> HPoint3:
    z = Ternion.coerce(z)
    return HPoint3((Rat(1), z.c0, z.c1, z.c2))


def projective_to_affine(p: HPoint3) -> Ternion:
    if p.at_infinity:
        raise AtInfinity(f"{p} lies in the plane at infinity")
    return Ternion(*p.affine)


# -- lines and planes --------------------------------------------------------

class LineKind(enum.Enum):
    REGULAR = "regular"
    SINGULAR = "singular"
    VERTICAL = "vertical"


class PlaneKind(enum.Enum):
    REGULAR = "regular"
    SINGULAR = "singular"


@dataclass(frozen=True)
class AffineLine:
    """The set ``R u + v`` in L."""

    direction: Ternion
    base: Ternion = ZERO

    def __post_init__(self):
        object.__setattr__(self, "direction", Ternion.coerce(self.direction))
        object.__setattr__(self, "base", Ternion.coerce(self.base))
        if self.direction == ZERO:
            raise ZeroDirection("a line needs a nonzero direction")

    @property
    def kind(self) -> LineKind:
        u = self.direction
        if u.is_unit():
            return LineKind.REGULAR
        return LineKind.VERTICAL if u.in_annihilator() else LineKind.SINGULAR


@dataclass(frozen=True)
class AffinePlane:
    """The plane ``n1 x1 + n2 x2 + n3 x3 = offset`` in L."""

    normal: tuple[Rat, Rat, Rat]
    offset: Rat = Rat(0)

    def __post_init__(self):
        n = tuple(ex.q(x) for x in self.normal)
        if len(n) != 3 or not any(n):
            raise ZeroDirection("a plane needs a nonzero normal vector")
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "offset", ex.q(self.offset))

    @classmethod
    def spanned(cls, point, u, v) -> AffinePlane:
        """The plane through ``point`` with direction vectors ``u`` and ``v``."""
        p, u, v = (Ternion.coerce(x) for x in (point, u, v))
        n = (u.c1 * v.c2 - u.c2 * v.c1, u.c2 * v.c0 - u.c0 * v.c2, u.c0 * v.c1 - u.c1 * v.c0)
        if not any(n):
            raise ZeroDirection("direction vectors are dependent")
        return cls(n, n[0] * p.c0 + n[1] * p.c1 + n[2] * p.c2)

    def contains(self, z) -> bool:
        z = Ternion.coerce(z)
        n = self.normal
        return n[0] * z.c0 + n[1] * z.c1 + n[2] * z.c2 == self.offset

    @property
    def kind(self) -> PlaneKind:
        # a direction with nonzero x1 satisfies n . u = 0 unless n is a multiple of (1, 0, 0)
        _, n2, n3 = self.normal
        return PlaneKind.REGULAR if (n2 or n3) else PlaneKind.SINGULAR


def line_kind(line: AffineLine) -> LineKind:
    return line.kind


def plane_kind(plane: AffinePlane) -> PlaneKind:
    return plane.kind


# -- polynomial curves in L --------------------------------------------------

@dataclass(frozen=True)
class PolyCurve:
    """A polynomial curve ``t -> k0 + k1 t + ... + kd t^d`` in L."""

    coeffs: tuple[Ternion, ...]

    def __post_init__(self):
        c = [Ternion.coerce(k) for k in self.coeffs]
        while len(c) > 1 and c[-1] == ZERO:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def of(cls, *coeffs) -> PolyCurve:
        return cls(tuple(coeffs))

    @classmethod
    def from_normal_form(cls, nf: NormalForm) -> PolyCurve:
        e, e2 = nf.e_poly, nf.e2_poly
        return cls(tuple(Ternion(int(k == 1), ex.coeff(e, k), ex.coeff(e2, k)) for k in range(4)))

    @classmethod
    def from_matrix(cls, a: Collineation4) -> PolyCurve:
        """Affine part of ``C^A`` for a collineation fixing the plane at infinity."""
        if any(a[i, 0] for i in (1, 2, 3)) or a[0, 0] == 0:
            raise ValueError("the collineation must fix the plane at infinity")
        r = 1 / a[0, 0]
        return cls(tuple(Ternion(a[i, 1] * r, a[i, 2] * r, a[i, 3] * r) for i in range(4)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def point(self, t) -> Ternion:
        t = ex.q(t)
        acc = ZERO
        for k in reversed(self.coeffs):
            acc = acc * t + k
        return acc

    def component(self, i: int) -> ex.Poly:
        return ex.poly(getattr(k, f"c{i}") for k in self.coeffs)

    def in_x1(self) -> tuple[ex.Poly, ex.Poly] | None:
        """``(P, Q)`` with the curve equal to ``{t + P(t) e + Q(t) e^2}``, if x1 is affine and nonconstant."""
        x1 = self.component(0)
        if ex.degree(x1) != 1:
            return None
        b, a = x1
        inner = ex.poly((-b / a, 1 / a))
        return ex.poly_compose(self.component(1), inner), ex.poly_compose(self.component(2), inner)

    def normal_form(self) -> NormalForm | None:
        pq = self.in_x1()
        return None if pq is None else match_normal_form(*pq)

    def extension_rows(self) -> ex.Matrix:
        """Homogenization as a 4x4 matrix: ``R(s^3, s^2 t, s t^2, t^3) -> R(s^3, s^3 k(t/s))``."""
        if self.degree > 3:
            raise NotACubic("degree exceeds 3")
        ks = list(self.coeffs) + [ZERO] * (3 - self.degree)
        return tuple((Rat(int(i == 0)), k.c0, k.c1, k.c2) for i, k in enumerate(ks))


def chain_from_curve(curve: PolyCurve) -> Chain:
    nf = curve.normal_form()
    if nf is None:
        raise InvalidCoefficients("curve is not the proper part of a chain")
    return chain_from_normal_form(nf)


@dataclass(frozen=True)
class Extension:
    """Projective line, conic or twisted cubic containing the proper part of a chain.

    ``rows[i]`` is the coefficient vector of ``s^(d-i) t^i`` in a homogeneous
    parametrization of degree ``d``; the point at ``s = 0`` lies at infinity.
    """

    kind: ChainKind
    rows: ex.Matrix

    @property
    def degree(self) -> int:
        return len(self.rows) - 1

    def point(self, s, t) -> HPoint3:
        s, t = ex.q(s), ex.q(t)
        d = self.degree
        w = [s ** (d - i) * t ** i for i in range(d + 1)]
        return HPoint3(tuple(sum((w[i] * self.rows[i][j] for i in range(d + 1)), Rat(0)) for j in range(4)))

    @property
    def point_at_infinity(self) -> HPoint3:
        return HPoint3(self.rows[-1])

    @property
    def collineation(self) -> Collineation4:
        """For a cubic: the flag-preserving collineation taking C onto this curve."""
        if self.kind is not ChainKind.CUBIC_PARABOLA:
            raise NotCubics("only cubic parabolas extend to twisted cubics")
        return Collineation4(self.rows)


def projective_extension(c: Chain | NormalForm) -> Extension:
    nf = c.normal_form if isinstance(c, Chain) else c
    base = (Rat(1), Rat(0), nf.a02, nf.a03)
    lin = (Rat(0), Rat(1), nf.a12, nf.a13)
    if nf.kind is ChainKind.LINE:
        rows = (base, lin)
    elif nf.kind is ChainKind.PARABOLA:
        rows = (base, lin, (Rat(0), Rat(0), Rat(0), nf.a33))
    else:
        rows = (base, lin, (Rat(0), Rat(0), nf.a22, nf.a23), (Rat(0),) * 3 + (nf.a33,))
    return Extension(nf.kind, rows)


# -- admissibility -----------------------------------------------------------

def _as_curve(x) -> PolyCurve:
    if isinstance(x, PolyCurve):
        return x
    if isinstance(x, NormalForm):
        return PolyCurve.from_normal_form(x)
    if isinstance(x, Chain):
        return PolyCurve.from_normal_form(x.normal_form)
    return PolyCurve(tuple(x))


def admissible_parabola_paths(curve) -> dict[str, bool]:
    curve = _as_curve(curve)
    if curve.degree != 2:
        raise InvalidCoefficients("a parabola needs a quadratic parametrization")
    _, k1, k2 = curve.coeffs
    if not _independent(k1, k2):
        raise InvalidCoefficients("degenerate parametrization: k1 and k2 are dependent")
    plane = AffinePlane.spanned(curve.coeffs[0], k1, k2)
    diameters_vertical = k2.in_annihilator()
    geometric = diameters_vertical and plane.kind is PlaneKind.REGULAR
    nf = curve.normal_form()
    return {
        "geometric": geometric,
        "normal_form": nf is not None and nf.kind is ChainKind.PARABOLA,
    }


def _independent(u: Ternion, v: Ternion) -> bool:
    return any((u.c1 * v.c2 - u.c2 * v.c1, u.c2 * v.c0 - u.c0 * v.c2, u.c0 * v.c1 - u.c1 * v.c0))


def _agree(paths: dict[str, bool]) -> bool:
    values = set(paths.values())
    if len(values) != 1:
        raise InternalInconsistency(f"decision paths disagree: {paths}")
    return values.pop()


def is_admissible_parabola(curve) -> bool:
    """Whether a parabola in L is the proper part of a chain.

    Decided by its geometry (vertical diameters, regular plane) and by
    matching the parabola normal form.
    """
    return _agree(admissible_parabola_paths(curve))


def extension_contact_order(a: Collineation4) -> int | float:
    """Contact order at f between C and ``C^a``; 0 when ``C^a`` does not share the flag at f."""
    if not a.is_flag_preserving():
        return 0
    return contact_order_at_f(a)


def admissible_cubic_paths(curve) -> dict[str, bool]:
    curve = _as_curve(curve)
    if curve.degree != 3:
        raise NotACubic("a cubic parabola needs a cubic parametrization")
    rows = curve.extension_rows()
    if ex.det(rows) == 0:
        raise NotACubic("the curve lies in a plane")
    nf = curve.normal_form()
    return {
        "normal_form": nf is not None and nf.kind is ChainKind.CUBIC_PARABOLA,
        "contact": extension_contact_order(Collineation4(rows)) >= 2,
    }


def is_admissible_cubic(curve) -> bool:
    return _agree(admissible_cubic_paths(curve))


# -- improper points ---------------------------------------------------------

def _require_kind(c: Chain, kind: ChainKind, err) -> NormalForm:
    nf = c.normal_form
    if nf.kind is not kind:
        raise err(f"expected a {kind.value} chain, got {nf.kind.value}")
    return nf


@dataclass(frozen=True)
class Projection:
    """A parallel projection of one parabola into the plane of another."""

    e2_poly: ex.Poly
    is_translate: bool
    translation: Ternion | None


def project_parabola(target: NormalForm, source: NormalForm, direction=EPS) -> Projection:
    """Project ``source`` along ``direction`` onto the plane of ``target`` and compare.

    ``direction`` must be non-vertical and singular, i.e. ``d = d1 e + d2 e^2``
    with ``d1 != 0``. The image is again parametrized by ``x1 = t``; it is a
    translate of ``target`` iff their leading coefficients agree.
    """
    d = Ternion.coerce(direction)
    if d.c0 != 0 or d.c1 == 0:
        raise ValueError("projection direction must be singular and not vertical")
    # shift along d until x2 matches the target plane x2 = a02 + a12 x1
    lam = ex.poly_sub(ex.poly((target.a02, target.a12)), ex.poly((source.a02, source.a12)))
    lam = tuple(x / d.c1 for x in lam)
    e2 = ex.poly_add(source.e2_poly, tuple(x * d.c2 for x in lam))
    q0, q1, q2 = (ex.coeff(e2, k) for k in range(3))
    if ex.degree(e2) > 2 or q2 != target.a33:
        return Projection(e2, False, None)
    # target(u - tau) + shift = image(u)
    tau = (target.a13 - q1) / (2 * target.a33)
    shift = q0 - ex.poly_eval(target.e2_poly, -tau)
    return Projection(e2, True, Ternion(tau, target.a12 * tau, shift))


def _parabola_paths(c1: Chain, c2: Chain, direction=EPS) -> dict[str, bool]:
    n1 = _require_kind(c1, ChainKind.PARABOLA, NotParabolas)
    n2 = _require_kind(c2, ChainKind.PARABOLA, NotParabolas)
    return {
        "improper_point": c1.improper_point == c2.improper_point,
        "projection": project_parabola(n1, n2, direction).is_translate,
    }


def _relative_collineation(c1: Chain, c2: Chain) -> Collineation4:
    # carry c1's extension back to C; c2's extension goes along
    a1 = projective_extension(c1).collineation
    a2 = projective_extension(c2).collineation
    return a2 @ a1.inverse()


def _cubic_paths(c1: Chain, c2: Chain) -> dict[str, bool]:
    n1 = _require_kind(c1, ChainKind.CUBIC_PARABOLA, NotCubics)
    n2 = _require_kind(c2, ChainKind.CUBIC_PARABOLA, NotCubics)
    return {
        "improper_point": n1.improper_point() == n2.improper_point(),
        "contact": contact_order_at_f(_relative_collineation(c1, c2)) >= 3,
    }


def same_improper_point_parabolas(c1: Chain, c2: Chain, direction=EPS) -> bool:
    return _agree(_parabola_paths(c1, c2, direction))


def same_improper_point_cubics(c1: Chain, c2: Chain) -> bool:
    return _agree(_cubic_paths(c1, c2))


def improper_point_paths(c1: Chain, c2: Chain) -> dict[str, bool]:
    """Both decision routes for 'same improper point' (equality only for lines)."""
    k1, k2 = c1.kind, c2.kind
    if k1 is not k2:
        return {"improper_point": c1.improper_point == c2.improper_point}
    if k1 is ChainKind.PARABOLA:
        return _parabola_paths(c1, c2)
    if k1 is ChainKind.CUBIC_PARABOLA:
        return _cubic_paths(c1, c2)
    return {"improper_point": True}


def normalizing_projectivity(a, b) -> Matrix2L:
    """The real projectivity taking ``L(1, -a e - b e^2)`` to ``L(1, -e)``.

    On proper points it acts as ``z -> a z - b/a``.
    """
    a, b = ex.q(a), ex.q(b)
    if a == 0:
        raise ZeroA("a must be nonzero")
    return Matrix2L(Ternion(a), ZERO, Ternion(-b / a), ONE)


# -- touching ----------------------------------------------------------------

_SECOND_DIRECTION = Ternion(0, 1, 1)


def _line_direction(nf: NormalForm) -> tuple[Rat, Rat, Rat]:
    return (Rat(1), nf.a12, nf.a13)


def _touch_rule(c1: Chain, c2: Chain) -> bool:
    n1, n2 = c1.normal_form, c2.normal_form
    if n1.kind is not n2.kind:
        raise KindMismatch(f"cannot compare a {n1.kind.value} chain with a {n2.kind.value} chain")
    if n1.kind is ChainKind.LINE:
        return _line_direction(n1) == _line_direction(n2)
    if n1.kind is ChainKind.PARABOLA:
        if n1.improper_point() != n2.improper_point():
            return False
        # translation along e^2 for every non-vertical singular direction; the
        # condition is affine in the direction, so two directions suffice
        for d in (EPS, _SECOND_DIRECTION):
            proj = project_parabola(n1, n2, d)
            if not proj.is_translate or proj.translation.c0 != 0 or proj.translation.c1 != 0:
                return False
        return True
    return contact_order_at_f(_relative_collineation(c1, c2)) >= 4


def touch_by_projectivity(c1: Chain, c2: Chain) -> bool:
    """Touching decided by moving the common improper point to infinity.

    After the projectivity ``L(1, n) -> L(1, 0)`` both chains become lines;
    they touch iff those lines are parallel.
    """
    p = c1.improper_point
    if p != c2.improper_point:
        return False
    m = Matrix2L(ONE, -p.v, ZERO, ONE)
    l1 = Chain(c1.matrix @ m).normal_form
    l2 = Chain(c2.matrix @ m).normal_form
    if l1.kind is not ChainKind.LINE or l2.kind is not ChainKind.LINE:
        raise InternalInconsistency("projectivity did not straighten the chains")
    return _line_direction(l1) == _line_direction(l2)


def touch_paths(c1: Chain, c2: Chain) -> dict[str, bool]:
    return {"rule": _touch_rule(c1, c2), "projectivity": touch_by_projectivity(c1, c2)}


def chains_touch(c1: Chain, c2: Chain) -> bool:
    """Whether two chains of the same kind touch at their common improper point.

    Lines touch when parallel; parabolas when a projection of one arises from
    the other by a translation along e^2; cubic parabolas when their
    extensions have contact of order at least 4 at f.
    """
    return _agree(touch_paths(c1, c2))
