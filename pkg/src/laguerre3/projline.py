"""The projective line P(L), its parallelism, and the chains of the geometry.

Points are cyclic submodules ``L(u, v)`` with ``u`` or ``v`` a unit, acted on
from the right by invertible 2x2 matrices over L. A chain is the image of the
embedded real projective line under such a matrix. Every chain has a proper
part of one of three shapes (parametrized by ``x1 = t``)::

    line             t + (a02 + a12 t) e + (a03 + a13 t) e^2
    parabola         t + (a02 + a12 t) e + (a03 + a13 t + a33 t^2) e^2,        a33 != 0
    cubic parabola   t + (a02 + a12 t + a22 t^2) e
                       + (a03 + a13 t + a23 t^2 + a33 t^3) e^2,               a33 = a22^2 != 0

and exactly one improper point.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from . import _exact as ex
from ._exact import Rat
from .errors import (
    InternalInconsistency,
    InvalidCoefficients,
    NotAdmissible,
    NotMutuallyDistant,
    SingularMatrix,
)
from .ternion import ONE, ZERO, Ternion

__all__ = [
    "ProjPoint",
    "Matrix2L",
    "Chain",
    "ChainKind",
    "NormalForm",
    "INFINITY",
    "is_parallel",
    "chain_through",
    "classify",
    "chain_from_normal_form",
    "improper_point",
    "contains",
    "apply",
    "apply_chain",
    "match_normal_form",
]


@dataclass(frozen=True)
class ProjPoint:
    """A point ``L(u, v)``, stored as ``(z, 1)`` if proper or ``(1, n)`` with n in N."""

    u: Ternion
    v: Ternion

    def __post_init__(self):
        u, v = Ternion.coerce(self.u), Ternion.coerce(self.v)
        if v.is_unit():
            u, v = u / v, ONE
        elif u.is_unit():
            u, v = ONE, v / u
        else:
            raise NotAdmissible(f"neither {u} nor {v} is a unit")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @classmethod
    def proper(cls, z) -> ProjPoint:
        return cls(Ternion.coerce(z), ONE)

    @classmethod
    def improper(cls, n) -> ProjPoint:
        n = Ternion.coerce(n)
        if n.is_unit():
            raise ValueError(f"{n} is a unit; L(1, n) would be proper")
        return cls(ONE, n)

    @property
    def is_proper(self) -> bool:
        return self.v == ONE

    @property
    def affine(self) -> Ternion:
        """The element z of L identified with a proper point ``L(z, 1)``."""
        if not self.is_proper:
            raise ValueError(f"{self} is improper")
        return self.u

    def pair(self) -> tuple[Ternion, Ternion]:
        return self.u, self.v

    def __str__(self):
        if self.is_proper:
            return str(self.u)
        return f"L(1, {self.v})"

    def to_json(self):
        return {"proper": self.is_proper, "pair": [self.u.to_json(), self.v.to_json()]}


INFINITY = ProjPoint(ONE, ZERO)


def is_parallel(p: ProjPoint, q: ProjPoint) -> bool:
    return (p.u * q.v - p.v * q.u).in_maximal_ideal()


@dataclass(frozen=True)
class Matrix2L:
    """2x2 matrix over L acting on row vectors: ``(u, v) -> (ua + vc, ub + vd)``."""

    a: Ternion
    b: Ternion
    c: Ternion
    d: Ternion

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Ternion.coerce(getattr(self, name)))

    @classmethod
    def from_rows(cls, rows) -> Matrix2L:
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def identity(cls) -> Matrix2L:
        return cls(ONE, ZERO, ZERO, ONE)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    @property
    def det(self) -> Ternion:
        return self.a * self.d - self.b * self.c

    def is_invertible(self) -> bool:
        return self.det.is_unit()

    def inverse(self) -> Matrix2L:
        det = self.det
        if not det.is_unit():
            raise SingularMatrix(f"determinant {det} is not a unit")
        r = det.inverse()
        return Matrix2L(self.d * r, -self.b * r, -self.c * r, self.a * r)

    def __matmul__(self, o: Matrix2L) -> Matrix2L:
        return Matrix2L(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def act(self, u: Ternion, v: Ternion) -> tuple[Ternion, Ternion]:
        return u * self.a + v * self.c, u * self.b + v * self.d

    def to_json(self):
        return [[self.a.to_json(), self.b.to_json()], [self.c.to_json(), self.d.to_json()]]


def apply(m: Matrix2L, p: ProjPoint) -> ProjPoint:
    if not m.is_invertible():
        raise SingularMatrix(f"determinant {m.det} is not a unit")
    return ProjPoint(*m.act(p.u, p.v))


# -- normal forms ------------------------------------------------------------

class ChainKind(enum.Enum):
    LINE = "line"
    PARABOLA = "parabola"
    CUBIC_PARABOLA = "cubic_parabola"


_COEFFS = ("a02", "a12", "a03", "a13", "a33", "a22", "a23")
_KIND_ALIASES = {"cubic": "cubic_parabola", "cubicparabola": "cubic_parabola"}


@dataclass(frozen=True)
class NormalForm:
    kind: ChainKind
    a02: Rat = Rat(0)
    a12: Rat = Rat(0)
    a03: Rat = Rat(0)
    a13: Rat = Rat(0)
    a33: Rat = Rat(0)
    a22: Rat = Rat(0)
    a23: Rat = Rat(0)

    def __post_init__(self):
        kind = self.kind if isinstance(self.kind, ChainKind) else ChainKind(self.kind)
        object.__setattr__(self, "kind", kind)
        for name in _COEFFS:
            object.__setattr__(self, name, ex.q(getattr(self, name)))
        if kind is ChainKind.LINE:
            if self.a33 or self.a22 or self.a23:
                raise InvalidCoefficients("a line has no a33, a22, a23 terms")
        elif kind is ChainKind.PARABOLA:
            if self.a33 == 0:
                raise InvalidCoefficients("a parabola needs a33 != 0")
            if self.a22 or self.a23:
                raise InvalidCoefficients("a parabola has no a22, a23 terms")
        else:
            if self.a22 == 0 or self.a33 != self.a22 ** 2:
                raise InvalidCoefficients(
                    f"a cubic parabola needs a33 = a22^2 != 0, got a22={self.a22}, a33={self.a33}"
                )

    @classmethod
    def line(cls, a02=0, a12=0, a03=0, a13=0) -> NormalForm:
        return cls(ChainKind.LINE, a02, a12, a03, a13)

    @classmethod
    def parabola(cls, a33, a02=0, a12=0, a03=0, a13=0) -> NormalForm:
        return cls(ChainKind.PARABOLA, a02, a12, a03, a13, a33=a33)

    @classmethod
    def cubic(cls, a22, a02=0, a12=0, a03=0, a13=0, a23=0) -> NormalForm:
        a22 = ex.q(a22)
        return cls(ChainKind.CUBIC_PARABOLA, a02, a12, a03, a13, a33=a22 * a22, a22=a22, a23=a23)

    @property
    def e_poly(self) -> ex.Poly:
        """Coefficient of e as a polynomial in t."""
        return ex.poly((self.a02, self.a12, self.a22))

    @property
    def e2_poly(self) -> ex.Poly:
        """Coefficient of e^2 as a polynomial in t."""
        if self.kind is ChainKind.CUBIC_PARABOLA:
            return ex.poly((self.a03, self.a13, self.a23, self.a33))
        return ex.poly((self.a03, self.a13, self.a33))

    def point(self, t) -> Ternion:
        t = ex.q(t)
        return Ternion(t, ex.poly_eval(self.e_poly, t), ex.poly_eval(self.e2_poly, t))

    def improper_point(self) -> ProjPoint:
        if self.kind is ChainKind.LINE:
            return INFINITY
        if self.kind is ChainKind.PARABOLA:
            return ProjPoint.improper(Ternion(0, 0, -self.a33))
        return ProjPoint.improper(Ternion(0, -self.a22, -self.a23 + 2 * self.a12 * self.a22))

    def coefficients(self) -> dict[str, Rat]:
        names = {
            ChainKind.LINE: ("a02", "a12", "a03", "a13"),
            ChainKind.PARABOLA: ("a02", "a12", "a03", "a13", "a33"),
            ChainKind.CUBIC_PARABOLA: _COEFFS,
        }[self.kind]
        return {n: getattr(self, n) for n in names}

    def to_json(self) -> dict:
        out = {"kind": self.kind.value}
        out.update({k: str(v) for k, v in self.coefficients().items()})
        return out

    @classmethod
    def from_json(cls, data: dict) -> NormalForm:
        name = str(data["kind"]).strip().lower().replace(" ", "_").replace("-", "_")
        kind = ChainKind(_KIND_ALIASES.get(name, name))
        unknown = set(data) - {"kind", *_COEFFS}
        if unknown:
            raise InvalidCoefficients(f"unknown coefficients {sorted(unknown)}")
        coeffs = {k: ex.q(v) for k, v in data.items() if k != "kind"}
        if kind is ChainKind.CUBIC_PARABOLA and "a33" not in coeffs and "a22" in coeffs:
            coeffs["a33"] = coeffs["a22"] ** 2
        return cls(kind, **coeffs)

    def __str__(self):
        body = ", ".join(f"{k}={v}" for k, v in self.coefficients().items())
        return f"{self.kind.value}({body})"


def match_normal_form(e_poly: ex.Poly, e2_poly: ex.Poly) -> NormalForm | None:
    """The normal form whose proper part is ``t + P(t) e + Q(t) e^2``, if any."""
    if ex.degree(e_poly) > 2 or ex.degree(e2_poly) > 3:
        return None
    p0, p1, p2 = (ex.coeff(e_poly, k) for k in range(3))
    q0, q1, q2, q3 = (ex.coeff(e2_poly, k) for k in range(4))
    if p2 != 0:
        if q3 != p2 * p2:
            return None
        return NormalForm(ChainKind.CUBIC_PARABOLA, p0, p1, q0, q1, a33=q3, a22=p2, a23=q2)
    if q3 != 0:
        return None
    if q2 != 0:
        return NormalForm(ChainKind.PARABOLA, p0, p1, q0, q1, a33=q2)
    return NormalForm(ChainKind.LINE, p0, p1, q0, q1)


# -- chains ------------------------------------------------------------------

def _sample_parameters() -> Iterator[Rat]:
    yield from (Rat(x) for x in (0, 1, -1, 2, -2, 3, -3))
    for k in itertools.count(5, 2):
        yield Rat(k)
        yield Rat(-k)


@dataclass(frozen=True, eq=False)
class Chain:
    """The image of the real projective line under ``matrix``.

    Two chains compare equal when they have the same point set, which is
    decided by their normal forms.
    """

    matrix: Matrix2L = field(default_factory=Matrix2L.identity)

    def __post_init__(self):
        if not self.matrix.is_invertible():
            raise SingularMatrix(f"chain matrix has non-unit determinant {self.matrix.det}")

    def point(self, s, t=1) -> ProjPoint:
        """Image of the real point ``R(s, t)``."""
        s, t = ex.q(s), ex.q(t)
        if s == 0 and t == 0:
            raise ValueError("(0, 0) is not a point")
        return ProjPoint(*self.matrix.act(Ternion(s), Ternion(t)))

    @property
    def improper_parameter(self) -> tuple[Rat, Rat]:
        # the real (s, t) with s*b0 + t*d0 = 0; rank 1 because det0 = a0 d0 - b0 c0 != 0
        b0, d0 = self.matrix.b.c0, self.matrix.d.c0
        return d0, -b0

    @cached_property
    def improper_point(self) -> ProjPoint:
        p = self.point(*self.improper_parameter)
        if p.is_proper:
            raise InternalInconsistency("improper parameter produced a proper point")
        return p

    def proper_points(self, count: int) -> list[tuple[Rat, Ternion]]:
        """``count`` proper points as ``(parameter, z)`` for the parameters 0, 1, -1, 2, ..."""
        b0, d0 = self.matrix.b.c0, self.matrix.d.c0
        out = []
        for x in _sample_parameters():
            if x * b0 + d0 == 0:
                continue
            out.append((x, self.point(x).affine))
            if len(out) == count:
                return out
        raise AssertionError("unreachable")

    @cached_property
    def normal_form(self) -> NormalForm:
        samples = [z for _, z in self.proper_points(8)]
        fit, check = samples[:4], samples[4:]
        ts = [z.c0 for z in fit]
        if len(set(ts)) != len(ts):
            raise InternalInconsistency("x1 is not injective on the sampled proper points")
        e_poly = ex.interpolate(ts, [z.c1 for z in fit])
        e2_poly = ex.interpolate(ts, [z.c2 for z in fit])
        nf = match_normal_form(e_poly, e2_poly)
        if nf is None:
            raise InternalInconsistency(f"no normal form fits e={e_poly}, e2={e2_poly}")
        for z in check:
            if nf.point(z.c0) != z:
                raise InternalInconsistency(f"{z} is not on the fitted {nf}")
        return nf

    @property
    def kind(self) -> ChainKind:
        return self.normal_form.kind

    def contains(self, p: ProjPoint) -> bool:
        u, v = self.matrix.inverse().act(p.u, p.v)
        pre = ProjPoint(u, v)
        return pre.u.is_real() and pre.v.is_real()

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self.normal_form == other.normal_form

    def __hash__(self):
        return hash(self.normal_form)

    def __repr__(self):
        return f"Chain({self.normal_form})"


def chain_through(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> Chain:
    """The unique chain with ``L(1,0) -> p``, ``L(0,1) -> q``, ``L(1,1) -> r``."""
    for x, y in ((p, q), (q, r), (p, r)):
        if is_parallel(x, y):
            raise NotMutuallyDistant(f"{x} and {y} are parallel")
    d = p.u * q.v - p.v * q.u
    lam = (r.u * q.v - q.u * r.v) / d
    mu = (p.u * r.v - r.u * p.v) / d
    return Chain(Matrix2L(lam * p.u, lam * p.v, mu * q.u, mu * q.v))


def classify(c: Chain) -> NormalForm:
    return c.normal_form


def chain_from_normal_form(nf: NormalForm) -> Chain:
    # the improper point and two proper points of one chain are mutually distant
    chain = chain_through(nf.improper_point(), ProjPoint.proper(nf.point(0)), ProjPoint.proper(nf.point(1)))
    if chain.normal_form != nf:
        raise InternalInconsistency(f"synthesized {chain.normal_form}, expected {nf}")
    return chain


def improper_point(c: Chain) -> ProjPoint:
    return c.improper_point


def contains(c: Chain, p: ProjPoint) -> bool:
    return c.contains(p)


def apply_chain(m: Matrix2L, c: Chain) -> Chain:
    if not m.is_invertible():
        raise SingularMatrix(f"determinant {m.det} is not a unit")
    return Chain(c.matrix @ m)
