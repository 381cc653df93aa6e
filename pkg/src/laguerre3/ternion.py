"""The algebra L = R[e]/(e^3) with exact rational coefficients.

An element ``c0 + c1 e + c2 e^2`` is a unit exactly when ``c0 != 0``. The
non-units form the maximal ideal ``N = Re + Re^2``, whose annihilator is
``Re^2``.

>>> x = Ternion(2, 3, 1)
>>> x * Ternion(1, 1)
Ternion('2 + 5 e + 4 e2')
>>> Ternion(1, 1).inverse()
Ternion('1 - 1 e + 1 e2')
"""

from __future__ import annotations

import enum
import re
from numbers import Rational

from ._exact import Rat, q
from .errors import NotAUnit

__all__ = ["Ternion", "IdealClass", "ideal_class", "mul", "invert", "EPS", "ONE", "ZERO"]


class IdealClass(enum.Enum):
    UNIT = "Unit"
    MAXIMAL_IDEAL = "MaximalIdeal"
    ANNIHILATOR = "Annihilator"
    ZERO = "Zero"


class Ternion:
    """Immutable element of L; coefficients are exact rationals."""

    __slots__ = ("c0", "c1", "c2")

    def __init__(self, c0=0, c1=0, c2=0):
        object.__setattr__(self, "c0", q(c0))
        object.__setattr__(self, "c1", q(c1))
        object.__setattr__(self, "c2", q(c2))

    @classmethod
    def _raw(cls, c0: Rat, c1: Rat, c2: Rat) -> Ternion:
        t = object.__new__(cls)
        object.__setattr__(t, "c0", c0)
        object.__setattr__(t, "c1", c1)
        object.__setattr__(t, "c2", c2)
        return t

    def __setattr__(self, name, value):
        raise AttributeError("Ternion is immutable")

    @classmethod
    def coerce(cls, x) -> Ternion:
        if isinstance(x, Ternion):
            return x
        if isinstance(x, str):
            return cls.parse(x)
        if isinstance(x, (list, tuple)):
            return cls(*x)
        return cls(x)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        return Ternion._raw(self.c0 + o.c0, self.c1 + o.c1, self.c2 + o.c2)

    __radd__ = __add__

    def __neg__(self):
        return Ternion._raw(-self.c0, -self.c1, -self.c2)

    def __sub__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        return Ternion._raw(self.c0 - o.c0, self.c1 - o.c1, self.c2 - o.c2)

    def __rsub__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        a0, a1, a2 = self.c0, self.c1, self.c2
        b0, b1, b2 = o.c0, o.c1, o.c2
        return Ternion._raw(a0 * b0, a0 * b1 + a1 * b0, a0 * b2 + a1 * b1 + a2 * b0)

    __rmul__ = __mul__

    def inverse(self) -> Ternion:
        # c0^-1 (1 - n' + n'^2) with n' = (c1 e + c2 e^2) / c0
        if self.c0 == 0:
            raise NotAUnit(f"{self} lies in the maximal ideal")
        r = 1 / self.c0
        n1, n2 = self.c1 * r, self.c2 * r
        return Ternion._raw(r, -n1 * r, (n1 * n1 - n2) * r)

    def __truediv__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> Ternion:
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        out = ONE
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        return self.c0 == o.c0 and self.c1 == o.c1 and self.c2 == o.c2

    def __hash__(self):
        if self.c1 == 0 and self.c2 == 0:
            return hash(self.c0)
        return hash((self.c0, self.c1, self.c2))

    def __iter__(self):
        return iter((self.c0, self.c1, self.c2))

    # -- structure -------------------------------------------------------

    def is_unit(self) -> bool:
        return self.c0 != 0

    def in_maximal_ideal(self) -> bool:
        return self.c0 == 0

    def in_annihilator(self) -> bool:
        return self.c0 == 0 and self.c1 == 0

    def is_real(self) -> bool:
        return self.c1 == 0 and self.c2 == 0

    def ideal_class(self) -> IdealClass:
        if self.c0 != 0:
            return IdealClass.UNIT
        if self.c1 != 0:
            return IdealClass.MAXIMAL_IDEAL
        if self.c2 != 0:
            return IdealClass.ANNIHILATOR
        return IdealClass.ZERO

    # -- text / JSON -----------------------------------------------------

    def __str__(self):
        out = str(self.c0)
        for c, unit in ((self.c1, "e"), (self.c2, "e2")):
            out += f" - {-c} {unit}" if c < 0 else f" + {c} {unit}"
        return out

    def __repr__(self):
        return f"Ternion('{self}')"

    def to_json(self) -> list[str]:
        return [str(self.c0), str(self.c1), str(self.c2)]

    @classmethod
    def from_json(cls, data) -> Ternion:
        if isinstance(data, str):
            return cls.parse(data)
        if isinstance(data, (int, float)):
            return cls(data)
        if len(data) != 3:
            raise ValueError(f"expected a triple [c0, c1, c2], got {data!r}")
        return cls(*data)

    @classmethod
    def parse(cls, text: str) -> Ternion:
        """Read the text form, e.g. ``"1 - 2 e + 3/4 e2"``, ``"e2"``, ``"-e"``."""
        s = text.replace(" ", "").replace("ε²", "e2").replace("ε", "e").replace("e^2", "e2")
        if not s:
            raise ValueError("empty ternion")
        coeffs = [Rat(0)] * 3
        pos = 0
        for m in _TERM.finditer(s):
            if m.start() != pos or not m.group(0):
                break
            sign, num, unit = m.group(1), m.group(2), m.group(3)
            if not num and not unit or pos and not sign:
                break
            c = Rat(num) if num else Rat(1)
            if sign == "-":
                c = -c
            coeffs[{"": 0, "e": 1, "e2": 2}[unit or ""]] += c
            pos = m.end()
        if pos != len(s):
            raise ValueError(f"cannot parse ternion {text!r}")
        return cls(*coeffs)


_TERM = re.compile(r"([+-]?)((?:\d+(?:\.\d*)?|\.\d+)(?:/\d+)?)?\*?(e2|e)?")


_ZERO_Q = Rat(0)


def _lift(x) -> Ternion | None:
    if isinstance(x, Ternion):
        return x
    if isinstance(x, Rational) and not isinstance(x, bool):
        return Ternion._raw(q(x), _ZERO_Q, _ZERO_Q)
    return None


ZERO = Ternion(0)
ONE = Ternion(1)
EPS = Ternion(0, 1)


def mul(a: Ternion, b: Ternion) -> Ternion:
    return a * b


def invert(a: Ternion) -> Ternion:
    return a.inverse()


def ideal_class(a: Ternion) -> IdealClass:
    return a.ideal_class()
