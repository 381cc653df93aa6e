"""Exact rational helpers: coercion, small dense linear algebra, polynomials.

Rationals are ``gmpy2.mpq`` values, which compare and hash equal to the
matching :class:`fractions.Fraction`. Matrices are tuples of row tuples.
Polynomials are tuples of coefficients, lowest degree first, with trailing
zeros stripped (the zero polynomial is the empty tuple).
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from gmpy2 import mpq as Rat

from .errors import SingularMatrix

Matrix = tuple[tuple[Rat, ...], ...]
Poly = tuple[Rat, ...]


def q(x) -> Rat:
    """Coerce ``x`` to an exact rational.

    Accepts ints, any ``numbers.Rational``, strings such as ``"3/4"`` or
    ``"-1.25"``, and floats, which are read through their shortest repr so
    that ``0.1`` becomes ``1/10``.
    """
    if type(x) is Rat:
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Rational)):
        return Rat(x)
    if isinstance(x, str):
        return Rat(Fraction(x.strip()))
    if isinstance(x, float):
        return Rat(Fraction(repr(x)))
    raise TypeError(f"cannot interpret {x!r} as a rational")


def fmt(x: Rat) -> str:
    return str(x)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(q(v) for v in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(Rat(int(i == j)) for j in range(n)) for i in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = tuple(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Rat(0)) for col in cols) for row in a)


def vecmat(v: Sequence[Rat], a: Matrix) -> tuple[Rat, ...]:
    return tuple(sum((v[i] * a[i][j] for i in range(len(v))), Rat(0)) for j in range(len(a[0])))


def _eliminate(a: list[list[Rat]], ncols: int) -> tuple[list[list[Rat]], Rat]:
    """Gauss-Jordan on the augmented rows in place; returns (rows, det of the square part)."""
    n = len(a)
    det = Rat(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrix("matrix is singular")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det *= p
        inv = 1 / p
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return a, det


def det(a: Matrix) -> Rat:
    try:
        _, d = _eliminate([list(row) for row in a], len(a))
    except SingularMatrix:
        return Rat(0)
    return d


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + [Rat(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    rows, _ = _eliminate(aug, 2 * n)
    return tuple(tuple(row[n:]) for row in rows)


def solve(a: Matrix, b: Sequence[Rat]) -> tuple[Rat, ...]:
    """Solve ``a x = b`` exactly for square nonsingular ``a``."""
    aug = [list(row) + [q(v)] for row, v in zip(a, b)]
    rows, _ = _eliminate(aug, len(a) + 1)
    return tuple(row[-1] for row in rows)


def null_vector(a: Matrix) -> tuple[Rat, ...]:
    """A nonzero vector spanning the kernel of an (n-1) x n matrix of full rank."""
    rows = [list(r) for r in a]
    n = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise SingularMatrix(f"kernel has dimension {len(free)}, expected 1")
    k = free[0]
    v = [Rat(0)] * n
    v[k] = Rat(1)
    for i, col in enumerate(pivots):
        v[col] = -rows[i][k]
    return tuple(v)


# -- polynomials -------------------------------------------------------------

def poly(coeffs: Iterable) -> Poly:
    c = [q(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return poly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, tuple(-x for x in b))


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Rat(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly(out)


def poly_eval(p: Poly, x) -> Rat:
    acc = Rat(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_compose(p: Poly, inner: Poly) -> Poly:
    """``p(inner(x))`` by Horner's scheme."""
    acc: Poly = ()
    for c in reversed(p):
        acc = poly_add(poly_mul(acc, inner), (c,))
    return acc


def degree(p: Poly) -> int:
    return len(p) - 1


def coeff(p: Poly, k: int) -> Rat:
    return p[k] if k < len(p) else Rat(0)


def interpolate(xs: Sequence[Rat], ys: Sequence[Rat]) -> Poly:
    """The unique polynomial of degree < len(xs) through the given nodes."""
    n = len(xs)
    vander = tuple(tuple(x ** k for k in range(n)) for x in xs)
    return poly(solve(vander, ys))


def poly_str(p: Poly, var: str = "s") -> str:
    if not p:
        return "0"
    terms = []
    for k, c in enumerate(p):
        if c == 0:
            continue
        mag = abs(c)
        body = str(mag) if (k == 0 or mag != 1) else ""
        if k >= 1:
            body = (f"({body})*" if "/" in body else (f"{body}*" if body else "")) + var + (f"^{k}" if k > 1 else "")
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
