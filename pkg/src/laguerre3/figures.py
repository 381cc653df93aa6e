"""Sampled curve families and ruled surfaces for the five figures.

Figures:

2. C and its images under the shears ``sigma(c)``, together with the
   cylinder ``Psi: x2 = x1^2`` that carries all of them.
3. C and its images under ``gamma1(a)``, each on the translated cylinder
   ``x2 = (x1 - a)^2``.
4. The ruled surface swept by C under ``gamma1``, plus point orbits
   (lines; the orbit of the origin is the x1-axis).
5. C, Psi and their images under ``gamma2(a)``.
6. The ruled surface swept by C under ``gamma2`` (part of the Cayley surface
   ``2 x0 x1 x2 - x1^3 = x0^2 x3``), plus point orbits.

All vertices are exact rationals. Every element carries the polynomial it
must satisfy; :func:`generate` checks those residuals are exactly zero before
handing the mesh over for export.

Vertex counts, with ``P = len(params)``, ``K = samples``, ``G = grid``,
``O = len(orbit_points)``:

====== ===================================
figure vertices
====== ===================================
2      (1 + P) K + G^2
3      (1 + P) K + (1 + P) G^2
4      K + G^2 + O K
5      (1 + P) K + (1 + P) G^2
6      K + G^2 + O K
====== ===================================
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import _exact as ex
from ._exact import Rat
from .cubics import Collineation4, gamma1, gamma2, sigma
from .errors import InternalInconsistency, InvalidSpec

__all__ = ["FigureSpec", "Element", "Mesh", "generate", "FORMATS"]

FORMATS = ("obj", "svg", "csv")

Vec3 = tuple[Rat, Rat, Rat]
Residual = Callable[[Rat, Rat, Rat], Rat]


@dataclass(frozen=True)
class FigureSpec:
    figure: int
    t_range: tuple[Rat, Rat] = (Rat(-3, 2), Rat(3, 2))
    samples: int = 64
    params: tuple[Rat, ...] = (Rat(-1), Rat(-1, 2), Rat(1, 2), Rat(1))
    grid: int = 32
    format: str = "obj"
    # curve parameters whose group orbits are drawn in figures 4 and 6
    orbit_points: tuple[Rat, ...] = (Rat(-1), Rat(-1, 2), Rat(0), Rat(1, 2), Rat(1))

    def __post_init__(self):
        try:
            object.__setattr__(self, "t_range", tuple(ex.q(x) for x in self.t_range))
            object.__setattr__(self, "params", tuple(ex.q(x) for x in self.params))
            object.__setattr__(self, "orbit_points", tuple(ex.q(x) for x in self.orbit_points))
        except (TypeError, ValueError, ZeroDivisionError) as err:
            raise InvalidSpec(str(err)) from err
        if self.figure not in (2, 3, 4, 5, 6):
            raise InvalidSpec(f"no figure {self.figure}; choose 2..6")
        if len(self.t_range) != 2 or self.t_range[0] >= self.t_range[1]:
            raise InvalidSpec("t_range must be an increasing pair")
        if self.samples < 2 or self.grid < 2:
            raise InvalidSpec("need at least 2 samples per curve and a 2x2 grid")
        if self.format not in FORMATS:
            raise InvalidSpec(f"unknown format {self.format!r}")
        if self.figure in (4, 6) and len(set(self.params)) < 2:
            raise InvalidSpec("surfaces need at least two distinct group parameters")

    @property
    def group_range(self) -> tuple[Rat, Rat]:
        return min(self.params), max(self.params)


@dataclass
class Element:
    """A polyline (``rows == 1``) or a ``rows x cols`` surface grid of vertex indices."""

    name: str
    start: int
    rows: int
    cols: int
    residual: Residual | None = None

    @property
    def is_surface(self) -> bool:
        return self.rows > 1

    @property
    def indices(self) -> range:
        return range(self.start, self.start + self.rows * self.cols)

    def grid_rows(self) -> list[list[int]]:
        return [list(range(self.start + r * self.cols, self.start + (r + 1) * self.cols)) for r in range(self.rows)]

    def grid_cols(self) -> list[list[int]]:
        return [[self.start + r * self.cols + c for r in range(self.rows)] for c in range(self.cols)]

    def quads(self) -> list[tuple[int, int, int, int]]:
        out = []
        for r in range(self.rows - 1):
            for c in range(self.cols - 1):
                i = self.start + r * self.cols + c
                out.append((i, i + 1, i + self.cols + 1, i + self.cols))
        return out


@dataclass
class Mesh:
    vertices: list[Vec3] = field(default_factory=list)
    elements: list[Element] = field(default_factory=list)

    def add_polyline(self, name: str, points: Sequence[Vec3], residual: Residual | None = None) -> Element:
        el = Element(name, len(self.vertices), 1, len(points), residual)
        self.vertices.extend(points)
        self.elements.append(el)
        return el

    def add_surface(self, name: str, grid: Sequence[Sequence[Vec3]], residual: Residual | None = None) -> Element:
        el = Element(name, len(self.vertices), len(grid), len(grid[0]), residual)
        for row in grid:
            if len(row) != el.cols:
                raise ValueError("ragged surface grid")
            self.vertices.extend(row)
        self.elements.append(el)
        return el

    @property
    def polylines(self) -> list[Element]:
        return [e for e in self.elements if not e.is_surface]

    @property
    def surfaces(self) -> list[Element]:
        return [e for e in self.elements if e.is_surface]

    def residuals(self) -> dict[str, Rat]:
        """Largest absolute residual of each constrained element, computed exactly."""
        out = {}
        for el in self.elements:
            if el.residual is not None:
                out[el.name] = max((abs(el.residual(*self.vertices[i])) for i in el.indices), default=Rat(0))
        return out

    def float_vertices(self) -> list[tuple[float, float, float]]:
        return [tuple(float(x) for x in v) for v in self.vertices]


# -- sampling ----------------------------------------------------------------

def _linspace(lo: Rat, hi: Rat, n: int) -> list[Rat]:
    return [lo + (hi - lo) * k / (n - 1) for k in range(n)]


def _affine(a: Collineation4, p: Vec3) -> Vec3:
    x0, x1, x2, x3 = ex.vecmat((Rat(1), *p), a.rows)
    return x1 / x0, x2 / x0, x3 / x0


def _cubic(t: Rat) -> Vec3:
    return t, t * t, t * t * t


def _curve(a: Collineation4, ts: Sequence[Rat]) -> list[Vec3]:
    return [_affine(a, _cubic(t)) for t in ts]


def _cylinder_grid(spec: FigureSpec) -> list[list[Vec3]]:
    lo, hi = spec.t_range
    h = max(abs(lo), abs(hi)) ** 3
    xs = _linspace(lo, hi, spec.grid)
    zs = _linspace(-h, h, spec.grid)
    return [[(x, x * x, z) for x in xs] for z in zs]


def _label(x: Rat) -> str:
    return str(x).replace("/", "_").replace("-", "m")


def _on_cylinder(shift: Rat = Rat(0), offset: Rat = Rat(0)) -> Residual:
    # x2 = (x1 - shift)^2 + offset
    return lambda x1, x2, x3: x2 - (x1 - shift) ** 2 - offset


def _cayley(x1, x2, x3):
    return 2 * x1 * x2 - x1 ** 3 - x3


def _on_x1_axis(x1, x2, x3):
    return abs(x2) + abs(x3)


def _fig2(spec: FigureSpec, mesh: Mesh, ts: list[Rat]) -> None:
    psi = _on_cylinder()
    mesh.add_polyline("C", _curve(Collineation4.identity(), ts), psi)
    for c in spec.params:
        mesh.add_polyline(f"sigma_{_label(c)}", _curve(sigma(c), ts), psi)
    mesh.add_surface("Psi", _cylinder_grid(spec), psi)


def _fig3(spec: FigureSpec, mesh: Mesh, ts: list[Rat]) -> None:
    cyl = _cylinder_grid(spec)
    mesh.add_polyline("C", _curve(Collineation4.identity(), ts), _on_cylinder())
    for a in spec.params:
        mesh.add_polyline(f"gamma1_{_label(a)}", _curve(gamma1(a), ts), _on_cylinder(shift=a))
    mesh.add_surface("Psi", cyl, _on_cylinder())
    for a in spec.params:
        g = gamma1(a)
        mesh.add_surface(f"Psi_gamma1_{_label(a)}", [[_affine(g, p) for p in row] for row in cyl], _on_cylinder(shift=a))


def _cayley_cylinder(a: Rat) -> Residual:
    on_cyl = _on_cylinder(offset=a)
    return lambda x1, x2, x3: abs(on_cyl(x1, x2, x3)) + abs(_cayley(x1, x2, x3))


def _fig5(spec: FigureSpec, mesh: Mesh, ts: list[Rat]) -> None:
    cyl = _cylinder_grid(spec)
    mesh.add_polyline("C", _curve(Collineation4.identity(), ts), _cayley_cylinder(Rat(0)))
    for a in spec.params:
        mesh.add_polyline(f"gamma2_{_label(a)}", _curve(gamma2(a), ts), _cayley_cylinder(a))
    mesh.add_surface("Psi", cyl, _on_cylinder())
    for a in spec.params:
        g = gamma2(a)
        mesh.add_surface(f"Psi_gamma2_{_label(a)}", [[_affine(g, p) for p in row] for row in cyl], _on_cylinder(offset=a))


def _gamma1_surface(x1, x2, x3):
    # gamma1(a) C = {(a + t, t^2, t^3 - a t^2)}; eliminating a and t
    return (x3 + x1 * x2) ** 2 - 4 * x2 ** 3


def _ruled(spec: FigureSpec, mesh: Mesh, ts: list[Rat], group, residual, orbit_residual) -> None:
    lo, hi = spec.group_range
    mesh.add_polyline("C", _curve(Collineation4.identity(), ts), residual)
    grid_ts = _linspace(*spec.t_range, spec.grid)
    grid_as = _linspace(lo, hi, spec.grid)
    mats = [group(a) for a in grid_as]
    mesh.add_surface("surface", [[_affine(m, _cubic(t)) for t in grid_ts] for m in mats], residual)
    orbit_as = _linspace(lo, hi, spec.samples)
    orbit_mats = [group(a) for a in orbit_as]
    for t in spec.orbit_points:
        p = _cubic(t)
        res = orbit_residual if t == 0 else residual
        mesh.add_polyline(f"orbit_{_label(t)}", [_affine(m, p) for m in orbit_mats], res)


def generate(spec: FigureSpec) -> Mesh:
    mesh = Mesh()
    ts = _linspace(*spec.t_range, spec.samples)
    if spec.figure == 2:
        _fig2(spec, mesh, ts)
    elif spec.figure == 3:
        _fig3(spec, mesh, ts)
    elif spec.figure == 4:
        _ruled(spec, mesh, ts, gamma1, _gamma1_surface, _on_x1_axis)
    elif spec.figure == 5:
        _fig5(spec, mesh, ts)
    else:
        _ruled(spec, mesh, ts, gamma2, _cayley, _cayley)
    bad = {k: v for k, v in mesh.residuals().items() if v != 0}
    if bad:
        raise InternalInconsistency(f"nonzero residuals before export: {bad}")
    return mesh
