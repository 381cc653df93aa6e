"""Writers for OBJ, SVG and CSV, and a strict OBJ reader.

Output is byte-stable: elements are written in mesh order and every number
uses ``format(x, ".9g")``.

The SVG is an isometric view with x3 pointing up: a point maps to the
screen coordinates ``u = (x1 - x2) cos 30``, ``v = x3 - (x1 + x2) sin 30``,
and SVG's y axis is ``-v``.
"""

from __future__ import annotations

import io
import math
from pathlib import Path

from .figures import Mesh

__all__ = ["to_obj", "to_svg", "to_csv", "write", "read_obj", "ObjData"]

_COS30 = math.sqrt(3) / 2
_SIN30 = 0.5


def _num(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"non-finite coordinate {x}")
    s = format(x, ".9g")
    return "0" if s == "-0" else s


def to_obj(mesh: Mesh, title: str = "laguerre3") -> str:
    out = io.StringIO()
    out.write(f"# {title}\n")
    verts = mesh.float_vertices()
    for el in mesh.elements:
        out.write(f"o {el.name}\n")
        for i in el.indices:
            out.write("v " + " ".join(_num(x) for x in verts[i]) + "\n")
        if el.is_surface:
            for quad in el.quads():
                out.write("f " + " ".join(str(i + 1) for i in quad) + "\n")
        elif el.cols >= 2:
            out.write("l " + " ".join(str(i + 1) for i in el.indices) + "\n")
    return out.getvalue()


def _project(v: tuple[float, float, float]) -> tuple[float, float]:
    x1, x2, x3 = v
    return (x1 - x2) * _COS30, -(x3 - (x1 + x2) * _SIN30)


def to_svg(mesh: Mesh, width: int = 800, title: str = "laguerre3") -> str:
    pts = [_project(v) for v in mesh.float_vertices()]
    if pts:
        xs, ys = [p[0] for p in pts], [p[1] for p in pts]
        x0, y0 = min(xs), min(ys)
        span = max(max(xs) - x0, max(ys) - y0) or 1.0
    else:
        x0 = y0 = 0.0
        span = 1.0
    margin = 10.0
    scale = (width - 2 * margin) / span

    def xy(i: int) -> str:
        x, y = pts[i]
        return f"{_num(margin + (x - x0) * scale)},{_num(margin + (y - y0) * scale)}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{width}" viewBox="0 0 {width} {width}">',
        f"<title>{title}</title>",
    ]
    for el in mesh.elements:
        lines.append(f'<g id="{el.name}">')
        if el.is_surface:
            for idx in el.grid_rows() + el.grid_cols():
                lines.append(f'<polyline fill="none" stroke="#999999" stroke-width="0.5" points="{" ".join(xy(i) for i in idx)}"/>')
        else:
            lines.append(f'<polyline fill="none" stroke="#000000" stroke-width="1.5" points="{" ".join(xy(i) for i in el.indices)}"/>')
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def to_csv(mesh: Mesh) -> str:
    out = io.StringIO()
    out.write("element,kind,index,x1,x2,x3\n")
    verts = mesh.float_vertices()
    for el in mesh.elements:
        kind = "surface" if el.is_surface else "curve"
        for k, i in enumerate(el.indices):
            out.write(f"{el.name},{kind},{k}," + ",".join(_num(x) for x in verts[i]) + "\n")
    return out.getvalue()


_WRITERS = {"obj": to_obj, "svg": to_svg, "csv": to_csv}


def write(mesh: Mesh, fmt: str, path, title: str = "laguerre3") -> Path:
    if fmt not in _WRITERS:
        raise ValueError(f"unknown format {fmt!r}")
    text = _WRITERS[fmt](mesh) if fmt == "csv" else _WRITERS[fmt](mesh, title=title)
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    return path


class ObjData:
    def __init__(self):
        self.vertices: list[tuple[float, float, float]] = []
        self.lines: list[list[int]] = []
        self.faces: list[list[int]] = []
        self.objects: list[str] = []


def read_obj(text: str) -> ObjData:
    """Parse the subset of OBJ we write; raise ``ValueError`` on anything else.

    Indices are 1-based and must refer to vertices already defined.
    """
    data = ObjData()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tag, *args = line.split()
        if tag in ("o", "g"):
            if len(args) != 1:
                raise ValueError(f"line {lineno}: object name expected")
            data.objects.append(args[0])
        elif tag == "v":
            if len(args) != 3:
                raise ValueError(f"line {lineno}: vertex needs 3 coordinates")
            v = tuple(float(a) for a in args)
            if not all(math.isfinite(x) for x in v):
                raise ValueError(f"line {lineno}: non-finite vertex")
            data.vertices.append(v)
        elif tag in ("l", "f"):
            need = 2 if tag == "l" else 3
            if len(args) < need:
                raise ValueError(f"line {lineno}: '{tag}' needs at least {need} indices")
            idx = [int(a) for a in args]
            if any(i < 1 or i > len(data.vertices) for i in idx):
                raise ValueError(f"line {lineno}: index out of range")
            (data.lines if tag == "l" else data.faces).append(idx)
        else:
            raise ValueError(f"line {lineno}: unsupported record {tag!r}")
    return data
