"""Command line interface: ``laguerre3 <command> ...``.

Exit status is 0 on success, 2 for domain errors (bad chains, wrong matrix
types, invalid figure specs) and 1 for I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bridge, cubics, export
from ._exact import q
from .errors import LaguerreError
from .figures import FORMATS, FigureSpec, generate
from .jsonio import chain_from_json, curve_from_json, load, matrix_from_json
from .projline import ChainKind


def _rationals(text: str):
    return tuple(q(x) for x in text.split(",") if x.strip())


def _print_paths(paths: dict[str, bool], verdict: bool) -> None:
    for name, value in paths.items():
        print(f"path {name}: {str(value).lower()}")
    print(f"verdict: {str(verdict).lower()}")


def _verdict(paths: dict[str, bool]) -> bool:
    values = set(paths.values())
    if len(values) != 1:
        raise LaguerreError(f"decision paths disagree: {paths}")
    return values.pop()


def cmd_figure(args) -> None:
    kwargs = {"figure": args.id, "format": args.format}
    if args.range is not None:
        kwargs["t_range"] = tuple(q(x) for x in args.range)
    if args.samples is not None:
        kwargs["samples"] = args.samples
    if args.params is not None:
        kwargs["params"] = _rationals(args.params)
    if args.grid is not None:
        kwargs["grid"] = args.grid
    if args.orbits is not None:
        kwargs["orbit_points"] = _rationals(args.orbits)
    spec = FigureSpec(**kwargs)
    mesh = generate(spec)
    export.write(mesh, spec.format, args.out, title=f"laguerre3 figure {spec.figure}")
    print(f"figure {spec.figure}: {len(mesh.vertices)} vertices, {len(mesh.elements)} elements -> {args.out}")


def cmd_classify(args) -> None:
    chain = chain_from_json(load(args.chain))
    nf = chain.normal_form
    print(f"kind: {nf.kind.value}")
    for k, v in nf.coefficients().items():
        print(f"{k}: {v}")
    print(f"improper point: {chain.improper_point}")
    print("normal form: " + json.dumps(nf.to_json()))


def cmd_contact(args) -> None:
    a = matrix_from_json(load(args.matrix))
    print(cubics.contact_series(a))
    order = cubics.contact_order_at_f(a)
    print(f"contact order at f: {'infinite' if order == cubics.INFINITE else order}")
    print(f"type: {cubics.classify_type(a)}")
    types = cubics.matching_types(a)
    for base in types:
        rows = cubics.table_rows(a, base)
        print(f"table {base.value} rows: " + " ".join(str(r).lower() for r in rows))


def cmd_factor(args) -> None:
    a = matrix_from_json(load(args.matrix))
    factor = {1: cubics.factor_type_I, 2: cubics.factor_I12, 3: cubics.factor_I123}[args.level]
    factors = factor(a)
    for name, m in zip(factors._fields, factors):
        print(f"{name}:")
        print(m)
    print("product equals input: " + str(factors.product() == a.normalized()).lower())


def cmd_improper(args) -> None:
    c1 = chain_from_json(load(args.chain))
    if args.chain2 is None:
        print(f"kind: {c1.kind.value}")
        print(f"improper point (matrix): {c1.improper_point}")
        print(f"improper point (closed form): {c1.normal_form.improper_point()}")
        return
    c2 = chain_from_json(load(args.chain2))
    paths = bridge.improper_point_paths(c1, c2)
    _print_paths(paths, _verdict(paths))


def cmd_touch(args) -> None:
    if args.chain2 is None:
        raise LaguerreError("touch needs --chain2")
    c1 = chain_from_json(load(args.chain))
    c2 = chain_from_json(load(args.chain2))
    paths = bridge.touch_paths(c1, c2)
    _print_paths(paths, _verdict(paths))


def cmd_admissible(args) -> None:
    curve = curve_from_json(load(args.chain))
    if curve.degree == 3:
        paths = bridge.admissible_cubic_paths(curve)
    elif curve.degree == 2:
        paths = bridge.admissible_parabola_paths(curve)
    elif curve.degree == 1:
        nf = curve.normal_form()
        paths = {"normal_form": nf is not None and nf.kind is ChainKind.LINE}
    else:
        raise LaguerreError("a curve of degree 1, 2 or 3 is required")
    _print_paths(paths, _verdict(paths))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="laguerre3", description="Laguerre geometry over R[e]/(e^3).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("figure", help="sample a figure and export it")
    p.add_argument("--id", type=int, required=True, choices=range(2, 7))
    p.add_argument("--range", nargs=2, metavar=("A", "B"))
    p.add_argument("--samples", type=int)
    p.add_argument("--params", help="comma separated group parameters")
    p.add_argument("--grid", type=int)
    p.add_argument("--orbits", help="comma separated curve parameters of drawn orbits (figures 4, 6)")
    p.add_argument("--format", choices=FORMATS, default="obj")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("classify", help="normal form and improper point of a chain")
    p.add_argument("--chain", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("contact", help="contact series and order at f of a flag-preserving collineation")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=cmd_contact)

    p = sub.add_parser("factor", help="factorize a type I collineation")
    p.add_argument("--matrix", required=True)
    p.add_argument("--level", type=int, choices=(1, 2, 3), default=1)
    p.set_defaults(func=cmd_factor)

    for name, func, text in (
        ("improper", cmd_improper, "improper point of a chain, or compare two"),
        ("touch", cmd_touch, "do two chains touch at their improper point"),
        ("admissible", cmd_admissible, "is a curve in L the proper part of a chain"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("--chain", required=True)
        p.add_argument("--chain2")
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except LaguerreError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as err:
        print(f"error: invalid JSON: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
