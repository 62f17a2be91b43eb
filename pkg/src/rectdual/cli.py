"""Command-line surface: check, build, verify, solve, render, generate.

Exit codes: 0 success / positive result, 1 negative-but-valid result,
2 input or usage error, 3 internal construction failure.  JSON payloads go
to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .builder import NoValidPlacement, build_dual
from .detector import NotBiconnectedError, classify
from .generator import generate
from .graphs import GraphError, parse_graph
from .layout import Layout, LayoutError, layout_from_json_dict
from .render import render_svg_bytes
from .solver import NotAreaUniversal, NotConverged, solve_areas
from .verifier import is_area_universal, validate_partition

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _emit(payload: Any) -> None:
    print(json.dumps(payload))


def _fail(message: str, code: int = EXIT_INPUT) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _read_json(path: str) -> Any:
    return json.loads(_read_text(path))


def _load_graph(path: str):
    return parse_graph(_read_text(path))


def _load_layout(path: str) -> Layout:
    return layout_from_json_dict(_read_json(path))


def _parse_origin(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'X,Y', got {text!r}")
    return int(parts[0]), int(parts[1])


def cmd_check(args: argparse.Namespace) -> int:
    try:
        g = _load_graph(args.graph_file)
    except (OSError, GraphError) as exc:
        return _fail(str(exc))
    try:
        result = classify(g)
    except NotBiconnectedError as exc:
        return _fail(str(exc))
    _emit(result.to_json_dict())
    return EXIT_OK if result.verdict == "member" else EXIT_NEGATIVE


def cmd_build(args: argparse.Namespace) -> int:
    try:
        g = _load_graph(args.graph_file)
        origin = _parse_origin(args.origin)
    except (OSError, GraphError, ValueError) as exc:
        return _fail(str(exc))
    try:
        result = classify(g)
    except NotBiconnectedError as exc:
        return _fail(str(exc))
    if result.verdict != "member":
        _emit(result.to_json_dict())
        return EXIT_NEGATIVE
    try:
        layout = build_dual(g, result.certificate, origin)
    except NoValidPlacement as exc:
        return _fail(str(exc), EXIT_INTERNAL)
    _emit(layout.to_json_dict())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        layout = _load_layout(args.layout_file)
        report = validate_partition(layout)
    except (OSError, ValueError, LayoutError, json.JSONDecodeError) as exc:
        return _fail(str(exc))
    payload = report.to_json_dict()
    if not report.ok:
        payload["area_universal"] = None
        payload["witness"] = None
        _emit(payload)
        return EXIT_INPUT
    universal, witness = is_area_universal(layout)
    payload["area_universal"] = universal
    payload["witness"] = witness.to_json_dict() if witness else None
    _emit(payload)
    return EXIT_OK if universal else EXIT_NEGATIVE


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        layout = _load_layout(args.layout_file)
        areas_doc = _read_json(args.areas_file)
        targets = areas_doc["areas"] if isinstance(areas_doc, dict) else None
        if not isinstance(targets, dict):
            raise ValueError('areas file must look like {"areas": {"id": number}}')
    except (OSError, ValueError, LayoutError, KeyError, json.JSONDecodeError) as exc:
        return _fail(str(exc))
    try:
        cart = solve_areas(layout, targets, rel_tol=args.tol, max_iters=args.max_iters)
    except (NotAreaUniversal, ValueError) as exc:
        return _fail(str(exc))
    except NotConverged as exc:
        _emit(
            {
                "converged": False,
                "iterations": exc.iterations,
                "best_error": exc.best_error,
            }
        )
        return EXIT_NEGATIVE
    _emit(cart.to_json_dict())
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    try:
        payload = _read_json(args.layout_file)
        svg = render_svg_bytes(payload)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        return _fail(str(exc))
    try:
        with open(args.out, "wb") as fh:
            fh.write(svg)
    except OSError as exc:
        return _fail(str(exc))
    _emit({"out": args.out, "rects": len(payload["rects"])})
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    if args.size < 2:
        return _fail("--size must be at least 2")
    instance = generate(args.size, args.seed)
    _emit(instance.to_json_dict())
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rectdual",
        description=(
            "Detect constructible plane graphs, build one-sided rectangular "
            "duals, verify layouts, and realize area assignments."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide membership for a graph file")
    p.add_argument("graph_file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("build", help="construct an area-universal dual")
    p.add_argument("graph_file")
    p.add_argument("--origin", default="0,0", help="fix point X,Y (default 0,0)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="validate a layout and test one-sidedness")
    p.add_argument("layout_file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="realize an area assignment on a layout")
    p.add_argument("layout_file")
    p.add_argument("areas_file")
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--max-iters", type=int, default=10000)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("render", help="render a layout or cartogram to SVG")
    p.add_argument("layout_file")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("generate", help="emit a seeded constructible instance")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
