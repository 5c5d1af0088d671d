"""Command line interface.

Exit codes, uniformly: 0 for a positive verdict (valid, certified,
exported), 1 for a well-formed refusal (hypotheses fail, certification
refused, no paths to list), 2 for malformed input or parameters (bad
JSON, even m, non-allowable --path, wrong slope arity, and argparse's
own usage errors).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .certificates import (
    MODE_COMPOSITE,
    MODE_RELAXED,
    MODE_THEOREM1,
    certificate_json,
    certify,
)
from .diagram import (
    RELAXED,
    STRICT,
    PlatDiagram,
    check_hypotheses,
    diagram_from_json,
    diagram_to_json,
    random_diagram,
)
from .errors import PlatError
from .export import to_braid_word, to_pd_code
from .paths import count_allowable, enumerate_allowable
from .render import render
from .surgery import certify_haken, haken_certificate_json, parse_slopes
from .topology import build_topology

_MODES = {
    "theorem1": MODE_THEOREM1,
    "relaxed": MODE_RELAXED,
    "composite": MODE_COMPOSITE,
}


def _load(path: str) -> PlatDiagram:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise PlatError(f"cannot read {path}: {e}") from e
    return diagram_from_json(text)


def _parse_path(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError as e:
        raise PlatError(f"bad path {text!r}: expected comma-separated ints") from e


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_bytes(data: bytes, out: str | None) -> None:
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)


def cmd_validate(args: argparse.Namespace) -> int:
    d = _load(args.file)
    report = check_hypotheses(d, RELAXED if args.relaxed else STRICT)
    print(json.dumps(report.to_dict(), indent=2))
    return 0 if report.passed else 1


def cmd_paths(args: argparse.Namespace) -> int:
    d = _load(args.file)
    if args.count:
        print(count_allowable(d.n, d.m))
        return 0
    paths = enumerate_allowable(d)
    if d.n <= 2:
        print(
            "no allowable paths: n <= 2 is the 2-bridge case, which the "
            "certified statements exclude",
            file=sys.stderr,
        )
        return 1
    for p in paths:
        print(",".join(str(a) for a in p.entries))
    return 0


def cmd_certify(args: argparse.Namespace) -> int:
    d = _load(args.file)
    path = _parse_path(args.path) if args.path else None
    cert = certify(d, path, _MODES[args.mode])
    _emit(certificate_json(cert), args.out)
    return 0 if cert.certified else 1


def cmd_surgery(args: argparse.Namespace) -> int:
    d = _load(args.file)
    cert = certify_haken(d, parse_slopes(args.slopes))
    _emit(haken_certificate_json(cert), args.out)
    return 0 if cert.certified else 1


def cmd_export(args: argparse.Namespace) -> int:
    d = _load(args.file)
    if args.format == "braid":
        _emit(to_braid_word(d).text() + "\n", args.out)
    elif args.format == "pd":
        _emit(to_pd_code(d).text() + "\n", args.out)
    else:
        _emit(diagram_to_json(d), args.out)
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    d = _load(args.file)
    path = _parse_path(args.path) if args.path else None
    _emit_bytes(render(d, path, args.format), args.out)
    return 0


def cmd_random(args: argparse.Namespace) -> int:
    d = random_diagram(
        args.n,
        args.m,
        max_twist=args.max_twist,
        seed=args.seed,
        require_parity=args.require_parity,
    )
    _emit(diagram_to_json(d), args.out)
    return 0


def cmd_info(args: argparse.Namespace) -> int:
    d = _load(args.file)
    t = build_topology(d)
    lines = [
        f"n: {d.n} ({2 * d.n} strands)",
        f"m: {d.m} rows",
        f"components: {t.component_count}",
        f"twist crossings: {d.twist_crossing_count}",
        f"allowable paths: {count_allowable(d.n, d.m)}",
        f"tubed surface genus: {(d.m + 1) // 2}",
    ]
    print("\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="platsurf",
        description="plat diagrams, allowable paths, and surface certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the hypotheses of a diagram")
    p.add_argument("file")
    p.add_argument("--relaxed", action="store_true", help="lower the end bound to 2")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("paths", help="list or count allowable paths")
    p.add_argument("file")
    p.add_argument("--count", action="store_true", help="print the count only")
    p.add_argument("--list", action="store_true", help="list paths (default)")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("certify", help="emit a certificate for a diagram")
    p.add_argument("file")
    p.add_argument("--mode", choices=sorted(_MODES), default="theorem1")
    p.add_argument("--path", help="comma-separated entries, e.g. 1,2,1")
    p.add_argument("--out", help="write the certificate here instead of stdout")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("surgery", help="certify surgeries along a slope tuple")
    p.add_argument("file")
    p.add_argument(
        "--slopes", required=True, help="one slope per component, e.g. 3/1,5/2"
    )
    p.add_argument("--out", help="write the certificate here instead of stdout")
    p.set_defaults(func=cmd_surgery)

    p = sub.add_parser("export", help="braid word, PD code, or canonical JSON")
    p.add_argument("file")
    p.add_argument("--format", choices=("braid", "pd", "json"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("render", help="draw the diagram")
    p.add_argument("file")
    p.add_argument("--path", help="overlay this allowable path")
    p.add_argument("--format", choices=("svg", "ascii"), default="svg")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("random", help="generate a random strict-valid diagram")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-twist", type=int, default=5)
    p.add_argument("--seed", type=int)
    p.add_argument(
        "--require-parity",
        action="store_true",
        help="force the slope-coverage parity condition",
    )
    p.add_argument("--out")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("info", help="summary of a diagram")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PlatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main(sys.argv[1:]))


if __name__ == "__main__":
    entry()
