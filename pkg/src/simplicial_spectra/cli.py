"""Command-line interface.

Exit codes: 0 success, 1 internal or verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import io
from .complex import ComplexError
from .extremal import (
    gen_complete,
    gen_remark_k1,
    gen_remark_k2,
    gen_rhombic,
    gen_tented,
    random_pure_complex,
    verify_remark,
)
from .report import SCHEMA_VERSION, analyze, format_text
from .search import search_cond

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _emit(obj: dict, fmt: str, text: str) -> None:
    if fmt == "structured":
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_analyze(args) -> int:
    K = io.read_facet_file(args.input)
    report = analyze(K, tol=args.tol)
    _emit(report, args.format, format_text(report))
    return EXIT_OK


def _generate(args):
    fam = args.family
    if fam == "tented":
        return gen_tented(args.n, args.r)
    if fam == "rhombic":
        return gen_rhombic(args.r)
    if fam == "complete":
        return gen_complete(args.n, args.r)
    if fam == "k1":
        return gen_remark_k1()
    if fam == "k2":
        return gen_remark_k2()
    K = random_pure_complex(args.n, args.r, args.p, np.random.default_rng(args.seed))
    if K is None:
        raise ComplexError("random draw produced no facets; raise --p or change --seed")
    return K


def cmd_generate(args) -> int:
    if args.family in ("tented", "complete", "random") and args.n is None:
        raise ComplexError(f"family {args.family} needs --n")
    if args.family in ("tented", "rhombic", "complete", "random") and args.r is None:
        raise ComplexError(f"family {args.family} needs --r")
    text = io.dumps(_generate(args), args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_search(args) -> int:
    outcome = search_cond(args.n, args.r, args.mode, args.budget)
    files = []
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        ext = "json" if args.format == "structured" else "txt"
        for k, K in enumerate(outcome.classes):
            path = out / f"class_{k}.{ext}"
            io.write_facet_file(K, path, args.format)
            files.append(str(path))
    summary = {"schema_version": SCHEMA_VERSION, "n": args.n, "r": args.r, "mode": args.mode,
               **outcome.summary(), "files": files,
               "classes": [[list(f) for f in K.facets] for K in outcome.classes]}
    text = "\n".join(
        [f"n = {args.n}, r = {args.r}, mode = {args.mode}: {len(outcome.classes)} classes, "
         f"exhaustive = {outcome.exhaustive}, nodes = {outcome.nodes_explored}, "
         f"time = {outcome.wall_time:.2f}s"]
        + [f"  class {k}: {len(K.facets)} facets" for k, K in enumerate(outcome.classes)]
    )
    _emit(summary, args.format, text)
    return EXIT_OK


def cmd_verify_remark(args) -> int:
    k1 = io.read_facet_file(args.k1) if args.k1 else None
    k2 = io.read_facet_file(args.k2) if args.k2 else None
    rep = verify_remark(k1, k2)
    out = {"schema_version": SCHEMA_VERSION, **rep.to_dict()}
    lines = [
        f"{'PASS' if c['passed'] else 'FAIL'}  {c['name']}: expected {c['expected']}, got {c['observed']}"
        for c in out["claims"]
    ]
    lines.append(f"{out['n_passed']}/{out['n_claims']} claims pass")
    if not rep.passed:
        lines.append(f"first failure: {rep.first_failure.name}")
    _emit(out, args.format, "\n".join(lines))
    return EXIT_OK if rep.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simplicial-spectra")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "structured"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[fmt], help="report on a facet file")
    p.add_argument("--input", required=True, metavar="PATH")
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", parents=[fmt], help="write a facet file")
    p.add_argument("family", choices=("tented", "rhombic", "complete", "k1", "k2", "random"))
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--p", type=float, default=0.5, help="facet probability (random)")
    p.add_argument("--seed", type=int, default=0, help="RNG seed (random)")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("search", parents=[fmt], help="enumerate complexes meeting the equality condition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "backtracking"), default="backtracking")
    p.add_argument("--budget", type=float, default=None, metavar="SECONDS")
    p.add_argument("--out-dir", metavar="DIR")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-remark", parents=[fmt], help="recheck the n = 6, 7 examples")
    p.add_argument("--k1", metavar="PATH", help="override the K1 facet file")
    p.add_argument("--k2", metavar="PATH", help="override the K2 facet file")
    p.set_defaults(func=cmd_verify_remark)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (io.FacetFileError, ComplexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
