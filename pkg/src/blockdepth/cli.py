"""Command-line interface: ``python3 -m blockdepth <command> ...``.

Exit codes: 0 success, 1 mathematical failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from .block import pi_even
from .cache import ComponentCache, component_rank, set_default_cache
from .components import ALGEBRAS, BASES, ResourceLimitError, evaluate
from .config import Config, OUTPUT_FORMATS
from .lie import BracketSyntaxError, BracketWord
from .linalg import nullspace, rank
from .poly import rational_str
from .relations import (
    RelationError,
    corollary_262,
    load_relation,
    odd_to_hoffman,
    regression_suite,
    verify_relation,
)
from .series import (
    compare_dimensions,
    rows_to_csv,
    table_to_csv,
    uneven_bk_table,
)
from .words import SymbolError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _certificate_out(cert, fmt: str) -> int:
    if fmt == "json":
        _emit(cert.dumps())
    else:
        _emit(f"{cert.status}: weight {cert.weight}, degree {cert.lie_degree}, scale {cert.scale}")
        for msg in cert.failures:
            _emit(f"  {msg}")
    return EXIT_OK if cert.verified else EXIT_FAIL


def cmd_bracket(args, cfg: Config) -> int:
    try:
        word = BracketWord.parse(args.word)
    except (BracketSyntaxError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    p = evaluate(word, args.algebra)
    if cfg.output_format == "json":
        _emit(json.dumps({"algebra": args.algebra, "word": str(word), "poly": p.to_json()}))
    else:
        _emit(str(p))
    if args.check_even and args.algebra == "even":
        if pi_even(evaluate(word, "block")) != p:
            _emit("projection of the block bracket disagrees with the even bracket")
            return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args, cfg: Config) -> int:
    try:
        text = Path(args.file).read_text(encoding="utf-8") if args.file != "-" else sys.stdin.read()
        RB, RD, r, W = load_relation(text)
    except (OSError, json.JSONDecodeError, RelationError, SymbolError) as exc:
        raise UsageError(str(exc)) from exc
    try:
        cert = verify_relation(RB, RD, r, W, args.basis)
    except RelationError as exc:
        _emit(f"hypothesis failure: {exc}")
        return EXIT_FAIL
    return _certificate_out(cert, cfg.output_format if cfg.output_format != "csv" else "json")


def cmd_corollary262(args, cfg: Config) -> int:
    try:
        cert = corollary_262(args.n, args.a, args.basis)
    except RelationError as exc:
        raise UsageError(str(exc)) from exc
    return _certificate_out(cert, cfg.output_format if cfg.output_format != "csv" else "json")


def cmd_regression(args, cfg: Config) -> int:
    results = regression_suite(args.basis)
    for res in results:
        _emit(f"{'PASS' if res.passed else 'FAIL'} {res.name}: {res.detail}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def _rank_job(job):
    algebra, W, r, cache_dir, basis = job
    set_default_cache(ComponentCache(cache_dir))
    return component_rank(algebra, W, r, basis)


def cmd_table(args, cfg: Config) -> int:
    if args.smax > cfg.weight_max or args.tmax > cfg.degree_max:
        raise UsageError(f"cutoffs exceed the configured bounds ({cfg.weight_max}, {cfg.degree_max})")
    if args.kind == "uneven-bk":
        _emit(table_to_csv(uneven_bk_table(args.smax, args.tmax)))
        return EXIT_OK
    if args.algebra is None:
        raise UsageError("--algebra is required for --kind compare")
    jobs = [(args.algebra, W, r, cfg.cache_dir, args.basis) for r in range(1, args.tmax + 1) for W in range(args.smax + 1)]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            ranks = dict(zip([(j[1], j[2]) for j in jobs], pool.map(_rank_job, jobs)))
    else:
        ranks = {(j[1], j[2]): _rank_job(j) for j in jobs}
    rows = compare_dimensions(args.algebra, args.smax, args.tmax, rank_of=lambda a, W, r: ranks[(W, r)])
    _emit(rows_to_csv(rows))
    return EXIT_FAIL if any(row.mismatch for row in rows) else EXIT_OK


def cmd_dict(args, cfg: Config) -> int:
    try:
        img = odd_to_hoffman(args.symbol)
    except SymbolError as exc:
        raise UsageError(str(exc)) from exc
    if cfg.output_format == "json":
        _emit(json.dumps({
            "source": str(img.source),
            "target": str(img.target) if img.reduced else None,
            "scale": rational_str(img.scale),
            "reduced": img.reduced,
        }))
    else:
        _emit(str(img))
    return EXIT_OK if img.reduced else EXIT_FAIL


def cmd_span(args, cfg: Config) -> int:
    set_default_cache(ComponentCache(cfg.cache_dir))
    from .cache import default_cache

    M = default_cache().matrix(args.algebra, args.weight, args.degree, args.basis, cfg.max_rows)
    kernel = nullspace(M)
    out = {
        "algebra": args.algebra,
        "weight": args.weight,
        "degree": args.degree,
        "rows": M.nrows,
        "rank": rank(M),
        "relations": [[rational_str(v) for v in vec] for vec in kernel],
    }
    if cfg.output_format == "json":
        _emit(json.dumps(out))
    else:
        _emit(f"rows {out['rows']}, rank {out['rank']}")
        for vec in out["relations"]:
            _emit("  (" + ", ".join(vec) + ")")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blockdepth", description="Block graded and depth graded Lie algebra computations.")
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default="text")
    parser.add_argument("--cache-dir", type=Path, default=None, help="overrides $BLOCKDEPTH_CACHE_DIR")
    parser.add_argument("--no-cache", action="store_true")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--weight-max", type=int, default=34)
    parser.add_argument("--degree-max", type=int, default=5)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bracket", help="evaluate a bracket word")
    p.add_argument("--algebra", choices=ALGEBRAS, default="depth")
    p.add_argument("--check-even", action="store_true", help="for --algebra even, compare with the projected block bracket")
    p.add_argument("word")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("verify", help="verify a relation file ('-' for stdin)")
    p.add_argument("file")
    p.add_argument("--basis", choices=BASES, default="lyndon")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corollary262", help="verify one member of the (2,6,2) family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--basis", choices=BASES, default="lyndon")
    p.set_defaults(func=cmd_corollary262)

    p = sub.add_parser("regression", help="run every built-in relation")
    p.add_argument("--basis", choices=BASES, default="lyndon")
    p.set_defaults(func=cmd_regression)

    p = sub.add_parser("table", help="generating-series tables and dimension comparisons")
    p.add_argument("--kind", choices=("uneven-bk", "compare"), required=True)
    p.add_argument("--algebra", choices=ALGEBRAS)
    p.add_argument("--smax", type=int, default=34)
    p.add_argument("--tmax", type=int, default=3)
    p.add_argument("--basis", choices=BASES, default="lyndon")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("dict", help="almost-Hoffman image of a totally odd zeta value")
    p.add_argument("symbol")
    p.set_defaults(func=cmd_dict)

    p = sub.add_parser("span", help="rank and relations of a component")
    p.add_argument("--algebra", choices=ALGEBRAS, required=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--basis", choices=BASES, default="lyndon")
    p.set_defaults(func=cmd_span)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cache_dir = None if args.no_cache else args.cache_dir
        cfg = Config(weight_max=args.weight_max, degree_max=args.degree_max, output_format=args.format, jobs=args.jobs)
        if args.no_cache:
            cfg.cache_dir = None
        elif cache_dir is not None:
            cfg.cache_dir = cache_dir
        set_default_cache(ComponentCache(cfg.cache_dir))
        return args.func(args, cfg)
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ResourceLimitError as exc:
        sys.stderr.write(f"resource limit: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
