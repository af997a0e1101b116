"""Command-line front end.

Exit status: 0 on success, 1 on usage or input errors, 2 when ``--check``
finds a disagreement with the brute-force oracle.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Sequence

from .bench import format_table, run_bench
from .enumeration import (
    ConsistencyError,
    enumerate_baseline,
    enumerate_layered,
    enumerate_parallel,
)
from .geometry import GeometryError, PointSet, SigmaOrder
from .inputs import GeneratorSpecError, ParseError, generate, parse_points
from .layers import peel
from .oracle import ORACLE_CAP, brute_force

ALGOS = ("baseline", "layered", "parallel", "oracle")
EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    input: str | None = None
    gen: str | None = None
    algo: str = "layered"
    workers: int = 1
    min_size: int = 3
    format: str = "text"
    seed: int | None = None
    check: bool = False
    bench: bool = False
    sigma_shuffle: bool = False

    def validate(self) -> None:
        if (self.input is None) == (self.gen is None):
            raise UsageError("give exactly one of an input file or --gen")
        if self.gen is not None and self.seed is None:
            raise UsageError("--gen needs --seed")
        if self.sigma_shuffle and self.seed is None:
            raise UsageError("--sigma-shuffle needs --seed")
        if self.algo not in ALGOS:
            raise UsageError(f"unknown algo {self.algo!r}")
        if self.workers < 1:
            raise UsageError("--workers must be at least 1")
        if self.min_size < 3:
            raise UsageError("--min-size must be at least 3")
        if self.format not in ("text", "json"):
            raise UsageError(f"unknown format {self.format!r}")


def load_points(config: RunConfig, stdin=None) -> PointSet:
    if config.gen is not None:
        return generate(config.gen, config.seed)
    if config.input == "-":
        return parse_points((stdin or sys.stdin).read())
    with open(config.input, encoding="ascii") as fh:
        return parse_points(fh.read())


def _enumerate(ps, config, sigma):
    if config.algo == "baseline":
        return enumerate_baseline(ps, sigma, config.min_size)
    if config.algo == "layered":
        return enumerate_layered(ps, sigma, config.min_size)
    if config.algo == "parallel":
        return enumerate_parallel(ps, sigma, config.min_size, config.workers)
    return brute_force(ps, config.min_size)


def render(ps: PointSet, sets, config: RunConfig, m: int, ms: float) -> str:
    if config.format == "json":
        doc = {
            "points": [list(p) for p in ps.as_tuples()],
            "sets": [list(s) for s in sets],
            "stats": {"n": len(ps), "m": m, "sets": len(sets),
                      "algo": config.algo, "ms": round(ms, 3)},
        }
        return json.dumps(doc) + "\n"
    lines = [" ".join(map(str, s)) for s in sets]
    lines.append(f"n={len(ps)} m={m} sets={len(sets)} algo={config.algo} ms={ms:.1f}")
    return "\n".join(lines) + "\n"


def run(config: RunConfig, stdout=None, stderr=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        config.validate()
        ps = load_points(config, stdin)
    except (UsageError, ParseError, GeneratorSpecError, GeometryError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE

    sigma = SigmaOrder.shuffled(len(ps), config.seed) if config.sigma_shuffle else None

    if config.bench:
        workers = sorted({1, 2, 4, config.workers})
        stdout.write(format_table(ps, run_bench(ps, workers, config.min_size, sigma)) + "\n")
        return EXIT_OK

    t0 = time.perf_counter()
    try:
        result = _enumerate(ps, config, sigma)
    except ConsistencyError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_MISMATCH
    except ValueError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    ms = (time.perf_counter() - t0) * 1000
    m = result.stats.get("m") or peel(ps).depth
    stdout.write(render(ps, result.sets, config, m, ms))

    if config.check:
        if len(ps) > ORACLE_CAP:
            print(f"warning: n={len(ps)} above oracle cap {ORACLE_CAP}; check skipped",
                  file=stderr)
            return EXIT_OK
        expected = set(brute_force(ps, config.min_size).sets)
        got = set(result.sets)
        if expected != got:
            for s in sorted(expected - got):
                print("missing: " + " ".join(map(str, s)), file=stderr)
            for s in sorted(got - expected):
                print("extra: " + " ".join(map(str, s)), file=stderr)
            return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="collinear",
        description="Enumerate maximal collinear subsets of a planar integer point set.")
    ap.add_argument("input", nargs="?", help="point file of 'x y' lines, or - for stdin")
    ap.add_argument("--gen", help="generator: grid:WxH | random:N,box=B | "
                                  "planted:lines=L,per_line=K,noise=R[,box=B]")
    ap.add_argument("--seed", type=int, help="seed for --gen and --sigma-shuffle")
    ap.add_argument("--algo", default="layered", choices=ALGOS)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--min-size", type=int, default=3)
    ap.add_argument("--format", default="text", choices=("text", "json"))
    ap.add_argument("--check", action="store_true",
                    help="compare against the brute-force oracle; exit 2 on mismatch")
    ap.add_argument("--bench", action="store_true",
                    help="time every strategy instead of printing sets")
    ap.add_argument("--sigma-shuffle", action="store_true",
                    help="process pivots in a seeded random order")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    config = RunConfig(
        input=args.input, gen=args.gen, algo=args.algo, workers=args.workers,
        min_size=args.min_size, format=args.format, seed=args.seed,
        check=args.check, bench=args.bench, sigma_shuffle=args.sigma_shuffle)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
