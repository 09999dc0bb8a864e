"""Command-line front end.

    tropalg --semiring minplus --task closure graph.tsv
    tropalg --semiring maxplus --task bellman A.txt --b B.txt --count-ops

Exit codes: 0 success, 1 parse/validation/usage error, 2 divergent closure,
3 operation not supported by the semiring.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import formats, graph, linalg
from .interval import IntervalSemiring
from .linalg import Matrix
from .semiring import Counting, DivergenceError, OpCount, Semiring, UnsupportedOperation, semiring_from_name

TASKS = ("closure", "bellman", "dot", "path")

EXIT_OK, EXIT_INPUT, EXIT_DIVERGENCE, EXIT_UNSUPPORTED = 0, 1, 2, 3


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    input: str
    semiring: Optional[str] = None
    task: str = "closure"
    algorithm: str = "elimination"
    interval_mode: bool = False
    count_ops: bool = False
    b: Optional[str] = None
    output: Optional[str] = None
    max_terms: Optional[int] = None
    strict_divergence: bool = False
    stdout: object = field(default=None, repr=False)

    def validate(self):
        if self.task not in TASKS:
            raise UsageError(f"unknown task {self.task!r}; choose from {', '.join(TASKS)}")
        if self.algorithm not in linalg.ALGORITHMS:
            raise UsageError(f"unknown algorithm {self.algorithm!r}")
        if self.task in ("bellman", "dot") and not self.b:
            raise UsageError(f"task {self.task} needs a second input (--b)")
        if self.max_terms is not None and self.max_terms < 0:
            raise UsageError("--max-terms must be nonnegative")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _scalar_semiring(config: RunConfig, text: str) -> Semiring:
    name = config.semiring
    if name is None and formats.looks_like_graph(text):
        name = formats.graph_semiring(text)
    if name is None:
        raise UsageError("no semiring given (--semiring)")
    try:
        return semiring_from_name(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_input(path: str, config: RunConfig, semiring: Optional[Semiring] = None):
    """Read a matrix or graph file into a Matrix or WeightedDigraph."""
    text = _read(path)
    sr = semiring or _scalar_semiring(config, text)
    if formats.looks_like_graph(text):
        return formats.parse_graph(text, sr if config.semiring else None, config.interval_mode, source=path)
    return formats.parse_matrix(text, sr, config.interval_mode, source=path)


def _complete(A: Matrix, strict: bool) -> Matrix:
    if strict or A.semiring.is_complete:
        return A
    c = A.semiring.completion()
    if c is None:
        return A
    return Matrix._wrap(c, A.entries)


def _instrument(A: Matrix, ops: OpCount) -> Matrix:
    sr = A.semiring
    if isinstance(sr, IntervalSemiring):
        # count the scalar operations performed on both bounds
        return Matrix._wrap(IntervalSemiring(Counting(sr.scalar, ops)), A.entries)
    return Matrix._wrap(Counting(sr, ops), A.entries)


def _compute(config: RunConfig, ops: Optional[OpCount]):
    first = parse_input(config.input, config)
    header = []
    if isinstance(first, graph.WeightedDigraph):
        header.append("#nodes " + " ".join(first.nodes))
        A = graph.graph_to_matrix(first)
    else:
        if config.task == "path":
            raise UsageError("task path needs a graph file")
        A = first
    scalar = A.semiring.scalar if isinstance(A.semiring, IntervalSemiring) else A.semiring
    if config.task in ("closure", "path", "bellman"):
        A = _complete(A, config.strict_divergence)
    if ops is not None:
        A = _instrument(A, ops)

    if config.task in ("closure", "path"):
        return header, linalg.closure(A, config.algorithm, config.max_terms)

    second = parse_input(config.b, config, scalar)
    if isinstance(second, graph.WeightedDigraph):
        raise UsageError("--b must be a matrix file")
    B = Matrix._wrap(A.semiring, second.entries)
    if config.task == "bellman":
        if A.rows != A.cols or B.rows != A.rows:
            raise UsageError(f"bellman needs A n×n and B n×s, got {A.shape} and {B.shape}")
        return header, linalg.mat_mul(linalg.closure(A, config.algorithm, config.max_terms), B)
    try:
        value = linalg.dot(A, B)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return [], Matrix._wrap(A.semiring, [[value]])


def run(config: RunConfig) -> int:
    out = config.stdout or sys.stdout
    err = sys.stderr
    try:
        config.validate()
        ops = OpCount() if config.count_ops else None
        header, result = _compute(config, ops)
    except (UsageError, formats.ParseError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except DivergenceError as exc:
        print(f"divergent closure: {exc}", file=err)
        return EXIT_DIVERGENCE
    except UnsupportedOperation as exc:
        print(f"unsupported: {exc}", file=err)
        return EXIT_UNSUPPORTED

    text = "".join(h + "\n" for h in header) + formats.format_matrix(result)
    if ops is not None:
        text += f"#ops {ops.summary()}\n"
    if config.output:
        try:
            Path(config.output).write_text(text)
        except OSError as exc:
            print(f"error: cannot write {config.output}: {exc.strerror}", file=err)
            return EXIT_INPUT
    else:
        out.write(text)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # exit code 2 is reserved for divergence
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tropalg", description="Closures, Bellman equations and path problems over semirings.")
    p.add_argument("input", help="matrix file or graph TSV file")
    p.add_argument("--semiring", help="maxplus, maxplus-complete, minplus, maxmin:<a>:<b>, plustimes, subtropical:<h>")
    p.add_argument("--task", default="closure", choices=TASKS)
    p.add_argument("--algorithm", default="elimination", choices=linalg.ALGORITHMS)
    p.add_argument("--interval", action="store_true", help="accept lo..hi interval cells")
    p.add_argument("--count-ops", action="store_true", help="append basic-operation counts")
    p.add_argument("--b", help="right-hand side (bellman) or second vector (dot)")
    p.add_argument("--output", help="write the result here instead of stdout")
    p.add_argument("--max-terms", type=int, help="terms of the series algorithm (default n)")
    p.add_argument("--strict-divergence", action="store_true",
                   help="fail with exit code 2 instead of completing the carrier")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        input=args.input,
        semiring=args.semiring,
        task=args.task,
        algorithm=args.algorithm,
        interval_mode=args.interval,
        count_ops=args.count_ops,
        b=args.b,
        output=args.output,
        max_terms=args.max_terms,
        strict_divergence=args.strict_divergence,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
