"""Text formats for matrices and graphs.

Matrix files start with ``<rows> <cols>`` followed by row-major values.
Graph files are tab-separated ``src dst weight`` lines with optional
``#semiring <id>`` and ``#nodes <n1> <n2> ...`` headers.  Values are
decimal numbers, ``inf`` or ``-inf``; in interval mode ``lo..hi`` is an
interval and a bare value a point interval.  In matrix files every line
starting with ``#`` is a comment; in graph files only ``# `` (hash, space)
and a lone ``#`` are, other ``#word`` lines being directives.
"""
from __future__ import annotations

from typing import Optional

from .graph import WeightedDigraph
from .interval import Interval, IntervalSemiring
from .linalg import Matrix
from .semiring import CarrierError, Semiring, format_value, parse_value, semiring_from_name


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None, source=None):
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
            if column is not None:
                where += f"{column}:"
        super().__init__(f"{where} {message}" if where else message)
        self.line = line
        self.column = column


def _is_comment(line: str) -> bool:
    s = line.strip()
    return not s or s == "#" or s.startswith("# ")


def _tokens(line: str):
    """Whitespace-separated tokens with their 1-based columns."""
    out = []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def parse_element(token: str, semiring: Semiring, interval: bool = False):
    """Parse one cell; ``semiring`` is the scalar semiring."""
    if ".." in token:
        if not interval:
            raise ValueError(f"interval {token!r} given outside interval mode")
        lo, _, hi = token.partition("..")
        return IntervalSemiring(semiring).interval(parse_value(lo), parse_value(hi))
    v = semiring.check(parse_value(token))
    return Interval(v, v) if interval else v


def _element_at(token, col, lineno, semiring, interval, source):
    try:
        return parse_element(token, semiring, interval)
    except CarrierError as exc:
        raise ParseError(str(exc), lineno, col, source) from None
    except ValueError as exc:
        raise ParseError(str(exc), lineno, col, source) from None


def _semiring_for(interval, semiring):
    return IntervalSemiring(semiring) if interval else semiring


def parse_matrix(text: str, semiring: Semiring, interval: bool = False, source: Optional[str] = None) -> Matrix:
    # matrix files have no directives: every '#' line is a comment
    lines = [(n, l) for n, l in enumerate(text.splitlines(), 1) if not l.lstrip().startswith("#") and l.strip()]
    if not lines:
        raise ParseError("empty matrix file", source=source)
    lineno, header = lines[0]
    head = _tokens(header)
    if len(head) != 2:
        raise ParseError("expected header '<rows> <cols>'", lineno, 1, source)
    try:
        rows, cols = int(head[0][0]), int(head[1][0])
    except ValueError:
        raise ParseError("expected header '<rows> <cols>'", lineno, 1, source) from None
    if rows < 1 or cols < 1:
        raise ParseError("matrix dimensions must be positive", lineno, 1, source)
    cells = []
    for lineno, line in lines[1:]:
        for tok, col in _tokens(line):
            if len(cells) == rows * cols:
                raise ParseError(f"more than {rows * cols} values", lineno, col, source)
            cells.append(_element_at(tok, col, lineno, semiring, interval, source))
    if len(cells) != rows * cols:
        raise ParseError(f"expected {rows * cols} values, found {len(cells)}", source=source)
    return Matrix._wrap(
        _semiring_for(interval, semiring), [cells[i * cols:(i + 1) * cols] for i in range(rows)]
    )


def format_element(x) -> str:
    if isinstance(x, Interval):
        return f"{format_value(x.lo)}..{format_value(x.hi)}"
    return format_value(x)


def format_matrix(A: Matrix) -> str:
    lines = [f"{A.rows} {A.cols}"]
    lines += [" ".join(format_element(x) for x in r) for r in A.entries]
    return "\n".join(lines) + "\n"


def graph_semiring(text: str) -> Optional[str]:
    """The ``#semiring`` directive of a graph file, if present."""
    for line in text.splitlines():
        s = line.strip()
        if s.startswith("#semiring"):
            parts = s.split()
            return parts[1] if len(parts) > 1 else None
    return None


def parse_graph(
    text: str,
    semiring: Optional[Semiring] = None,
    interval: bool = False,
    source: Optional[str] = None,
) -> WeightedDigraph:
    """Parse a graph file.  ``semiring`` overrides a ``#semiring`` header."""
    declared = None
    nodes = None
    raw_arcs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if _is_comment(line):
            continue
        s = line.strip()
        if s.startswith("#"):
            parts = s.split()
            key = parts[0]
            if key == "#semiring":
                if len(parts) != 2:
                    raise ParseError("expected '#semiring <id>'", lineno, 1, source)
                try:
                    declared = semiring_from_name(parts[1])
                except ValueError as exc:
                    raise ParseError(str(exc), lineno, len(key) + 2, source) from None
            elif key == "#nodes":
                if len(parts) < 2:
                    raise ParseError("'#nodes' needs at least one name", lineno, 1, source)
                nodes = parts[1:]
            else:
                raise ParseError(f"unknown directive {key!r}", lineno, 1, source)
            continue
        fields = line.rstrip("\r\n").split("\t")
        if len(fields) != 3:
            raise ParseError(f"expected 'src<TAB>dst<TAB>weight', found {len(fields)} fields", lineno, 1, source)
        col = len(fields[0]) + len(fields[1]) + 3
        raw_arcs.append((fields[0].strip(), fields[1].strip(), fields[2].strip(), lineno, col))

    sr = semiring or declared
    if sr is None:
        raise ParseError("no semiring given and no '#semiring' header", source=source)
    if semiring is not None and declared is not None and semiring != declared:
        raise ParseError(f"semiring {semiring.name} conflicts with header {declared.name}", source=source)
    if nodes is None:
        nodes = []
        for s_, d, *_ in raw_arcs:
            for n in (s_, d):
                if n not in nodes:
                    nodes.append(n)
    known = set(nodes)
    arcs = []
    for s_, d, w, lineno, col in raw_arcs:
        for n, c in ((s_, 1), (d, len(s_) + 2)):
            if n not in known:
                raise ParseError(f"unknown node {n!r}", lineno, c, source)
        arcs.append((s_, d, _element_at(w, col, lineno, sr, interval, source)))
    return WeightedDigraph.from_arcs(_semiring_for(interval, sr), nodes, arcs)


def format_graph(G: WeightedDigraph) -> str:
    sr = G.semiring
    name = sr.scalar.name if isinstance(sr, IntervalSemiring) else sr.name
    lines = [f"#semiring {name}", "#nodes " + " ".join(G.nodes)]
    lines += [f"{s}\t{d}\t{format_element(w)}" for (s, d), w in G.arcs.items()]
    return "\n".join(lines) + "\n"


def looks_like_graph(text: str) -> bool:
    """Graph files have tab-separated data lines; matrix files open with ``<rows> <cols>``."""
    directives = False
    for line in text.splitlines():
        s = line.strip()
        if not s:
            continue
        if s.startswith("#"):
            directives = directives or s.startswith(("#semiring", "#nodes"))
            continue
        return "\t" in line
    return directives
