"""Weighted digraphs as square matrices, and the algebraic path problem."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .linalg import Matrix, mat_pow, solve_bellman, star_elimination
from .semiring import DivergenceError, Semiring

MAX_ORACLE_NODES = 8


@dataclass(frozen=True)
class WeightedDigraph:
    """Nodes in a fixed order plus at most one weighted arc per ordered pair.

    Build it with :meth:`from_arcs`, which merges parallel arcs with ⊕ and
    drops arcs of weight 𝟘 (those encode a missing arc).
    """

    semiring: Semiring
    nodes: tuple
    arcs: Mapping  # (src, dst) -> weight

    @classmethod
    def from_arcs(cls, semiring: Semiring, nodes: Sequence, arcs: Iterable) -> "WeightedDigraph":
        nodes = tuple(str(n) for n in nodes)
        if len(set(nodes)) != len(nodes):
            raise ValueError("duplicate node names")
        known = set(nodes)
        merged = {}
        for src, dst, w in arcs:
            src, dst = str(src), str(dst)
            for n in (src, dst):
                if n not in known:
                    raise ValueError(f"arc {src}->{dst} references unknown node {n!r}")
            w = semiring.check(w)
            key = (src, dst)
            merged[key] = semiring.add(merged[key], w) if key in merged else w
        zero = semiring.zero
        return cls(semiring, nodes, {k: w for k, w in merged.items() if w != zero})

    @property
    def index(self) -> dict:
        return {n: i for i, n in enumerate(self.nodes)}

    def __len__(self):
        return len(self.nodes)


def graph_to_matrix(G: WeightedDigraph) -> Matrix:
    idx = G.index
    n = len(G.nodes)
    rows = [[G.semiring.zero] * n for _ in range(n)]
    for (s, d), w in G.arcs.items():
        rows[idx[s]][idx[d]] = w
    return Matrix._wrap(G.semiring, rows)


def matrix_to_graph(A: Matrix, node_names: Optional[Sequence] = None) -> WeightedDigraph:
    if A.rows != A.cols:
        raise ValueError(f"expected a square matrix, got {A.rows}x{A.cols}")
    names = [str(i + 1) for i in range(A.rows)] if node_names is None else list(node_names)
    if len(names) != A.rows:
        raise ValueError(f"{len(names)} names for {A.rows} nodes")
    z = A.semiring.zero
    arcs = [(names[i], names[j], x) for i, r in enumerate(A.entries) for j, x in enumerate(r) if x != z]
    return WeightedDigraph.from_arcs(A.semiring, names, arcs)


def path_weight(G: WeightedDigraph, path: Sequence):
    """⊙-product of the arc weights along ``path``; 𝟙 for a single node."""
    path = [str(p) for p in path]
    if not path:
        raise ValueError("a path has at least one node")
    if path[0] not in G.index:
        raise ValueError(f"unknown node {path[0]!r}")
    sr = G.semiring
    w = sr.one
    for s, d in zip(path, path[1:]):
        if (s, d) not in G.arcs:
            raise ValueError(f"no arc {s}->{d}")
        w = sr.mul(w, G.arcs[s, d])
    return w


def _completed(A: Matrix, strict: bool) -> Matrix:
    if strict or A.semiring.is_complete:
        return A
    c = A.semiring.completion()
    return A if c is None else Matrix._wrap(c, A.entries)


def algebraic_path(G: WeightedDigraph, strict: bool = False) -> Matrix:
    """``A*`` of the adjacency matrix: best path weight between every pair.

    Divergent instances are solved in the completed carrier (entries may be
    infinite) unless ``strict`` is set, in which case
    :class:`~tropalg.semiring.DivergenceError` propagates.
    """
    return star_elimination(_completed(graph_to_matrix(G), strict))


def _is_maxplus(sr: Semiring) -> bool:
    return sr.name in ("maxplus", "maxplus-complete")


def dp_best_profit(G: WeightedDigraph, terminal: Matrix, strict: bool = False) -> Matrix:
    """Best total profit from each node: arc profits plus one exit profit.

    ``terminal`` is the n×1 column of exit profits.  Returns ``A* B``.
    """
    if not _is_maxplus(G.semiring):
        raise ValueError(f"profit problems are posed over max-plus, not {G.semiring.name}")
    if terminal.shape != (len(G.nodes), 1):
        raise ValueError(f"terminal must be {len(G.nodes)}x1, got {terminal.rows}x{terminal.cols}")
    A = _completed(graph_to_matrix(G), strict)
    B = terminal if terminal.semiring == A.semiring else Matrix(A.semiring, terminal.entries)
    return solve_bellman(A, B)


def best_profit_fixed_length(G: WeightedDigraph, terminal: Matrix, k: int) -> Matrix:
    """Best profit over plans of exactly ``k`` arcs: ``A^k B``."""
    A = graph_to_matrix(G)
    B = terminal if terminal.semiring == A.semiring else Matrix(A.semiring, terminal.entries)
    return mat_pow(A, k) @ B


def brute_force_closure(G: WeightedDigraph, max_len: Optional[int] = None) -> Matrix:
    """⊕ of the weights of every path of length ≤ ``max_len``, by enumeration.

    Exponential; refuses graphs with more than eight nodes.  A reference to
    check the closure algorithms against, not a solver.
    """
    n = len(G.nodes)
    if n > MAX_ORACLE_NODES:
        raise ValueError(f"brute force is limited to {MAX_ORACLE_NODES} nodes, got {n}")
    if max_len is None:
        max_len = max(n - 1, 0)
    sr = G.semiring
    idx = G.index
    succ = [[] for _ in range(n)]
    for (s, d), w in G.arcs.items():
        succ[idx[s]].append((idx[d], w))
    for lst in succ:
        lst.sort()
    total = [[sr.zero] * n for _ in range(n)]

    def walk(start, node, weight, length):
        if length:
            total[start][node] = sr.add(total[start][node], weight)
        if length == max_len:
            return
        for nxt, w in succ[node]:
            walk(start, nxt, sr.mul(weight, w), length + 1)

    for i in range(n):
        walk(i, i, sr.one, 0)
        total[i][i] = sr.add(total[i][i], sr.one)
    return Matrix._wrap(sr, total)


def enumerate_paths(G: WeightedDigraph, src, dst, max_len: int):
    """All paths ``src -> dst`` with at most ``max_len`` arcs, as node tuples."""
    src, dst = str(src), str(dst)
    succ = {n: [] for n in G.nodes}
    for s, d in sorted(G.arcs):
        succ[s].append(d)
    out = []

    def walk(path):
        if path[-1] == dst:
            out.append(tuple(path))
        if len(path) - 1 == max_len:
            return
        for nxt in succ[path[-1]]:
            walk(path + [nxt])

    walk([src])
    return out
