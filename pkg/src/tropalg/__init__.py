"""Linear algebra over positive and idempotent semirings.

Closures, the stationary Bellman equation, the algebraic path problem and
their exact interval versions, written once and run over any semiring.
"""
from .semiring import (
    INF,
    MAX_PLUS,
    MAX_PLUS_COMPLETE,
    MIN_PLUS,
    NEG_INF,
    PLUS_TIMES,
    CarrierError,
    Counting,
    DivergenceError,
    MaxMin,
    MaxPlus,
    MinPlus,
    NonNegPlusTimes,
    OpCount,
    Semiring,
    SemiringError,
    Subtropical,
    UnsupportedOperation,
    idempotent_integral,
    idempotent_measure_integral,
    maslov_add,
    semiring_from_name,
)
from .linalg import (
    Matrix,
    closure,
    dot,
    mat_add,
    mat_leq,
    mat_mul,
    mat_pow,
    solve_bellman,
    star_block,
    star_elimination,
    star_series,
)
from .interval import (
    Interval,
    IntervalSemiring,
    bounds,
    elementary,
    exactness_check,
    interval_lift,
    interval_matrix,
    point_matrix,
)
from .graph import (
    WeightedDigraph,
    algebraic_path,
    brute_force_closure,
    dp_best_profit,
    graph_to_matrix,
    matrix_to_graph,
    path_weight,
)

__version__ = "0.1.0"
