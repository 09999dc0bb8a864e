# %% [markdown]
# # The algebraic path problem
# One closure routine answers shortest-path, widest-path and matrix-inversion
# questions, depending only on the semiring the matrix lives in.

# %%
import numpy as np

from tropalg import (
    INF,
    MIN_PLUS,
    NEG_INF,
    PLUS_TIMES,
    MaxMin,
    Matrix,
    WeightedDigraph,
    algebraic_path,
    brute_force_closure,
    star_block,
    star_elimination,
    star_series,
)

# %% [markdown]
# Shortest paths (min-plus): arc 1→3 costs 5, but 1→2→3 costs 1 + 2.

# %%
roads = WeightedDigraph.from_arcs(MIN_PLUS, ["1", "2", "3"], [("1", "2", 1), ("2", "3", 2), ("1", "3", 5)])
print(algebraic_path(roads))

# %% [markdown]
# Widest paths (max-min): the same graph read as pipe widths.

# %%
pipes = WeightedDigraph.from_arcs(MaxMin(NEG_INF, INF), ["1", "2", "3"], [("1", "2", 5), ("2", "3", 2), ("1", "3", 1)])
print("widest 1→3:", algebraic_path(pipes)[0, 2])

# %% [markdown]
# Three closure algorithms agree, and exhaustive path enumeration confirms them.

# %%
A = Matrix(MIN_PLUS, [[INF, 4, 1, INF], [INF, INF, INF, 1], [INF, 2, INF, 6], [3, INF, INF, INF]])
G = WeightedDigraph.from_arcs(MIN_PLUS, "abcd", [(s, d, A[i, j]) for i, s in enumerate("abcd") for j, d in enumerate("abcd") if A[i, j] != INF])
print(star_elimination(A) == star_block(A) == star_series(A).matrix == brute_force_closure(G))

# %% [markdown]
# Over ordinary nonnegative numbers the closure is (I − A)⁻¹.

# %%
R = np.array([[0.1, 0.3], [0.2, 0.4]])
print(np.array(star_elimination(Matrix(PLUS_TIMES, R.tolist())).tolist()))
print(np.linalg.inv(np.eye(2) - R))
