# %% [markdown]
# # Dynamic programming with the Bellman equation
# Arc weights are transition profits, the column B holds exit profits.
# The best total profit from each node solves X = AX ⊕ B over max-plus.

# %%
from tropalg import MAX_PLUS, NEG_INF, Matrix, WeightedDigraph, dp_best_profit, mat_pow, solve_bellman

G = WeightedDigraph.from_arcs(MAX_PLUS, ["1", "2"], [("1", "2", 3)])
B = Matrix(MAX_PLUS, [[0], [10]])
print(dp_best_profit(G, B))

# %% [markdown]
# A larger instance with losses, and the fixed-point check.

# %%
A = Matrix(MAX_PLUS, [
    [NEG_INF, 2, -1, NEG_INF],
    [NEG_INF, NEG_INF, 4, -3],
    [-6, NEG_INF, NEG_INF, 1],
    [NEG_INF, NEG_INF, NEG_INF, NEG_INF],
])
B = Matrix(MAX_PLUS, [[0], [-2], [1], [5]])
X = solve_bellman(A, B)
print(X)
print("AX ⊕ B == X:", A @ X + B == X)

# %% [markdown]
# Plans of exactly two moves: (A²B)_i.

# %%
print(mat_pow(A, 2) @ B)
