# %% [markdown]
# # Exact interval bounds
# Arc lengths are only known up to an interval. Running the ordinary closure
# algorithm over intervals gives the exact range of every shortest-path
# length, at twice the cost of a single scalar run.

# %%
from tropalg import INF, MIN_PLUS, Counting, IntervalSemiring, Matrix, exactness_check, interval_matrix, point_matrix, star_elimination
from tropalg.interval import interval_lift

# min-plus order is reversed: the lower bound is the longer length
slow = Matrix(MIN_PLUS, [[INF, 3, 9], [INF, INF, 4], [2, INF, INF]])
fast = Matrix(MIN_PLUS, [[INF, 1, 6], [INF, INF, 2], [1, INF, INF]])
box = interval_matrix(slow, fast)
print(interval_lift(star_elimination)(box))

# %% [markdown]
# Sampling 1000 concrete matrices from the box: every result lies inside
# the bounds, and the bounds are hit by the endpoint matrices.

# %%
report = exactness_check(star_elimination, [box], n_samples=1000, seed=0)
print("violations:", len(report.violations), "bounds attained:", report.lower_attained and report.upper_attained)

# %% [markdown]
# Counting basic operations.

# %%
scalar = Counting(MIN_PLUS)
star_elimination(fast.over(scalar))
lifted = IntervalSemiring(Counting(MIN_PLUS))
star_elimination(Matrix(lifted, point_matrix(fast).entries))
print("scalar:", scalar.ops.total, "interval:", lifted.scalar.ops.total)
