# %% [markdown]
# # Semirings and dequantization
# The same two operations, ⊕ and ⊙, in five number systems.

# %%
import math

from tropalg import MAX_PLUS, MAX_PLUS_COMPLETE, MIN_PLUS, PLUS_TIMES, MaxMin, Subtropical, maslov_add

for sr in (MAX_PLUS, MIN_PLUS, MaxMin(0, 10), PLUS_TIMES, Subtropical(0.5)):
    print(f"{sr.name:16} 3 ⊕ 5 = {sr.add(3, 5):<8.4g} 3 ⊙ 5 = {sr.mul(3, 5):<4g} 𝟘 = {sr.zero:<5} 𝟙 = {sr.one}")

# %% [markdown]
# Canonical order: in min-plus the *smaller* number is the larger element.

# %%
print("minplus: 5 ⪯ 3 ?", MIN_PLUS.leq(5, 3))
print("maxplus: 5 ⪯ 3 ?", MAX_PLUS.leq(5, 3))

# %% [markdown]
# Kleene star: the regularized sum 𝟙 ⊕ a ⊕ a² ⊕ …

# %%
print("plus-times star(0.5) =", PLUS_TIMES.star(0.5))
print("max-plus   star(-3)  =", MAX_PLUS.star(-3))
print("completed  star(2)   =", MAX_PLUS_COMPLETE.star(2))

# %% [markdown]
# Dequantization: as h shrinks, h·log(e^{u/h} + e^{v/h}) collapses onto max(u, v).

# %%
u, v = 1.0, 1.0
for h in (1, 0.1, 0.01, 0.001):
    w = maslov_add(u, v, h)
    print(f"h={h:<6} u ⊕_h v = {w:.6f}   gap = {w - max(u, v):.2e}   bound h·log2 = {h * math.log(2):.2e}")
