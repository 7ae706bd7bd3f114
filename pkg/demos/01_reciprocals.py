# %% [markdown]
# # Reciprocals of sets
#
# A set F of naturals containing 0 has a unique reciprocal: the set whose
# indicator series multiplies F's to 1 over GF(2).

# %%
from f2recip import f2series as fs
from f2recip import setgen as sg

squares = sg.generate(sg.Squares(), 64)
sbar = fs.reciprocal(squares)
print("squares      ", squares.indices())
print("reciprocal   ", sbar.indices())
print("product      ", fs.mul_trunc(squares, sbar, 64).indices())

# %% [markdown]
# Three independent routes give the same coefficients: the blockwise linear
# recurrence, the infinite product F(q) F(q^2) F(q^4) ..., and counting
# tuples with sum x_i 2^i = n.

# %%
for algo in fs.ALGORITHMS:
    print(f"{algo:10s}", fs.reciprocal(squares, algo=algo).to_hex())

# %% [markdown]
# The reciprocal of the pentagonal numbers is the parity of the partition
# function.

# %%
pent = fs.reciprocal(sg.generate(sg.Pentagonal(), 30))
print("p(n) odd for n in", pent.indices())

# %% [markdown]
# Long prefixes are cheap.

# %%
import time

f = sg.generate(sg.Random(0.5, 1), 1 << 20)
t = time.perf_counter()
fbar = fs.reciprocal(f)
print(f"2^20 coefficients in {time.perf_counter() - t:.2f}s, density {fbar.popcount() / fbar.length:.4f}")
