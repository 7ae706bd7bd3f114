# %% [markdown]
# # Quadratic families and random sets

# %%
from f2recip import characterizations as ch
from f2recip import f2series as fs
from f2recip import setgen as sg
from f2recip import stats

bound = 100000
for c1, c2 in sg.canonical_theta_pairs(10):
    fbar = fs.reciprocal(sg.generate(sg.Theta(c1, c2), bound + 1))
    uniform = ch.theta_uniformity(c1, c2, 4)
    print(f"Theta({c1},{c2}): {stats.count_upto(fbar, bound):6d} members <= {bound}, uniform mod 16: {uniform}")

# %% [markdown]
# Reciprocals of random sets sit near density 1/2 whatever the density of
# the set itself.

# %%
for p in (0.1, 0.5, 0.9):
    exp = stats.random_experiment(p, range(8), (1 << 17) + 1)
    print(f"p={p}: mean {exp.mean:.4f} spread {exp.spread:.4f}")

# %% [markdown]
# Deviation from n/2, scaled by sqrt(n log log n / 2).

# %%
fbar = fs.reciprocal(sg.generate(sg.Pentagonal(), 1 << 18))
rep = stats.density_report(fbar)
for n, v in rep.lil[-5:]:
    print(f"n={n:7d} lil={v:+.4f}")
print("max |walk|:", max(abs(w) for w in rep.walk))
