# %% [markdown]
# # Closed forms
#
# Three families have reciprocals with explicit descriptions.  Each is
# compared here against the generic computation.

# %%
from f2recip import characterizations as ch
from f2recip import f2series as fs
from f2recip import setgen as sg

n = 1 << 14
for m in (1, 2, 3):
    generic = fs.reciprocal(sg.generate(sg.PowersOfTwo(m), n))
    print(f"powers of 2^{m}: closed form matches = {ch.abar_m(m, n) == generic}")
print("first members for m=2:", ch.abar_m(2, 100).indices())

# %% [markdown]
# Squares: even members are twice squares, n = 1 mod 4 is decided by the
# factorization of n, and n = 3 mod 4 by counting representations by a
# quadratic form.

# %%
sq = fs.reciprocal(sg.generate(sg.Squares(), 200))
for k in (2, 18, 13, 25, 45, 3, 23):
    bit, how = ch.sbar_member(k)
    print(f"{k:4d} member={bit} generic={sq[k]} via {how}")

# %% [markdown]
# The reduced quadratic form decides n = 3 mod 8 but not n = 7 mod 8.

# %%
print("n=23 reduced count", ch.quadratic_form_count(23), "member", sq[23])

# %% [markdown]
# Thue-Morse: 4k +- 1 with k ending in an even number of binary zeros.

# %%
t = ch.tbar_closed(1 << 16)
print("matches generic:", t == fs.reciprocal(sg.generate(sg.PTM(), 1 << 16)))
print("density on [0, 3*2^14):", t.truncate(3 << 14).popcount() / (3 << 14))
