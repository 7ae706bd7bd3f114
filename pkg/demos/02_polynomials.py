# %% [markdown]
# # Reciprocals of polynomials
#
# For a polynomial P with constant term 1 the reciprocal is periodic with
# period ord(P), and one period is the cofactor P* with P P* = 1 + q^ord(P).

# %%
from collections import Counter
from fractions import Fraction

from f2recip import f2poly, stats

for n in (7, 11, 13, 19, 25, 51):
    rep = f2poly.poly_report(n)
    print(f"P_{n:<3d} {str(f2poly.poly_from_index(n)):22s} ord={rep.ord:<3d} "
          f"{rep.fingerprint:8s} density={rep.density}")

# %% [markdown]
# Primitive polynomials give shift-register streams that contain every
# nonzero window once per period.

# %%
p = f2poly.poly_from_index(0b10000001001)        # 1 + q^3 + q^10
stream = f2poly.lfsr_stream(p, 1023)
print("primitive:", f2poly.is_primitive(p), " de Bruijn:", f2poly.debruijn_verify(stream, 10))
print("density", f2poly.density_of_reciprocal(p))

# %% [markdown]
# Distribution of densities over odd n <= 4095.

# %%
dist = stats.density_distribution(4095)
print("distinct densities:", len(dist))
print("exactly 1/2:", dict(dist)[Fraction(1, 2)])
below = sum(c for d, c in dist if d <= Fraction(1, 2))
print("at most 1/2:", below, "of", sum(c for _, c in dist))

# %% [markdown]
# P and P* can not both have reciprocals denser than 1/2.

# %%
pairs = stats.density_scatter(255)
print(Counter(min(a, b) <= Fraction(1, 2) for n, a, b in pairs if f2poly.order(f2poly.poly_from_index(n)) >= 4))
