"""Polynomials over GF(2): factorization, order, P*, reciprocal densities, LFSRs.

``P_n`` is the polynomial whose coefficients are the binary digits of ``n``,
so an :class:`F2Poly` is identified with its index ``n = P(2)`` (with integer
coefficients).  Invertible polynomials are exactly the odd indices.

The reciprocal of an invertible polynomial ``P`` is periodic: ``P * P* =
1 + q^D`` with ``D = ord(P)``, so ``1/P = P*/(1 + q^D)`` and one period of the
reciprocal is ``P*`` padded to ``D`` bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import _gf2
from .errors import NotInvertibleError, PreconditionError, ResourceLimitError
from .f2series import BitSeries, reciprocal_recurrence

MAX_DEGREE = 24
ORDER_LIMIT = 2**32


@dataclass(frozen=True, order=True)
class F2Poly:
    bits: int

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("polynomial index must be nonnegative")

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return self.bits.bit_length() - 1 if self.bits else None

    @property
    def index(self) -> int:
        return self.bits

    @property
    def weight(self) -> int:
        """Number of nonzero coefficients."""
        return self.bits.bit_count()

    def __mul__(self, other: "F2Poly") -> "F2Poly":
        return poly_mul(self, other)

    def __add__(self, other: "F2Poly") -> "F2Poly":
        return F2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __divmod__(self, other: "F2Poly"):
        return poly_divmod(self, other)

    def __mod__(self, other: "F2Poly") -> "F2Poly":
        return poly_divmod(self, other)[1]

    def __floordiv__(self, other: "F2Poly") -> "F2Poly":
        return poly_divmod(self, other)[0]

    def __str__(self) -> str:
        if not self.bits:
            return "0"
        terms = []
        for i in range(self.bits.bit_length()):
            if (self.bits >> i) & 1:
                terms.append("1" if i == 0 else "q" if i == 1 else f"q^{i}")
        return "+".join(terms)

    def to_series(self, length: int) -> BitSeries:
        return BitSeries(length, self.bits)


FactorList = list[tuple[F2Poly, int]]


def poly_from_index(n: int) -> F2Poly:
    if n < 1:
        raise ValueError("polynomial indices start at 1")
    return F2Poly(n)


def evaluate_at_2(p: F2Poly) -> int:
    return p.bits


def poly_mul(a: F2Poly, b: F2Poly) -> F2Poly:
    return F2Poly(_gf2.clmul(a.bits, b.bits))


def poly_divmod(a: F2Poly, b: F2Poly) -> tuple[F2Poly, F2Poly]:
    q, r = _gf2.divmod_poly(a.bits, b.bits)
    return F2Poly(q), F2Poly(r)


def poly_gcd(a: F2Poly, b: F2Poly) -> F2Poly:
    return F2Poly(_gf2.gcd_poly(a.bits, b.bits))


def one_plus_q_pow(d: int) -> F2Poly:
    return F2Poly(1 | (1 << d)) if d else F2Poly(0)


# -- irreducibles and factorization --------------------------------------------

@lru_cache(maxsize=None)
def irreducibles_upto(max_degree: int) -> tuple[int, ...]:
    """Indices of all irreducible polynomials of degree 1..max_degree, ascending.

    A sieve over indices below ``2**(max_degree+1)``: each irreducible of degree
    at most ``max_degree/2`` strikes out its multiples.
    """
    size = 1 << (max_degree + 1)
    composite = np.zeros(size, dtype=bool)
    composite[:2] = True
    for a in range(2, size):
        if composite[a]:
            continue
        da = a.bit_length() - 1
        if 2 * da > max_degree:
            break
        for b in range(1 << da, 1 << (max_degree - da + 1)):
            composite[_gf2._schoolbook(a, b)] = True
    return tuple(np.flatnonzero(~composite).tolist())


def _check_degree(p: F2Poly) -> int:
    d = p.degree
    if d is None or d < 1:
        raise PreconditionError("need a polynomial of degree >= 1")
    if d > MAX_DEGREE:
        raise PreconditionError(f"degree {d} exceeds the supported maximum {MAX_DEGREE}")
    return d


def factorize(p: F2Poly) -> FactorList:
    """Irreducible factors with multiplicity, ascending by index."""
    d = _check_degree(p)
    rest = p.bits
    found: dict[int, int] = {}
    for v in irreducibles_upto(max(1, d // 2)):
        if 2 * (v.bit_length() - 1) > rest.bit_length() - 1:
            break
        while True:
            quo, rem = _gf2.divmod_poly(rest, v)
            if rem:
                break
            found[v] = found.get(v, 0) + 1
            rest = quo
    if rest > 1:
        found[rest] = found.get(rest, 0) + 1
    return [(F2Poly(v), e) for v, e in sorted(found.items())]


def is_irreducible(p: F2Poly) -> bool:
    f = factorize(p)
    return len(f) == 1 and f[0][1] == 1


def _require_unit_constant(p: F2Poly) -> None:
    if not p.bits & 1:
        raise NotInvertibleError(f"P_{p.bits} has constant term 0")


def _prime_divisors(n: int) -> list[int]:
    out = []
    k = 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


def _irreducible_order(v: int) -> int:
    # least divisor e of 2^d - 1 with q^e = 1 mod v
    d = v.bit_length() - 1
    e = (1 << d) - 1
    for r in _prime_divisors(e):
        while e % r == 0 and _gf2.powmod(2, e // r, v) == 1:
            e //= r
    return e


def order(p: F2Poly, limit: int = ORDER_LIMIT) -> int:
    """Least ``D >= 1`` with ``p | 1 + q^D``, from the factorization of ``p``.

    For an irreducible ``V`` the order divides ``2^deg(V) - 1``; a power ``V^e``
    multiplies it by ``2^ceil(log2 e)``; a product takes the lcm.
    ``ord(1) = 1`` by convention.
    """
    _require_unit_constant(p)
    if p.bits == 1:
        return 1
    result = 1
    for v, e in factorize(p):
        ov = _irreducible_order(v.bits) << (e - 1).bit_length()
        result = math.lcm(result, ov)
        if result > limit:
            raise ResourceLimitError(f"order exceeds the limit {limit}")
    return result


def naive_order(p: F2Poly, bound: int | None = None) -> int:
    """Order by stepping ``q^D mod p`` until it returns to 1."""
    _require_unit_constant(p)
    if p.bits == 1:
        return 1
    d = p.degree
    bound = bound if bound is not None else max(1, d) << d
    top = 1 << d
    x = 1
    for D in range(1, bound + 1):
        x <<= 1
        if x & top:
            x ^= p.bits
        if x == 1:
            return D
    raise ResourceLimitError(f"no order found up to {bound}")


def is_primitive(p: F2Poly) -> bool:
    d = _check_degree(p)
    if not p.bits & 1 or not is_irreducible(p):
        return False
    return order(p) == (1 << d) - 1


def pstar(p: F2Poly) -> F2Poly:
    """The cofactor with ``p * pstar(p) = 1 + q^ord(p)``.

    Computed as the first ``D - deg(p) + 1`` coefficients of ``1/p``.  For
    ``P_1`` this gives 1 (the tabulated convention; ``1 * 1 != 1 + q``).
    """
    D = order(p)
    return F2Poly(reciprocal_recurrence(p.to_series(D - p.degree + 1), D - p.degree + 1).value)


def reciprocal_density_terms(p: F2Poly) -> tuple[int, int]:
    """Unreduced ``(weight of P*, ord P)``; ``P_1`` (reciprocal ``{0}``) gives ``(0, 1)``."""
    if p.bits == 1:
        return 0, 1
    return pstar(p).weight, order(p)


def density_of_reciprocal(p: F2Poly) -> Fraction:
    """Exact density of ``1/p``: weight(P*) / ord(P)."""
    num, den = reciprocal_density_terms(p)
    return Fraction(num, den)


def cofactor_reciprocal_density(p: F2Poly) -> Fraction:
    """Exact density of ``1/P*``.

    ``1/P* = P/(1 + q^D)`` repeats ``P`` with period ``D = ord(P)``, so the
    density is ``weight(P)/D``, except when ``P = 1 + q^D`` and ``1/P* = 1``.
    """
    if p.bits == 1:
        return Fraction(0)
    D = order(p)
    if p.degree == D:
        return Fraction(0)
    return Fraction(p.weight, D)


def lfsr_stream(p: F2Poly, length: int) -> BitSeries:
    """Reciprocal coefficients from the shift register ``fbar_n = sum_{j<=d} f_j fbar_{n-j}``."""
    _require_unit_constant(p)
    d = _check_degree(p)
    taps = p.bits >> 1
    keep = _gf2.mask(d)
    out = bytearray(length)
    out[0] = 1
    state = 1
    for n in range(1, length):
        bit = (state & taps).bit_count() & 1
        out[n] = bit
        state = ((state << 1) | bit) & keep
    return BitSeries(length, _gf2.from_bits(np.frombuffer(bytes(out), dtype=np.uint8)))


def debruijn_verify(stream: BitSeries, d: int) -> bool:
    """True iff the first ``2^d - 1`` bits, read cyclically, show every nonzero d-window once."""
    period = (1 << d) - 1
    if stream.length < period:
        raise PreconditionError(f"need at least {period} bits, have {stream.length}")
    bits = stream.to_array()[:period].astype(np.int64)
    ring = np.concatenate([bits, bits[: d - 1]])
    windows = np.zeros(period, dtype=np.int64)
    for k in range(d):
        windows |= ring[k:k + period] << k
    return bool(windows.min() > 0) and np.unique(windows).size == period


def periodic_expansion(E: F2Poly, Q: F2Poly, D: int, length: int) -> BitSeries:
    """Coefficients of ``E + Q/(1 + q^D)`` (requires ``deg Q < D``)."""
    if Q.bits and Q.degree >= D:
        raise PreconditionError("need deg(Q) < D")
    reps = -(-length // D)
    period = _gf2.to_bits(Q.bits, D)
    bits = np.tile(period, reps)[:length]
    return BitSeries(length, _gf2.from_bits(bits) ^ (E.bits & _gf2.mask(length)))


def rational_normalize(numer: F2Poly, denom: F2Poly) -> tuple[F2Poly, F2Poly, int]:
    """Write ``numer/denom = E + Q/(1 + q^D)`` with ``deg Q < D = ord(denom)``."""
    _require_unit_constant(denom)
    E, P = poly_divmod(numer, denom)
    D = order(denom)
    if not P.bits:
        return E, F2Poly(0), D
    return E, poly_mul(P, pstar(denom)), D


def min_density_pair(p: F2Poly) -> tuple[Fraction, Fraction, bool]:
    """``(density of 1/P, density of 1/P*, min <= 1/2)`` for ``ord(P) >= 4``."""
    if order(p) < 4:
        raise PreconditionError("the companion bound needs ord(P) >= 4")
    a = density_of_reciprocal(p)
    b = cofactor_reciprocal_density(p)
    return a, b, min(a, b) <= Fraction(1, 2)


# -- tabulation ------------------------------------------------------------------

@dataclass(frozen=True)
class PolyReport:
    n: int
    ord: int
    pstar_index: int
    kind: str                           # "prim", "irr" or "red"
    factors: tuple[tuple[int, int], ...]
    density: Fraction
    pstar_weight: int

    @property
    def fingerprint(self) -> str:
        if self.kind != "red":
            return self.kind
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self.factors)

    def csv_row(self) -> str:
        d = self.density
        return f"{self.n},{self.pstar_index},{self.ord},{self.fingerprint},{d.numerator}/{d.denominator}"


POLY_CSV_HEADER = "n,pstar_at_2,ord,factors,density"


def poly_report(n: int) -> PolyReport:
    if n < 1 or n % 2 == 0:
        raise PreconditionError("poly reports are defined for odd n >= 1")
    p = F2Poly(n)
    if n == 1:
        # tabulated convention for the constant polynomial
        return PolyReport(1, 1, 1, "prim", (), Fraction(0), 0)
    factors = factorize(p)
    D = order(p)
    star = pstar(p)
    if len(factors) == 1 and factors[0][1] == 1:
        kind = "prim" if D == (1 << p.degree) - 1 else "irr"
    else:
        kind = "red"
    return PolyReport(
        n=n,
        ord=D,
        pstar_index=star.bits,
        kind=kind,
        factors=tuple((v.bits, e) for v, e in factors),
        density=Fraction(star.weight, D),
        pstar_weight=star.weight,
    )
