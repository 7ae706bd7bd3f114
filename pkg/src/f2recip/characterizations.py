"""Closed-form descriptions of particular reciprocals, and the number theory behind them.

Each closed form here is independent of the generic reciprocal routines in
:mod:`f2recip.f2series`; the test-suite checks them against each other.

Reciprocal of the Thue-Morse set
--------------------------------
Brute force against the reciprocal of the Thue-Morse set to 2**16 fixes the
predicate used by :func:`tbar_closed`: ``n > 0`` is a member iff ``n = 4k +- 1``
with ``k >= 1`` whose binary expansion ends in an even number of **zeros**
(odd ``k`` count, having none).  Equivalently ``(n +- 1)/4`` is such an
integer.  The variant "ends in an even number of ones" disagrees already at
``n = 3`` (``k = 1``) and misses or adds 21844 members below 2**16.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable

import numpy as np

from . import _gf2
from .errors import PreconditionError, ResourceLimitError
from .f2series import BitSeries, from_indices
from .setgen import canonicalize_theta, theta_value

FACTOR_LIMIT = 10**14
SIEVE_LIMIT = 10**7


# -- Powers of two -------------------------------------------------------------------

def abar_members(m: int, length: int) -> list[int]:
    """``{-1 + sum_i x_i 2^(i + m n_i)} < length``: one optional power of two per
    exponent class mod ``m``, not all absent."""
    if m < 1:
        raise PreconditionError("m must be >= 1")
    sums = {0}
    for i in range(m):
        powers = []
        e = i
        while (1 << e) <= length:
            powers.append(1 << e)
            e += m
        sums |= {s + p for s in sums for p in powers if s + p <= length}
    sums.discard(0)
    return sorted(s - 1 for s in sums if s - 1 < length)


def abar_m(m: int, length: int) -> BitSeries:
    return from_indices(abar_members(m, length), length)


def croot_bound_check(f: BitSeries, fbar: BitSeries, n: int) -> bool:
    """``|F & [0,n]| + |Fbar & [0,n]| >= 2 + floor(log2(n/r))``, r = least positive member of either."""
    if n >= min(f.length, fbar.length):
        raise PreconditionError(f"n = {n} beyond the known prefixes")
    window = _gf2.mask(n + 1)
    positive = (f.value | fbar.value) & window & ~1
    if not positive:
        raise PreconditionError(f"no positive element of F or its reciprocal up to {n}")
    r = (positive & -positive).bit_length() - 1
    lhs = (f.value & window).bit_count() + (fbar.value & window).bit_count()
    return lhs >= 2 + (n // r).bit_length() - 1


# -- integer factorization -------------------------------------------------------------

@dataclass(frozen=True)
class IntFactorization:
    n: int
    factors: tuple[tuple[int, int], ...]   # (prime, exponent), primes ascending

    def __iter__(self):
        return iter(self.factors)

    def exponent(self, p: int) -> int:
        return dict(self.factors).get(p, 0)

    def value(self) -> int:
        return math.prod(p**e for p, e in self.factors)


_primes = np.array([2, 3, 5, 7], dtype=np.int64)
_sieved_to = 10


def primes_upto(limit: int) -> np.ndarray:
    global _primes, _sieved_to
    if limit > SIEVE_LIMIT:
        raise ResourceLimitError(f"prime sieve capped at {SIEVE_LIMIT}")
    if limit > _sieved_to:
        size = min(SIEVE_LIMIT, max(limit, 2 * _sieved_to)) + 1
        sieve = np.ones(size, dtype=bool)
        sieve[:2] = False
        for p in range(2, math.isqrt(size - 1) + 1):
            if sieve[p]:
                sieve[p * p::p] = False
        _primes = np.flatnonzero(sieve)
        _sieved_to = size - 1
    return _primes[: np.searchsorted(_primes, limit, side="right")]


def factor_int(n: int) -> IntFactorization:
    """Trial division by sieved primes; ``n <= 10**14``."""
    if n < 1:
        raise ValueError("factor_int needs n >= 1")
    if n > FACTOR_LIMIT:
        raise ResourceLimitError(f"{n} exceeds the trial-division range {FACTOR_LIMIT}")
    original, out = n, []
    for p in primes_upto(math.isqrt(n)).tolist():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    if n > 1:
        out.append((n, 1))
    return IntFactorization(original, tuple(out))


def nu_p(n: int, p: int) -> int:
    if n < 1:
        raise ValueError("nu_p needs n >= 1")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def r2(n: int) -> int:
    """Number of integer pairs ``(y, z)`` with ``y^2 + z^2 = n`` (n >= 1)."""
    total = 4
    for p, e in factor_int(n):
        if p % 4 == 3 and e % 2:
            return 0
        if p % 4 == 1:
            total *= e + 1
    return total


# -- reciprocal of the squares -----------------------------------------------------------

def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def quadratic_form_coefficients(n: int) -> list[int]:
    """Coefficients of the form attached to ``n``, largest first.

    ``j`` is the number of trailing binary ones of ``n`` (so that
    ``n = 2^j - 1 mod 2^(j+1)``); the form is ``2^(j+1) k^2 + sum_{i<j} 2^i k_i^2``.
    """
    j = trailing_ones(n)
    return [1 << (j + 1)] + [1 << i for i in range(j - 1, -1, -1)]


def _square_sum_parity(n: int, coeffs: list[int], odd: int = 0) -> int:
    """Parity of the number of nonnegative solutions of ``n = sum c_i k_i^2``.

    Variables are taken one at a time in the order given.  After each one the
    parity of the number of partial assignments reaching every partial sum
    ``s <= n`` is held as a bitset, so a variable costs ``sqrt(n/c)`` shifted
    xors rather than a factor in a product of nested ranges.  The last
    variable is resolved by reading the bitset at ``n - c k^2``.  The final
    ``odd`` variables only range over odd values.
    """
    window = _gf2.mask(n + 1)
    reach = 1                                 # partial sum 0 reached once
    first_odd = len(coeffs) - odd
    for pos, c in enumerate(coeffs[:-1]):
        step = 2 if pos >= first_odd else 1
        start = 1 if pos >= first_odd else 0
        nxt = 0
        for k in reversed(range(start, math.isqrt(n // c) + 1, step)):
            nxt ^= reach << (c * k * k)
        reach = nxt & window
    c = coeffs[-1]
    step = 2 if odd else 1
    bit = 0
    for k in range(1 if odd else 0, math.isqrt(n // c) + 1, step):
        bit ^= (reach >> (n - c * k * k)) & 1
    return bit


def trailing_ones(n: int) -> int:
    return ((n + 1) & -(n + 1)).bit_length() - 1


def quadratic_form_parity(n: int) -> int:
    """Parity of the representation count of ``n`` by its reduced form.

    The form is ``2^(j+1) k^2 + sum_{i<j} 2^i k_i^2`` with ``j`` the number of
    trailing ones of ``n`` (see :func:`quadratic_form_coefficients`).  The
    parity equals membership in the reciprocal of the squares when ``j <= 2``
    but not in general: ``n = 23`` has two representations while 23 is a
    member.  :func:`sbar_member` therefore only uses it for ``j <= 2``.
    """
    if n < 1:
        raise PreconditionError("quadratic_form_parity needs n >= 1")
    return _square_sum_parity(n, quadratic_form_coefficients(n))


def binary_square_sum_parity(n: int) -> int:
    """Parity of the number of tuples with ``n = sum_{i>=0} 2^i k_i^2``.

    This is exactly membership of ``n`` in the reciprocal of the squares.  With
    ``j`` trailing ones in ``n``, the variables ``k_i`` for ``i < min(j, 3)`` are
    forced odd and the search halves their ranges.  Odd squares are ``1 mod 8``
    but not fixed mod 16, so nothing further is forced: ``15 = 9 + 2 + 4``.
    """
    if n < 1:
        raise PreconditionError("binary_square_sum_parity needs n >= 1")
    top = n.bit_length() - 1
    coeffs = [1 << i for i in range(top, -1, -1)]
    return _square_sum_parity(n, coeffs, odd=min(trailing_ones(n), 3))


def quadratic_form_count(n: int) -> int:
    """Exact solution count by plain nested loops (small ``n`` only)."""
    coeffs = quadratic_form_coefficients(n)

    def count(rest: int, cs: list[int]) -> int:
        c = cs[0]
        if len(cs) == 1:
            return 1 if rest % c == 0 and _is_square(rest // c) else 0
        return sum(count(rest - c * k * k, cs[1:]) for k in range(math.isqrt(rest // c), -1, -1))

    return count(n, coeffs)


def sbar_member(n: int) -> tuple[int, str]:
    """Membership of ``n`` in the reciprocal of the squares, and which rule decided it.

    * even ``n``: member iff ``n`` is twice a square;
    * ``n = 1 mod 4``, not a square: member iff exactly one prime has odd
      exponent, and that prime and its exponent are both ``1 mod 4``;
    * ``n = 1 mod 4``, a square: member iff an even number of primes
      ``p = 1 mod 4`` have exponent ``2 mod 4``;
    * ``n = 3 mod 8``: parity of the reduced quadratic-form count;
    * ``n = 7 mod 8``: parity of the full count of ``n = sum 2^i k_i^2``, since
      the reduced form is not valid there.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n % 2 == 0:
        return int(_is_square(n // 2)), "twice-square"
    if n % 8 == 3:
        return quadratic_form_parity(n), "quadratic-form"
    if n % 8 == 7:
        return binary_square_sum_parity(n), "square-sum"
    fac = factor_int(n)
    if not _is_square(n):
        odd = [(p, e) for p, e in fac if e % 2]
        hit = len(odd) == 1 and odd[0][0] % 4 == 1 and odd[0][1] % 4 == 1
        return int(hit), "factor-nonsquare"
    twos = sum(1 for p, e in fac if p % 4 == 1 and e % 4 == 2)
    return int(twos % 2 == 0), "factor-square"


def sbar_closed(length: int) -> BitSeries:
    return from_indices((n for n in range(length) if sbar_member(n)[0]), length)


# -- Thue-Morse ------------------------------------------------------------------------------

def tbar_members(length: int) -> np.ndarray:
    k = np.arange(1, length // 4 + 2, dtype=np.int64)
    low = k & -k
    tz = np.log2(low).round().astype(np.int64)
    k = k[tz % 2 == 0]
    vals = np.concatenate([[0], 4 * k - 1, 4 * k + 1])
    return np.sort(vals[vals < length])


def tbar_closed(length: int) -> BitSeries:
    """Reciprocal of the Thue-Morse set from the trailing-zeros rule (module docstring)."""
    return from_indices(tbar_members(length), length)


# -- theta sets modulo powers of two --------------------------------------------------------

def theta_residue_counts(c1: int, c2: int, j: int) -> np.ndarray:
    """How often each residue mod ``2^j`` is hit over one full period.

    For even ``c2`` the values ``f(0..2^j-1)`` form a period.  For odd ``c2``
    the even and odd arguments are taken as two branches ``g(m) = f(2m)``,
    ``h(m) = f(2m+1)``, each of period ``2^j``.
    """
    mod = 1 << j
    if c2 % 2 == 0:
        vals = [theta_value(c1, c2, n) % mod for n in range(mod)]
    else:
        g = [theta_value(c1, c2, 2 * m) % mod for m in range(mod)]
        h = [theta_value(c1, c2, 2 * m + 1) % mod for m in range(mod)]
        vals = g + h
    return np.bincount(vals, minlength=mod)


def theta_uniformity(c1: int, c2: int, j: int) -> bool:
    if not 2 <= j <= 6:
        raise PreconditionError("j must lie in 2..6")
    if canonicalize_theta(c1, c2) != (c1, c2):
        raise PreconditionError(f"({c1},{c2}) is not in canonical form")
    counts = theta_residue_counts(c1, c2, j)
    return bool(counts.min() == counts.max())


# -- parity of a sum of independent bits --------------------------------------------------

def binary_clt_exact(gammas: Iterable[float | Fraction]) -> float | Fraction:
    """P(sum X_i is even) where ``X_i = 0`` with probability ``gamma_i``."""
    gammas = list(gammas)
    for g in gammas:
        if not 0 <= g <= 1:
            raise ValueError("probabilities must lie in [0, 1]")
    prod = reduce(lambda acc, g: acc * (2 * g - 1), gammas, 1)
    return (1 + prod) / 2
