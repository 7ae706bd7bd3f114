"""Indicator prefixes for the set families studied here.

A set is described by a small frozen dataclass (a "set spec") and turned into
a :class:`~f2recip.f2series.BitSeries` prefix by :func:`generate`.  Specs also
have a one-line text form used by the command line::

    theta:c1,c2  squares  pentagonal  ptm  pow2:m  random:p,seed
    random:p0/p1,seed  complement:<spec>  poly:n  explicit:0,3,5  evper:E,P,D
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from . import _gf2
from .errors import EmptySetError, NonCanonicalError, NotInvertibleError, PreconditionError
from .f2poly import F2Poly, periodic_expansion
from .f2series import BitSeries, from_indices


@dataclass(frozen=True)
class Theta:
    """``{c1*n + c2*n*(n-1)/2 : n in Z}``."""
    c1: int
    c2: int


@dataclass(frozen=True)
class Squares:
    pass


@dataclass(frozen=True)
class Pentagonal:
    pass


@dataclass(frozen=True)
class PTM:
    """Integers with an even number of ones in binary."""


@dataclass(frozen=True)
class PowersOfTwo:
    """``{0} | {2^(m*n) : n >= 0}``."""
    m: int = 1


@dataclass(frozen=True)
class Random:
    """``f_0 = 1`` and independent ``f_n = 1`` with probability ``p`` (``p_odd`` at odd n)."""
    p: float
    seed: int
    p_odd: float | None = None


@dataclass(frozen=True)
class EventuallyPeriodic:
    """``P_E(q) + P_P(q)/(1 + q^D)`` with ``deg P_P < D``."""
    E: int
    P: int
    D: int


@dataclass(frozen=True)
class Complement:
    inner: "SetSpec"


@dataclass(frozen=True)
class Explicit:
    indices: tuple[int, ...]


@dataclass(frozen=True)
class Polynomial:
    n: int


SetSpec = Union[Theta, Squares, Pentagonal, PTM, PowersOfTwo, Random,
                EventuallyPeriodic, Complement, Explicit, Polynomial]

# Families whose definition puts 0 in the set.  Complementing one of them
# removes only its positive elements; the others are complemented verbatim.
_STRUCTURAL_ZERO = (Theta, Squares, Pentagonal, PTM, PowersOfTwo, Random, Polynomial)


def canonicalize_theta(c1: int, c2: int) -> tuple[int, int]:
    """Normalize so that ``0 <= 2*c1 <= c2`` and ``gcd(c1, c2) = 1``.

    Uses ``Theta(c1, c2) = Theta(c2 - c1, c2)``.  The range lies in the
    nonnegative integers exactly when ``0 <= c1 <= c2``.
    """
    if not 0 <= c1 <= c2:
        raise EmptySetError(f"Theta({c1},{c2}) takes negative values")
    if math.gcd(c1, c2) != 1:
        raise NonCanonicalError(f"gcd({c1},{c2}) = {math.gcd(c1, c2)} != 1")
    if 2 * c1 > c2:
        c1 = c2 - c1
    return c1, c2


def canonical_theta_pairs(c2_max: int) -> list[tuple[int, int]]:
    return [(c1, c2) for c2 in range(1, c2_max + 1)
            for c1 in range(0, c2 // 2 + 1) if math.gcd(c1, c2) == 1]


def theta_value(c1: int, c2: int, n: int) -> int:
    return c1 * n + c2 * n * (n - 1) // 2


def theta_members(c1: int, c2: int, length: int, reach: int = 1) -> np.ndarray:
    """Elements of ``Theta(c1, c2)`` below ``length``.

    ``n = 0, 1, 2, ...`` and ``n = -1, -2, ...`` are walked separately; past the
    vertex (which lies in ``[0, 1/2]``) both walks are increasing, so each stops
    at the first value ``>= length``.  ``reach > 1`` keeps walking ``reach``
    times further, for completeness checks.
    """
    c1, c2 = canonicalize_theta(c1, c2)
    found = []
    for step in (1, -1):
        n = 0 if step == 1 else -1
        stop_at = None
        while True:
            v = theta_value(c1, c2, n)
            if v >= length and stop_at is None:
                stop_at = abs(n) * reach
            if stop_at is not None and abs(n) >= stop_at:
                break
            if v < length:
                found.append(v)
            n += step
    return np.unique(np.asarray(found, dtype=np.int64))


def ptm_bits(length: int) -> int:
    t, size = 1, 1
    while size < length:
        t |= (~t & _gf2.mask(size)) << size
        size *= 2
    return t & _gf2.mask(length)


def _powers_of_two(m: int, length: int) -> list[int]:
    if m < 1:
        raise PreconditionError("pow2 needs m >= 1")
    out = [0]
    e = 0
    while (1 << e) < length:
        out.append(1 << e)
        e += m
    return out


def _random_bits(spec: Random, length: int) -> int:
    probs = [spec.p] if spec.p_odd is None else [spec.p, spec.p_odd]
    if not all(0 < p < 1 for p in probs):
        raise PreconditionError("probabilities must lie strictly between 0 and 1")
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    u = rng.random(length - 1)
    thresh = np.full(length - 1, spec.p)
    if spec.p_odd is not None:
        thresh[0::2] = spec.p_odd          # index 1, 3, 5, ...
    bits = np.concatenate([[1], (u < thresh).astype(np.uint8)])
    return _gf2.from_bits(bits)


def _indicator(spec: SetSpec, length: int) -> int:
    if isinstance(spec, Theta):
        return from_indices(theta_members(spec.c1, spec.c2, length), length).value
    if isinstance(spec, Squares):
        return _indicator(Theta(1, 2), length)
    if isinstance(spec, Pentagonal):
        return _indicator(Theta(1, 3), length)
    if isinstance(spec, PTM):
        return ptm_bits(length)
    if isinstance(spec, PowersOfTwo):
        return from_indices(_powers_of_two(spec.m, length), length).value
    if isinstance(spec, Random):
        return _random_bits(spec, length)
    if isinstance(spec, EventuallyPeriodic):
        if spec.D < 1:
            raise PreconditionError("period D must be >= 1")
        return periodic_expansion(F2Poly(spec.E), F2Poly(spec.P), spec.D, length).value
    if isinstance(spec, Explicit):
        return from_indices(spec.indices, length).value
    if isinstance(spec, Polynomial):
        if spec.n < 1 or spec.n % 2 == 0:
            raise PreconditionError("poly:n needs an odd index n >= 1")
        return spec.n & _gf2.mask(length)
    if isinstance(spec, Complement):
        inner = _indicator(spec.inner, length)
        if isinstance(spec.inner, _STRUCTURAL_ZERO):
            inner &= ~1
        return ~inner & _gf2.mask(length)
    raise TypeError(f"not a set spec: {spec!r}")


def generate(spec: SetSpec, length: int) -> BitSeries:
    """Indicator of ``spec`` on ``[0, length)``; the set must contain 0."""
    if length < 1:
        raise ValueError("length must be >= 1")
    if isinstance(spec, EventuallyPeriodic) and (spec.E & 1) == (spec.P & 1):
        raise NotInvertibleError("exactly one of E, P must have constant term 1")
    value = _indicator(spec, length)
    if not value & 1:
        raise NotInvertibleError(f"{format_setspec(spec)} does not contain 0")
    return BitSeries(length, value)


def complement(spec: SetSpec, length: int) -> BitSeries:
    return generate(Complement(spec), length)


# -- text syntax -------------------------------------------------------------------

def _ints(body: str) -> list[int]:
    return [int(tok) for tok in body.split(",") if tok.strip()]


def parse_setspec(text: str) -> SetSpec:
    text = text.strip()
    name, _, body = text.partition(":")
    name = name.lower()
    try:
        if name == "theta":
            c1, c2 = _ints(body)
            return Theta(c1, c2)
        if name == "squares":
            return Squares()
        if name == "pentagonal":
            return Pentagonal()
        if name == "ptm":
            return PTM()
        if name == "pow2":
            return PowersOfTwo(int(body) if body else 1)
        if name == "random":
            probs, seed = body.split(",")
            if "/" in probs:
                p0, p1 = probs.split("/")
                return Random(float(p0), int(seed), float(p1))
            return Random(float(probs), int(seed))
        if name == "complement":
            return Complement(parse_setspec(body))
        if name == "poly":
            return Polynomial(int(body))
        if name == "explicit":
            return Explicit(tuple(_ints(body)))
        if name == "evper":
            E, P, D = _ints(body)
            return EventuallyPeriodic(E, P, D)
    except ValueError as exc:
        raise ValueError(f"bad set spec {text!r}: {exc}") from None
    raise ValueError(f"unknown set family {name!r} in {text!r}")


def format_setspec(spec: SetSpec) -> str:
    if isinstance(spec, Theta):
        return f"theta:{spec.c1},{spec.c2}"
    if isinstance(spec, Squares):
        return "squares"
    if isinstance(spec, Pentagonal):
        return "pentagonal"
    if isinstance(spec, PTM):
        return "ptm"
    if isinstance(spec, PowersOfTwo):
        return f"pow2:{spec.m}"
    if isinstance(spec, Random):
        probs = f"{spec.p}" if spec.p_odd is None else f"{spec.p}/{spec.p_odd}"
        return f"random:{probs},{spec.seed}"
    if isinstance(spec, Complement):
        return f"complement:{format_setspec(spec.inner)}"
    if isinstance(spec, Polynomial):
        return f"poly:{spec.n}"
    if isinstance(spec, Explicit):
        return "explicit:" + ",".join(map(str, spec.indices))
    if isinstance(spec, EventuallyPeriodic):
        return f"evper:{spec.E},{spec.P},{spec.D}"
    raise TypeError(f"not a set spec: {spec!r}")
