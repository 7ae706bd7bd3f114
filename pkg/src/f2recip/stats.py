"""Densities, walks and distribution summaries over bit series.

Everything is exact (ints and :class:`~fractions.Fraction`) except the
iterated-logarithm statistic and the float summaries of random experiments.
"""

from __future__ import annotations

import io
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import _gf2
from .errors import RangeError
from .f2poly import cofactor_reciprocal_density, density_of_reciprocal, poly_from_index
from .f2series import BitSeries, reciprocal
from .setgen import Random, generate


def count_upto(s: BitSeries, bound: int) -> int:
    """``|F & [0, bound]|``."""
    if not 0 <= bound < s.length:
        raise RangeError(f"bound {bound} outside [0, {s.length})")
    return (s.value & _gf2.mask(bound + 1)).bit_count()


def relative_density(s: BitSeries, n: int) -> Fraction:
    return Fraction(count_upto(s, n), n + 1)


def walk(s: BitSeries) -> np.ndarray:
    """``w(n) = |F & [0,n]| - |[0,n] \\ F|``, so each step is +1 or -1 and ``w(0) = 1`` when 0 is in F."""
    bits = s.to_array().astype(np.int64)
    return 2 * np.cumsum(bits) - np.arange(1, s.length + 1)


def lil_statistic(s: BitSeries, n: int) -> float:
    """``(|F & [0,n]| - n/2) / sqrt(n log log n / 2)``."""
    if n < 16:
        raise RangeError("lil_statistic needs n >= 16")
    return (count_upto(s, n) - n / 2) / math.sqrt(n * math.log(math.log(n)) / 2)


def checkpoints(length: int) -> list[int]:
    """Powers of two below the last index, then the last index."""
    pts = []
    k = 1
    while k < length - 1:
        pts.append(k)
        k *= 2
    pts.append(length - 1)
    return pts


@dataclass(frozen=True)
class DensityReport:
    checkpoints: list[tuple[int, Fraction]]
    walk: list[int] = field(repr=False)
    lil: list[tuple[int, float]]


def density_report(s: BitSeries) -> DensityReport:
    pts = checkpoints(s.length)
    return DensityReport(
        checkpoints=[(n, relative_density(s, n)) for n in pts],
        walk=walk(s).tolist(),
        lil=[(n, lil_statistic(s, n)) for n in pts if n >= 16],
    )


def density_distribution(n_max: int) -> list[tuple[Fraction, int]]:
    """Sorted ``(density, how many odd n <= n_max have it)`` for the reciprocals of ``P_n``."""
    counts = Counter(density_of_reciprocal(poly_from_index(n)) for n in range(1, n_max + 1, 2))
    return sorted(counts.items())


def density_scatter(n_max: int) -> list[tuple[int, Fraction, Fraction]]:
    """``(n, density of 1/P_n, density of 1/P_n*)`` for odd ``n <= n_max``."""
    out = []
    for n in range(1, n_max + 1, 2):
        p = poly_from_index(n)
        out.append((n, density_of_reciprocal(p), cofactor_reciprocal_density(p)))
    return out


@dataclass(frozen=True)
class RandomExperiment:
    p: float
    length: int
    densities: tuple[Fraction, ...]

    @property
    def mean(self) -> float:
        return float(sum(self.densities) / len(self.densities))

    @property
    def spread(self) -> float:
        return float(max(self.densities) - min(self.densities))


def random_experiment(p: float, seeds: Iterable[int], length: int,
                      p_odd: float | None = None) -> RandomExperiment:
    """Density at ``length - 1`` of the reciprocal of a random set, one value per seed."""
    dens = []
    for seed in seeds:
        f = generate(Random(p, seed, p_odd), length)
        dens.append(relative_density(reciprocal(f), length - 1))
    return RandomExperiment(p, length, tuple(dens))


# -- CSV --------------------------------------------------------------------------------

def _csv(header: str, rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    buf.write(header + "\n")
    for row in rows:
        buf.write(",".join(str(x) for x in row) + "\n")
    return buf.getvalue()


def density_csv(points: Iterable[tuple[int, Fraction]]) -> str:
    return _csv("n,density_num,density_den", ((n, d.numerator, d.denominator) for n, d in points))


def walk_csv(w: Sequence[int]) -> str:
    return _csv("n,w", enumerate(w))


def lil_csv(points: Iterable[tuple[int, float]]) -> str:
    return _csv("n,lil", ((n, f"{v:.9f}") for n, v in points))


def distribution_csv(dist: Iterable[tuple[Fraction, int]]) -> str:
    return _csv("density,count", ((f"{d.numerator}/{d.denominator}", c) for d, c in dist))


def scatter_csv(points: Iterable[tuple[int, Fraction, Fraction]]) -> str:
    return _csv("n,density,density_star",
                ((n, f"{a.numerator}/{a.denominator}", f"{b.numerator}/{b.denominator}")
                 for n, a, b in points))
