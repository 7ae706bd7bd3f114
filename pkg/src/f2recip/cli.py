"""Command line entry point (``f2recip`` or ``python -m f2recip``).

Table outputs are CSV with a header line and LF line endings:

* ``table-polys``: ``n,pstar_at_2,ord,factors,density``
* ``table-theta``: ``c1,c2,count``
* ``dist``: ``density,count`` then a ``# exactly 1/2: K of N`` trailer
* ``scatter``: ``n,density,density_star``
* ``walk``: ``n,w``
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from . import characterizations as chars
from . import f2poly, setgen, stats
from .errors import (EmptySetError, NonCanonicalError, NotInvertibleError, PreconditionError,
                     RangeError, ResourceLimitError)
from .f2series import ALGORITHMS, BitSeries, reciprocal

EXIT_OK, EXIT_PRECONDITION, EXIT_FAIL = 0, 1, 2
_USER_ERRORS = (NotInvertibleError, PreconditionError, NonCanonicalError, EmptySetError,
                RangeError, ResourceLimitError, ValueError)


def worker_count() -> int:
    raw = os.environ.get("F2RECIP_THREADS", "")
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        return 1


def ordered_map(fn: Callable, items: Iterable) -> list:
    """``map`` over a bounded thread pool; results come back in input order."""
    items = list(items)
    workers = worker_count()
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# -- tables ---------------------------------------------------------------------------

def table_polys(n_max: int) -> str:
    rows = ordered_map(lambda n: f2poly.poly_report(n).csv_row(), range(1, n_max + 1, 2))
    return "\n".join([f2poly.POLY_CSV_HEADER, *rows]) + "\n"


def theta_count(pair: tuple[int, int], bound: int) -> int:
    c1, c2 = pair
    f = setgen.generate(setgen.Theta(c1, c2), bound + 1)
    return stats.count_upto(reciprocal(f), bound)


def table_theta(bound: int, c2_max: int) -> str:
    pairs = setgen.canonical_theta_pairs(c2_max)
    counts = ordered_map(lambda pr: theta_count(pr, bound), pairs)
    lines = ["c1,c2,count"] + [f"{c1},{c2},{k}" for (c1, c2), k in zip(pairs, counts)]
    return "\n".join(lines) + "\n"


def dist_report(n_max: int) -> str:
    dist = stats.density_distribution(n_max)
    half = dict(dist).get(Fraction(1, 2), 0)
    total = sum(c for _, c in dist)
    return stats.distribution_csv(dist) + f"# exactly 1/2: {half} of {total}\n"


# -- verification sweeps ----------------------------------------------------------------

@dataclass
class Verdict:
    ok: bool
    detail: str

    def line(self, name: str) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {name}: {self.detail}"


def _first_difference(a: BitSeries, b: BitSeries) -> int | None:
    diff = a.value ^ b.value
    return (diff & -diff).bit_length() - 1 if diff else None


def verify_powers_of_two(length: int) -> Verdict:
    for m in (1, 2, 3):
        generic = reciprocal(setgen.generate(setgen.PowersOfTwo(m), length))
        bad = _first_difference(chars.abar_m(m, length), generic)
        if bad is not None:
            return Verdict(False, f"m={m} first differs at n={bad}")
    return Verdict(True, f"closed form matches for m=1,2,3 below {length}")


def verify_squares(length: int) -> Verdict:
    generic = reciprocal(setgen.generate(setgen.Squares(), length))
    for n in range(length):
        bit, tag = chars.sbar_member(n)
        if bit != generic[n]:
            return Verdict(False, f"n={n} ({tag}) closed form {bit}, generic {generic[n]}")
    return Verdict(True, f"closed form matches below {length}")


def verify_thue_morse(length: int) -> Verdict:
    generic = reciprocal(setgen.generate(setgen.PTM(), length))
    bad = _first_difference(chars.tbar_closed(length), generic)
    if bad is not None:
        return Verdict(False, f"first differs at n={bad}")
    return Verdict(True, f"closed form matches below {length}")


def verify_primitive(max_degree: int = 10) -> Verdict:
    checked = 0
    for d in range(1, max_degree + 1):
        for n in range(1 << d, 1 << (d + 1)):
            p = f2poly.F2Poly(n)
            if not n & 1 or not f2poly.is_primitive(p):
                continue
            want = Fraction(1 << (d - 1), (1 << d) - 1)
            if f2poly.density_of_reciprocal(p) != want:
                return Verdict(False, f"n={n} density {f2poly.density_of_reciprocal(p)} != {want}")
            if not f2poly.debruijn_verify(f2poly.lfsr_stream(p, (1 << d) - 1), d):
                return Verdict(False, f"n={n} stream is not a reduced de Bruijn cycle")
            checked += 1
    return Verdict(True, f"{checked} primitive polynomials of degree <= {max_degree}")


def verify_companion_bound(n_max: int) -> Verdict:
    checked = 0
    for n in range(3, n_max, 2):
        p = f2poly.poly_from_index(n)
        if f2poly.order(p) < 4:
            continue
        a, b, ok = f2poly.min_density_pair(p)
        if not ok:
            return Verdict(False, f"n={n} densities {a}, {b}")
        checked += 1
    return Verdict(True, f"{checked} odd n < {n_max} with ord >= 4")


SPARSE_BOUND_FAMILIES = ("squares", "pentagonal", "ptm", "pow2:1", "pow2:2", "pow2:3",
                         "theta:1,3", "theta:1,4", "theta:2,5", "theta:1,6",
                         "random:0.5,1", "random:0.1,2", "random:0.9,3")


def verify_sparse_bound(length: int) -> Verdict:
    for text in SPARSE_BOUND_FAMILIES:
        f = setgen.generate(setgen.parse_setspec(text), length)
        fbar = reciprocal(f)
        both = (f.value | fbar.value) & ~1
        r = (both & -both).bit_length() - 1
        for n in range(max(r, 1), length):
            if not chars.croot_bound_check(f, fbar, n):
                return Verdict(False, f"{text} fails at n={n}")
    return Verdict(True, f"{len(SPARSE_BOUND_FAMILIES)} sets below {length}")


def verify_theta_uniformity(c2_max: int = 18) -> Verdict:
    checked = 0
    for c1, c2 in setgen.canonical_theta_pairs(c2_max):
        for j in (2, 3, 4):
            got = chars.theta_uniformity(c1, c2, j)
            if got != (c2 % 4 != 2):
                return Verdict(False, f"({c1},{c2}) j={j} uniform={got}")
            checked += 1
    return Verdict(True, f"{checked} (pair, j) cases with c2 <= {c2_max}")


THEOREMS: dict[str, tuple[str, Callable[[int], Verdict]]] = {
    "5.1": ("powers-of-two", verify_powers_of_two),
    "6.2": ("squares", verify_squares),
    "7.1": ("thue-morse", verify_thue_morse),
    "4.4": ("primitive", lambda n: verify_primitive()),
    "4.5": ("companion-bound", verify_companion_bound),
    "5.2": ("sparse-bound", verify_sparse_bound),
    "6.1": ("theta-uniformity", lambda n: verify_theta_uniformity()),
}
ALIASES = {alias: key for key, (alias, _) in THEOREMS.items()}


# -- argument handling -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="f2recip", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out", help="write output to this file instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("recip", help="reciprocal of a set prefix (hex and sparse dump)")
    sp.add_argument("--set", required=True, dest="setspec")
    sp.add_argument("--len", type=int, required=True, dest="length")
    sp.add_argument("--algo", choices=ALGORITHMS, default="recurrence")

    sp = sub.add_parser("poly", help="one row of the polynomial table")
    sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("table-polys", help="CSV n,pstar_at_2,ord,factors,density for odd n <= max")
    sp.add_argument("--max", type=int, default=255, dest="n_max")

    sp = sub.add_parser("table-theta", help="CSV c1,c2,count of reciprocal members <= bound")
    sp.add_argument("--bound", type=int, default=100000)
    sp.add_argument("--c2max", type=int, default=18)

    sp = sub.add_parser("dist", help="CSV density,count over odd n <= max")
    sp.add_argument("--max", type=int, default=4095, dest="n_max")

    sp = sub.add_parser("verify", help="closed form against the generic reciprocal")
    sp.add_argument("--theorem", required=True, choices=sorted(THEOREMS) + sorted(ALIASES))
    sp.add_argument("--len", type=int, default=None, dest="length")

    sp = sub.add_parser("walk", help="CSV n,w of the reciprocal's walk")
    sp.add_argument("--set", required=True, dest="setspec")
    sp.add_argument("--len", type=int, required=True, dest="length")

    sp = sub.add_parser("random-exp", help="density of reciprocals of random sets")
    sp.add_argument("--p", type=float, default=0.5)
    sp.add_argument("--p-odd", type=float, default=None)
    sp.add_argument("--seeds", type=int, default=8)
    sp.add_argument("--len", type=int, default=131072, dest="length")

    sp = sub.add_parser("scatter", help="CSV n,density,density_star over odd n <= max")
    sp.add_argument("--max", type=int, default=4095, dest="n_max")
    return ap


VERIFY_DEFAULT_LEN = {"5.1": 1 << 14, "6.2": 50000, "7.1": 1 << 16, "4.4": 0,
                      "4.5": 4096, "5.2": 1 << 12, "6.1": 0}


def dispatch(args: argparse.Namespace) -> tuple[int, str]:
    cmd = args.command
    if cmd == "recip":
        f = setgen.generate(setgen.parse_setspec(args.setspec), args.length)
        fbar = reciprocal(f, args.length, args.algo)
        return EXIT_OK, f"hex {fbar.to_hex()}\nsparse {fbar.to_sparse()}\n"
    if cmd == "poly":
        return EXIT_OK, f2poly.poly_report(args.n).csv_row() + "\n"
    if cmd == "table-polys":
        return EXIT_OK, table_polys(args.n_max)
    if cmd == "table-theta":
        return EXIT_OK, table_theta(args.bound, args.c2max)
    if cmd == "dist":
        return EXIT_OK, dist_report(args.n_max)
    if cmd == "scatter":
        return EXIT_OK, stats.scatter_csv(stats.density_scatter(args.n_max))
    if cmd == "walk":
        f = setgen.generate(setgen.parse_setspec(args.setspec), args.length)
        return EXIT_OK, stats.walk_csv(stats.walk(reciprocal(f)).tolist())
    if cmd == "random-exp":
        exp = stats.random_experiment(args.p, range(args.seeds), args.length, args.p_odd)
        lines = ["seed,density"] + [f"{s},{float(d):.6f}" for s, d in enumerate(exp.densities)]
        lines.append(f"# mean {exp.mean:.6f} spread {exp.spread:.6f}")
        return EXIT_OK, "\n".join(lines) + "\n"
    if cmd == "verify":
        key = ALIASES.get(args.theorem, args.theorem)
        name, check = THEOREMS[key]
        length = args.length if args.length is not None else VERIFY_DEFAULT_LEN[key]
        verdict = check(length)
        return (EXIT_OK if verdict.ok else EXIT_FAIL), verdict.line(f"{key} {name}") + "\n"
    raise AssertionError(cmd)


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, text = dispatch(args)
    except _USER_ERRORS as exc:
        print(f"f2recip: error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
