"""Truncated power series over GF(2) and their reciprocals.

A :class:`BitSeries` stores the coefficients ``f_0 .. f_{len-1}`` of an element
of GF(2)[[q]] as one packed integer (bit ``i`` is ``f_i``).  Every operation
takes an explicit truncation length; nothing beyond it is ever computed.

Three independent routes to the reciprocal live here:

* :func:`reciprocal_recurrence` solves ``sum_j f_j fbar_{n-j} = [n == 0]``
  block by block,
* :func:`reciprocal_product` evaluates ``F(q) F(q^2) F(q^4) ...``,
* :func:`membership_parity` / :func:`composition_parity` count binary-weighted
  tuples and compositions, one coefficient at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Union

import numpy as np

from . import _gf2
from .errors import NotInvertibleError, RangeError, ResourceLimitError

WORD = 64

Membership = Union[Callable[[int], bool], "BitSeries", Iterable[int]]


@dataclass(frozen=True)
class BitSeries:
    """Coefficients ``f_0 .. f_{length-1}`` of a power series over GF(2).

    ``value`` is the packed coefficient integer; bits at or above ``length``
    are cleared on construction.
    """

    length: int
    value: int = 0

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("a BitSeries needs length >= 1")
        if self.value < 0:
            raise ValueError("coefficient word must be nonnegative")
        object.__setattr__(self, "value", self.value & _gf2.mask(self.length))

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise RangeError(f"coefficient {i} outside [0, {self.length})")
        return (self.value >> i) & 1

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.length and bool((self.value >> i) & 1)

    def __iter__(self):
        return iter(self.to_array().tolist())

    @property
    def invertible(self) -> bool:
        return bool(self.value & 1)

    def popcount(self) -> int:
        return self.value.bit_count()

    def indices(self) -> list[int]:
        return np.flatnonzero(self.to_array()).tolist()

    def to_array(self) -> np.ndarray:
        return _gf2.to_bits(self.value, self.length)

    @classmethod
    def from_array(cls, bits) -> "BitSeries":
        bits = np.asarray(bits)
        return cls(len(bits), _gf2.from_bits(bits))

    def truncate(self, length: int) -> "BitSeries":
        if length > self.length:
            raise RangeError(f"cannot extend a series of length {self.length} to {length}")
        return BitSeries(length, self.value)

    def words(self) -> np.ndarray:
        """Packed 64-bit words, least significant word first."""
        nwords = -(-self.length // WORD)
        raw = self.value.to_bytes(8 * nwords, "little")
        return np.frombuffer(raw, dtype="<u8").copy()

    def to_hex(self) -> str:
        """``"<len>:<word0><word1>..."`` with each word as 16 lowercase hex digits."""
        return f"{self.length}:" + "".join(f"{int(w):016x}" for w in self.words())

    @classmethod
    def from_hex(cls, text: str) -> "BitSeries":
        head, _, body = text.strip().partition(":")
        length = int(head)
        if len(body) != 16 * -(-length // WORD):
            raise ValueError(f"expected {-(-length // WORD)} hex words for length {length}")
        value = 0
        for k in range(0, len(body), 16):
            value |= int(body[k:k + 16], 16) << (4 * k)
        if value >> length:
            raise ValueError("bits set beyond the series length")
        return cls(length, value)

    def to_sparse(self) -> str:
        return "{" + ",".join(map(str, self.indices())) + "}"

    @classmethod
    def from_sparse(cls, text: str, length: int) -> "BitSeries":
        body = text.strip().strip("{}").strip()
        indices = [int(tok) for tok in body.split(",")] if body else []
        return from_indices(indices, length)

    def __str__(self) -> str:
        return "".join(map(str, self.to_array().tolist()))


def from_indices(indices: Iterable[int], length: int) -> BitSeries:
    """Indicator series of ``indices``; indices ``>= length`` are dropped."""
    if length < 1:
        raise ValueError("length must be >= 1")
    idx = np.fromiter((i for i in indices), dtype=np.int64)
    if idx.size and idx.min() < 0:
        raise ValueError("indices must be nonnegative")
    bits = np.zeros(length, dtype=np.uint8)
    bits[idx[idx < length]] = 1
    return BitSeries(length, _gf2.from_bits(bits))


def unit(length: int) -> BitSeries:
    return BitSeries(length, 1)


def _require_invertible(f: BitSeries) -> None:
    if not f.value & 1:
        raise NotInvertibleError("series has constant term 0 and no reciprocal")


def _operand(f: BitSeries, length: int) -> int:
    if length < 1:
        raise ValueError("length must be >= 1")
    if length > f.length:
        raise RangeError(f"series known to length {f.length}, {length} requested")
    return f.value & _gf2.mask(length)


def mul_trunc(a: BitSeries, b: BitSeries, length: int) -> BitSeries:
    """Product ``a*b`` in GF(2)[[q]], truncated to ``length`` coefficients."""
    return BitSeries(length, _gf2.clmul(_operand(a, length), _operand(b, length), length))


def square_series(f: BitSeries, length: int) -> BitSeries:
    # (sum f_i q^i)^2 = sum f_i q^(2i) over GF(2)
    return BitSeries(length, _gf2.dilate(_operand(f, min(length, f.length)), 2, length))


def dilate(f: BitSeries, k: int, length: int) -> BitSeries:
    """``f(q**k)`` truncated to ``length``; needs ``f`` known to ``ceil(length/k)``."""
    need = -(-length // k)
    return BitSeries(length, _gf2.dilate(_operand(f, need), k, length))


# -- reciprocal by the convolution recurrence ---------------------------------

def _head_inverse(F: int, width: int) -> int:
    """Reciprocal of ``F`` modulo ``q**width`` by the plain bit recurrence."""
    F &= _gf2.mask(width)
    g = 1
    for n in range(1, width):
        bit = 0
        for j in range(1, n + 1):
            bit ^= (F >> j) & (g >> (n - j)) & 1
        g |= bit << n
    return g


def _byte_tables(g: int, width: int) -> list[list[int]]:
    m = _gf2.mask(width)
    tables = []
    for k in range(width // 8):
        row = [0] * 256
        for b in range(1, 256):
            low = b & -b
            row[b] = row[b ^ low] ^ ((g * (low << 8 * k)) & m)
        tables.append(row)
    return tables


def reciprocal_recurrence(f: BitSeries, length: int) -> BitSeries:
    """Reciprocal via ``fbar_n = sum_{j=1..n} f_j fbar_{n-j}``.

    The unknowns are produced 64 at a time.  Inside a 64-bit block the
    recurrence is a fixed triangular system whose solution is a product with
    ``1/f mod q^64`` (looked up bytewise).  Contributions of finished blocks to
    later ones are pushed forward by carryless products arranged as a balanced
    divide and conquer, so the total cost is O(M(len) log len).
    """
    _require_invertible(f)
    F = _operand(f, length)
    g = _head_inverse(F, WORD)
    tables = _byte_tables(g, WORD)

    def leaf(acc: int, size: int) -> int:
        out = 0
        k = 0
        while acc:
            out ^= tables[k][acc & 0xFF]
            acc >>= 8
            k += 1
        return out & _gf2.mask(size)

    def solve(size: int, acc: int) -> int:
        if size <= WORD:
            return leaf(acc, size)
        half = -(-(size // 2) // WORD) * WORD
        left = solve(half, acc & _gf2.mask(half))
        cross = _gf2.clmul(left, F & _gf2.mask(size), size) >> half
        right = solve(size - half, (acc >> half) ^ cross)
        return left | (right << half)

    return BitSeries(length, solve(length, 1))


def reciprocal_product(f: BitSeries, length: int) -> BitSeries:
    """Reciprocal as the product ``F(q) F(q^2) F(q^4) ... F(q^(2^K))``.

    Only factors with ``2^k < length`` change the truncation.  The product is
    grouped as ``F(q) * [F(q) F(q^2) ... F(q^(2^(K-1)))](q^2)`` and expanded from
    the inside out, halving the needed precision at each inner level.
    """
    _require_invertible(f)
    F = _operand(f, length)
    if length == 1:
        return BitSeries(1, 1)
    depth = (length - 1).bit_length() - 1
    precisions = [length]
    for _ in range(depth):
        precisions.append(-(-precisions[-1] // 2))
    precisions.reverse()
    acc = F & _gf2.mask(precisions[0])
    for prec in precisions[1:]:
        acc = _gf2.clmul(F & _gf2.mask(prec), _gf2.dilate(acc, 2, prec), prec)
    return BitSeries(length, acc)


ALGORITHMS = ("recurrence", "product", "oracle")


def reciprocal(f: BitSeries, length: int | None = None, algo: str = "recurrence") -> BitSeries:
    length = f.length if length is None else length
    if algo == "recurrence":
        return reciprocal_recurrence(f, length)
    if algo == "product":
        return reciprocal_product(f, length)
    if algo == "oracle":
        _require_invertible(f)
        return membership_parity_series(f, length)
    raise ValueError(f"unknown algorithm {algo!r}; choose from {ALGORITHMS}")


# -- counting oracles ----------------------------------------------------------

def _members_upto(f: Membership, n: int) -> list[int]:
    if isinstance(f, BitSeries):
        if n >= f.length:
            raise RangeError(f"membership of {n} unknown for a series of length {f.length}")
        return [i for i in f.indices() if i <= n]
    if callable(f):
        return [x for x in range(n + 1) if f(x)]
    return sorted({x for x in f if 0 <= x <= n})


def membership_parity(f: Membership, n: int, max_states: int = 10**7) -> int:
    """``fbar_n`` as the parity of #{(x_0, x_1, ...) : x_i in F, sum x_i 2^i = n}.

    ``f`` is a predicate, a BitSeries or an iterable of members.  Tuples are
    counted by memoized recursion over the residual after the low bits are
    consumed: with the residual rescaled by ``2^i`` the bit position drops out
    of the key, so the state is the rescaled residual alone.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    members = _members_upto(f, n)
    if not members or members[0] != 0:
        raise NotInvertibleError("0 must belong to the set")
    by_parity = ([x for x in members if x % 2 == 0], [x for x in members if x % 2 == 1])
    memo: dict[int, int] = {0: 1}

    def count(m: int) -> int:
        hit = memo.get(m)
        if hit is not None:
            return hit
        if len(memo) >= max_states:
            raise ResourceLimitError(f"more than {max_states} recursion states")
        total = 0
        for x in by_parity[m & 1]:
            if x > m:
                break
            total ^= count((m - x) >> 1)
        memo[m] = total
        return total

    return count(n)


def membership_parity_series(f: Membership, length: int) -> BitSeries:
    """All of ``fbar_0 .. fbar_{length-1}`` by the binary-tuple count, bottom up."""
    members = np.asarray(_members_upto(f, length - 1), dtype=np.int64)
    if members.size == 0 or members[0] != 0:
        raise NotInvertibleError("0 must belong to the set")
    split = (members[members % 2 == 0], members[members % 2 == 1])
    c = np.zeros(length, dtype=np.uint8)
    c[0] = 1
    for m in range(1, length):
        xs = split[m & 1]
        xs = xs[: np.searchsorted(xs, m, side="right")]
        c[m] = int(c[(m - xs) >> 1].sum()) & 1
    return BitSeries.from_array(c)


def composition_parity(f: Membership, n: int, cap: int = 24) -> int:
    """``fbar_n`` as the parity of the number of compositions of ``n`` into parts from F.

    Every composition is enumerated, so this is for small ``n`` only.
    """
    if n > cap:
        raise ResourceLimitError(f"n = {n} exceeds the enumeration cap {cap}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    parts = [x for x in _members_upto(f, n) if x > 0]

    def compositions(r: int) -> int:
        if r == 0:
            return 1
        total = 0
        for x in parts:
            if x > r:
                break
            total += compositions(r - x)
        return total

    return compositions(n) % 2


def odd_multinomial(ms: list[int]) -> bool:
    """True iff the multinomial coefficient of ``ms`` is odd (binary digits never collide)."""
    if not ms:
        raise ValueError("need at least one part")
    seen = 0
    for m in ms:
        if m <= 0:
            raise ValueError("parts must be positive")
        if seen & m:
            return False
        seen |= m
    return True


def irrelevant_indices(n: int) -> list[int]:
    """``n-1, n-3, ..., n-c`` with ``c`` the largest odd number below ``n/2``."""
    out = []
    c = 1
    while 2 * c < n:
        out.append(n - c)
        c += 2
    return out


def independence_check(f: BitSeries, n: int) -> bool:
    """True iff ``fbar_n`` survives flipping each of ``f_{n-1}, f_{n-3}, ..., f_{n-c}``."""
    _require_invertible(f)
    if n >= f.length:
        raise RangeError(f"n = {n} outside a series of length {f.length}")
    base = reciprocal_recurrence(f, n + 1)[n]
    for m in irrelevant_indices(n):
        flipped = BitSeries(n + 1, f.value ^ (1 << m))
        if reciprocal_recurrence(flipped, n + 1)[n] != base:
            return False
    return True
