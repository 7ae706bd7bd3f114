"""Bit-level kernels for polynomials over GF(2) stored as Python ints.

Bit ``i`` of an int is the coefficient of ``q**i``.  Python ints are already a
packed little-endian word array, so every routine here works on them directly
and only drops to numpy/gmpy2 for the large carryless products.
"""

from __future__ import annotations

import gmpy2
import numpy as np

# Below this operand size the shift-and-xor loop beats the Kronecker route.
SCHOOLBOOK_BITS = 256


def mask(n: int) -> int:
    return (1 << n) - 1


def _unpack(x: int, nbits: int) -> np.ndarray:
    raw = x.to_bytes((nbits + 7) // 8, "little")
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return bits[:nbits]


def _pack(bits: np.ndarray) -> int:
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def to_bits(x: int, nbits: int) -> np.ndarray:
    """Coefficients ``0..nbits-1`` of ``x`` as a uint8 array of 0/1."""
    return _unpack(x, nbits).copy()


def from_bits(bits) -> int:
    bits = np.asarray(bits, dtype=np.uint8) & 1
    if bits.size == 0:
        return 0
    return _pack(bits)


def _schoolbook(a: int, b: int) -> int:
    if a.bit_count() < b.bit_count():
        a, b = b, a
    c = 0
    while b:
        low = b & -b
        c ^= a * low
        b ^= low
    return c


def _kronecker(a: int, b: int, n: int) -> int:
    # Each coefficient becomes a w-byte field; the integer product then holds
    # the exact convolution counts, whose low bits are the GF(2) product.
    na, nb = a.bit_length(), b.bit_length()
    most = min(a.bit_count(), b.bit_count())
    w = max(1, -(-most.bit_length() // 8))

    def fields(x, nbits):
        buf = np.zeros((nbits, w), dtype=np.uint8)
        buf[:, 0] = _unpack(x, nbits)
        return gmpy2.from_binary(b"\x01\x01" + buf.tobytes())

    prod = fields(a, na) * fields(b, nb)
    prod = gmpy2.f_mod_2exp(prod, 8 * w * n)
    raw = gmpy2.to_binary(prod)[2:]
    raw = raw + bytes(n * w - len(raw))
    low = np.frombuffer(raw, dtype=np.uint8)[::w] & 1
    return _pack(low)


def clmul(a: int, b: int, n: int | None = None) -> int:
    """Carryless product of ``a`` and ``b``, truncated to ``n`` bits if given."""
    if n is not None:
        a &= mask(n)
        b &= mask(n)
    if not a or not b:
        return 0
    full = a.bit_length() + b.bit_length() - 1
    n = full if n is None else min(n, full)
    if min(a.bit_length(), b.bit_length()) <= SCHOOLBOOK_BITS:
        return _schoolbook(a, b) & mask(n)
    return _kronecker(a, b, n)


def dilate(x: int, k: int, n: int | None = None) -> int:
    """``x(q**k)``: move bit ``i`` to bit ``k*i``; optionally truncate to ``n`` bits."""
    if k < 1:
        raise ValueError("dilation factor must be positive")
    if k == 1 or x <= 1:
        out = x
    else:
        nbits = x.bit_length()
        if n is not None:
            nbits = min(nbits, -(-n // k))
        src = _unpack(x & mask(nbits), nbits)
        dst = np.zeros(k * (nbits - 1) + 1, dtype=np.uint8)
        dst[::k] = src
        out = _pack(dst)
    return out if n is None else out & mask(n)


def degree(x: int) -> int:
    return x.bit_length() - 1


def divmod_poly(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    quo = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        quo |= 1 << shift
        a ^= b << shift
    return quo, a


def mod_poly(a: int, b: int) -> int:
    return divmod_poly(a, b)[1]


def mulmod(a: int, b: int, m: int) -> int:
    return mod_poly(_schoolbook(a, b) if a and b else 0, m)


def powmod(a: int, e: int, m: int) -> int:
    result = mod_poly(1, m)
    a = mod_poly(a, m)
    while e:
        if e & 1:
            result = mulmod(result, a, m)
        e >>= 1
        if e:
            a = mulmod(a, a, m)
    return result


def gcd_poly(a: int, b: int) -> int:
    while b:
        a, b = b, mod_poly(a, b)
    return a
