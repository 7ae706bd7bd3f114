import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from f2recip import setgen as sg
from f2recip import f2series as fs
from f2recip.errors import EmptySetError, NonCanonicalError, NotInvertibleError, PreconditionError


def brute_theta(c1, c2, length):
    # |n| <= length is more than enough: |f(n)| >= |n| (c2|n| - c2 - 2 c1)/2
    vals = {c1 * n + c2 * n * (n - 1) // 2 for n in range(-length - 2, length + 3)}
    return sorted(v for v in vals if 0 <= v < length)


def test_canonical_form():
    assert sg.canonicalize_theta(1, 2) == (1, 2)
    assert sg.canonicalize_theta(2, 3) == (1, 3)
    assert sg.canonicalize_theta(1, 1) == (0, 1)
    with pytest.raises(NonCanonicalError):
        sg.canonicalize_theta(2, 4)
    with pytest.raises(EmptySetError):
        sg.canonicalize_theta(3, 2)
    with pytest.raises(EmptySetError):
        sg.canonicalize_theta(-1, 2)


def test_canonical_pairs_up_to_18():
    pairs = sg.canonical_theta_pairs(18)
    assert len(pairs) == 52
    assert all(0 <= 2 * a <= b and math.gcd(a, b) == 1 for a, b in pairs)


@given(st.integers(1, 30).flatmap(lambda c2: st.tuples(st.integers(0, c2 // 2), st.just(c2))))
def test_theta_members_match_brute_force(pair):
    c1, c2 = pair
    if math.gcd(c1, c2) != 1:
        return
    assert sg.theta_members(c1, c2, 500).tolist() == brute_theta(c1, c2, 500)
    assert sg.theta_members(c1, c2, 500, reach=3).tolist() == brute_theta(c1, c2, 500)


def test_theta_reflection():
    for c2 in range(1, 15):
        for c1 in range(c2 + 1):
            if math.gcd(c1, c2) == 1:
                assert brute_theta(c1, c2, 300) == brute_theta(c2 - c1, c2, 300)


def test_named_families():
    assert sg.generate(sg.Squares(), 30).indices() == [0, 1, 4, 9, 16, 25]
    assert sg.generate(sg.Pentagonal(), 30).indices() == [0, 1, 2, 5, 7, 12, 15, 22, 26]
    assert sg.generate(sg.PowersOfTwo(1), 20).indices() == [0, 1, 2, 4, 8, 16]
    assert sg.generate(sg.PowersOfTwo(2), 70).indices() == [0, 1, 4, 16, 64]


def test_ptm_is_even_popcount():
    s = sg.generate(sg.PTM(), 1000)
    assert s.indices() == [n for n in range(1000) if n.bit_count() % 2 == 0]


def test_random_is_reproducible_and_respects_probability():
    a = sg.generate(sg.Random(0.3, 5), 20000)
    assert a == sg.generate(sg.Random(0.3, 5), 20000)
    assert a != sg.generate(sg.Random(0.3, 6), 20000)
    assert a[0] == 1
    assert abs(a.popcount() / 20000 - 0.3) < 0.02


def test_random_split_probabilities():
    s = sg.generate(sg.Random(0.9, 1, p_odd=0.1), 20000).to_array()
    assert abs(s[2::2].mean() - 0.9) < 0.02
    assert abs(s[1::2].mean() - 0.1) < 0.02


def test_random_rejects_degenerate_probability():
    with pytest.raises(PreconditionError):
        sg.generate(sg.Random(1.0, 0), 10)


def test_eventually_periodic():
    s = sg.generate(sg.EventuallyPeriodic(0b1, 0b1010, 4), 16)
    assert s.indices() == [0, 1, 3, 5, 7, 9, 11, 13, 15]
    with pytest.raises(NotInvertibleError):
        sg.generate(sg.EventuallyPeriodic(1, 1, 3), 10)


def test_explicit_and_polynomial():
    assert sg.generate(sg.Explicit((0, 3, 5)), 10).indices() == [0, 3, 5]
    assert sg.generate(sg.Polynomial(11), 10).indices() == [0, 1, 3]
    with pytest.raises(NotInvertibleError):
        sg.generate(sg.Explicit((1, 2)), 5)
    with pytest.raises(PreconditionError):
        sg.generate(sg.Polynomial(4), 5)


def test_complement_keeps_structural_zero():
    s = sg.complement(sg.PowersOfTwo(1), 20)
    assert s.indices() == [0, 3, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15, 17, 18, 19]
    assert sg.complement(sg.Squares(), 10).indices() == [0, 2, 3, 5, 6, 7, 8]


def test_complement_of_periodic_set_is_verbatim():
    # the naturals without n = 2 mod 4
    s = sg.generate(sg.parse_setspec("complement:evper:0,4,4"), 12)
    assert s.indices() == [0, 1, 3, 4, 5, 7, 8, 9, 11]
    with pytest.raises(NotInvertibleError):
        sg.complement(sg.Explicit((0, 1)), 5)


@pytest.mark.parametrize("text", [
    "theta:1,6", "squares", "pentagonal", "ptm", "pow2:3", "random:0.25,7",
    "random:0.9/0.1,3", "complement:squares", "poly:11", "explicit:0,3,5", "evper:1,10,4",
    "complement:complement:ptm",
])
def test_setspec_text_roundtrip(text):
    spec = sg.parse_setspec(text)
    assert sg.format_setspec(spec) == text
    assert sg.parse_setspec(sg.format_setspec(spec)) == spec


@pytest.mark.parametrize("text", ["cubes", "theta:1", "random:x,1", "pow2:a"])
def test_bad_setspec(text):
    with pytest.raises(ValueError):
        sg.parse_setspec(text)


def test_generate_length_guard():
    with pytest.raises(ValueError):
        sg.generate(sg.Squares(), 0)


def test_squares_reciprocal_through_generate():
    fbar = fs.reciprocal(sg.generate(sg.Theta(1, 2), 36))
    assert fbar.indices() == [0, 1, 2, 3, 5, 7, 8, 9, 13, 17, 18, 23, 27, 29, 31, 32, 35]


def test_indicator_array_dtype():
    arr = sg.generate(sg.Squares(), 10).to_array()
    assert arr.dtype == np.uint8


def test_reciprocal_of_naturals_without_powers_of_two():
    fbar = fs.reciprocal(sg.complement(sg.PowersOfTwo(1), 1 << 12))
    want = {0, 3} | {v for n in range(3, 13) for v in ((1 << n) - 1, (1 << n) - 3)}
    assert fbar.indices() == sorted(want)


def test_reciprocal_of_naturals_without_two_mod_four():
    n = 1 << 12
    fbar = fs.reciprocal(sg.generate(sg.parse_setspec("complement:evper:0,4,4"), n + 1))
    want = [k for k in range(n + 1) if k == 1 or k % 7 in (0, 2, 5, 6)]
    assert fbar.indices() == want


def test_complement_of_empty_explicit_is_everything():
    assert sg.complement(sg.Explicit(()), 6).indices() == list(range(6))
