import csv
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import DATA
from f2recip import f2poly as fp
from f2recip import f2series as fs
from f2recip.errors import NotInvertibleError, PreconditionError, ResourceLimitError
from f2recip.f2poly import F2Poly

odd_index = st.integers(1, 2**12).map(lambda k: 2 * k + 1)


def brute_irreducible(n):
    d = n.bit_length() - 1
    for v in range(2, 1 << (d // 2 + 1)):
        if 0 < v.bit_length() - 1 <= d // 2 and fp._gf2.mod_poly(n, v) == 0:
            return False
    return True


def reference_rows():
    with open(DATA / "polys_reference.csv") as fh:
        return list(csv.DictReader(fh))


def test_poly_from_index_and_evaluation():
    p = fp.poly_from_index(11)
    assert p.degree == 3 and str(p) == "1+q+q^3"
    assert fp.evaluate_at_2(p) == 11
    with pytest.raises(ValueError):
        fp.poly_from_index(0)


@given(st.integers(0, 2**40), st.integers(1, 2**20))
def test_divmod_identity(a, b):
    A, B = F2Poly(a), F2Poly(b)
    q, r = fp.poly_divmod(A, B)
    assert fp.poly_mul(q, B) + r == A
    assert r.bits == 0 or r.degree < B.degree


def test_gcd():
    a = fp.poly_mul(F2Poly(0b111), F2Poly(0b1011))
    b = fp.poly_mul(F2Poly(0b111), F2Poly(0b1101))
    assert fp.poly_gcd(a, b) == F2Poly(0b111)


def test_irreducibles_match_brute_force():
    want = [n for n in range(2, 1 << 11) if brute_irreducible(n)]
    assert list(fp.irreducibles_upto(10)) == want


@given(st.integers(2, 2**16))
def test_factorization_multiplies_back(n):
    factors = fp.factorize(F2Poly(n))
    prod = F2Poly(1)
    for v, e in factors:
        assert fp.is_irreducible(v)
        for _ in range(e):
            prod = prod * v
    assert prod == F2Poly(n)
    assert [v.bits for v, _ in factors] == sorted(v.bits for v, _ in factors)


def test_factorization_degree_guard():
    with pytest.raises(PreconditionError):
        fp.factorize(F2Poly(1))
    with pytest.raises(PreconditionError):
        fp.factorize(F2Poly(1 << 25 | 1))


def test_order_matches_stepping_for_all_small_indices():
    for n in range(3, 1 << 12, 2):
        p = F2Poly(n)
        assert fp.order(p) == fp.naive_order(p), n


def test_order_needs_constant_term():
    with pytest.raises(NotInvertibleError):
        fp.order(F2Poly(6))


def test_order_limit():
    with pytest.raises(ResourceLimitError):
        fp.order(F2Poly((1 << 23) | (1 << 5) | 1), limit=1000)


def test_primitive_counts_follow_totient():
    # number of primitive polynomials of degree d is phi(2^d - 1)/d
    def phi(m):
        return sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)
    for d in range(2, 11):
        count = sum(fp.is_primitive(F2Poly(n)) for n in range(1 << d, 1 << (d + 1)))
        assert count == phi((1 << d) - 1) // d


@given(odd_index)
def test_pstar_is_the_cofactor(n):
    p = F2Poly(n)
    D = fp.order(p)
    assert p * fp.pstar(p) == fp.one_plus_q_pow(D)


@given(odd_index)
def test_density_against_a_long_prefix(n):
    p = F2Poly(n)
    D = fp.order(p)
    fbar = fs.reciprocal(p.to_series(4 * D), 4 * D)
    # four full periods; the lone 1 at index 0 is part of the periodic pattern
    assert Fraction(fbar.popcount(), 4 * D) == fp.density_of_reciprocal(p)


@given(odd_index)
def test_cofactor_density_against_a_long_prefix(n):
    p = F2Poly(n)
    D = fp.order(p)
    star = fp.pstar(p)
    if star.bits == 1:
        assert fp.cofactor_reciprocal_density(p) == 0
        return
    fbar = fs.reciprocal(star.to_series(4 * D), 4 * D)
    assert Fraction(fbar.popcount(), 4 * D) == fp.cofactor_reciprocal_density(p)


@given(odd_index.filter(lambda n: n.bit_length() <= 12))
def test_lfsr_matches_series_reciprocal(n):
    p = F2Poly(n)
    assert fp.lfsr_stream(p, 3000) == fs.reciprocal(p.to_series(3000))


def test_lfsr_known_prefix():
    # 1/(1+q+q^3) has period 7 with pattern 1110100
    assert str(fp.lfsr_stream(F2Poly(11), 14)) == "11101001110100"


def test_debruijn_detects_primitive_streams():
    assert fp.debruijn_verify(fp.lfsr_stream(F2Poly(11), 7), 3)
    assert not fp.debruijn_verify(fp.lfsr_stream(F2Poly(0b11111), 15), 4)
    with pytest.raises(PreconditionError):
        fp.debruijn_verify(fs.unit(5), 3)


@given(st.integers(0, 2**10), odd_index.filter(lambda n: n.bit_length() <= 10))
def test_rational_normalize_reproduces_the_quotient(numer, denom):
    N, Dn = F2Poly(numer), F2Poly(denom)
    E, Q, D = fp.rational_normalize(N, Dn)
    L = 3 * D + 40
    direct = fs.mul_trunc(N.to_series(L), fs.reciprocal(Dn.to_series(L)), L)
    assert fp.periodic_expansion(E, Q, D, L) == direct
    assert Q.bits == 0 or Q.degree < D


def test_min_density_pair_tight_example():
    a, b, ok = fp.min_density_pair(fp.poly_from_index(51))
    assert (a, b, ok) == (Fraction(1, 2), Fraction(1, 2), True)
    assert fp.pstar(fp.poly_from_index(51)) == fp.poly_from_index(15)
    with pytest.raises(PreconditionError):
        fp.min_density_pair(fp.poly_from_index(7))


def test_reports_for_small_indices():
    assert fp.poly_report(11).csv_row() == "11,23,7,prim,4/7"
    assert fp.poly_report(1).csv_row() == "1,1,1,prim,0/1"
    assert fp.poly_report(5).fingerprint == "3^2"
    with pytest.raises(PreconditionError):
        fp.poly_report(4)


def test_table_matches_reference_except_known_fingerprints():
    mislabelled = {83, 101, 155, 217}
    for row in reference_rows():
        n = int(row["n"])
        rep = fp.poly_report(n)
        assert rep.ord == int(row["ord"])
        assert rep.density == Fraction(row["density"])
        if row["pstar_at_2"]:
            assert rep.pstar_index == int(row["pstar_at_2"])
        if n not in mislabelled:
            assert rep.fingerprint == row["factors"], n


@pytest.mark.parametrize("n,factors", [(83, "3*7*11"), (101, "3*7*13"), (155, "13*31"), (217, "11*31")])
def test_rows_tabulated_as_primitive_are_reducible(n, factors):
    p = fp.poly_from_index(n)
    assert not fp.is_irreducible(p)
    assert fp.poly_report(n).fingerprint == factors
    assert fp.naive_order(p) < (1 << p.degree) - 1
