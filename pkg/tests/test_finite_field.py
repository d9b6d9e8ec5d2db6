import random
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reciprocity.errors import DomainError, ResourceError
from reciprocity.finite_field import (
    PolyFp,
    count_irreducibles,
    discrete_log,
    element_order,
    enumerate_irreducibles,
    ext_make,
    find_generator,
    hausner_check,
    hausner_pairs,
    is_irreducible,
    nth_power_solvable,
    nth_power_solve,
    order_census,
    poly_gcd,
    subfield_member,
    verify_xq_factorization,
)
from reciprocity.integers import divisors, primes_upto, totient


def P(p, *coeffs):
    return PolyFp(p, coeffs)


def test_poly_arithmetic_examples():
    assert P(2, 1, 1, 1) * P(2, 1, 1) == P(2, 1, 0, 0, 1)
    assert poly_gcd(P(5, -1, 0, 1), P(5, -1, 1)) == P(5, 4, 1)
    assert divmod(P(3, 0, 0, 0, 1), P(3, 0, 1)) == (P(3, 0, 0, 1), P(3))


@given(st.sampled_from([2, 3, 5, 7]), st.lists(st.integers(0, 6), max_size=6),
       st.lists(st.integers(0, 6), min_size=1, max_size=5))
def test_poly_division_contract(p, a, b):
    f, g = PolyFp(p, a), PolyFp(p, b)
    if g.degree < 0:
        return
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


def test_is_irreducible_examples():
    assert is_irreducible(P(2, 1, 1, 1))
    assert not is_irreducible(P(2, 1, 0, 1))
    assert is_irreducible(P(3, 1, 0, 1))
    with pytest.raises(DomainError):
        is_irreducible(P(5, 3))


def test_counts_and_enumeration():
    assert count_irreducibles(2, 1) == 2
    assert count_irreducibles(2, 2) == 1
    assert count_irreducibles(3, 2) == 3
    assert enumerate_irreducibles(2, 2) == [P(2, 1, 1, 1)]
    assert len(enumerate_irreducibles(2, 3)) == 2
    assert enumerate_irreducibles(3, 1) == [P(3, 0, 1), P(3, 1, 1), P(3, 2, 1)]


def test_enumeration_guard():
    with pytest.raises(ResourceError):
        enumerate_irreducibles(7, 4, guard=100)


@pytest.mark.parametrize("p,n", [(p, n) for p in primes_upto(13) for n in range(1, 4)])
def test_count_matches_enumeration(p, n):
    assert count_irreducibles(p, n) == len(enumerate_irreducibles(p, n))


@pytest.mark.parametrize("p,n", [(2, 2), (3, 1), (2, 3), (3, 3), (5, 2)])
def test_xq_factorization(p, n):
    assert verify_xq_factorization(p, n)


def test_ext_make_moduli():
    assert ext_make(2, 2).modulus == P(2, 1, 1, 1)
    assert ext_make(7, 1).modulus == P(7, 0, 1)
    assert ext_make(3, 2).modulus == P(3, 1, 0, 1)


def test_f4_arithmetic():
    F = ext_make(2, 2)
    a = F.alpha
    assert a * a == a + F.one
    assert (a + a).is_zero()
    assert a * a.inv() == F.one


def test_generators():
    assert find_generator(ext_make(7, 1)) == ext_make(7, 1).scalar(3)
    F4 = ext_make(2, 2)
    g = find_generator(F4)
    assert g**3 == F4.one and g != F4.one
    assert find_generator(ext_make(2, 1)) == ext_make(2, 1).one


def test_census_examples():
    assert order_census(ext_make(7, 1)) == {1: 1, 2: 1, 3: 2, 6: 2}
    assert order_census(ext_make(2, 2)) == {1: 1, 3: 2}
    assert order_census(ext_make(2, 1)) == {1: 1}


@pytest.mark.parametrize("p,n", [(2, 4), (3, 3), (5, 2), (7, 2), (2, 6)])
def test_roots_of_unity_count(p, n):
    F = ext_make(p, n)
    elts = [x for x in F.elements() if not x.is_zero()]
    for d in divisors(F.order - 1):
        assert sum(1 for x in elts if x**d == F.one) == d


def test_nth_power_examples():
    F = ext_make(7, 1)
    assert [x.code() for x in nth_power_solve(F, F.one, 3)] == [1, 2, 4]
    assert nth_power_solve(F, F.scalar(3), 2) == []
    assert not nth_power_solvable(F, F.scalar(3), 2)
    F9 = ext_make(3, 2)
    assert nth_power_solve(F9, F9.one, 1) == [F9.one]
    with pytest.raises(DomainError):
        nth_power_solve(F, F.zero, 2)


@pytest.mark.parametrize("p,n", [(5, 1), (2, 3), (3, 2), (13, 1)])
def test_nth_power_solution_count(p, n):
    F = ext_make(p, n)
    for m in range(1, 9):
        d = gcd(m, F.order - 1)
        for a in F.elements():
            if a.is_zero():
                continue
            sols = nth_power_solve(F, a, m)
            assert len(sols) in (0, d)
            assert all(x**m == a for x in sols)
            assert bool(sols) == nth_power_solvable(F, a, m)


def test_subfield_member():
    F4 = ext_make(2, 2)
    assert not subfield_member(F4, F4.alpha, 1)
    assert subfield_member(F4, F4.one, 1)
    F16 = ext_make(2, 4)
    assert all(subfield_member(F16, x, 4) for x in F16.elements())
    with pytest.raises(DomainError):
        subfield_member(F16, F16.one, 3)


def test_frobenius_is_additive():
    rng = random.Random(7)
    for p, n in [(2, 5), (3, 4), (5, 3), (31, 2)]:
        F = ext_make(p, n)
        for _ in range(20):
            a, b = F.from_code(rng.randrange(F.order)), F.from_code(rng.randrange(F.order))
            for d in range(n + 1):
                assert (a + b) ** (p**d) == a ** (p**d) + b ** (p**d)


def test_discrete_log_roundtrip():
    F = ext_make(3, 3)
    g = find_generator(F)
    assert element_order(g) == F.order - 1
    for l in (0, 1, 5, 25):
        assert discrete_log(g**l, g) == l


@pytest.mark.parametrize("p,q,n", [(3, 5, 2), (5, 3, 4), (3, 7, 1)])
def test_hausner_examples(p, q, n):
    r = hausner_check(p, q)
    assert r.n == n and r.tau_sq_ok and r.tau_q_ok and r.qr_consistent


def test_hausner_guard_and_domain():
    with pytest.raises(ResourceError):
        hausner_check(7, 3, guard=100)
    with pytest.raises(DomainError):
        hausner_check(5, 5)


def test_hausner_small_sweep():
    pairs = list(hausner_pairs(5000))
    assert pairs == sorted(pairs)
    assert all(hausner_check(p, q).ok for p, q in pairs)
