from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reciprocity.errors import DomainError
from reciprocity.integers import (
    CongruenceSolutionSet,
    check_quadratic_reciprocity,
    check_quadratic_supplements,
    divisors,
    factorize,
    is_prime,
    legendre,
    mobius,
    mobius_invert,
    mobius_summatory,
    mod_inverse,
    mod_pow,
    multiplicative_order,
    primes_upto,
    primitive_root,
    round_div,
    solve_linear_congruence,
    sqrt_mod,
    totient,
)

small_primes = st.sampled_from([p for p in primes_upto(2000) if p > 2])


@pytest.mark.parametrize("n,want", [(1, 1), (4, 0), (6, 1), (30, -1), (7, -1)])
def test_mobius(n, want):
    assert mobius(n) == want


def test_mobius_rejects_zero():
    with pytest.raises(DomainError):
        mobius(0)


@pytest.mark.parametrize("n,want", [(1, 1), (12, 0), (7, 0)])
def test_mobius_summatory(n, want):
    assert mobius_summatory(n) == want


def test_mobius_invert_examples():
    assert mobius_invert(lambda n: n, 12) == 4
    assert mobius_invert(lambda n: 1, 1) == 1
    assert mobius_invert(lambda n: 2**n, 2) == 2


@given(st.integers(1, 400))
def test_mobius_invert_recovers_totient(n):
    assert mobius_invert(lambda m: m, n) == totient(n)


@pytest.mark.parametrize("n,want", [(1, 1), (9, 6), (13, 12)])
def test_totient(n, want):
    assert totient(n) == want
    assert want == sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def test_linear_congruence_examples():
    r = solve_linear_congruence(2, 4, 6)
    assert r.solvable and r.count == 2 and r.solutions() == [2, 5]
    assert solve_linear_congruence(3, 1, 5).solutions() == [2]
    assert solve_linear_congruence(2, 1, 4) == CongruenceSolutionSet(False)


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 60))
def test_linear_congruence_matches_brute_force(a, b, m):
    want = [x for x in range(m) if (a * x - b) % m == 0]
    r = solve_linear_congruence(a, b, m)
    assert r.solvable == bool(want)
    assert sorted(r.solutions()) == want


def test_mod_pow_examples():
    assert mod_pow(2, 10, 1000) == 24
    assert mod_pow(2, 6, 9) == 1
    assert mod_pow(5, 0, 7) == 1


@given(st.integers(1, 10**6), st.integers(2, 500))
def test_euler_theorem(a, m):
    if gcd(a, m) == 1:
        assert mod_pow(a, totient(m), m) == 1
        assert a * mod_inverse(a, m) % m == 1


@pytest.mark.parametrize("a,p,want", [(0, 7, 0), (4, 7, 1), (2, 7, 1), (3, 7, -1)])
def test_legendre(a, p, want):
    assert legendre(a, p) == want


@pytest.mark.parametrize("p", [2, 9, 1, -3])
def test_legendre_needs_odd_prime(p):
    with pytest.raises(DomainError):
        legendre(1, p)


@given(small_primes, st.integers(-10**6, 10**6))
def test_legendre_agrees_with_squares(p, a):
    squares = {x * x % p for x in range(1, p)}
    want = 0 if a % p == 0 else (1 if a % p in squares else -1)
    assert legendre(a, p) == want


@pytest.mark.parametrize("p,q", [(3, 5), (3, 7), (5, 13)])
def test_quadratic_reciprocity_examples(p, q):
    assert check_quadratic_reciprocity(p, q, supplements=True)


def test_quadratic_reciprocity_rejects_equal():
    with pytest.raises(DomainError):
        check_quadratic_reciprocity(5, 5)


@given(small_primes)
def test_supplements(p):
    assert check_quadratic_supplements(p)


def test_sqrt_mod_examples():
    assert sqrt_mod(2, 7) == 3
    assert sqrt_mod(0, 5) == 0
    assert sqrt_mod(3, 7) is None


@given(small_primes, st.integers(0, 10**9))
def test_sqrt_mod_property(p, a):
    r = sqrt_mod(a, p)
    if legendre(a, p) == -1:
        assert r is None
    else:
        assert r * r % p == a % p and r <= p - r


def test_primitive_root():
    assert primitive_root(7) == 3
    assert primitive_root(2) == 1
    for p in primes_upto(300)[1:]:
        g = primitive_root(p)
        assert multiplicative_order(g, p) == p - 1
        assert all(multiplicative_order(h, p) < p - 1 for h in range(2, g))


def test_factorize_and_divisors():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert primes_upto(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert all(is_prime(p) for p in primes_upto(1000))


@given(st.integers(-10**6, 10**6), st.integers(1, 1000))
def test_round_div_nearest_ties_down(num, den):
    q = round_div(num, den)
    assert abs(2 * (num - q * den)) <= den
    if abs(2 * (num - q * den)) == den:
        assert num - q * den > 0  # tie resolved toward -infinity
