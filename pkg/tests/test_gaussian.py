import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reciprocity.errors import DomainError, ReciprocityPreconditionError
from reciprocity.gaussian import (
    I,
    ONE_PLUS_I,
    UNITS,
    BiquadraticCharCtx,
    GaussianInt as G,
    GaussianResidueField,
    QuarticValue,
    biquadratic_char,
    check_biquadratic_reciprocity,
    check_biquadratic_reciprocity_quotient,
    classify_gaussian_prime,
    gauss_divmod,
    gauss_gcd,
    gaussian_primaries,
    is_primary_gaussian,
    primary_associate_gaussian,
)
from reciprocity.integers import primes_upto

coord = st.integers(-1000, 1000)
gauss = st.builds(G, coord, coord)
nonzero = gauss.filter(lambda x: not x.is_zero())


def test_arithmetic_examples():
    assert ONE_PLUS_I.norm() == 2
    assert G(1, 2) * G(1, -2) == G(5)
    assert G(3, 4).conj() == G(3, -4)
    assert I * I == G(-1)


@given(gauss, gauss)
def test_norm_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()


@given(gauss, nonzero)
def test_division_contract(a, b):
    q, r = gauss_divmod(a, b)
    assert q * b + r == a and r.norm() < b.norm()


@given(nonzero, nonzero)
def test_gcd_divides(a, b):
    g = gauss_gcd(a, b)
    assert g.divides(a) and g.divides(b)


def test_classification():
    c = classify_gaussian_prime(5)
    assert (c.kind, c.pi) == ("split", G(-1, 2))
    assert c.pi * c.conj == G(5)
    assert classify_gaussian_prime(7).kind == "inert"
    assert classify_gaussian_prime(2).kind == "ramified"
    for p in primes_upto(5000):
        if p % 4 == 1:
            c = classify_gaussian_prime(p)
            assert is_primary_gaussian(c.pi) and c.pi.norm() == p


def test_primary_examples():
    assert is_primary_gaussian(G(-1, 2))
    assert not is_primary_gaussian(G(1, 2))
    assert primary_associate_gaussian(G(1, 2))[1] == G(-1, -2)
    assert primary_associate_gaussian(G(3))[1] == G(-3)
    with pytest.raises(DomainError):
        is_primary_gaussian(ONE_PLUS_I)


@given(nonzero)
def test_primary_uniqueness(a):
    if a.norm() % 2:
        assert sum(is_primary_gaussian(u * a) for u in UNITS) == 1


@pytest.mark.parametrize("pi", [ONE_PLUS_I] + gaussian_primaries(200), ids=str)
def test_residue_field_cardinality(pi):
    F = GaussianResidueField(pi)
    n = pi.norm()
    images = {F.reduce(G(a, b)) for a in range(n) for b in range(n)}
    assert len(images) == n == len(set(F.elements()))


def test_fermat_analogue():
    rng = random.Random(11)
    for pi in gaussian_primaries(500):
        F = GaussianResidueField(pi)
        for _ in range(10):
            a = G(rng.randint(-99, 99), rng.randint(-99, 99))
            if not pi.divides(a):
                assert F.pow(F.reduce(a), pi.norm() - 1) == F.one


def test_character_examples():
    pi = G(-1, 2)
    assert biquadratic_char(pi, 1) is QuarticValue.ONE
    assert biquadratic_char(pi, 2) is QuarticValue.MINUS_I
    assert biquadratic_char(pi, G(3, 1) ** 4) is QuarticValue.ONE
    assert biquadratic_char(pi, pi * 7) is QuarticValue.ZERO
    with pytest.raises(DomainError):
        biquadratic_char(ONE_PLUS_I, 3)


def test_character_multiplicative_and_partition():
    rng = random.Random(5)
    for p in primes_upto(1000):
        if p % 4 != 1:
            continue
        chi = BiquadraticCharCtx(classify_gaussian_prime(p).pi)
        ones = sum(chi(t) is QuarticValue.ONE for t in range(1, p))
        assert ones == (p - 1) // 4
        for _ in range(5):
            a, b = G(rng.randint(-50, 50), rng.randint(-50, 50)), G(rng.randint(-50, 50), rng.randint(-50, 50))
            assert chi(a * b) == chi(a) * chi(b)


def test_quotient_law_holds():
    prims = gaussian_primaries(500)
    for i, pi in enumerate(prims):
        for lam in prims[i + 1 :]:
            assert check_biquadratic_reciprocity_quotient(pi, lam)


def test_product_form_examples():
    five = G(-1, 2)
    assert check_biquadratic_reciprocity(five, G(3, 2))
    # chi values -i and i: product 1, sign -1
    assert not check_biquadratic_reciprocity(five, G(3, -2))
    assert check_biquadratic_reciprocity_quotient(five, G(3, -2))
    # both characters equal -i here, so the product is -1 while the sign is +1
    assert biquadratic_char(five, -3) is biquadratic_char(G(-3), five) is QuarticValue.MINUS_I
    assert not check_biquadratic_reciprocity(five, -3)
    assert check_biquadratic_reciprocity_quotient(five, -3)


def test_product_form_holds_exactly_for_real_values():
    prims = gaussian_primaries(300)
    for i, pi in enumerate(prims):
        for lam in prims[i + 1 :]:
            real = biquadratic_char(lam, pi).exponent % 2 == 0
            assert check_biquadratic_reciprocity(pi, lam) == real


def test_reciprocity_preconditions():
    pi = G(-1, 2)
    with pytest.raises(ReciprocityPreconditionError) as e:
        check_biquadratic_reciprocity(pi, pi)
    assert e.value.reason == "not-coprime"
    with pytest.raises(ReciprocityPreconditionError) as e:
        check_biquadratic_reciprocity(G(1, 2), -3)
    assert e.value.reason == "not-primary"
    with pytest.raises(ReciprocityPreconditionError) as e:
        check_biquadratic_reciprocity(ONE_PLUS_I, -3)
    assert e.value.reason == "even-norm"
