import pytest
from hypothesis import given
from hypothesis import strategies as st

from reciprocity.eisenstein import (
    OMEGA,
    ONE_MINUS_OMEGA,
    EisensteinInt as E,
    EisensteinResidueField,
    associates,
    classify_prime,
    eis_divmod,
    eis_gcd,
    is_primary,
    is_prime_elem,
    is_unit,
    primary_associate,
    residue_field_order,
    residue_reduce,
    split_by_search,
    units,
)
from reciprocity.errors import DomainError
from reciprocity.integers import primes_upto

coord = st.integers(-1000, 1000)
eis = st.builds(E, coord, coord)
nonzero = eis.filter(lambda x: not x.is_zero())


def test_arithmetic_examples():
    assert E(3, 1) * E(2, -1) == E(7)
    assert ONE_MINUS_OMEGA**2 == E(0, -3)
    assert E(5, 2).conj() == E(3, -2)
    assert OMEGA * OMEGA == E(-1, -1)


def test_norms_and_units():
    assert ONE_MINUS_OMEGA.norm() == 3
    assert E(2, 1).norm() == 3
    assert E(1).norm() == 1
    assert is_unit(OMEGA) and not is_unit(E(2))
    assert len(units()) == 6 and all(is_unit(u) for u in units())


def test_divmod_examples():
    assert eis_divmod(E(7), E(3, 1)) == (E(2, -1), E(0))
    assert eis_divmod(E(4, 9), E(1)) == (E(4, 9), E(0))
    assert eis_divmod(E(5), E(2)) == (E(2), E(1))
    with pytest.raises(ZeroDivisionError):
        eis_divmod(E(1), E(0))


@given(eis, eis)
def test_norm_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()
    assert a * a.conj() == E(a.norm())


@given(eis, nonzero)
def test_division_contract(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.norm() < b.norm()


def test_gcd_examples():
    assert eis_gcd(7, E(3, 1)) == E(2, 3)
    assert eis_gcd(E(11, -4), 1) == E(1)
    assert eis_gcd(6, 4) == E(2)
    with pytest.raises(DomainError):
        eis_gcd(0, 0)


@given(nonzero, nonzero)
def test_gcd_divides_both(a, b):
    g = eis_gcd(a, b)
    assert g.divides(a) and g.divides(b)


def test_classify_examples():
    c = classify_prime(7)
    assert (c.kind, c.pi, c.conj) == ("split", E(2, 3), E(-1, -3))
    assert classify_prime(5).kind == "inert"
    r = classify_prime(3)
    assert (r.kind, r.pi, r.unit) == ("ramified", ONE_MINUS_OMEGA, -(OMEGA * OMEGA))
    assert r.unit * r.pi**2 == E(3)


def test_splitting_sweep():
    for p in primes_upto(10**4):
        if p % 3 != 1:
            continue
        c = classify_prime(p)
        assert is_primary(c.pi) and c.pi.norm() == p and c.pi * c.conj == E(p)
        if p < 500:
            oracle = split_by_search(p)
            assert oracle in (c.pi, c.conj)


def test_prime_elements():
    assert is_prime_elem(E(3, 1))
    assert is_prime_elem(E(5))
    assert not is_prime_elem(E(7))
    with pytest.raises(DomainError):
        is_prime_elem(OMEGA)


def test_primary_examples():
    assert primary_associate(E(3, 1)) == (-(OMEGA * OMEGA), E(2, 3))
    assert primary_associate(E(5)) == (E(1), E(5))
    with pytest.raises(DomainError):
        primary_associate(ONE_MINUS_OMEGA)


@given(nonzero)
def test_primary_uniqueness(a):
    if a.norm() % 3:
        assert sum(is_primary(x) for x in associates(a)) == 1


@given(nonzero, nonzero)
def test_primary_closure(a, b):
    if a.norm() % 3 and b.norm() % 3:
        x, y = primary_associate(a)[1], primary_associate(b)[1]
        assert is_primary(-(x * y))


def test_residue_examples():
    assert residue_reduce(OMEGA, E(2, 3)).value == 4
    assert residue_reduce(E(0), E(5)).value == (0, 0)
    assert residue_field_order(E(2, 3)) == 7
    assert residue_field_order(E(5)) == 25
    assert residue_field_order(ONE_MINUS_OMEGA) == 3


def _small_primes(bound):
    out = [ONE_MINUS_OMEGA]
    for p in primes_upto(bound):
        if p % 3 == 1:
            c = classify_prime(p)
            out += [c.pi, c.conj]
        elif p % 3 == 2 and p * p <= bound:
            out.append(E(p))
    return out


@pytest.mark.parametrize("pi", _small_primes(200), ids=str)
def test_residue_field_cardinality(pi):
    F = EisensteinResidueField(pi)
    n = pi.norm()
    # a box of side n contains a full set of representatives
    images = {F.reduce(E(a, b)) for a in range(n) for b in range(min(n, 3 if n == 3 else n))}
    assert len(images) == n == len(set(F.elements()))
    # reduction is a ring map
    for a, b in [(E(5, 7), E(-3, 11)), (E(2, -9), OMEGA)]:
        assert F.reduce(a * b) == F.mul(F.reduce(a), F.reduce(b))


def test_literal_format():
    assert [str(x) for x in (E(2, 3), E(-1, -3), E(0, 1), E(0, -1), E(5), E(0, 3))] == [
        "2+3*w", "-1-3*w", "w", "-w", "5", "3*w"]
