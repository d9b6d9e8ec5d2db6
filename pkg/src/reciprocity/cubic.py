"""The cubic residue character on Z[w], cubic reciprocity and its supplements."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isqrt
from typing import Optional, Union

from .characters import MultChar, char_make, gauss_sum, jacobi_sum
from .eisenstein import (
    OMEGA,
    OMEGA_SQ,
    ONE,
    ONE_MINUS_OMEGA,
    EisensteinInt,
    EisensteinResidueField,
    classify_prime,
    is_primary,
    is_prime_elem,
)
from .errors import ConsistencyError, DomainError, ReciprocityPreconditionError
from .integers import is_prime, primes_upto, primitive_root

IntLike = Union[int, EisensteinInt]


class CubicValue(Enum):
    """0 or a cube root of unity."""

    ZERO = "0"
    ONE = "1"
    OMEGA = "w"
    OMEGA_SQ = "w^2"

    @property
    def exponent(self) -> int | None:
        return _EXP[self]

    @classmethod
    def omega_power(cls, m: int) -> CubicValue:
        return _FROM_EXP[m % 3]

    def __mul__(self, other: CubicValue) -> CubicValue:
        if CubicValue.ZERO in (self, other):
            return CubicValue.ZERO
        return CubicValue.omega_power(self.exponent + other.exponent)

    def conj(self) -> CubicValue:
        if self is CubicValue.ZERO:
            return self
        return CubicValue.omega_power(-self.exponent)

    def to_eisenstein(self) -> EisensteinInt:
        if self is CubicValue.ZERO:
            return EisensteinInt(0)
        return (ONE, OMEGA, OMEGA_SQ)[self.exponent]


_EXP = {CubicValue.ZERO: None, CubicValue.ONE: 0, CubicValue.OMEGA: 1, CubicValue.OMEGA_SQ: 2}
_FROM_EXP = {v: k for k, v in _EXP.items() if v is not None}


class CubicCharCtx:
    """chi_pi for a prime pi of norm other than 3."""

    def __init__(self, pi: IntLike) -> None:
        pi = EisensteinInt.coerce(pi)
        if pi.norm() == 3:
            raise DomainError(f"{pi} lies over 3; the cubic character is undefined")
        if pi.norm() <= 1 or not is_prime_elem(pi):
            raise DomainError(f"{pi} is not a prime element")
        self.pi = pi
        self.norm = pi.norm()
        self.exponent = (self.norm - 1) // 3
        self.field = EisensteinResidueField(pi)
        # candidates in the fixed order 1, w, w^2
        self._units = [(v, self.field.reduce(v.to_eisenstein())) for v in
                       (CubicValue.ONE, CubicValue.OMEGA, CubicValue.OMEGA_SQ)]

    def __call__(self, alpha: IntLike) -> CubicValue:
        F = self.field
        r = F.reduce(alpha)
        if r == F.zero:
            return CubicValue.ZERO
        power = F.pow(r, self.exponent)
        hits = [v for v, u in self._units if u == power]
        if len(hits) != 1:
            raise ConsistencyError(f"{len(hits)} cube roots of unity match {alpha} mod {self.pi}")
        return hits[0]

    def __repr__(self) -> str:
        return f"CubicCharCtx({self.pi})"


def _ctx(pi: CubicCharCtx | IntLike) -> CubicCharCtx:
    return pi if isinstance(pi, CubicCharCtx) else CubicCharCtx(pi)


def cubic_char(ctx: CubicCharCtx | IntLike, alpha: IntLike) -> CubicValue:
    return _ctx(ctx)(alpha)


def is_cubic_residue(ctx: CubicCharCtx | IntLike, alpha: IntLike) -> bool:
    ctx = _ctx(ctx)
    value = ctx(alpha)
    if value is CubicValue.ZERO:
        raise DomainError(f"{ctx.pi} divides {alpha}")
    return value is CubicValue.ONE


def cube_image(ctx: CubicCharCtx | IntLike) -> set:
    """Nonzero cubes of the residue field, by enumeration."""
    F = _ctx(ctx).field
    return {F.pow(x, 3) for x in F.elements() if x != F.zero}


def is_cubic_residue_bruteforce(ctx: CubicCharCtx | IntLike, alpha: IntLike) -> bool:
    ctx = _ctx(ctx)
    return ctx.field.reduce(alpha) in cube_image(ctx)


# -- reciprocity ------------------------------------------------------------------


def _validate(pi: EisensteinInt) -> None:
    if pi.norm() == 3:
        raise ReciprocityPreconditionError("ramified-norm", f"{pi} has norm 3")
    if pi.norm() <= 1 or not is_prime_elem(pi):
        raise ReciprocityPreconditionError("not-prime", f"{pi} is not prime")
    if not is_primary(pi):
        raise ReciprocityPreconditionError("not-primary", f"{pi} is not primary")


def check_cubic_reciprocity(pi1: IntLike, pi2: IntLike) -> bool:
    """chi_pi1(pi2) == chi_pi2(pi1) for primary primes of distinct norms."""
    pi1, pi2 = EisensteinInt.coerce(pi1), EisensteinInt.coerce(pi2)
    _validate(pi1)
    _validate(pi2)
    if pi1.norm() == pi2.norm():
        raise ReciprocityPreconditionError("equal-norms", f"{pi1} and {pi2} have equal norm")
    return cubic_char(pi1, pi2) == cubic_char(pi2, pi1)


def supplement_omega(ctx: CubicCharCtx | IntLike) -> CubicValue:
    """chi_pi(w) from N(pi) mod 9: 1 -> 1, 4 -> w, 7 -> w^2."""
    n = _ctx(ctx).norm
    return {1: CubicValue.ONE, 4: CubicValue.OMEGA, 7: CubicValue.OMEGA_SQ}[n % 9]


def supplement_one_minus_omega(ctx: CubicCharCtx | IntLike) -> CubicValue:
    """chi_pi(1 - w) = w^(2m), where pi = a + b*w is primary and a = 3m - 1."""
    pi = _ctx(ctx).pi
    if not is_primary(pi):
        raise DomainError(f"{pi} is not primary")
    return CubicValue.omega_power(2 * ((pi.a + 1) // 3))


def supplements_agree(ctx: CubicCharCtx | IntLike) -> bool:
    ctx = _ctx(ctx)
    return (
        supplement_omega(ctx) == ctx(OMEGA)
        and supplement_one_minus_omega(ctx) == ctx(ONE_MINUS_OMEGA)
    )


# -- Jacobi and Gauss sums of the cubic character ----------------------------------


def _require_one_mod_three(p: int) -> None:
    if not is_prime(p) or p % 3 != 1:
        raise DomainError(f"{p} is not a prime congruent to 1 mod 3")


def matched_character(p: int) -> tuple[EisensteinInt, MultChar]:
    """The primary pi over p and the character of F_p agreeing with chi_pi."""
    _require_one_mod_three(p)
    pi = classify_prime(p).pi
    # char_make(p, 3) sends the generator to w; chi_pi(g) = w^e picks the power
    e = cubic_char(pi, primitive_root(p)).exponent
    if e == 0:
        raise ConsistencyError(f"chi_pi is trivial on the generator mod {p}")
    return pi, char_make(p, 3) ** e


def jacobi_eq_pi_check(p: int) -> bool:
    """J(chi_pi, chi_pi) is primary of norm p and equals pi."""
    pi, chi = matched_character(p)
    J = EisensteinInt.coerce(jacobi_sum(chi, chi))
    return is_primary(J) and J.norm() == p and J == pi


def cubic_gauss_cube_check(p: int) -> bool:
    """g(chi_pi)^3 == p * pi."""
    pi, chi = matched_character(p)
    return gauss_sum(chi) ** 3 == pi * p


# -- rational consequences --------------------------------------------------------


def all_cubes_mod_q(q: int, n: int) -> int:
    """A cube root of n mod a prime q = 2 (mod 3), namely n^((2q-1)/3)."""
    if not is_prime(q) or q % 3 != 2:
        raise DomainError(f"{q} is not a prime congruent to 2 mod 3")
    if n % q == 0:
        raise DomainError(f"{q} divides {n}")
    return pow(n, (2 * q - 1) // 3, q)


def is_cube_mod_p_bruteforce(n: int, p: int) -> bool:
    n %= p
    return any(pow(x, 3, p) == n for x in range(1, p))


@dataclass(frozen=True)
class TwoCubicResult:
    solvable: bool
    rep: Optional[tuple[int, int]] = None


def two_as_cubic_residue(p: int) -> TwoCubicResult:
    """Whether p = C^2 + 27 D^2; smallest D >= 0, then C >= 0."""
    _require_one_mod_three(p)
    for d in range(isqrt(p // 27) + 1):
        rest = p - 27 * d * d
        c = isqrt(rest)
        if c * c == rest:
            return TwoCubicResult(True, (c, d))
    return TwoCubicResult(False)


def pi_mod_two_criterion(pi: IntLike) -> bool:
    """pi = 1 (mod 2), i.e. a odd and b even."""
    pi = EisensteinInt.coerce(pi)
    _validate(pi)
    return pi.a % 2 == 1 and pi.b % 2 == 0


def two_cubic_agreement(p: int) -> bool:
    """Representation, cube search, chi_pi(2) and pi mod 2 all agree."""
    rep = two_as_cubic_residue(p).solvable
    pi = classify_prime(p).pi
    return (
        rep == is_cube_mod_p_bruteforce(2, p)
        == (cubic_char(pi, 2) is CubicValue.ONE)
        == pi_mod_two_criterion(pi)
    )


def sum_powers_check(p: int, k: int) -> int:
    """1^k + 2^k + ... + (p-1)^k reduced mod p."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if k < 1:
        raise DomainError("k must be >= 1")
    return sum(pow(t, k, p) for t in range(1, p)) % p


def sum_powers_formula(p: int, k: int) -> int:
    """p - 1 when (p - 1) | k, else 0."""
    return p - 1 if k % (p - 1) == 0 else 0


def eisenstein_primaries(max_norm: int) -> list[EisensteinInt]:
    """Primary primes of norm <= max_norm other than those over 3, by (norm, a, b)."""
    out = []
    for p in primes_upto(max_norm):
        if p % 3 == 1:
            c = classify_prime(p)
            out += [c.pi, c.conj]
        elif p % 3 == 2 and p * p <= max_norm:
            out.append(EisensteinInt(p))
    return sorted(out, key=lambda x: (x.norm(), x.a, x.b))
