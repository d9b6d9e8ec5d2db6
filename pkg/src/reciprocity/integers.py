"""Rational-integer utilities.

Everything here works on Python ints, so results are exact at any size.
Residues are always returned as the least nonnegative representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Callable, Optional

from sympy import isprime as _isprime

from .errors import DomainError

# Sweeps reject inputs beyond this; the primality test is only trusted up to here.
MAX_SWEEP_INT = 2**64


@lru_cache(maxsize=1 << 16)
def is_prime(n: int) -> bool:
    return n >= 2 and _isprime(n)


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def primes_upto(n: int) -> list[int]:
    """Primes <= n by a plain sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def mobius(n: int) -> int:
    if n < 1:
        raise DomainError("mobius is defined for n >= 1")
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def mobius_summatory(n: int) -> int:
    """Sum of mobius(d) over the divisors d of n."""
    if n < 1:
        raise DomainError("mobius_summatory is defined for n >= 1")
    return sum(mobius(d) for d in divisors(n))


def mobius_invert(F: Callable[[int], int], n: int) -> int:
    """Recover f(n) from its divisor-sum function F."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return sum(mobius(d) * F(n // d) for d in divisors(n))


def totient(n: int) -> int:
    if n < 1:
        raise DomainError("totient is defined for n >= 1")
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def mod_pow(base: int, exp: int, m: int) -> int:
    if m < 1:
        raise DomainError("modulus must be >= 1")
    if exp < 0:
        raise DomainError("negative exponent")
    return pow(base, exp, m)


def mod_inverse(a: int, m: int) -> int:
    if gcd(a, m) != 1:
        raise DomainError(f"{a} is not invertible mod {m}")
    return pow(a, -1, m)


@dataclass(frozen=True)
class CongruenceSolutionSet:
    """Solutions of a*x = b (mod m): {base + j*step : 0 <= j < count}."""

    solvable: bool
    base: int = 0
    step: int = 0
    count: int = 0

    def solutions(self) -> list[int]:
        return [self.base + j * self.step for j in range(self.count)]


def solve_linear_congruence(a: int, b: int, m: int) -> CongruenceSolutionSet:
    if m < 1:
        raise DomainError("modulus must be >= 1")
    d = gcd(a, m)
    if b % d:
        return CongruenceSolutionSet(False)
    step = m // d
    # a/d is a unit mod m/d
    x0 = (b // d) * pow(a // d, -1, step) % step if step > 1 else 0
    return CongruenceSolutionSet(True, x0, step, d)


def _require_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    _require_odd_prime(p)
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def check_quadratic_reciprocity(p: int, q: int, supplements: bool = False) -> bool:
    """Check (p/q)(q/p) = (-1)^((p-1)/2 * (q-1)/2) for distinct odd primes.

    With ``supplements`` the values of (-1/p), (2/p), (-1/q), (2/q) are
    checked against their closed forms as well.
    """
    _require_odd_prime(p)
    _require_odd_prime(q)
    if p == q:
        raise DomainError("p and q must be distinct")
    ok = legendre(p, q) * legendre(q, p) == (-1) ** (((p - 1) // 2) * ((q - 1) // 2))
    if supplements:
        ok = ok and all(check_quadratic_supplements(r) for r in (p, q))
    return ok


def check_quadratic_supplements(p: int) -> bool:
    """(-1/p) = (-1)^((p-1)/2) and (2/p) = (-1)^((p^2-1)/8)."""
    _require_odd_prime(p)
    return (
        legendre(-1, p) == (-1) ** ((p - 1) // 2)
        and legendre(2, p) == (-1) ** ((p * p - 1) // 8)
    )


def _smallest_nonresidue(p: int) -> int:
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    return z


def sqrt_mod(a: int, p: int) -> Optional[int]:
    """Smaller square root of a modulo the odd prime p, or None.

    Tonelli-Shanks, with the auxiliary non-residue taken as the smallest one.
    """
    _require_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = _smallest_nonresidue(p)
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


def multiplicative_order(a: int, m: int) -> int:
    """Order of a in (Z/mZ)*."""
    if gcd(a, m) != 1:
        raise DomainError(f"{a} is not a unit mod {m}")
    phi = totient(m)
    order = phi
    for r in factorize(phi):
        while order % r == 0 and pow(a, order // r, m) == 1:
            order //= r
    return order


@lru_cache(maxsize=1 << 12)
def primitive_root(p: int) -> int:
    """Smallest generator of (Z/pZ)* for a prime p."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if p == 2:
        return 1
    cofactors = [(p - 1) // r for r in factorize(p - 1)]
    g = 2
    while any(pow(g, c, p) == 1 for c in cofactors):
        g += 1
    return g


def round_div(num: int, den: int) -> int:
    """Nearest integer to num/den (den > 0), ties toward negative infinity."""
    if den <= 0:
        raise DomainError("denominator must be positive")
    return -((den - 2 * num) // (2 * den))
