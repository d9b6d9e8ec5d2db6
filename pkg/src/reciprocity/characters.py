"""Multiplicative characters of F_p and exact Gauss and Jacobi sums.

Values of characters of order 1, 2, 3, 4 or 6 live in Z, Z[w] or Z[i], so
Gauss sums are computed exactly in R[zeta_p] for those rings R. Elements of
R[zeta_p] are stored on the basis 1, zeta, ..., zeta^(p-2); the relation
zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)) is applied after every operation.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Union

from sympy import Poly, cyclotomic_poly, symbols

from .eisenstein import EisensteinInt
from .errors import ConsistencyError, DomainError, ResourceError
from .gaussian import GaussianInt
from .integers import is_prime, primitive_root

CYCLOTOMIC_GUARD = 1000

Z, ZW, ZI = "Z", "Zw", "Zi"
RINGS = (Z, ZW, ZI)

Pair = tuple[int, int]
RingElt = Union[int, EisensteinInt, GaussianInt]


# -- coefficient rings, elements held as pairs (a, b) --------------------------


def _rmul(ring: str, x: Pair, y: Pair) -> Pair:
    a, b = x
    c, d = y
    if ring == ZW:
        bd = b * d
        return (a * c - bd, a * d + b * c - bd)
    return (a * c - b * d, a * d + b * c)


def _rconj(ring: str, x: Pair) -> Pair:
    if ring == ZW:
        return (x[0] - x[1], -x[1])
    return (x[0], -x[1])


def _join(r: str, s: str) -> str:
    if r == s or s == Z:
        return r
    if r == Z:
        return s
    raise DomainError(f"no common coefficient ring for {r} and {s}")


def _to_pair(x: RingElt) -> tuple[str, Pair]:
    if isinstance(x, EisensteinInt):
        return ZW, (x.a, x.b)
    if isinstance(x, GaussianInt):
        return ZI, (x.a, x.b)
    if isinstance(x, int):
        return Z, (x, 0)
    raise TypeError(f"not a ring element: {x!r}")


def _from_pair(ring: str, x: Pair) -> RingElt:
    if ring == ZW:
        return EisensteinInt(*x)
    if ring == ZI:
        return GaussianInt(*x)
    return x[0]


def ring_for_order(k: int) -> str | None:
    """Smallest supported ring holding the k-th roots of unity."""
    if k in (1, 2):
        return Z
    if k in (3, 6):
        return ZW
    if k == 4:
        return ZI
    return None


# -- roots of unity -------------------------------------------------------------


@dataclass(frozen=True)
class RootOfUnity:
    """zeta_k^j with zeta_k = exp(2 pi i / k), kept in lowest terms."""

    k: int
    j: int = 0

    def __post_init__(self) -> None:
        if self.k < 1:
            raise DomainError("order must be >= 1")
        j = self.j % self.k
        d = gcd(j, self.k)
        object.__setattr__(self, "k", self.k // d)
        object.__setattr__(self, "j", j // d)

    def __mul__(self, other: RootOfUnity) -> RootOfUnity:
        m = self.k * other.k // gcd(self.k, other.k)
        return RootOfUnity(m, self.j * (m // self.k) + other.j * (m // other.k))

    def __pow__(self, e: int) -> RootOfUnity:
        return RootOfUnity(self.k, self.j * e)

    def conj(self) -> RootOfUnity:
        return RootOfUnity(self.k, -self.j)

    def is_one(self) -> bool:
        return self.k == 1

    def to_pair(self, ring: str) -> Pair:
        if self.k == 1:
            return (1, 0)
        if self.k == 2:
            return (-1, 0)
        if ring == ZW and self.k in (3, 6):
            # zeta_3 = w, zeta_6 = 1 + w = -w^2
            pairs6 = [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]
            return pairs6[self.j * (6 // self.k)]
        if ring == ZI and self.k == 4:
            return [(1, 0), (0, 1), (-1, 0), (0, -1)][self.j]
        raise DomainError(f"zeta_{self.k} does not lie in {ring}")

    def to_ring(self, ring: str | None = None) -> RingElt:
        ring = ring or ring_for_order(self.k)
        if ring is None:
            raise DomainError(f"zeta_{self.k} has no exact representation here")
        return _from_pair(ring, self.to_pair(ring))

    def to_complex(self) -> complex:
        return cmath.exp(2j * cmath.pi * self.j / self.k)


ONE_ROOT = RootOfUnity(1, 0)


# -- characters -----------------------------------------------------------------


@lru_cache(maxsize=256)
def _dlog_table(p: int) -> tuple[int, ...]:
    """table[t] = l with g^l = t for the fixed generator g (table[0] unused)."""
    g = primitive_root(p)
    table = [0] * p
    x = 1
    for l in range(p - 1):
        table[x] = l
        x = x * g % p
    return tuple(table)


@dataclass(frozen=True)
class MultChar:
    """The character chi(g^l) = zeta_(p-1)^(l*s) for the fixed generator g."""

    p: int
    g: int
    s: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", self.s % (self.p - 1))

    @property
    def order(self) -> int:
        return (self.p - 1) // gcd(self.s, self.p - 1)

    @property
    def base_ring(self) -> str | None:
        return ring_for_order(self.order)

    def is_trivial(self) -> bool:
        return self.s == 0

    def __call__(self, t: int) -> RootOfUnity | int:
        return char_eval(self, t)

    def _check(self, other: MultChar) -> None:
        if (self.p, self.g) != (other.p, other.g):
            raise DomainError("characters belong to different fields")

    def __mul__(self, other: MultChar) -> MultChar:
        self._check(other)
        return MultChar(self.p, self.g, self.s + other.s)

    def __pow__(self, e: int) -> MultChar:
        return MultChar(self.p, self.g, self.s * e)

    def conj(self) -> MultChar:
        return MultChar(self.p, self.g, -self.s)

    def pair_value(self, t: int, ring: str) -> Pair:
        v = char_eval(self, t)
        return (0, 0) if v == 0 else v.to_pair(ring)


def _require_prime_field(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")


def char_make(p: int, k: int) -> MultChar:
    """The order-k character lambda^((p-1)/k), lambda(g) = zeta_(p-1)."""
    _require_prime_field(p)
    if k < 1 or (p - 1) % k:
        raise DomainError(f"{k} does not divide {p - 1}")
    return MultChar(p, primitive_root(p), (p - 1) // k)


def all_characters(p: int) -> list[MultChar]:
    _require_prime_field(p)
    g = primitive_root(p)
    return [MultChar(p, g, s) for s in range(p - 1)]


def char_eval(chi: MultChar, t: int) -> RootOfUnity | int:
    t %= chi.p
    if t == 0:
        return ONE_ROOT if chi.is_trivial() else 0
    return RootOfUnity(chi.p - 1, _dlog_table(chi.p)[t] * chi.s)


def _sum_roots(k: int, indices: list[int]) -> int:
    """Exact sum of zeta_k^j over the indices, which must be an integer."""
    counts = [0] * k
    for j in indices:
        counts[j % k] += 1
    x = symbols("x")
    f = Poly(list(reversed(counts)), x).rem(Poly(cyclotomic_poly(k, x), x))
    if f.degree() > 0:
        raise ConsistencyError(f"sum of {k}-th roots is not rational: {f}")
    return int(f.coeff_monomial(1))


def char_sum_over_field(chi: MultChar) -> int:
    """Sum of chi(t) over all t in F_p."""
    p = chi.p
    total = 1 if chi.is_trivial() else 0  # the t = 0 term
    dlog = _dlog_table(p)
    return total + _sum_roots(p - 1, [dlog[t] * chi.s for t in range(1, p)])


def sum_over_characters(p: int, a: int) -> int:
    """Sum of chi(a) over all p - 1 characters of F_p."""
    _require_prime_field(p)
    if a % p == 0:
        return 1  # only epsilon is nonzero at 0
    l = _dlog_table(p)[a % p]
    return _sum_roots(p - 1, [l * s for s in range(p - 1)])


# -- R[zeta_p] --------------------------------------------------------------------


def _canon(full: list[Pair]) -> tuple[Pair, ...]:
    """Drop the zeta^(p-1) term from a length-p coefficient list."""
    ca, cb = full[-1]
    return tuple((a - ca, b - cb) for a, b in full[:-1])


@dataclass(frozen=True, eq=False)
class CyclotomicElt:
    """sum c_j zeta_p^j, j < p - 1, with c_j in Z, Z[w] or Z[i]."""

    p: int
    base: str
    coeffs: tuple[Pair, ...]

    def __post_init__(self) -> None:
        if self.base not in RINGS:
            raise DomainError(f"unknown ring {self.base}")
        if len(self.coeffs) != self.p - 1:
            raise DomainError("need exactly p - 1 coefficients")
        if self.base == Z and any(b for _, b in self.coeffs):
            raise DomainError("Z coefficients must have zero imaginary part")

    @classmethod
    def from_full(cls, p: int, base: str, full: list[Pair]) -> CyclotomicElt:
        return cls(p, base, _canon(full))

    @classmethod
    def constant(cls, p: int, c: RingElt, base: str | None = None) -> CyclotomicElt:
        ring, pair = _to_pair(c)
        ring = _join(base or ring, ring)
        return cls(p, ring, (pair,) + ((0, 0),) * (p - 2))

    @classmethod
    def zeta(cls, p: int, j: int = 1, base: str = Z) -> CyclotomicElt:
        full = [(0, 0)] * p
        full[j % p] = (1, 0)
        return cls.from_full(p, base, full)

    def _full(self) -> list[Pair]:
        return list(self.coeffs) + [(0, 0)]

    def _coerce(self, other) -> CyclotomicElt:
        if isinstance(other, CyclotomicElt):
            if other.p != self.p:
                raise DomainError(f"mismatched primes {self.p} and {other.p}")
            return other
        return CyclotomicElt.constant(self.p, other)

    def __add__(self, other) -> CyclotomicElt:
        o = self._coerce(other)
        ring = _join(self.base, o.base)
        return CyclotomicElt(
            self.p, ring, tuple((a + c, b + d) for (a, b), (c, d) in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __neg__(self) -> CyclotomicElt:
        return CyclotomicElt(self.p, self.base, tuple((-a, -b) for a, b in self.coeffs))

    def __sub__(self, other) -> CyclotomicElt:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> CyclotomicElt:
        return self._coerce(other) - self

    def scale(self, c: RingElt) -> CyclotomicElt:
        ring, pair = _to_pair(c)
        ring = _join(self.base, ring)
        return CyclotomicElt(self.p, ring, tuple(_rmul(ring, x, pair) for x in self.coeffs))

    def __mul__(self, other) -> CyclotomicElt:
        if not isinstance(other, CyclotomicElt):
            return self.scale(other)
        o = self._coerce(other)
        ring, p = _join(self.base, o.base), self.p
        xs = [(i, x) for i, x in enumerate(self.coeffs) if x != (0, 0)]
        ys = [(j, y) for j, y in enumerate(o.coeffs) if y != (0, 0)]
        acc_a, acc_b = [0] * p, [0] * p
        for i, x in xs:
            for j, y in ys:
                a, b = _rmul(ring, x, y)
                k = (i + j) % p
                acc_a[k] += a
                acc_b[k] += b
        return CyclotomicElt.from_full(p, ring, list(zip(acc_a, acc_b)))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CyclotomicElt:
        if e < 0:
            raise DomainError("negative powers are not supported")
        result, base = CyclotomicElt.constant(self.p, 1, self.base), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> CyclotomicElt:
        """zeta -> zeta^-1 together with conjugation of the coefficients."""
        full = self._full()
        out = [(0, 0)] * self.p
        for j, c in enumerate(full):
            out[-j % self.p] = _rconj(self.base, c)
        return CyclotomicElt.from_full(self.p, self.base, out)

    def is_zero(self) -> bool:
        return all(c == (0, 0) for c in self.coeffs)

    def constant_value(self) -> RingElt | None:
        """The coefficient ring element this equals, or None if not constant."""
        if any(c != (0, 0) for c in self.coeffs[1:]):
            return None
        return _from_pair(self.base, self.coeffs[0])

    def __eq__(self, other) -> bool:
        try:
            o = self._coerce(other)
        except (DomainError, TypeError):
            return NotImplemented
        if _common(self.base, o.base) is None:
            return self.is_zero() and o.is_zero()
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.p)
        unit = {Z: 0, ZW: cmath.exp(2j * cmath.pi / 3), ZI: 1j}[self.base]
        return sum((a + b * unit) * z**j for j, (a, b) in enumerate(self.coeffs))


def _common(r: str, s: str) -> str | None:
    try:
        return _join(r, s)
    except DomainError:
        return None


def _check_guard(p: int) -> None:
    if p > CYCLOTOMIC_GUARD:
        raise ResourceError(f"p = {p} exceeds the cyclotomic guard {CYCLOTOMIC_GUARD}")


def _ring_of(*chars: MultChar) -> str:
    ring = Z
    for chi in chars:
        r = chi.base_ring
        if r is None:
            raise DomainError(f"character order {chi.order} is not supported exactly")
        ring = _join(ring, r)
    return ring


def zeta_power_sum(p: int, a: int) -> CyclotomicElt:
    """sum over t in F_p of zeta^(a t)."""
    _check_guard(p)
    full = [(0, 0)] * p
    for t in range(p):
        k = a * t % p
        full[k] = (full[k][0] + 1, 0)
    return CyclotomicElt.from_full(p, Z, full)


def kronecker_delta_check(p: int, x: int, y: int) -> bool:
    """sum_t zeta^(t(x-y)) == p * delta(x, y)."""
    return zeta_power_sum(p, x - y) == (p if (x - y) % p == 0 else 0)


def gauss_sum(chi: MultChar, a: int = 1) -> CyclotomicElt:
    """g_a(chi) = sum over t in F_p of chi(t) zeta^(a t)."""
    p = chi.p
    _check_guard(p)
    ring = _ring_of(chi)
    full = [(0, 0)] * p
    for t in range(p):
        v = chi.pair_value(t, ring)
        k = a * t % p
        full[k] = (full[k][0] + v[0], full[k][1] + v[1])
    return CyclotomicElt.from_full(p, ring, full)


def gauss_sum_numeric(chi: MultChar, a: int = 1) -> complex:
    """Floating-point g_a(chi); a secondary oracle only."""
    z = cmath.exp(2j * cmath.pi / chi.p)
    total = 0j
    for t in range(chi.p):
        v = char_eval(chi, t)
        if v != 0:
            total += v.to_complex() * z ** (a * t % chi.p)
    return total


def gauss_numeric_agrees(chi: MultChar, a: int = 1, tol: float = 1e-9) -> bool:
    return abs(gauss_sum(chi, a).to_complex() - gauss_sum_numeric(chi, a)) < tol


def _require_nontrivial(*chars: MultChar) -> None:
    for chi in chars:
        if chi.is_trivial():
            raise DomainError("character must be nontrivial")


def gauss_magnitude_check(chi: MultChar) -> bool:
    """g(chi) * conj(g(chi)) == p."""
    _require_nontrivial(chi)
    g = gauss_sum(chi)
    return g * g.conj() == chi.p


def gauss_conjugate_check(chi: MultChar) -> bool:
    """g(chi) g(conj chi) == chi(-1) p."""
    _require_nontrivial(chi)
    sign = chi(-1).to_ring(_ring_of(chi))
    return gauss_sum(chi) * gauss_sum(chi.conj()) == sign * chi.p


def gauss_shift_check(chi: MultChar, a: int) -> bool:
    """g_a(chi) == conj(chi(a)) g_1(chi) for a != 0."""
    _require_nontrivial(chi)
    if a % chi.p == 0:
        raise DomainError("a must be nonzero mod p")
    c = chi(a).conj().to_ring(_ring_of(chi))
    return gauss_sum(chi, a) == gauss_sum(chi).scale(c)


def _simplify(ring: str, x: Pair) -> RingElt:
    return x[0] if x[1] == 0 else _from_pair(ring, x)


def jacobi_sum(chi: MultChar, lam: MultChar) -> RingElt:
    """J(chi, lam) = sum over a + b = 1 of chi(a) lam(b), in the smallest ring."""
    chi._check(lam)
    ring = _ring_of(chi, lam)
    a_tot = b_tot = 0
    for a in range(chi.p):
        x, y = chi.pair_value(a, ring), lam.pair_value(1 - a, ring)
        u, v = _rmul(ring, x, y)
        a_tot += u
        b_tot += v
    return _simplify(ring, (a_tot, b_tot))


def jacobi_table_check(chi: MultChar) -> bool:
    """J(eps, eps) = p, J(eps, chi) = 0 and J(chi, chi^-1) = -chi(-1)."""
    eps = chi**0
    if jacobi_sum(eps, eps) != chi.p:
        return False
    if chi.is_trivial():
        return True
    minus = chi(-1).to_pair(_ring_of(chi))
    return jacobi_sum(eps, chi) == 0 and jacobi_sum(chi, chi.conj()) == _simplify(
        _ring_of(chi), (-minus[0], -minus[1])
    )


def gauss_jacobi_relation_check(chi: MultChar, lam: MultChar) -> bool:
    """g(chi) g(lam) == J(chi, lam) g(chi lam)."""
    prod = chi * lam
    _require_nontrivial(chi, lam, prod)
    _ring_of(chi, lam, prod)
    return gauss_sum(chi) * gauss_sum(lam) == gauss_sum(prod).scale(jacobi_sum(chi, lam))


def gauss_power_formula_check(chi: MultChar) -> bool:
    """g(chi)^n == chi(-1) p J(chi, chi) J(chi, chi^2) ... J(chi, chi^(n-2))."""
    n = chi.order
    if n not in (3, 4, 6):
        raise DomainError(f"order {n} is not supported; need 3, 4 or 6")
    ring = _ring_of(chi)
    rhs = CyclotomicElt.constant(chi.p, chi(-1).to_ring(ring), ring).scale(chi.p)
    for j in range(1, n - 1):
        rhs = rhs.scale(jacobi_sum(chi, chi**j))
    return gauss_sum(chi) ** n == rhs
