"""Finite fields F_p and F_{p^n} built as polynomial quotients.

Polynomials are coefficient tuples in ascending degree with no trailing
zeros; the zero polynomial is the empty tuple.  Elements of F_{p^n} are
residues modulo the lexicographically smallest monic irreducible of
degree n, where "lexicographic" means ordering by the base-p integer code
sum(c_i * p**i).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterator, Sequence

import numpy as np

from .errors import DomainError, ResourceError
from .integers import (
    divisors,
    factorize,
    is_prime,
    legendre,
    mobius,
    multiplicative_order,
    primitive_root,
    solve_linear_congruence,
)

ENUMERATION_GUARD = 10**6  # candidate monic polynomials, p**n
ELEMENT_GUARD = 10**6  # field order for element-wise enumeration
HAUSNER_GUARD = 10**6  # q**n for the Hausner construction


# -- raw polynomial helpers on tuples ---------------------------------------


def _strip(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _add(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % p
    return _strip(out)


def _neg(a: Sequence[int], p: int) -> tuple[int, ...]:
    return tuple((-v) % p for v in a)


def _mul(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return _strip([v % p for v in out])


def _divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    if len(r) <= db:
        return (), tuple(r)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] * inv_lead % p
        if c:
            q[k - db] = c
            for j in range(db + 1):
                r[k - db + j] = (r[k - db + j] - c * b[j]) % p
    return _strip(q), _strip(r[:db])


def _mod(a: Sequence[int], f: Sequence[int], p: int) -> tuple[int, ...]:
    return _divmod(a, f, p)[1]


def _mulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> tuple[int, ...]:
    return _mod(_mul(a, b, p), f, p)


def _powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> tuple[int, ...]:
    result: tuple[int, ...] = _mod((1,), f, p)
    base = _mod(a, f, p)
    while e:
        if e & 1:
            result = _mulmod(result, base, f, p)
        e >>= 1
        if e:
            base = _mulmod(base, base, f, p)
    return result


def _gcd(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    a, b = tuple(a), tuple(b)
    while b:
        a, b = b, _mod(a, b, p)
    if not a:
        return ()
    inv = pow(a[-1], -1, p)
    return tuple(v * inv % p for v in a)


def _encode(c: Sequence[int], p: int) -> int:
    code = 0
    for v in reversed(c):
        code = code * p + v
    return code


def _decode(code: int, p: int) -> tuple[int, ...]:
    out = []
    while code:
        code, r = divmod(code, p)
        out.append(r)
    return tuple(out)


# -- PolyFp -------------------------------------------------------------------


@dataclass(frozen=True)
class PolyFp:
    """Polynomial over F_p; coefficients reduced and trailing zeros dropped."""

    p: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip([int(c) % self.p for c in self.coeffs]))

    @classmethod
    def x(cls, p: int) -> PolyFp:
        return cls(p, (0, 1))

    @classmethod
    def from_code(cls, p: int, code: int) -> PolyFp:
        return cls(p, _decode(code, p))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def code(self) -> int:
        return _encode(self.coeffs, self.p)

    def monic(self) -> PolyFp:
        if not self.coeffs:
            return self
        inv = pow(self.coeffs[-1], -1, self.p)
        return PolyFp(self.p, tuple(c * inv for c in self.coeffs))

    def _check(self, other: PolyFp) -> None:
        if not isinstance(other, PolyFp):
            raise TypeError(f"expected PolyFp, got {type(other).__name__}")
        if other.p != self.p:
            raise DomainError(f"modulus mismatch: {self.p} vs {other.p}")

    def __add__(self, other: PolyFp) -> PolyFp:
        self._check(other)
        return PolyFp(self.p, _add(self.coeffs, other.coeffs, self.p))

    def __neg__(self) -> PolyFp:
        return PolyFp(self.p, _neg(self.coeffs, self.p))

    def __sub__(self, other: PolyFp) -> PolyFp:
        self._check(other)
        return PolyFp(self.p, _add(self.coeffs, _neg(other.coeffs, self.p), self.p))

    def __mul__(self, other: PolyFp) -> PolyFp:
        self._check(other)
        return PolyFp(self.p, _mul(self.coeffs, other.coeffs, self.p))

    def __divmod__(self, other: PolyFp) -> tuple[PolyFp, PolyFp]:
        self._check(other)
        q, r = _divmod(self.coeffs, other.coeffs, self.p)
        return PolyFp(self.p, q), PolyFp(self.p, r)

    def __mod__(self, other: PolyFp) -> PolyFp:
        return divmod(self, other)[1]

    def __floordiv__(self, other: PolyFp) -> PolyFp:
        return divmod(self, other)[0]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def poly_gcd(f: PolyFp, g: PolyFp) -> PolyFp:
    """Monic gcd (zero only when both inputs are zero)."""
    f._check(g)
    return PolyFp(f.p, _gcd(f.coeffs, g.coeffs, f.p))


def _x_pow_p_iter(f: Sequence[int], p: int, k: int) -> list[tuple[int, ...]]:
    """[x^(p^0), x^(p^1), ..., x^(p^k)] mod f via repeated p-th powering."""
    h = _mod((0, 1), f, p)
    out = [h]
    for _ in range(k):
        h = _powmod(h, p, f, p)
        out.append(h)
    return out


def is_irreducible(f: PolyFp) -> bool:
    """Irreducibility test based on divisibility of x^(p^d) - x."""
    d = f.degree
    if d < 1:
        raise DomainError("irreducibility is undefined for constant polynomials")
    if d == 1:
        return True
    p = f.p
    g = f.monic().coeffs
    frob = _x_pow_p_iter(g, p, d)
    x = _mod((0, 1), g, p)
    if frob[d] != x:
        return False
    for r in factorize(d):
        h = _add(frob[d // r], _neg(x, p), p)
        if len(_gcd(g, h, p)) != 1:
            return False
    return True


def count_irreducibles(p: int, n: int) -> int:
    """Number of monic irreducibles of degree n over F_p."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if n < 1:
        raise DomainError("degree must be >= 1")
    total = sum(mobius(n // d) * p**d for d in divisors(n))
    return total // n


def _check_enum_guard(p: int, n: int, guard: int) -> None:
    if p**n > guard:
        raise ResourceError(f"{p}^{n} candidates exceed the enumeration guard {guard}")


def enumerate_irreducibles(p: int, n: int, guard: int = ENUMERATION_GUARD) -> list[PolyFp]:
    """All monic irreducibles of degree n over F_p, in code order."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if n < 1:
        raise DomainError("degree must be >= 1")
    _check_enum_guard(p, n, guard)
    out = []
    for code in range(p**n):
        low = _decode(code, p)
        f = PolyFp(p, low + (0,) * (n - len(low)) + (1,))
        if is_irreducible(f):
            out.append(f)
    return out


def verify_xq_factorization(p: int, n: int, guard: int = ENUMERATION_GUARD) -> bool:
    """Product of all monic irreducibles of degree d | n equals x^(p^n) - x."""
    _check_enum_guard(p, n, guard)
    prod = PolyFp(p, (1,))
    for d in divisors(n):
        for f in enumerate_irreducibles(p, d, guard):
            prod = prod * f
    target = [0] * (p**n + 1)
    target[p**n] = 1
    target[1] = -1
    return prod == PolyFp(p, tuple(target))


# -- extension fields ---------------------------------------------------------


@dataclass(frozen=True)
class ExtField:
    """F_{p^n} = F_p[x]/(modulus)."""

    p: int
    n: int
    modulus: PolyFp

    @property
    def order(self) -> int:
        return self.p**self.n

    def element(self, coeffs: Sequence[int]) -> ExtFieldElt:
        return ExtFieldElt(self, _mod(_strip([int(c) % self.p for c in coeffs]), self.modulus.coeffs, self.p))

    def scalar(self, c: int) -> ExtFieldElt:
        return ExtFieldElt(self, _strip([c % self.p]))

    def from_code(self, code: int) -> ExtFieldElt:
        if not 0 <= code < self.order:
            raise DomainError(f"code {code} outside the field")
        return ExtFieldElt(self, _decode(code, self.p))

    @property
    def zero(self) -> ExtFieldElt:
        return ExtFieldElt(self, ())

    @property
    def one(self) -> ExtFieldElt:
        return ExtFieldElt(self, (1,))

    @property
    def alpha(self) -> ExtFieldElt:
        """The class of x."""
        return self.element((0, 1))

    def elements(self, guard: int = ELEMENT_GUARD) -> Iterator[ExtFieldElt]:
        if self.order > guard:
            raise ResourceError(f"field of order {self.order} exceeds guard {guard}")
        for code in range(self.order):
            yield self.from_code(code)

    def __str__(self) -> str:
        return f"F_{self.p}^{self.n} = F_{self.p}[x]/({self.modulus})"


@dataclass(frozen=True)
class ExtFieldElt:
    parent: ExtField = field(repr=False)
    rep: tuple[int, ...]

    def _same(self, other: ExtFieldElt) -> None:
        if not isinstance(other, ExtFieldElt):
            raise TypeError(f"expected ExtFieldElt, got {type(other).__name__}")
        if other.parent != self.parent:
            raise DomainError("elements belong to different fields")

    def _lift(self, other) -> ExtFieldElt:
        if isinstance(other, int):
            return self.parent.scalar(other)
        self._same(other)
        return other

    def __add__(self, other) -> ExtFieldElt:
        other = self._lift(other)
        return ExtFieldElt(self.parent, _add(self.rep, other.rep, self.parent.p))

    __radd__ = __add__

    def __neg__(self) -> ExtFieldElt:
        return ExtFieldElt(self.parent, _neg(self.rep, self.parent.p))

    def __sub__(self, other) -> ExtFieldElt:
        return self + (-self._lift(other))

    def __mul__(self, other) -> ExtFieldElt:
        other = self._lift(other)
        F = self.parent
        if F.n == 1:
            if not self.rep or not other.rep:
                return F.zero
            return ExtFieldElt(F, _strip([self.rep[0] * other.rep[0] % F.p]))
        return ExtFieldElt(F, _mulmod(self.rep, other.rep, F.modulus.coeffs, F.p))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> ExtFieldElt:
        F = self.parent
        if e < 0:
            return self.inv() ** (-e)
        if F.n == 1:
            if not self.rep:
                return F.one if e == 0 else F.zero
            return ExtFieldElt(F, _strip([pow(self.rep[0], e, F.p)]))
        return ExtFieldElt(F, _powmod(self.rep, e, F.modulus.coeffs, F.p))

    def inv(self) -> ExtFieldElt:
        if not self.rep:
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.parent.order - 2)

    def __truediv__(self, other) -> ExtFieldElt:
        return self * self._lift(other).inv()

    def frobenius(self, k: int = 1) -> ExtFieldElt:
        """self^(p^k), computed as k successive p-th powers."""
        out = self
        for _ in range(k):
            out = out ** self.parent.p
        return out

    def is_zero(self) -> bool:
        return not self.rep

    def __bool__(self) -> bool:
        return bool(self.rep)

    def code(self) -> int:
        return _encode(self.rep, self.parent.p)

    def __str__(self) -> str:
        return str(PolyFp(self.parent.p, self.rep)).replace("x", "a")


@lru_cache(maxsize=None)
def ext_make(p: int, n: int) -> ExtField:
    """F_{p^n} presented with the smallest monic irreducible of degree n."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if n < 1:
        raise DomainError("degree must be >= 1")
    for code in range(p**n):
        low = _decode(code, p)
        f = PolyFp(p, low + (0,) * (n - len(low)) + (1,))
        if is_irreducible(f):
            return ExtField(p, n, f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def element_order(a: ExtFieldElt) -> int:
    """Multiplicative order of a nonzero element."""
    if a.is_zero():
        raise DomainError("zero has no multiplicative order")
    order = a.parent.order - 1
    for r in factorize(order):
        while order % r == 0 and (a ** (order // r)).rep == (1,):
            order //= r
    return order


@lru_cache(maxsize=None)
def find_generator(F: ExtField) -> ExtFieldElt:
    """First element (in code order) of multiplicative order q - 1."""
    q = F.order
    if F.n == 1:
        return F.scalar(primitive_root(F.p))
    cofactors = [(q - 1) // r for r in factorize(q - 1)]
    # codes below p are the prime subfield, whose orders divide p - 1 < q - 1
    for code in range(F.p, q):
        a = F.from_code(code)
        if all((a**c).rep != (1,) for c in cofactors):
            return a
    raise AssertionError("multiplicative group is not cyclic")  # pragma: no cover


def order_census(F: ExtField, guard: int = ELEMENT_GUARD) -> dict[int, int]:
    """Exhaustive count of nonzero elements by multiplicative order."""
    census = {d: 0 for d in divisors(F.order - 1)}
    for a in F.elements(guard):
        if a:
            census[element_order(a)] += 1
    return census


def discrete_log(a: ExtFieldElt, g: ExtFieldElt) -> int:
    """Brute-force l with g^l = a."""
    if a.is_zero():
        raise DomainError("zero has no logarithm")
    x = a.parent.one
    for l in range(a.parent.order - 1):
        if x == a:
            return l
        x = x * g
    raise DomainError("element is not a power of g")


def nth_power_solvable(F: ExtField, alpha: ExtFieldElt, n: int) -> bool:
    """alpha^((q-1)/d) = 1 with d = gcd(n, q-1)."""
    if alpha.is_zero():
        raise DomainError("alpha must be nonzero")
    d = gcd(n, F.order - 1)
    return alpha ** ((F.order - 1) // d) == F.one


def nth_power_solve(F: ExtField, alpha: ExtFieldElt, n: int) -> list[ExtFieldElt]:
    """All x with x^n = alpha, sorted by code.

    Writes alpha = g^l for the fixed generator g and solves n*y = l
    (mod q-1), which has gcd(n, q-1) solutions or none.
    """
    if alpha.is_zero():
        raise DomainError("alpha must be nonzero")
    if n < 1:
        raise DomainError("n must be >= 1")
    if alpha.parent != F:
        raise DomainError("alpha is not an element of F")
    g = find_generator(F)
    sols = solve_linear_congruence(n, discrete_log(alpha, g), F.order - 1)
    if not sols.solvable:
        return []
    return sorted((g**y for y in sols.solutions()), key=ExtFieldElt.code)


def subfield_member(F: ExtField, alpha: ExtFieldElt, d: int) -> bool:
    """Whether alpha lies in the subfield of order p^d."""
    if d < 1 or F.n % d:
        raise DomainError(f"{d} does not divide {F.n}")
    return alpha.frobenius(d) == alpha


# -- Hausner's Gauss-sum analogue -------------------------------------------


@dataclass(frozen=True)
class HausnerResult:
    p: int
    q: int
    n: int
    tau_sq_ok: bool
    tau_q_ok: bool
    qr_consistent: bool

    @property
    def ok(self) -> bool:
        return self.tau_sq_ok and self.tau_q_ok and self.qr_consistent


def _legendre_signs(p: int) -> np.ndarray:
    """Array s with s[t] = (t/p), built from the set of squares."""
    s = np.full(p, -1, dtype=np.int64)
    j = np.arange(1, (p - 1) // 2 + 1, dtype=np.int64)
    s[(j * j) % p] = 1
    s[0] = 0
    return s


def _mult_matrix(b: ExtFieldElt) -> np.ndarray:
    """Matrix M with M @ coeffs(a) = coeffs(a*b)."""
    F = b.parent
    M = np.zeros((F.n, F.n), dtype=np.int64)
    for j in range(F.n):
        col = (F.element([0] * j + [1]) * b).rep
        M[: len(col), j] = col
    return M


def _power_table(lam: ExtFieldElt, count: int) -> np.ndarray:
    """Rows t = 0..count-1 hold the coefficient vector of lam^t."""
    F = lam.parent
    q = F.p
    if F.n == 1:
        c = lam.rep[0] if lam.rep else 0
        table = np.ones(1, dtype=np.int64)
        while len(table) < count:
            step = pow(c, len(table), q)
            table = np.concatenate([table, table * step % q])
        return table[:count].reshape(-1, 1)
    table = np.zeros((1, F.n), dtype=np.int64)
    table[0, 0] = 1
    while len(table) < count:
        M = _mult_matrix(lam ** len(table))
        table = np.concatenate([table, table @ M.T % q])
    return table[:count]


@lru_cache(maxsize=8)
def _quadratic_residues(p: int) -> np.ndarray:
    """Each nonzero square mod p exactly once, as j^2 for 1 <= j <= (p-1)/2."""
    j = np.arange(1, (p - 1) // 2 + 1, dtype=np.int64)
    return (j * j) % p


def _geometric(c: int, count: int, q: int) -> np.ndarray:
    """[c^0, ..., c^(count-1)] mod q by doubling."""
    out = np.ones(1, dtype=np.int64)
    while len(out) < count:
        out = np.concatenate([out, out * pow(c, len(out), q) % q])
    return out[:count]


def _prime_field_tau(c: int, p: int, q: int) -> int:
    """tau for lam = c in F_q, returned as a residue mod q."""
    if p < 128 or p * q * q >= 2**63:
        residues = set(_quadratic_residues(p).tolist())
        total, power = 0, 1
        for t in range(1, p):
            power = power * c % q
            total += power if t in residues else -power
        return total % q
    # c^t = big[t >> shift] * small[t & mask]; unreduced sums stay below 2^63
    shift = ((p - 1).bit_length() + 1) // 2
    mask = (1 << shift) - 1
    blocks = p >> shift
    small = _geometric(c, mask + 1, q)
    big = _geometric(pow(c, mask + 1, q), blocks + 1, q)
    e = _quadratic_residues(p)
    residue_sum = int((big[e >> shift] * small[e & mask]).sum())
    small_list = small.tolist()
    all_sum = int(big[:blocks].sum()) % q * (sum(small_list) % q)
    all_sum += int(big[blocks]) * sum(small_list[: p - (blocks << shift)])
    nonresidue_sum = all_sum - 1 - residue_sum  # drop t = 0
    return (residue_sum - nonresidue_sum) % q


def hausner_tau(lam: ExtFieldElt, p: int) -> ExtFieldElt:
    """Sum over t in [0, p) of (t/p) * lam^t."""
    F = lam.parent
    if F.n == 1:
        return F.scalar(_prime_field_tau(lam.rep[0] if lam.rep else 0, p, F.p))
    if p < 64:
        signs = _legendre_signs(p).tolist()
        total = F.zero
        power = F.one
        for t in range(1, p):
            power = power * lam
            total = total + power * signs[t]
        return total
    vec = _legendre_signs(p) @ _power_table(lam, p) % F.p
    return F.element([int(v) for v in vec])


def hausner_check(p: int, q: int, guard: int = HAUSNER_GUARD) -> HausnerResult:
    """Run the finite-field Gauss sum argument for the pair (p, q).

    Builds F_{q^n} with n the order of q mod p, takes lam of order p,
    forms tau and checks tau^2 = p*, tau^q = (q/p) tau, and that the
    resulting (p*/q) matches (q/p) and the Legendre symbol.
    """
    for r in (p, q):
        if r < 3 or not is_prime(r):
            raise DomainError(f"{r} is not an odd prime")
    if p == q:
        raise DomainError("p and q must be distinct")
    n = multiplicative_order(q, p)
    if q**n > guard:
        raise ResourceError(f"F_{q}^{n} exceeds the Hausner guard {guard}")
    F = ext_make(q, n)
    gamma = find_generator(F)
    lam = gamma ** ((F.order - 1) // p)
    tau = hausner_tau(lam, p)
    p_star = (-1) ** ((p - 1) // 2) * p
    tau_sq_ok = tau * tau == F.scalar(p_star)
    q_over_p = legendre(q, p)
    tau_q = tau.frobenius()
    tau_q_ok = tau_q == tau * q_over_p
    # tau lies in F_q exactly when p* is a square mod q
    p_star_over_q = 1 if tau_q == tau else -1
    qr_consistent = p_star_over_q == q_over_p == legendre(p_star, q)
    return HausnerResult(p, q, n, tau_sq_ok, tau_q_ok, qr_consistent)


def hausner_pairs(bound: int) -> Iterator[tuple[int, int]]:
    """Odd prime pairs (p, q), p != q, with q^ord_p(q) <= bound, sorted."""
    from .integers import primes_upto

    pairs = []
    for q in primes_upto(bound):
        if q == 2:
            continue
        n, qn = 1, q
        while qn <= bound:
            for p in factorize(qn - 1):
                if p > 2 and p != q and multiplicative_order(q, p) == n:
                    pairs.append((p, q))
            n += 1
            qn *= q
    yield from sorted(pairs)
