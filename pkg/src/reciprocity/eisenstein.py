"""Arithmetic in the Eisenstein integers Z[w], w = (-1 + sqrt(-3))/2.

Elements are stored in the basis {1, w}; w^2 is always rewritten as
-1 - w, so the pair (a, b) is a unique representation of a + b*w.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .errors import ConsistencyError, DomainError
from .integers import is_prime, mod_inverse, round_div, sqrt_mod

IntLike = Union[int, "EisensteinInt"]


@dataclass(frozen=True)
class EisensteinInt:
    a: int
    b: int = 0

    @classmethod
    def coerce(cls, x: IntLike) -> EisensteinInt:
        if isinstance(x, EisensteinInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to EisensteinInt")

    def __add__(self, other: IntLike) -> EisensteinInt:
        o = EisensteinInt.coerce(other)
        return EisensteinInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.a, -self.b)

    def __sub__(self, other: IntLike) -> EisensteinInt:
        o = EisensteinInt.coerce(other)
        return EisensteinInt(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: IntLike) -> EisensteinInt:
        return EisensteinInt.coerce(other) - self

    def __mul__(self, other: IntLike) -> EisensteinInt:
        o = EisensteinInt.coerce(other)
        bd = self.b * o.b
        return EisensteinInt(self.a * o.a - bd, self.a * o.b + self.b * o.a - bd)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> EisensteinInt:
        if e < 0:
            raise DomainError("negative powers are not supported")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> EisensteinInt:
        # conj(w) = w^2 = -1 - w
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def __divmod__(self, other: IntLike) -> tuple[EisensteinInt, EisensteinInt]:
        return eis_divmod(self, EisensteinInt.coerce(other))

    def __floordiv__(self, other: IntLike) -> EisensteinInt:
        return divmod(self, other)[0]

    def __mod__(self, other: IntLike) -> EisensteinInt:
        return divmod(self, other)[1]

    def divides(self, other: IntLike) -> bool:
        """Whether self | other."""
        if self.is_zero():
            return EisensteinInt.coerce(other).is_zero()
        return (EisensteinInt.coerce(other) % self).is_zero()

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self) -> str:
        return format_literal(self.a, self.b, "w")


def format_literal(a: int, b: int, symbol: str) -> str:
    """Render a + b*symbol with minimal signs: '2+3*w', '-1-w', '5', '-2*w'."""
    if b == 0:
        return str(a)
    coef = {1: "", -1: "-"}.get(b, f"{b}*")
    unit = f"{coef}{symbol}"
    if a == 0:
        return unit
    return f"{a}{unit}" if unit.startswith("-") else f"{a}+{unit}"


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)
OMEGA_SQ = EisensteinInt(-1, -1)
ONE_MINUS_OMEGA = EisensteinInt(1, -1)

UNITS = (ONE, -ONE, OMEGA, -OMEGA, OMEGA_SQ, -OMEGA_SQ)


def units() -> list[EisensteinInt]:
    """1, -1, w, -w, w^2, -w^2 in that order."""
    return list(UNITS)


def is_unit(alpha: EisensteinInt) -> bool:
    return alpha.norm() == 1


def norm(alpha: EisensteinInt) -> int:
    return alpha.norm()


def eis_divmod(alpha: EisensteinInt, beta: EisensteinInt) -> tuple[EisensteinInt, EisensteinInt]:
    """Euclidean division with N(r) < N(beta).

    The quotient rounds each {1, w} coordinate of alpha/beta to the nearest
    integer, ties toward negative infinity.
    """
    n = beta.norm()
    if n == 0:
        raise ZeroDivisionError("division by zero in Z[w]")
    num = alpha * beta.conj()
    q = EisensteinInt(round_div(num.a, n), round_div(num.b, n))
    return q, alpha - q * beta


def is_primary(alpha: EisensteinInt) -> bool:
    """alpha = 2 (mod 3), i.e. a = 2 and b = 0 (mod 3)."""
    return alpha.a % 3 == 2 and alpha.b % 3 == 0


def primary_associate(alpha: EisensteinInt) -> tuple[EisensteinInt, EisensteinInt]:
    """(u, u*alpha) for the unique unit u making u*alpha primary."""
    if alpha.norm() % 3 == 0:
        raise DomainError(f"{alpha} has norm divisible by 3; no primary associate")
    hits = [(u, u * alpha) for u in UNITS if is_primary(u * alpha)]
    if len(hits) != 1:
        raise ConsistencyError(f"{len(hits)} primary associates of {alpha}")
    return hits[0]


def associates(alpha: EisensteinInt) -> list[EisensteinInt]:
    return [u * alpha for u in UNITS]


def _normalize(alpha: EisensteinInt) -> EisensteinInt:
    if is_unit(alpha):
        return ONE
    if alpha.norm() % 3:
        return primary_associate(alpha)[1]
    # the sector a > b >= 0 holds exactly one of the six associates
    for x in associates(alpha):
        if x.a > x.b >= 0:
            return x
    raise ConsistencyError(f"no normalized associate of {alpha}")  # pragma: no cover


def eis_gcd(alpha: IntLike, beta: IntLike) -> EisensteinInt:
    """Normalized gcd: 1 for units, else the primary associate when one
    exists, else the associate with a > b >= 0."""
    x, y = EisensteinInt.coerce(alpha), EisensteinInt.coerce(beta)
    if x.is_zero() and y.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    while not y.is_zero():
        x, y = y, x % y
    return _normalize(x)


@dataclass(frozen=True)
class PrimeClassification:
    """How a rational prime p behaves in Z[w].

    kind is 'ramified' (p = 3 = unit * pi^2), 'inert' (p stays prime) or
    'split' (p = pi * conj(pi) with both factors primary).
    """

    kind: str
    p: int
    pi: EisensteinInt
    conj: EisensteinInt | None = None
    unit: EisensteinInt | None = None


def classify_prime(p: int) -> PrimeClassification:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if p == 3:
        return PrimeClassification("ramified", 3, ONE_MINUS_OMEGA, unit=-OMEGA_SQ)
    if p % 3 == 2:
        return PrimeClassification("inert", p, EisensteinInt(p))
    # sqrt(-3) = 1 + 2w
    s = sqrt_mod(-3, p)
    pi = eis_gcd(p, EisensteinInt(s - 1, -2))
    if pi.norm() != p or not is_primary(pi):
        raise ConsistencyError(f"splitting {p} produced {pi}")
    return PrimeClassification("split", p, pi, conj=pi.conj())


def split_by_search(p: int) -> EisensteinInt | None:
    """Brute-force primary pi with N(pi) = p (smallest a, then b); a test oracle."""
    bound = 2 * int(p**0.5) + 2
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            x = EisensteinInt(a, b)
            if x.norm() == p and is_primary(x):
                return x
    return None


def is_prime_elem(alpha: EisensteinInt) -> bool:
    n = alpha.norm()
    if n <= 1:
        raise DomainError("zero and units are neither prime nor composite")
    if is_prime(n):
        return True
    for x in associates(alpha):
        if x.b == 0 and x.a > 0:
            return x.a % 3 == 2 and is_prime(x.a)
    return False


# -- residue fields D / pi D ---------------------------------------------------


@dataclass(frozen=True)
class ResidueRep:
    """Canonical residue of an element modulo a prime pi.

    value is an int in [0, p) for split pi over p, an int in {0, 1, 2} for
    pi over 3, and a pair (a, b) with 0 <= a, b < q for inert q.
    """

    modulus: EisensteinInt
    value: int | tuple[int, int]


class EisensteinResidueField:
    """Arithmetic in D/piD on canonical residues."""

    def __init__(self, pi: EisensteinInt) -> None:
        if pi.norm() <= 1 or not is_prime_elem(pi):
            raise DomainError(f"{pi} is not a prime element")
        self.pi = pi
        self.order = pi.norm()
        if self.order == 3:
            self.kind, self.char = "ramified", 3
        elif is_prime(self.order):
            self.kind, self.char = "split", self.order
            # pi = a + b*w = 0 forces w = -a/b (mod p)
            self.omega = -pi.a * mod_inverse(pi.b, self.order) % self.order
        else:
            self.kind = "inert"
            self.char = next(x.a for x in associates(pi) if x.b == 0 and x.a > 0)

    def reduce(self, alpha: IntLike):
        alpha = EisensteinInt.coerce(alpha)
        if self.kind == "split":
            return (alpha.a + alpha.b * self.omega) % self.char
        if self.kind == "ramified":
            return (alpha.a + alpha.b) % 3
        return (alpha.a % self.char, alpha.b % self.char)

    def lift(self, r) -> EisensteinInt:
        if self.kind == "inert":
            return EisensteinInt(*r)
        return EisensteinInt(r)

    @property
    def zero(self):
        return (0, 0) if self.kind == "inert" else 0

    @property
    def one(self):
        return (1, 0) if self.kind == "inert" else 1

    def mul(self, x, y):
        if self.kind != "inert":
            return x * y % self.char
        q = self.char
        bd = x[1] * y[1]
        return ((x[0] * y[0] - bd) % q, (x[0] * y[1] + x[1] * y[0] - bd) % q)

    def pow(self, x, e: int):
        if self.kind != "inert":
            return pow(x, e, self.char)
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    def elements(self) -> Iterator:
        if self.kind == "inert":
            q = self.char
            return ((a, b) for a in range(q) for b in range(q))
        return iter(range(self.order))


def residue_reduce(alpha: EisensteinInt, pi: EisensteinInt) -> ResidueRep:
    return ResidueRep(pi, EisensteinResidueField(pi).reduce(alpha))


def residue_field_order(pi: EisensteinInt) -> int:
    return EisensteinResidueField(pi).order
