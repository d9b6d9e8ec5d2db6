"""Gaussian integers Z[i] and the biquadratic (quartic) residue character.

Primary convention: an element of odd norm is primary when it is
congruent to 1 modulo (1+i)^3, i.e. a odd, b even and a + b = 1 (mod 4).

Two forms of the reciprocity law are provided. The product form
chi_pi(lam) * chi_lam(pi) = (-1)^(...) fails whenever chi_lam(pi) = +-i,
under every choice of primary normalization. The quotient form
chi_pi(lam) = (-1)^(...) * chi_lam(pi) holds for all coprime primaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Union

from .errors import ConsistencyError, DomainError, ReciprocityPreconditionError
from .integers import is_prime, mod_inverse, round_div, sqrt_mod
from .eisenstein import format_literal

IntLike = Union[int, "GaussianInt"]


@dataclass(frozen=True)
class GaussianInt:
    a: int
    b: int = 0

    @classmethod
    def coerce(cls, x: IntLike) -> GaussianInt:
        if isinstance(x, GaussianInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussianInt")

    def __add__(self, other: IntLike) -> GaussianInt:
        o = GaussianInt.coerce(other)
        return GaussianInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.a, -self.b)

    def __sub__(self, other: IntLike) -> GaussianInt:
        o = GaussianInt.coerce(other)
        return GaussianInt(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: IntLike) -> GaussianInt:
        return GaussianInt.coerce(other) - self

    def __mul__(self, other: IntLike) -> GaussianInt:
        o = GaussianInt.coerce(other)
        return GaussianInt(self.a * o.a - self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> GaussianInt:
        if e < 0:
            raise DomainError("negative powers are not supported")
        result, base = GaussianInt(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> GaussianInt:
        return GaussianInt(self.a, -self.b)

    def norm(self) -> int:
        return self.a * self.a + self.b * self.b

    def __divmod__(self, other: IntLike) -> tuple[GaussianInt, GaussianInt]:
        return gauss_divmod(self, GaussianInt.coerce(other))

    def __floordiv__(self, other: IntLike) -> GaussianInt:
        return divmod(self, other)[0]

    def __mod__(self, other: IntLike) -> GaussianInt:
        return divmod(self, other)[1]

    def divides(self, other: IntLike) -> bool:
        if self.is_zero():
            return GaussianInt.coerce(other).is_zero()
        return (GaussianInt.coerce(other) % self).is_zero()

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self) -> str:
        return format_literal(self.a, self.b, "i")


I = GaussianInt(0, 1)
UNITS = (GaussianInt(1), I, GaussianInt(-1), -I)  # i^0, i^1, i^2, i^3
ONE_PLUS_I = GaussianInt(1, 1)


def is_unit(alpha: GaussianInt) -> bool:
    return alpha.norm() == 1


def gauss_divmod(alpha: GaussianInt, beta: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """Euclidean division; coordinates of alpha/beta rounded to nearest, ties down."""
    n = beta.norm()
    if n == 0:
        raise ZeroDivisionError("division by zero in Z[i]")
    num = alpha * beta.conj()
    q = GaussianInt(round_div(num.a, n), round_div(num.b, n))
    return q, alpha - q * beta


def is_primary_gaussian(pi: GaussianInt) -> bool:
    if pi.norm() % 2 == 0:
        raise DomainError(f"{pi} has even norm; primary is undefined")
    return pi.a % 2 == 1 and pi.b % 2 == 0 and (pi.a + pi.b) % 4 == 1


def primary_associate_gaussian(pi: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """(u, u*pi) with u*pi primary; exactly one unit qualifies."""
    if pi.norm() % 2 == 0:
        raise DomainError(f"{pi} has even norm; primary is undefined")
    hits = [(u, u * pi) for u in UNITS if is_primary_gaussian(u * pi)]
    if len(hits) != 1:
        raise ConsistencyError(f"{len(hits)} primary associates of {pi}")
    return hits[0]


def _normalize(alpha: GaussianInt) -> GaussianInt:
    if is_unit(alpha):
        return GaussianInt(1)
    if alpha.norm() % 2:
        return primary_associate_gaussian(alpha)[1]
    for u in UNITS:
        x = u * alpha
        if x.a > 0 and x.b >= 0:
            return x
    raise ConsistencyError(f"no normalized associate of {alpha}")  # pragma: no cover


def gauss_gcd(alpha: IntLike, beta: IntLike) -> GaussianInt:
    x, y = GaussianInt.coerce(alpha), GaussianInt.coerce(beta)
    if x.is_zero() and y.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    while not y.is_zero():
        x, y = y, x % y
    return _normalize(x)


@dataclass(frozen=True)
class GaussianPrimeClassification:
    kind: str  # 'ramified', 'inert' or 'split'
    p: int
    pi: GaussianInt
    conj: GaussianInt | None = None


def classify_gaussian_prime(p: int) -> GaussianPrimeClassification:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if p == 2:
        return GaussianPrimeClassification("ramified", 2, ONE_PLUS_I)
    if p % 4 == 3:
        return GaussianPrimeClassification("inert", p, primary_associate_gaussian(GaussianInt(p))[1])
    s = sqrt_mod(-1, p)
    pi = gauss_gcd(p, GaussianInt(s, 1))
    if pi.norm() != p or not is_primary_gaussian(pi):
        raise ConsistencyError(f"splitting {p} produced {pi}")
    return GaussianPrimeClassification("split", p, pi, pi.conj())


def is_irreducible_gaussian(alpha: GaussianInt) -> bool:
    n = alpha.norm()
    if n <= 1:
        raise DomainError("zero and units are neither prime nor composite")
    if is_prime(n):
        return True
    for u in UNITS:
        x = u * alpha
        if x.b == 0 and x.a > 0:
            return x.a % 4 == 3 and is_prime(x.a)
    return False


class GaussianResidueField:
    """D/piD on canonical residues: int mod p (split), pair mod q (inert),
    or {0, 1} for pi over 2."""

    def __init__(self, pi: GaussianInt) -> None:
        if pi.norm() <= 1 or not is_irreducible_gaussian(pi):
            raise DomainError(f"{pi} is not irreducible")
        self.pi = pi
        self.order = pi.norm()
        if self.order == 2:
            self.kind, self.char = "ramified", 2
        elif is_prime(self.order):
            self.kind, self.char = "split", self.order
            self.i = -pi.a * mod_inverse(pi.b, self.order) % self.order
        else:
            self.kind = "inert"
            self.char = next(abs(x.a) for x in (u * pi for u in UNITS) if x.b == 0)

    def reduce(self, alpha: IntLike):
        alpha = GaussianInt.coerce(alpha)
        if self.kind == "split":
            return (alpha.a + alpha.b * self.i) % self.char
        if self.kind == "ramified":
            return (alpha.a + alpha.b) % 2
        return (alpha.a % self.char, alpha.b % self.char)

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
        return ((x[0] * y[0] - x[1] * y[1]) % q, (x[0] * y[1] + x[1] * y[0]) % q)

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


class QuarticValue(Enum):
    """0 or i^j."""

    ZERO = "0"
    ONE = "1"
    I = "i"
    MINUS_ONE = "-1"
    MINUS_I = "-i"

    @property
    def exponent(self) -> int | None:
        return _Q_EXP[self]

    @classmethod
    def power_of_i(cls, j: int) -> QuarticValue:
        return _Q_FROM_EXP[j % 4]

    def __mul__(self, other: QuarticValue) -> QuarticValue:
        if self is QuarticValue.ZERO or other is QuarticValue.ZERO:
            return QuarticValue.ZERO
        return QuarticValue.power_of_i(self.exponent + other.exponent)

    def to_gaussian(self) -> GaussianInt:
        if self is QuarticValue.ZERO:
            return GaussianInt(0)
        return UNITS[self.exponent]


_Q_EXP = {
    QuarticValue.ZERO: None,
    QuarticValue.ONE: 0,
    QuarticValue.I: 1,
    QuarticValue.MINUS_ONE: 2,
    QuarticValue.MINUS_I: 3,
}
_Q_FROM_EXP = {v: k for k, v in _Q_EXP.items() if v is not None}


class BiquadraticCharCtx:
    """Precomputed data for evaluating chi_pi repeatedly."""

    def __init__(self, pi: GaussianInt) -> None:
        pi = GaussianInt.coerce(pi)
        if pi.norm() == 2:
            raise DomainError("the biquadratic character needs N(pi) != 2")
        self.field = GaussianResidueField(pi)
        self.pi = pi
        self.norm = pi.norm()
        self.exponent = (self.norm - 1) // 4
        self.unit_reps = [self.field.reduce(u) for u in UNITS]

    def __call__(self, alpha: IntLike) -> QuarticValue:
        r = self.field.reduce(alpha)
        if r == self.field.zero:
            return QuarticValue.ZERO
        power = self.field.pow(r, self.exponent)
        hits = [j for j, u in enumerate(self.unit_reps) if u == power]
        if len(hits) != 1:
            raise ConsistencyError(f"{len(hits)} units match for {alpha} mod {self.pi}")
        return QuarticValue.power_of_i(hits[0])


def biquadratic_char(pi: IntLike, alpha: IntLike) -> QuarticValue:
    """The unique i^j congruent to alpha^((N(pi)-1)/4) mod pi, or ZERO."""
    return BiquadraticCharCtx(pi)(alpha)


def _check_pair(pi: GaussianInt, lam: GaussianInt) -> None:
    for x in (pi, lam):
        if x.norm() % 2 == 0 or x.norm() <= 1:
            raise ReciprocityPreconditionError("even-norm", f"{x} must have odd norm > 1")
        if not is_irreducible_gaussian(x):
            raise ReciprocityPreconditionError("not-prime", f"{x} is not irreducible")
        if not is_primary_gaussian(x):
            raise ReciprocityPreconditionError("not-primary", f"{x} is not primary")
    if not is_unit(gauss_gcd(pi, lam)):
        raise ReciprocityPreconditionError("not-coprime", f"{pi} and {lam} are not coprime")


def biquadratic_sign(pi: GaussianInt, lam: GaussianInt) -> QuarticValue:
    """(-1)^((N(lam)-1)/4 * (N(pi)-1)/4)."""
    e = ((lam.norm() - 1) // 4) * ((pi.norm() - 1) // 4)
    return QuarticValue.MINUS_ONE if e % 2 else QuarticValue.ONE


def check_biquadratic_reciprocity(pi: IntLike, lam: IntLike) -> bool:
    """chi_pi(lam) * chi_lam(pi) == (-1)^((N(lam)-1)/4 * (N(pi)-1)/4)."""
    pi, lam = GaussianInt.coerce(pi), GaussianInt.coerce(lam)
    _check_pair(pi, lam)
    return biquadratic_char(pi, lam) * biquadratic_char(lam, pi) == biquadratic_sign(pi, lam)


def check_biquadratic_reciprocity_quotient(pi: IntLike, lam: IntLike) -> bool:
    """chi_pi(lam) == (-1)^((N(lam)-1)/4 * (N(pi)-1)/4) * chi_lam(pi).

    This is the classical law. It agrees with the product form exactly when
    chi_lam(pi) is real, i.e. +-1.
    """
    pi, lam = GaussianInt.coerce(pi), GaussianInt.coerce(lam)
    _check_pair(pi, lam)
    return biquadratic_char(pi, lam) == biquadratic_sign(pi, lam) * biquadratic_char(lam, pi)


def gaussian_primaries(max_norm: int) -> list[GaussianInt]:
    """Primary irreducibles of odd norm <= max_norm, sorted by (norm, a, b)."""
    from .integers import primes_upto

    out = []
    for p in primes_upto(max_norm):
        if p % 4 == 1:
            c = classify_gaussian_prime(p)
            out += [c.pi, c.conj]
        elif p % 4 == 3 and p * p <= max_norm:
            out.append(classify_gaussian_prime(p).pi)
    return sorted(out, key=lambda x: (x.norm(), x.a, x.b))
