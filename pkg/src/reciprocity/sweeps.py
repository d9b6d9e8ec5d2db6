"""Batch verification sweeps.

Every sweep is split into independent tasks whose results are merged in
task order, so the report does not depend on the number of workers.
Randomized checks draw from a generator seeded by (seed, task), which
keeps them reproducible under any ``jobs`` value.
"""

from __future__ import annotations

import csv
import io
import random
import time
from math import gcd
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from .characters import (
    all_characters,
    gauss_conjugate_check,
    gauss_jacobi_relation_check,
    gauss_magnitude_check,
    gauss_numeric_agrees,
    gauss_power_formula_check,
    gauss_shift_check,
    jacobi_table_check,
    kronecker_delta_check,
)
from .cubic import (
    CubicCharCtx,
    cubic_gauss_cube_check,
    eisenstein_primaries,
    jacobi_eq_pi_check,
    supplements_agree,
)
from .eisenstein import EisensteinInt
from .finite_field import (
    count_irreducibles,
    enumerate_irreducibles,
    ext_make,
    hausner_check,
    hausner_pairs,
    nth_power_solve,
    order_census,
)
from .gaussian import BiquadraticCharCtx, biquadratic_sign, gaussian_primaries
from .integers import check_quadratic_reciprocity, divisors, primes_upto, totient

LAWS = ("quadratic", "cubic", "biquadratic", "gauss-identities", "field-structure", "hausner")

Failure = dict


@dataclass
class SweepReport:
    law: str
    bound: int
    cases_checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return asdict(self)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["law", "bound", "cases_checked", "failures", "elapsed_ms"])
        w.writerow([self.law, self.bound, self.cases_checked, len(self.failures), self.elapsed_ms])
        if self.failures:
            keys = sorted({k for f in self.failures for k in f})
            w.writerow(keys)
            for f in self.failures:
                w.writerow([f.get(k, "") for k in keys])
        return buf.getvalue()


TaskResult = tuple[int, list[Failure]]


def _run(law: str, bound: int, worker: Callable, tasks: Sequence, jobs: int) -> SweepReport:
    start = time.perf_counter()
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(worker, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))
    else:
        results = [worker(t) for t in tasks]
    report = SweepReport(law, bound)
    for count, failures in results:
        report.cases_checked += count
        report.failures.extend(failures)
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


# -- quadratic ----------------------------------------------------------------------


def _quadratic_task(args: tuple[int, int]) -> TaskResult:
    p, bound = args
    fails = []
    qs = [q for q in primes_upto(bound) if q > p]
    for q in qs:
        if not check_quadratic_reciprocity(p, q, supplements=True):
            fails.append({"p": str(p), "q": str(q)})
    return len(qs), fails


def quadratic_sweep(bound: int, jobs: int = 1) -> SweepReport:
    """Distinct odd primes p < q <= bound, reciprocity plus both supplements."""
    tasks = [(p, bound) for p in primes_upto(bound) if p > 2]
    return _run("quadratic", bound, _quadratic_task, tasks, jobs)


# -- cubic ----------------------------------------------------------------------------


@lru_cache(maxsize=4)
def _cubic_ctxs(max_norm: int) -> tuple[CubicCharCtx, ...]:
    return tuple(CubicCharCtx(pi) for pi in eisenstein_primaries(max_norm))


def _random_eis(rng: random.Random, size: int) -> EisensteinInt:
    return EisensteinInt(rng.randint(-size, size), rng.randint(-size, size))


def _cubic_task(args: tuple[int, int, int, int]) -> TaskResult:
    max_norm, i, seed, samples = args
    ctxs = _cubic_ctxs(max_norm)
    c1 = ctxs[i]
    fails, count = [], 0
    count += 1
    if not supplements_agree(c1):
        fails.append({"check": "supplements", "pi": str(c1.pi)})
    rng = random.Random(f"{seed}:{i}")
    for _ in range(samples):
        a, b = _random_eis(rng, c1.norm), _random_eis(rng, c1.norm)
        count += 1
        if c1(a * b) != c1(a) * c1(b):
            fails.append({"check": "multiplicativity", "pi": str(c1.pi), "alpha": str(a), "beta": str(b)})
    for c2 in ctxs[i + 1 :]:
        if c2.norm == c1.norm:
            continue
        count += 1
        if c1(c2.pi) != c2(c1.pi):
            fails.append({"check": "reciprocity", "pi1": str(c1.pi), "pi2": str(c2.pi)})
    return count, fails


def cubic_sweep(max_norm: int, jobs: int = 1, seed: int = 0, samples: int = 4) -> SweepReport:
    """All primary pairs of distinct norm <= max_norm, supplements and
    randomized multiplicativity for each prime."""
    n = len(_cubic_ctxs(max_norm))
    tasks = [(max_norm, i, seed, samples) for i in range(n)]
    return _run("cubic", max_norm, _cubic_task, tasks, jobs)


# -- biquadratic ----------------------------------------------------------------------


@lru_cache(maxsize=4)
def _biquad_ctxs(max_norm: int) -> tuple[BiquadraticCharCtx, ...]:
    return tuple(BiquadraticCharCtx(pi) for pi in gaussian_primaries(max_norm))


def _biquad_task(args: tuple[int, int, str]) -> TaskResult:
    max_norm, i, form = args
    ctxs = _biquad_ctxs(max_norm)
    c1 = ctxs[i]
    fails = []
    rest = ctxs[i + 1 :]
    for c2 in rest:
        # distinct primaries are never associate, hence coprime
        x, y = c1(c2.pi), c2(c1.pi)
        sign = biquadratic_sign(c1.pi, c2.pi)
        ok = x * y == sign if form == "product" else x == sign * y
        if not ok:
            fails.append({"pi": str(c1.pi), "lam": str(c2.pi), "chi_pi(lam)": x.value, "chi_lam(pi)": y.value})
    return len(rest), fails


def biquadratic_sweep(max_norm: int, jobs: int = 1, form: str = "product") -> SweepReport:
    """All pairs of distinct primary primes with norm <= max_norm.

    ``form`` selects the identity: 'product' for
    chi_pi(lam) chi_lam(pi) = sign, 'quotient' for chi_pi(lam) = sign chi_lam(pi).
    """
    if form not in ("product", "quotient"):
        raise ValueError(f"unknown form {form!r}")
    n = len(_biquad_ctxs(max_norm))
    tasks = [(max_norm, i, form) for i in range(n)]
    return _run("biquadratic", max_norm, _biquad_task, tasks, jobs)


# -- Gauss and Jacobi sums ------------------------------------------------------------


SUPPORTED_ORDERS = (2, 3, 4, 6)


def _gauss_task(p: int) -> TaskResult:
    fails, count = [], 0

    def record(name: str, ok: bool, **info) -> None:
        nonlocal count
        count += 1
        if not ok:
            fails.append({"check": name, "p": str(p), **{k: str(v) for k, v in info.items()}})

    for x in range(p):
        record("kronecker-delta", kronecker_delta_check(p, x, 0), x=x)
    chars = all_characters(p)
    for chi in chars:
        if chi.order not in SUPPORTED_ORDERS:
            continue
        k = chi.order
        record("magnitude", gauss_magnitude_check(chi), s=chi.s, k=k)
        record("conjugate", gauss_conjugate_check(chi), s=chi.s, k=k)
        record("jacobi-table", jacobi_table_check(chi), s=chi.s, k=k)
        record("numeric", gauss_numeric_agrees(chi), s=chi.s, k=k)
        record("shift", all(gauss_shift_check(chi, a) for a in range(1, p)), s=chi.s, k=k)
        if k > 2:
            record("power-formula", gauss_power_formula_check(chi), s=chi.s, k=k)
        for lam in chars:
            prod = chi * lam
            if lam.is_trivial() or prod.is_trivial():
                continue
            if lam.order not in SUPPORTED_ORDERS or prod.order not in SUPPORTED_ORDERS:
                continue
            if {chi.base_ring, lam.base_ring, prod.base_ring} >= {"Zw", "Zi"}:
                continue
            record("jacobi-relation", gauss_jacobi_relation_check(chi, lam), s=chi.s, t=lam.s)
    if p % 3 == 1:
        record("jacobi-eq-pi", jacobi_eq_pi_check(p))
        record("gauss-cube", cubic_gauss_cube_check(p))
    return count, fails


def gauss_sweep(bound: int, jobs: int = 1) -> SweepReport:
    """Exact Gauss/Jacobi identities for every odd prime p <= bound."""
    tasks = [p for p in primes_upto(bound) if p > 2]
    return _run("gauss-identities", bound, _gauss_task, tasks, jobs)


# -- finite fields --------------------------------------------------------------------


def field_orders(bound: int) -> list[tuple[int, int]]:
    """(p, n) with p^n <= bound, sorted by p^n."""
    out = []
    for p in primes_upto(bound):
        n, q = 1, p
        while q <= bound:
            out.append((p, n))
            n, q = n + 1, q * p
    return sorted(out, key=lambda t: t[0] ** t[1])


def _census_expected(q: int) -> dict[int, int]:
    return {d: totient(d) for d in divisors(q - 1)}


def _field_task(args: tuple[int, int, int]) -> TaskResult:
    p, n, nth_bound = args
    q = p**n
    fails, count = [], 0
    F = ext_make(p, n)
    count += 1
    if order_census(F) != _census_expected(q):
        fails.append({"check": "census", "p": str(p), "n": str(n)})
    count += 1
    if count_irreducibles(p, n) != len(enumerate_irreducibles(p, n)):
        fails.append({"check": "irreducible-count", "p": str(p), "n": str(n)})
    if q <= nth_bound:
        elts = list(F.elements())
        for m in range(1, 13):
            powers: dict = {}
            for x in elts:
                powers.setdefault((x**m).code(), []).append(x.code())
            for a in elts:
                if a.is_zero():
                    continue
                count += 1
                got = [x.code() for x in nth_power_solve(F, a, m)]
                want = sorted(powers.get(a.code(), []))
                d = gcd(m, q - 1)
                if got != want or len(got) not in (0, d):
                    fails.append({"check": "nth-power", "p": str(p), "n": str(n), "m": str(m), "alpha": str(a)})
    return count, fails


def field_sweep(bound: int, jobs: int = 1, nth_bound: int = 200) -> SweepReport:
    """Order census and irreducible counts for every F_q with q <= bound,
    and n-th power solving against enumeration for q <= nth_bound."""
    tasks = [(p, n, nth_bound) for p, n in field_orders(bound)]
    return _run("field-structure", bound, _field_task, tasks, jobs)


def _hausner_task(args: tuple[int, list[int]]) -> TaskResult:
    p, qs = args
    fails = []
    for q in qs:
        r = hausner_check(p, q)
        if not r.ok:
            fails.append({"p": str(p), "q": str(q), "n": str(r.n)})
    return len(qs), fails


def hausner_sweep(bound: int, jobs: int = 1) -> SweepReport:
    """hausner_check for every odd prime pair with q^ord_p(q) <= bound."""
    by_p: dict[int, list[int]] = {}
    for p, q in hausner_pairs(bound):
        by_p.setdefault(p, []).append(q)
    tasks = sorted(by_p.items())
    return _run("hausner", bound, _hausner_task, tasks, jobs)


SWEEPS = {
    "quadratic": quadratic_sweep,
    "cubic": cubic_sweep,
    "biquadratic": biquadratic_sweep,
    "gauss-identities": gauss_sweep,
    "field-structure": field_sweep,
    "hausner": hausner_sweep,
}
