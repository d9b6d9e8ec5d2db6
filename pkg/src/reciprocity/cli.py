"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Any, Callable, Optional, Sequence

from . import characters as ch
from . import cubic, eisenstein, finite_field, gaussian, integers, sweeps
from .errors import ConsistencyError, DomainError, ResourceError
from .literals import parse_eisenstein, parse_gaussian

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

# JSON consumers commonly hold numbers as doubles; larger ints go out as strings
JSON_SAFE_INT = 2**53

# literals such as -1-3*w or -i must not be taken for options
_NEGATIVE_LITERAL = re.compile(r"^-(\d|[wi]$|[wi][+-])")


class Result:
    """A command's payload plus whether it counts as verified."""

    def __init__(self, data: dict, ok: bool = True) -> None:
        self.data = data
        self.ok = ok


def _jsonable(x: Any) -> Any:
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return x if abs(x) < JSON_SAFE_INT else str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (str, float)):
        return x
    return str(x)


def _emit(result: Result, as_json: bool) -> None:
    if as_json:
        print(json.dumps(_jsonable(result.data), separators=(",", ":")))
        return
    for k, v in result.data.items():
        if isinstance(v, list) and v and isinstance(v[0], dict):
            print(f"{k}:")
            for item in v:
                print("  " + ", ".join(f"{a}={b}" for a, b in item.items()))
        else:
            print(f"{k}: {v}")


# -- command handlers ---------------------------------------------------------------


def cmd_legendre(a) -> Result:
    return Result({"a": a.a, "p": a.p, "value": integers.legendre(a.a, a.p)})


def cmd_qr_check(a) -> Result:
    holds = integers.check_quadratic_reciprocity(a.p, a.q)
    supp = integers.check_quadratic_supplements(a.p) and integers.check_quadratic_supplements(a.q)
    return Result({"p": a.p, "q": a.q, "holds": holds, "supplements": supp}, holds and supp)


def cmd_mobius(a) -> Result:
    return Result({"n": a.n, "value": integers.mobius(a.n)})


def cmd_count_irreducibles(a) -> Result:
    return Result({"p": a.p, "n": a.n, "count": finite_field.count_irreducibles(a.p, a.n)})


def cmd_field_census(a) -> Result:
    F = finite_field.ext_make(a.p, a.n)
    census = finite_field.order_census(F)
    ok = all(census[d] == integers.totient(d) for d in census)
    return Result({"p": a.p, "n": a.n, "modulus": str(F.modulus), "census": census, "matches_phi": ok}, ok)


def cmd_hausner(a) -> Result:
    r = finite_field.hausner_check(a.p, a.q)
    return Result(
        {"p": r.p, "q": r.q, "n": r.n, "tau_sq": r.tau_sq_ok, "tau_q": r.tau_q_ok,
         "qr_consistent": r.qr_consistent},
        r.ok,
    )


def cmd_eis_split(a) -> Result:
    c = eisenstein.classify_prime(a.p)
    data = {"p": c.p, "class": c.kind, "pi": str(c.pi)}
    if c.conj is not None:
        data["conj"] = str(c.conj)
    if c.unit is not None:
        data["unit"] = str(c.unit)
    return Result(data)


def cmd_eis_primary(a) -> Result:
    x = parse_eisenstein(a.alpha)
    u, prim = eisenstein.primary_associate(x)
    return Result({"input": str(x), "unit": str(u), "primary": str(prim)})


def cmd_eis_norm(a) -> Result:
    x = parse_eisenstein(a.alpha)
    return Result({"input": str(x), "norm": x.norm()})


def cmd_cubic_char(a) -> Result:
    pi, alpha = parse_eisenstein(a.pi), parse_eisenstein(a.alpha)
    return Result({"pi": str(pi), "alpha": str(alpha), "value": cubic.cubic_char(pi, alpha).value})


def cmd_supplement(a) -> Result:
    ctx = cubic.CubicCharCtx(parse_eisenstein(a.pi))
    if a.which == "omega":
        formula, direct = cubic.supplement_omega(ctx), ctx(eisenstein.OMEGA)
    else:
        formula, direct = cubic.supplement_one_minus_omega(ctx), ctx(eisenstein.ONE_MINUS_OMEGA)
    ok = formula == direct
    return Result({"pi": str(ctx.pi), "which": a.which, "value": formula.value, "direct": direct.value,
                   "agree": ok}, ok)


def cmd_two_cubic(a) -> Result:
    r = cubic.two_as_cubic_residue(a.p)
    pi = eisenstein.classify_prime(a.p).pi
    cube = cubic.is_cube_mod_p_bruteforce(2, a.p)
    char = cubic.cubic_char(pi, 2).value
    ok = cubic.two_cubic_agreement(a.p)
    data = {"p": a.p, "solvable": r.solvable, "C": r.rep[0] if r.rep else None,
            "D": r.rep[1] if r.rep else None, "cube_search": cube, "pi": str(pi),
            "chi_pi(2)": char, "agree": ok}
    return Result(data, ok)


def _literal(ring: str, pair) -> str:
    return str(ch._from_pair(ring, pair))


def cmd_gauss_sum(a) -> Result:
    chi = ch.char_make(a.p, a.k)
    g = ch.gauss_sum(chi, a.a)
    z = g.to_complex()
    return Result({"p": a.p, "k": a.k, "a": a.a, "ring": g.base,
                   "coeffs": [_literal(g.base, c) for c in g.coeffs],
                   "numeric": [round(z.real, 12), round(z.imag, 12)]})


def cmd_jacobi_sum(a) -> Result:
    chi, lam = ch.char_make(a.p, a.k1), ch.char_make(a.p, a.k2)
    return Result({"p": a.p, "k1": a.k1, "k2": a.k2, "value": str(ch.jacobi_sum(chi, lam))})


def cmd_identity_check(a) -> Result:
    if a.which in ("gauss-cube", "jacobi-eq-pi"):
        fn = cubic.cubic_gauss_cube_check if a.which == "gauss-cube" else cubic.jacobi_eq_pi_check
        ok = fn(a.p)
    else:
        if a.k is None:
            raise DomainError(f"{a.which} needs a character order k")
        chi = ch.char_make(a.p, a.k)
        ok = {
            "magnitude": ch.gauss_magnitude_check,
            "jacobi-relation": lambda c: ch.gauss_jacobi_relation_check(c, c),
            "power-formula": ch.gauss_power_formula_check,
        }[a.which](chi)
    return Result({"p": a.p, "k": a.k, "identity": a.which, "holds": ok}, ok)


def cmd_biquad_char(a) -> Result:
    pi, alpha = parse_gaussian(a.pi), parse_gaussian(a.alpha)
    return Result({"pi": str(pi), "alpha": str(alpha), "value": gaussian.biquadratic_char(pi, alpha).value})


def _report(report: sweeps.SweepReport, csv_path: Optional[str]) -> Result:
    if csv_path:
        with open(csv_path, "w", newline="") as fh:
            fh.write(report.to_csv())
    return Result(report.to_dict(), report.ok)


def cmd_cubic_verify(a) -> Result:
    return _report(sweeps.cubic_sweep(a.max_norm, jobs=a.jobs, seed=a.seed), a.csv)


def cmd_biquad_verify(a) -> Result:
    return _report(sweeps.biquadratic_sweep(a.max_norm, jobs=a.jobs, form=a.form), a.csv)


def cmd_qr_verify(a) -> Result:
    return _report(sweeps.quadratic_sweep(a.bound, jobs=a.jobs), a.csv)


def cmd_gauss_verify(a) -> Result:
    return _report(sweeps.gauss_sweep(a.bound, jobs=a.jobs), a.csv)


def cmd_field_verify(a) -> Result:
    return _report(sweeps.field_sweep(a.bound, jobs=a.jobs, nth_bound=a.nth_bound), a.csv)


def cmd_hausner_verify(a) -> Result:
    return _report(sweeps.hausner_sweep(a.bound, jobs=a.jobs), a.csv)


# -- parser ---------------------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON object")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--csv", metavar="PATH", help="also write a sweep report as CSV")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="reciprocity", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable, help: str, parent=sub) -> argparse.ArgumentParser:
        sp = parent.add_parser(name, parents=[common], help=help)
        sp._negative_number_matcher = _NEGATIVE_LITERAL
        sp.set_defaults(handler=handler)
        return sp

    sp = add("legendre", cmd_legendre, "Legendre symbol (a/p)")
    sp.add_argument("a", type=int)
    sp.add_argument("p", type=int)

    sp = add("qr-check", cmd_qr_check, "quadratic reciprocity for one pair")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)

    sp = add("mobius", cmd_mobius, "Mobius function")
    sp.add_argument("n", type=int)

    for name, handler, help in (
        ("count-irreducibles", cmd_count_irreducibles, "monic irreducibles of degree n over F_p"),
        ("field-census", cmd_field_census, "element orders in F_{p^n}"),
    ):
        sp = add(name, handler, help)
        sp.add_argument("p", type=int)
        sp.add_argument("n", type=int)

    sp = add("hausner", cmd_hausner, "finite-field Gauss sum checks for (p, q)")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)

    eis = sub.add_parser("eis", help="Eisenstein integer utilities")
    eis_sub = eis.add_subparsers(dest="eis_command", required=True)
    sp = add("split", cmd_eis_split, "factor a rational prime", eis_sub)
    sp.add_argument("p", type=int)
    sp = add("primary", cmd_eis_primary, "primary associate", eis_sub)
    sp.add_argument("alpha")
    sp = add("norm", cmd_eis_norm, "norm", eis_sub)
    sp.add_argument("alpha")

    sp = add("cubic-char", cmd_cubic_char, "cubic residue character chi_pi(alpha)")
    sp.add_argument("pi")
    sp.add_argument("alpha")

    sp = add("supplement", cmd_supplement, "supplementary laws for chi_pi")
    sp.add_argument("which", choices=["omega", "one-minus-omega"])
    sp.add_argument("pi")

    sp = add("two-cubic", cmd_two_cubic, "is 2 a cube mod p")
    sp.add_argument("p", type=int)

    sp = add("gauss-sum", cmd_gauss_sum, "exact Gauss sum of the order-k character")
    sp.add_argument("p", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("--a", type=int, default=1)

    sp = add("jacobi-sum", cmd_jacobi_sum, "Jacobi sum of the order-k1 and order-k2 characters")
    sp.add_argument("p", type=int)
    sp.add_argument("k1", type=int)
    sp.add_argument("k2", type=int)

    sp = add("identity-check", cmd_identity_check, "one exact Gauss/Jacobi identity")
    sp.add_argument("which", choices=["magnitude", "jacobi-relation", "gauss-cube", "power-formula",
                                      "jacobi-eq-pi"])
    sp.add_argument("p", type=int)
    sp.add_argument("k", type=int, nargs="?")

    sp = add("biquad-char", cmd_biquad_char, "biquadratic character chi_pi(alpha)")
    sp.add_argument("pi")
    sp.add_argument("alpha")

    sp = add("cubic-verify", cmd_cubic_verify, "cubic reciprocity sweep")
    sp.add_argument("--max-norm", type=int, required=True)

    sp = add("biquad-verify", cmd_biquad_verify, "biquadratic reciprocity sweep")
    sp.add_argument("--max-norm", type=int, required=True)
    sp.add_argument("--form", choices=["product", "quotient"], default="product",
                    help="product: chi_pi(lam) chi_lam(pi) = sign; quotient: chi_pi(lam) = sign chi_lam(pi)")

    for name, handler, help in (
        ("qr-verify", cmd_qr_verify, "quadratic reciprocity sweep"),
        ("gauss-verify", cmd_gauss_verify, "Gauss/Jacobi identity sweep over p <= bound"),
        ("hausner-verify", cmd_hausner_verify, "Hausner sweep over q^n <= bound"),
    ):
        sp = add(name, handler, help)
        sp.add_argument("--bound", type=int, required=True)

    sp = add("field-verify", cmd_field_verify, "field structure sweep over q <= bound")
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--nth-bound", type=int, default=200)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = args.handler(args)
    except ResourceError as e:
        print(f"resource guard: {e}", file=sys.stderr)
        return EXIT_GUARD
    except ConsistencyError as e:
        print(f"consistency failure: {e}", file=sys.stderr)
        return EXIT_FAIL
    except (DomainError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    _emit(result, args.json)
    return EXIT_OK if result.ok else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
