"""Command-line surface: ``maxplus poly | matrix | conv | verify``.

Inputs are read from literal arguments or from files (an argument naming an
existing file is read as that file).  Polynomials use the ascending
coefficient-list format, matrices the JSON or whitespace-grid format, and
scalars the token grammar; all operators render in ASCII:
``(+)`` for max-plus addition, juxtaposition for multiplication, ``x^k``
powers and ``-inf`` for eps.

Exit codes: 0 success, 2 parse error, 3 domain error, 4 enumeration cap
exceeded; ``verify`` exits 1 when trials fail.  All randomness flows through
``--seed``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import charpoly as cp
from . import convolve as cv
from . import matrix as mx
from . import oracle, verify
from .errors import CapExceededError, ParseError
from .matrix import MaxMatrix, Permutation
from .poly import Maxpolynomial
from .scalar import MaxScalar, format_scalar, parse_scalar


def _source(text: str) -> str:
    path = Path(text)
    try:
        if path.is_file():
            return path.read_text()
    except OSError:
        pass
    return text


def _poly(text: str) -> Maxpolynomial:
    return Maxpolynomial.parse(_source(text))


def _mat(text: str) -> MaxMatrix:
    return MaxMatrix.parse(_source(text))


def _roots_text(roots: Sequence[MaxScalar]) -> str:
    return "(" + ", ".join(format_scalar(r) for r in roots) + ")"


def _perm_json(p: Permutation) -> list[int]:
    return [i + 1 for i in p.images]


def _emit_poly(p: Maxpolynomial, args, inputs: list[str], certificate=None) -> None:
    fcf = p.is_fcf()
    roots = [] if p.is_null else list(p.roots())
    if args.json:
        doc = {
            "inputs": inputs,
            "result_coeffs": [format_scalar(c) for c in p.coeffs],
            "fcf": fcf,
            "roots": [format_scalar(r) for r in roots],
        }
        if certificate is not None:
            doc["certificate"] = _cert_json(p, certificate)
        print(json.dumps(doc))
        return
    print(p.format_coeffs())
    print(f"monomial: {p.format_monomials()}")
    if fcf and not p.is_null:
        print(f"factored: {p.format_factored()}")
    if certificate is not None:
        n = len(certificate) - 1
        for k in sorted(certificate):
            perms = certificate[k]
            if perms is None:
                continue
            names = ("P", "Q")[: len(perms)]
            rendered = " ".join(f"{nm}={pm}" for nm, pm in zip(names, perms))
            print(f"certificate x^{n - k}: {rendered}")


def _cert_json(p: Maxpolynomial, certificate) -> dict:
    n = len(certificate) - 1
    out = {}
    for k, perms in certificate.items():
        if perms is None:
            out[f"x^{n - k}"] = None
        else:
            names = ("P", "Q")[: len(perms)]
            out[f"x^{n - k}"] = {nm: _perm_json(pm) for nm, pm in zip(names, perms)}
    return out


def _emit_scalar(value: MaxScalar, args, inputs: list[str]) -> None:
    if args.json:
        print(json.dumps({"inputs": inputs, "result": format_scalar(value)}))
    else:
        print(format_scalar(value))


def _emit_bool(value: bool, args, inputs: list[str]) -> None:
    if args.json:
        print(json.dumps({"inputs": inputs, "result": value}))
    else:
        print("true" if value else "false")


def _emit_roots(roots: Sequence[MaxScalar], args, inputs: list[str]) -> None:
    if args.json:
        print(json.dumps({"inputs": inputs, "roots": [format_scalar(r) for r in roots]}))
    else:
        print(_roots_text(roots))


# ----------------------------------------------------------------------
# poly subcommands


def _cmd_poly(args) -> int:
    p = _poly(args.poly)
    inputs = [p.format_coeffs()]
    sub = args.poly_cmd
    if sub == "roots":
        roots = oracle.roots_bf(p) if args.oracle else p.roots()
        _emit_roots(roots, args, inputs)
    elif sub == "fcf":
        _emit_bool(p.is_fcf(), args, inputs)
    elif sub == "concavify":
        _emit_poly(p.concavify(), args, inputs)
    elif sub == "derive":
        _emit_poly(p.derivative(args.k), args, inputs)
    elif sub == "eval":
        x = parse_scalar(args.point)
        _emit_scalar(p.evaluate(x), args, inputs + [format_scalar(x)])
    else:
        q = _poly(args.other)
        inputs.append(q.format_coeffs())
        if sub == "add":
            _emit_poly(p + q, args, inputs)
        elif sub == "mul":
            _emit_poly(p * q, args, inputs)
        elif sub == "conv":
            _emit_poly(p.max_convolve(q, args.k), args, inputs)
        elif sub == "hadamard":
            _emit_poly(p.hadamard(q), args, inputs)
    return 0


# ----------------------------------------------------------------------
# matrix subcommands


def _bf_char_poly(a: MaxMatrix) -> Maxpolynomial:
    return Maxpolynomial(
        oracle.delta_bf(a, k) for k in reversed(range(a.rows + 1))
    )


def _bf_full_char_poly(a: MaxMatrix) -> Maxpolynomial:
    return Maxpolynomial(
        oracle.eta_bf(a, k) for k in reversed(range(a.rows + 1))
    )


def _cmd_matrix(args) -> int:
    a = _mat(args.matrix)
    inputs = [a.format_json()]
    sub = args.matrix_cmd
    if sub == "charpoly":
        poly = _bf_char_poly(a) if args.oracle else cp.char_poly(a, cap=args.cap)
        _emit_poly(poly, args, inputs)
    elif sub == "fullcharpoly":
        poly = _bf_full_char_poly(a) if args.oracle else cp.full_char_poly(a)
        _emit_poly(poly, args, inputs)
    elif sub == "grampoly":
        _emit_poly(cp.gram_char_poly(a), args, inputs)
    elif sub == "permanent":
        value = oracle.permanent_bf(a) if args.oracle else mx.permanent(a)
        _emit_scalar(value, args, inputs)
    elif sub == "eta":
        value = oracle.eta_bf(a, args.k) if args.oracle else mx.eta(a, args.k)
        _emit_scalar(value, args, inputs)
    elif sub == "delta":
        if args.oracle:
            value = oracle.delta_bf(a, args.k)
        else:
            value = mx.delta(a, args.k, cap=args.cap)
        _emit_scalar(value, args, inputs)
    elif sub == "pd-check":
        _emit_bool(cp.is_principally_dominant(a, cap=args.cap), args, inputs)
    elif sub == "nu":
        if args.oracle:
            value = _bf_char_poly(a).roots()[0]
        else:
            value = cp.nu(a, cap=args.cap)
        _emit_scalar(value, args, inputs)
    elif sub == "norm":
        _emit_scalar(mx.norm(a), args, inputs)
    elif sub == "partitions":
        partitions, truncated = cp.max_column_partitions(a, cap=args.cap)
        if args.json:
            print(
                json.dumps(
                    {
                        "inputs": inputs,
                        "partitions": [p.format() for p in partitions],
                        "truncated": truncated,
                    }
                )
            )
        else:
            for p in partitions:
                print(p.format())
            if truncated:
                print(f"truncated at cap {args.cap}")
    return 0


# ----------------------------------------------------------------------
# conv subcommands


def _cmd_conv(args) -> int:
    sub = args.conv_cmd
    if sub == "multi":
        mats = [_mat(t) for t in args.matrices]
        inputs = [m.format_json() for m in mats]
        _emit_poly(cv.additive_conv_multi(mats), args, inputs)
        return 0
    a, b = _mat(args.a), _mat(args.b)
    inputs = [a.format_json(), b.format_json()]
    if sub == "orient":
        p0, q0 = cv.orienting_permutations(a, b, cap=args.cap)
        if args.json:
            print(
                json.dumps(
                    {"inputs": inputs, "P0": _perm_json(p0), "Q0": _perm_json(q0)}
                )
            )
        else:
            print(f"P0: {p0}")
            print(f"Q0: {q0}")
        return 0
    functions = {
        "additive": cv.additive_conv_rhs,
        "pd": cv.pd_conv_rhs,
        "maxrow": cv.max_row_conv,
        "hadamard": cv.hadamard_conv_rhs,
        "mult": cv.mult_conv_rhs,
    }
    fn = functions[sub]
    if args.certificate:
        poly, cert = fn(a, b, cap=args.cap, certificate=True)
        _emit_poly(poly, args, inputs, certificate=cert)
    else:
        _emit_poly(fn(a, b, cap=args.cap), args, inputs)
    return 0


# ----------------------------------------------------------------------
# verify subcommand


def _cmd_verify(args) -> int:
    if args.theorem == "pd" and args.negative_control:
        rhs, lhs, violated = verify.negative_control()
        print("negative control: fixed symmetric pair, second matrix not")
        print("principally dominant")
        print(f"conjugation maximum: {rhs.format_coeffs()}")
        print(f"convolution:         {lhs.format_coeffs()}")
        if violated:
            print("identity violated, as documented for non-dominant input")
            return 0
        print("identity NOT violated: the two sides coincide on this pair")
        return 1
    report = verify.run(
        args.theorem, n=args.n, trials=args.trials, seed=args.seed, cap=args.cap
    )
    print(
        f"theorem {report.theorem}: n={report.n}, trials={report.trials}, "
        f"seed={report.seed}"
    )
    print(report.summary())
    if not report.passed:
        print(f"first counterexample, {report.first_counterexample()}")
        return 1
    return 0


# ----------------------------------------------------------------------
# parser wiring


def _add_json(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit structured output")


# Literal polynomials and scalars may start with "-" ("-inf", "-3, 2, 0").
# Widening the negative-number matcher makes argparse treat such tokens as
# positionals instead of unknown options.
_NEGATIVE_TOKEN = re.compile(r"^-(inf\b|\d|\.\d)")


def _lenient(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
    p._negative_number_matcher = _NEGATIVE_TOKEN
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _lenient(
        argparse.ArgumentParser(
            prog="maxplus",
            description="Exact max-plus algebra: maxpolynomials, permanents, "
            "characteristic maxpolynomials and their convolutions.",
        )
    )
    top = parser.add_subparsers(dest="command", required=True)

    poly = top.add_parser("poly", help="maxpolynomial calculus")
    polysub = poly.add_subparsers(dest="poly_cmd", required=True)
    for name, needs_other, needs_k in [
        ("roots", False, False),
        ("fcf", False, False),
        ("concavify", False, False),
        ("derive", False, True),
        ("add", True, False),
        ("mul", True, False),
        ("conv", True, True),
        ("hadamard", True, False),
        ("eval", False, False),
    ]:
        sp = _lenient(polysub.add_parser(name))
        sp.add_argument("poly", help="coefficient list (ascending) or file")
        if needs_other:
            sp.add_argument("other", help="second polynomial or file")
        if needs_k:
            sp.add_argument("--k", type=int, default=1, help="order (default 1)")
        if name == "eval":
            sp.add_argument("point", help="evaluation point (scalar token)")
        if name == "roots":
            sp.add_argument("--oracle", action="store_true", help="force brute force")
        _add_json(sp)
        sp.set_defaults(handler=_cmd_poly)

    matrixp = top.add_parser("matrix", help="max-plus matrix functionals")
    matsub = matrixp.add_subparsers(dest="matrix_cmd", required=True)
    for name in [
        "charpoly",
        "fullcharpoly",
        "grampoly",
        "permanent",
        "eta",
        "delta",
        "pd-check",
        "partitions",
        "nu",
        "norm",
    ]:
        sp = _lenient(matsub.add_parser(name))
        sp.add_argument("matrix", help="matrix text (JSON or grid) or file")
        if name in ("eta", "delta"):
            sp.add_argument("--k", type=int, required=True, help="minor order")
        if name in ("charpoly", "delta", "pd-check", "nu"):
            sp.add_argument(
                "--cap", type=int, default=mx.DELTA_CAP,
                help="principal enumeration cap",
            )
        if name == "partitions":
            sp.add_argument("--cap", type=int, default=64, help="partition cap")
        if name in ("charpoly", "fullcharpoly", "permanent", "eta", "delta", "nu"):
            sp.add_argument("--oracle", action="store_true", help="force brute force")
        _add_json(sp)
        sp.set_defaults(handler=_cmd_matrix)

    conv = top.add_parser("conv", help="convolution identities, matrix side")
    convsub = conv.add_subparsers(dest="conv_cmd", required=True)
    for name in ["additive", "pd", "maxrow", "hadamard", "mult", "orient"]:
        sp = _lenient(convsub.add_parser(name))
        sp.add_argument("a", help="first matrix or file")
        sp.add_argument("b", help="second matrix or file")
        default_cap = cv.PAIR_CAP if name in ("additive", "hadamard") else cv.SINGLE_CAP
        sp.add_argument("--cap", type=int, default=default_cap, help="order cap")
        if name != "orient":
            sp.add_argument(
                "--certificate",
                action="store_true",
                help="also report the permutations attaining each coefficient",
            )
        _add_json(sp)
        sp.set_defaults(handler=_cmd_conv)
    multi = _lenient(convsub.add_parser("multi"))
    multi.add_argument("matrices", nargs="+", help="matrices or files")
    _add_json(multi)
    multi.set_defaults(handler=_cmd_conv)

    ver = _lenient(top.add_parser("verify", help="seeded theorem verification"))
    ver.add_argument("theorem", choices=sorted(verify.CHECKS))
    ver.add_argument("--n", type=int, default=3, help="matrix order")
    ver.add_argument("--trials", type=int, default=200)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--cap", type=int, default=None, help="enumeration cap override")
    ver.add_argument(
        "--negative-control",
        action="store_true",
        help="pd only: evaluate the fixed non-dominant symmetric pair",
    )
    ver.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
