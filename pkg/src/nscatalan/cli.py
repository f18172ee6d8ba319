"""Command-line interface.

Subcommands::

    catalan     H(Psi; gamma; w) in the monomial, key or Schur basis
    verify      run a verification suite (exit 1 on any failure)
    crystal     DARK crystals as DOT or JSON
    katabolize  test (and trace) w-katabolizability of a tabloid
    macdonald   E~_alpha / E_alpha at t = 0 by one or all routes

Hecke elements are written ``id``, ``w0`` or as comma-separated generator
words (``3,4,3``); tuples of them are separated by ``;``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Bad user input; reported on stderr with exit code 2."""


def _ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        bad = next(i for i, t in enumerate(text.split(","), start=1) if not _is_int(t))
        raise UsageError(f"{what}: entry {bad} of {text!r} is not an integer") from None


def _is_int(t: str) -> bool:
    try:
        int(t)
        return True
    except ValueError:
        return False


def _max_generator(text: str) -> int:
    best = 0
    for part in text.replace(";", ",").split(","):
        part = part.strip()
        if _is_int(part):
            best = max(best, int(part))
    return best


def _hecke(text: str, ell: int, what: str):
    from .hecke import parse_hecke

    try:
        return parse_hecke(text, ell)
    except ValueError as exc:
        raise UsageError(f"{what}: {exc}") from None


def _hecke_tuple(text: str, ell: int, what: str) -> list:
    parts = text.split(";")
    return [_hecke(p, ell, f"{what} (entry {k})") for k, p in enumerate(parts, start=1)]


def _emit(obj, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(obj, sort_keys=False))
    else:
        print(text)


# -- catalan -------------------------------------------------------------------


def _schur_json(exp) -> list[dict]:
    return [{"q": t["q"], "lambda": t["alpha"], "coeff": t["coeff"]} for t in exp.to_json_obj()]


def cmd_catalan(args: argparse.Namespace) -> int:
    from .catalan import CatalanResult, catalan_recursive, catalan_rotation
    from .hecke import longest
    from .rootideals import is_tame, parse_nr, parse_roots

    gamma = _ints(args.gamma, "--gamma")
    ell = args.ell if args.ell is not None else len(gamma)
    if len(gamma) != ell:
        raise UsageError(f"--gamma: expected {ell} entries, got {len(gamma)}")
    try:
        if args.nr is not None:
            psi = parse_nr(args.nr, ell)
        else:
            psi = parse_roots(args.roots, ell)
    except ValueError as exc:
        raise UsageError(f"{'--nr' if args.nr is not None else '--roots'}: {exc}") from None
    w = _hecke(args.w, ell, "--w")
    tame = is_tame(psi, w)
    symmetric = w == longest(ell)
    if args.basis == "schur" and not symmetric:
        raise UsageError("--basis schur needs --w w0 (the function is only symmetric then)")
    route = args.route
    if route == "auto":
        route = "rotation" if tame and min(gamma) >= 0 else "recursion"
    if route in ("rotation", "both") and not tame:
        raise UsageError("--route rotation needs a tame labeled root ideal")
    if route in ("rotation", "both") and min(gamma) < 0:
        raise UsageError("--route rotation needs a nonnegative --gamma")
    if route == "recursion":
        poly = catalan_recursive(psi, gamma, w)
    elif route == "rotation":
        poly = catalan_rotation(psi, gamma, w)
    else:
        poly = catalan_recursive(psi, gamma, w)
        if catalan_rotation(psi, gamma, w) != poly:
            print("error: recursion and rotation routes disagree", file=sys.stderr)
            return EXIT_FAIL
    res = CatalanResult.from_poly(poly, symmetric)
    basis_obj = {
        "monomial": poly.to_json_obj(),
        "key": res.key_expansion.to_json_obj(),
        "schur": _schur_json(res.schur_expansion) if res.schur_expansion is not None else None,
    }
    obj = {
        "command": "catalan",
        "params": {"ell": ell, "nr": list(psi.nr), "gamma": list(gamma), "w": str(w)},
        "tame": tame,
        "route": route,
        "basis": args.basis,
        "terms": basis_obj[args.basis],
        "monomial": basis_obj["monomial"],
        "key": basis_obj["key"],
        "schur": basis_obj["schur"],
    }
    if args.basis == "monomial":
        text = poly.to_text()
    elif args.basis == "key":
        text = res.key_expansion.to_text("k")
    else:
        text = res.schur_expansion.to_text("s")  # type: ignore[union-attr]
    _emit(obj, args.json, text)
    return EXIT_OK


# -- verify --------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    from .verify import run_suite

    rep = run_suite(args.suite, ell=args.ell, trials=args.trials, maxmu=args.maxmu, seed=args.seed)
    obj = rep.to_json_obj()
    lines = [
        f"suite: {rep.suite}",
        f"params: " + " ".join(f"{k}={v}" for k, v in rep.params.items()),
        f"seed: {rep.seed}",
        f"trials: {rep.trials}",
        f"failures: {rep.failures}",
    ]
    lines += [f"  {name}: {n}" for name, n in sorted(rep.checks.items())]
    lines += [f"counterexample: {c}" for c in rep.counterexamples]
    _emit(obj, args.json, "\n".join(lines))
    return EXIT_OK if rep.passed else EXIT_FAIL


# -- crystal -------------------------------------------------------------------


def cmd_crystal(args: argparse.Namespace) -> int:
    from .crystal import dark, to_dot, to_json_obj

    mu = _ints(args.mu, "--mu")
    if any(m < 0 for m in mu) or any(mu[k] < mu[k + 1] for k in range(len(mu) - 1)):
        raise UsageError(f"--mu: {args.mu!r} is not a partition")
    mu = tuple(m for m in mu if m)
    ell = args.ell if args.ell is not None else max(_max_generator(args.w) + 1, len(mu), 1)
    ws = _hecke_tuple(args.w, ell, "--w")
    if len(ws) != len(mu):
        if not mu and len(ws) == 1:
            ws = []
        else:
            raise UsageError(f"--w: need {len(mu)} Hecke elements (one per nonzero part of --mu), got {len(ws)}")
    D = dark(mu, ws, ell)
    if args.emit == "dot":
        sys.stdout.write(to_dot(D))
    else:
        obj = {"command": "crystal dark"}
        obj.update(to_json_obj(D))
        print(json.dumps(obj))
    return EXIT_OK


# -- katabolize ------------------------------------------------------------------


def cmd_katabolize(args: argparse.Namespace) -> int:
    from .tabloids import charge, katabolism_trace, parse_tabloid

    rows_in_text = len(args.tabloid.split("/"))
    ell = args.ell if args.ell is not None else max(rows_in_text, _max_generator(args.w) + 1)
    try:
        T = parse_tabloid(args.tabloid, ell)
    except ValueError as exc:
        raise UsageError(f"--tabloid: {exc}") from None
    ws = _hecke_tuple(args.w, ell, "--w")
    ok, steps = katabolism_trace(T, ws)
    try:
        ch: Optional[int] = charge(T)
    except ValueError:
        ch = None
    obj = {
        "command": "katabolize",
        "params": {"ell": ell, "tabloid": str(T), "w": [str(w) for w in ws]},
        "katabolizable": ok,
        "charge": ch,
    }
    lines = []
    if args.trace:
        obj["trace"] = [{"step": label, "tabloid": str(U)} for label, U in steps]
        width = max(len(label) for label, _ in steps)
        lines += [f"{label.ljust(width)}  {U}" for label, U in steps]
    lines.append(f"katabolizable: {'yes' if ok else 'no'}")
    _emit(obj, args.json, "\n".join(lines))
    return EXIT_OK


# -- macdonald ------------------------------------------------------------------


def cmd_macdonald(args: argparse.Namespace) -> int:
    from .keybasis import expand_keys
    from .macdonald import E_from_tE, tE, tE_catalan, tE_operator

    alpha = _ints(args.alpha, "--alpha")
    if not alpha or min(alpha) < 0:
        raise UsageError("--alpha: need a nonempty vector of nonnegative integers")
    routes = {"recursion": tE, "operator": tE_operator, "catalan": tE_catalan}
    chosen = list(routes) if args.route == "all" else [args.route]
    results = {name: routes[name](alpha) for name in chosen}
    poly = results[chosen[0]]
    agree = all(p == poly for p in results.values())
    if not agree:
        bad = [n for n, p in results.items() if p != poly]
        print(f"error: routes disagree: {', '.join(bad)} differ from {chosen[0]}", file=sys.stderr)
        return EXIT_FAIL
    if args.version == "E":
        poly = E_from_tE(alpha, poly)
    if args.basis == "key":
        exp = expand_keys(poly)
        terms = exp.to_json_obj()
        text = exp.to_text("k")
    else:
        terms = poly.to_json_obj()
        text = poly.to_text()
    obj = {
        "command": "macdonald",
        "params": {"alpha": list(alpha), "version": args.version, "basis": args.basis},
        "routes": chosen,
        "agree": agree,
        "terms": terms,
    }
    _emit(obj, args.json, text)
    return EXIT_OK


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    from .verify import DEFAULT_SEED, SUITES

    parser = argparse.ArgumentParser(prog="nscatalan", description="Nonsymmetric Catalan functions and friends.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalan", help="compute H(Psi; gamma; w)")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--nr", help="root ideal as its nr vector, e.g. 2,2,3,3,2,1")
    grp.add_argument("--roots", help='root ideal as rows of columns, e.g. "1:3-5;2:4-5"')
    p.add_argument("--gamma", required=True, help="weight, e.g. 2,2,2,1,1")
    p.add_argument("--w", default="w0", help="Hecke element: id, w0 or a word like 3,4,3 (default w0)")
    p.add_argument("--ell", type=int, help="number of variables (default: length of --gamma)")
    p.add_argument("--basis", choices=["monomial", "key", "schur"], default="key")
    p.add_argument("--route", choices=["auto", "recursion", "rotation", "both"], default="auto")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_catalan)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=list(SUITES))
    p.add_argument("--ell", type=int, help="number of variables / maximal ell")
    p.add_argument("--trials", type=int, help="number of random trials")
    p.add_argument("--maxmu", type=int, help="maximal size of mu / alpha / words")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("crystal", help="crystal constructions")
    csub = p.add_subparsers(dest="crystal_command", required=True)
    d = csub.add_parser("dark", help="DARK crystal B^{mu; w}")
    d.add_argument("--mu", required=True, help="partition, e.g. 2,1,1")
    d.add_argument("--w", required=True, help='Hecke tuple, e.g. "id;2,1;2,1"')
    d.add_argument("--ell", type=int, help="number of letters (default: inferred from --w and --mu)")
    d.add_argument("--emit", choices=["dot", "json"], default="json")
    d.set_defaults(func=cmd_crystal)

    p = sub.add_parser("katabolize", help="test w-katabolizability of a tabloid")
    p.add_argument("--tabloid", required=True, help='rows separated by /, e.g. "112//3"')
    p.add_argument("--w", required=True, help='Hecke tuple, e.g. "id;2,1;2,1"')
    p.add_argument("--ell", type=int, help="number of rows (default: inferred)")
    p.add_argument("--trace", action="store_true", help="print every partial insertion and kat step")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_katabolize)

    p = sub.add_parser("macdonald", help="t = 0 nonsymmetric Macdonald polynomials")
    p.add_argument("--alpha", required=True, help="weak composition, e.g. 0,3,0,2")
    p.add_argument("--basis", choices=["monomial", "key"], default="key")
    p.add_argument("--version", dest="version", choices=["tE", "E"], default="tE")
    p.add_argument("--route", choices=["recursion", "operator", "catalan", "all"], default="recursion")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_macdonald)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
