"""Command-line front end.

Exit codes: 0 success or no obstruction, 1 obstruction found, 2 input
error, 3 internal convention violation.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .diagram import ANNULUS, SPHERE, DiagramError, GraphDiagram, close_periodic, close_quotient, load, load_tangle

EXIT_OK, EXIT_OBSTRUCTION, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path: str) -> GraphDiagram:
    try:
        return load(path)
    except FileNotFoundError as exc:
        raise InputError(f"{path}: file not found") from exc
    except (json.JSONDecodeError, DiagramError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(text)


# -- per-file workers (module level so they can run in worker processes) -------

def _yamada_one(path: str, method: str) -> dict:
    from .yamada import yamada

    D = _load(path)
    return {"file": path, "yamada": str(yamada(D, method=method))}


def _bracket_one(path: str) -> dict:
    from .kauffman import bracket, bracket_annular

    D = _load(path)
    value = bracket_annular(D) if D.ambient == ANNULUS else bracket(D)
    return {"file": path, "bracket": str(value)}


def _to_r_one(path: str, method: str) -> dict:
    from .ring import format_laurent
    from .yamada import to_original_R

    D = _load(path)
    return {"file": path, "R": format_laurent(to_original_R(D, method=method), "x")}


def _reduce_one(path: str) -> dict:
    from .annulus import reduce_annular_graph

    D = _load(path)
    if D.ambient != ANNULUS:
        raise InputError(f"{path}: annulus-reduce needs an annular diagram")
    return {"file": path, "value": str(reduce_annular_graph(D))}


def _batch(args, worker, extra=()) -> int:
    files = args.files
    if args.jobs > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(worker, files, *[[e] * len(files) for e in extra]))
    else:
        results = [worker(f, *extra) for f in files]
    for r in results:
        key = next(k for k in r if k != "file")
        text = r[key] if len(files) == 1 else f"{r['file']}: {r[key]}"
        _emit(args, r, text)
    return EXIT_OK


# -- commands ------------------------------------------------------------------

def cmd_eval_yamada(args) -> int:
    return _batch(args, _yamada_one, (args.method,))


def cmd_eval_bracket(args) -> int:
    return _batch(args, _bracket_one)


def cmd_to_r(args) -> int:
    return _batch(args, _to_r_one, (args.method,))


def cmd_annulus_reduce(args) -> int:
    return _batch(args, _reduce_one)


def cmd_lemma33(args) -> int:
    from .annulus import lemma33_check

    if args.n < 1:
        raise InputError("-n must be at least 1")
    results = lemma33_check(args.n, args.theta_edges)
    payload = {
        "n": args.n,
        "theta_edges": args.theta_edges,
        "identities": [
            {"name": r.name, "pass": r.passed, "residual": None if r.passed else str(r.residual)}
            for r in results
        ],
    }
    _emit(args, payload, "\n".join(r.line() for r in results))
    return EXIT_OK


def cmd_cable_check(args) -> int:
    from .cabling import phi_check

    D = _load(args.file)
    if D.ambient != SPHERE:
        raise InputError("cable-check needs a sphere diagram")
    r = phi_check(D)
    _emit(args, {"pass": r.passed, "yamada": str(r.yamada), "cabled": str(r.cabled)}, r.details())
    return EXIT_OK if r.passed else EXIT_INTERNAL


def cmd_build_periodic(args) -> int:
    try:
        t = load_tangle(args.tangle)
    except FileNotFoundError as exc:
        raise InputError(f"{args.tangle}: file not found") from exc
    except (json.JSONDecodeError, DiagramError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{args.tangle}: {exc}") from exc
    if args.p < 1:
        raise InputError("-p must be positive")
    D = close_quotient(t) if args.quotient else close_periodic(t, args.p)
    if args.ambient == SPHERE:
        D = D.as_sphere()
    print(D.to_json())
    return EXIT_OK


def cmd_test_period(args) -> int:
    from .periodicity import NOT_PERIODIC, full_report, is_prime

    if not is_prime(args.p):
        raise InputError(f"p = {args.p} is not prime")
    D = _load(args.file)
    Q = _load(args.quotient) if args.quotient else None
    rep = full_report(D, args.p, Q, pth_power=args.pth_power, method=args.method)
    if args.format == "json":
        print(rep.to_json(details=args.details))
    else:
        print(rep.to_text())
    return EXIT_OBSTRUCTION if rep.verdict == NOT_PERIODIC else EXIT_OK


def cmd_screen(args) -> int:
    from .periodicity import is_prime
    from .screen import FAIL, screen_diagram

    if not is_prime(args.p):
        raise InputError(f"p = {args.p} is not prime")
    D = _load(args.file)
    r = screen_diagram(D, args.p, budget=args.budget)
    _emit(args, {"p": args.p, "screen": r.status, "reason": r.reason}, f"{r.status}: {r.reason}")
    return EXIT_OBSTRUCTION if r.status == FAIL else EXIT_OK


def cmd_random_diagram(args) -> int:
    from .corpus import random_graph_diagram

    rng = random.Random(args.seed)
    D = random_graph_diagram(rng, max_crossings=args.max_crossings, max_edges=args.max_edges)
    print(D.to_json())
    return EXIT_OK


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for multi-file commands")

    parser = argparse.ArgumentParser(prog="yamada-skein", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    methods = ("relations", "cable", "auto")
    sp = add("eval-yamada", cmd_eval_yamada, "Yamada value of sphere diagrams")
    sp.add_argument("files", nargs="+")
    sp.add_argument("--method", choices=methods, default="relations")
    sp = add("eval-bracket", cmd_eval_bracket, "Kauffman bracket of link diagrams")
    sp.add_argument("files", nargs="+")
    sp = add("to-R", cmd_to_r, "original Yamada polynomial in x = A^4")
    sp.add_argument("files", nargs="+")
    sp.add_argument("--method", choices=methods, default="relations")
    sp = add("annulus-reduce", cmd_annulus_reduce, "reduce an annular diagram to a polynomial in z")
    sp.add_argument("files", nargs="+")
    sp = add("lemma33-check", cmd_lemma33, "check the theta, S and bouquet identities at n")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--theta-edges", choices=("n", "n+1"), default="n")
    sp = add("cable-check", cmd_cable_check, "compare Yamada value with the cabled bracket")
    sp.add_argument("file")
    sp = add("build-periodic", cmd_build_periodic, "close a sector tangle periodically")
    sp.add_argument("tangle")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--quotient", action="store_true", help="build the one-copy quotient closure")
    sp.add_argument("--ambient", choices=(SPHERE, ANNULUS), default=SPHERE)
    sp = add("test-period", cmd_test_period, "periodicity obstructions for prime p")
    sp.add_argument("file")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--quotient", metavar="QFILE")
    sp.add_argument("--pth-power", action="store_true")
    sp.add_argument("--details", action="store_true", help="include every criterion in JSON output")
    sp.add_argument("--method", choices=methods, default="auto")
    sp = add("screen", cmd_screen, "abstract-graph screen for a free Z/p action")
    sp.add_argument("file")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--budget", type=int, default=200_000)
    sp = add("random-diagram", cmd_random_diagram, "seeded random graph diagram")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--max-crossings", type=int, default=4)
    sp.add_argument("--max-edges", type=int, default=6)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
