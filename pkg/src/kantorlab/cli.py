"""Command-line interface.

Exit codes: 0 success or the identity holds, 1 a negative verdict, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Dict, List, Optional

from . import constructions as C
from .algebra import Algebra, AlgebraError
from .analysis import (
    alt_seed_system,
    annihilators,
    derivation_space,
    g_triples,
    jacobi_space,
    power_series,
    skewfield_isomorphism,
)
from .fields import QQ
from .identities import (
    IdentitySyntaxError,
    check_identity,
    check_variety,
    dump_registry,
    format_identity,
    parse_identity,
)
from .kantor import generic_seed, kantor_product_algebra
from .mining import cross_check, default_seeds, kantor_samples, mine
from .search import SearchSpec, search_instance
from .suite import run_suite

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# parsing helpers

def _load_algebra(path: str) -> Algebra:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return Algebra.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc


def _parse_vector(A: Algebra, text: str) -> tuple:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if len(parts) != A.dim:
        raise InputError(f"seed needs {A.dim} coordinates, got {len(parts)}")
    try:
        return tuple(A.field.parse(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad coordinate in {text!r}: {exc}") from exc


def _pairs(items: Optional[List[str]], what: str) -> Dict[str, str]:
    out = {}
    for item in items or []:
        key, sep, val = item.partition("=")
        if not sep or not key:
            raise InputError(f"{what} must look like name=value, got {item!r}")
        out[key.strip()] = val.strip()
    return out


def _params(A_field, items) -> dict:
    try:
        return {k: A_field.parse(v) for k, v in _pairs(items, "--param").items()}
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad parameter value: {exc}") from exc


def _seed(A: Algebra, args) -> tuple:
    if getattr(args, "generic_u", False):
        return generic_seed(A)
    if args.u is None:
        raise InputError("give --u coords or --generic-u")
    return _parse_vector(A, args.u)


def _emit(data, out: Optional[str] = None):
    text = data if isinstance(data, str) else json.dumps(data, indent=1)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _load_samples(directory: str) -> List[Algebra]:
    d = Path(directory)
    if not d.is_dir():
        raise InputError(f"{directory} is not a directory")
    files = sorted(p for p in d.iterdir() if p.suffix == ".json")
    if not files:
        raise InputError(f"no .json algebras in {directory}")
    return [_load_algebra(str(p)) for p in files]


# ---------------------------------------------------------------------------
# constructions by name

def _int(v):
    return int(v)


def _bool(v):
    return str(v).lower() in ("1", "true", "yes")


CONSTRUCTORS = {
    "octonions": (C.cayley_dickson, {"alpha": None, "beta": None, "gamma": None}),
    "quaternions": (C.generalized_quaternion, {"alpha": None, "beta": None}),
    "matrix": (C.matrix_algebra, {"k": _int}),
    "matrix_pair": (lambda k=2: C.direct_sum(C.matrix_algebra(k), C.matrix_algebra(k)), {"k": _int}),
    "truncated": (C.truncated_polynomial, {"k": _int, "unital": _bool}),
    "dorofeev": (C.dorofeev, {}),
    "zinbiel": (C.zinbiel_truncated, {"k": _int}),
    "novikov_derivation": (C.derivation_left_novikov, {"p": _int}),
    "novikov_poisson_left": (C.left_novikov_poisson, {"p": _int}),
    "novikov_poisson_right": (C.right_novikov_poisson, {"p": _int}),
    "poisson6": (C.poisson_small, {}),
    "euler_bracket": (C.euler_bracket_algebra, {"k": _int}),
    "rota_baxter": (C.rota_baxter_tridendriform, {"k": _int}),
    "dual_duplicial": (C.dual_duplicial_example, {}),
    "lie_cross": (C.lie_cross, {}),
    "leibniz2": (C.leibniz2, {}),
    "zero": (C.zero_algebra, {"n": _int}),
}


def _construct(name: str, items) -> Algebra:
    if name not in CONSTRUCTORS:
        raise InputError(f"unknown construction {name!r}; choose from {', '.join(sorted(CONSTRUCTORS))}")
    fn, spec = CONSTRUCTORS[name]
    kwargs = {}
    for k, v in _pairs(items, "--param").items():
        if k not in spec:
            raise InputError(f"{name} takes parameters {sorted(spec) or 'none'}")
        conv = spec[k]
        try:
            kwargs[k] = conv(v) if conv else QQ.parse(v)
        except ValueError as exc:
            raise InputError(f"bad value for {k}: {exc}") from exc
    return fn(**kwargs)


# ---------------------------------------------------------------------------
# commands

def cmd_product(args) -> int:
    A = _load_algebra(args.algebra)
    u = _seed(A, args)
    K = kantor_product_algebra(A, args.a, args.b or args.a, u, allow_generic=args.generic_u)
    _emit(K.to_json(), args.out)
    return EXIT_OK


def cmd_square(args) -> int:
    A = _load_algebra(args.algebra)
    p = args.product or A.default_product
    u = _seed(A, args)
    K = kantor_product_algebra(A, p, p, u, allow_generic=args.generic_u)
    _emit(K.to_json(), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    A = _load_algebra(args.algebra)
    ident = parse_identity(args.identity)
    v = check_identity(A, ident, args.method, params=_params(A.field, args.param),
                       products=_pairs(args.products, "--products") or None,
                       seed=args.seed, trials=args.trials)
    _emit(v.to_json(A.field))
    return EXIT_OK if v.holds else EXIT_NEGATIVE


def cmd_variety(args) -> int:
    A = _load_algebra(args.algebra)
    r = check_variety(A, args.name, _params(A.field, args.param),
                      _pairs(args.products, "--products") or None, args.method, args.seed, args.trials)
    _emit(r.to_json(A.field))
    return EXIT_OK if r.holds else EXIT_NEGATIVE


def cmd_analyze(args) -> int:
    A = _load_algebra(args.algebra)
    p = args.product or A.default_product
    left, right, both = annihilators(A, p)
    unit = A.find_unit(p)
    report = {
        "series": {k: power_series(A, p, k).to_json() for k in ("nilpotent", "right", "left", "derived")},
        "annihilators": {"left": left.dim, "right": right.dim, "two_sided": both.dim},
        "jacobi_dim": jacobi_space(A, p).dim,
        "derivation_dim": derivation_space([A.table(p)], A.dim, A.field).dim,
        "unit": None if unit is None else [A.field.format(c) for c in unit],
    }
    _emit(report, args.out)
    return EXIT_OK


def cmd_g_triples(args) -> int:
    A = _load_algebra(args.algebra)
    F = A.field
    rows = [{"indices": list(g.indices), "value": [F.format(c) for c in g.value],
             "reference": [F.format(c) for c in g.reference],
             "factor": None if g.factor is None else F.format(g.factor)} for g in g_triples(A, args.product)]
    _emit(rows)
    return EXIT_OK


def cmd_alt_system(args) -> int:
    A = _load_algebra(args.algebra)
    F = A.field
    lines, rows, sol = alt_seed_system(A, args.product)
    _emit({"lines": [list(l) for l in lines], "rows": [[F.format(c) for c in r] for r in rows],
           "solutions": [[F.format(c) for c in v] for v in sol.basis]})
    return EXIT_OK


def cmd_iso(args) -> int:
    A = _load_algebra(args.algebra)
    u = _parse_vector(A, args.u)
    f = skewfield_isomorphism(A, u, args.product)
    if f is None:
        _emit({"isomorphism": None, "reason": "seed is not invertible"})
        return EXIT_NEGATIVE
    _emit({"isomorphism": [[A.field.format(c) for c in row] for row in f]})
    return EXIT_OK


def cmd_construct(args) -> int:
    _emit(_construct(args.name, args.param).to_json(), args.out)
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        data = json.loads(Path(args.spec).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {args.spec}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{args.spec}: invalid JSON: {exc}") from exc
    try:
        spec = SearchSpec.from_json(data)
    except (KeyError, TypeError) as exc:
        raise InputError(f"search spec needs 'variety' and 'dim': {exc}") from exc
    res = search_instance(spec)
    _emit(res.to_json(), args.out)
    return EXIT_OK if res.algebras else EXIT_NEGATIVE


def _samples(args) -> list:
    algebras = _load_samples(args.samples)
    if args.kantor_seeds is None:
        return algebras
    out = []
    for A in algebras:
        if args.generic_u:
            out.append(kantor_product_algebra(A, A.default_product, A.default_product,
                                              generic_seed(A), allow_generic=True))
        else:
            out += kantor_samples(A, default_seeds(A, args.kantor_seeds, seed=args.seed))
    return out


def cmd_mine(args) -> int:
    products = tuple(args.products.split(",")) if args.products else ("m",)
    M = mine(_samples(args), args.degree, products)
    lines = [f"# degree {M.degree}, {len(M.monomials)} monomials, identity space dim {M.dim}"]
    lines += [format_identity(e) for e in M.identities()]
    _emit("\n".join(lines), args.out)
    return EXIT_OK


def cmd_cross_check(args) -> int:
    try:
        text = Path(args.identities).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.identities}: {exc.strerror}") from exc
    idents = [parse_identity(l) for l in text.splitlines() if l.strip() and not l.lstrip().startswith("#")]
    rep = cross_check(idents, _samples(args))
    _emit(rep.to_json())
    return EXIT_OK if not rep.casualties else EXIT_NEGATIVE


def cmd_suite(args) -> int:
    try:
        rep = run_suite(args.case)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from exc
    _emit(rep.dumps() if args.json else rep.text())
    return EXIT_OK if rep.passed else EXIT_NEGATIVE


def cmd_registry(args) -> int:
    _emit(dump_registry())
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kantorlab", description="Exact Kantor products of finite-dimensional algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    def algebra(sp, product=True):
        sp.add_argument("--algebra", required=True, help="algebra JSON file")
        if product:
            sp.add_argument("--product", help="product name (default: the only product)")

    def seeded(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--u", help="seed coordinates, comma separated")
        g.add_argument("--generic-u", action="store_true", help="use indeterminate seed u0..u(n-1)")

    def checking(sp):
        sp.add_argument("--param", action="append", metavar="NAME=VALUE")
        sp.add_argument("--products", action="append", metavar="NAME=PRODUCT")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--trials", type=int, default=50)

    sp = sub.add_parser("product", help="Kantor product of two multiplications")
    algebra(sp, product=False)
    sp.add_argument("--a", required=True, help="outer multiplication")
    sp.add_argument("--b", help="inner multiplication (default: same as --a)")
    seeded(sp)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_product)

    sp = sub.add_parser("square", help="Kantor square of one multiplication")
    algebra(sp)
    seeded(sp)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_square)

    sp = sub.add_parser("check", help="check one identity")
    algebra(sp, product=False)
    sp.add_argument("--identity", required=True)
    sp.add_argument("--method", choices=("basis", "generic", "random"), default="generic")
    checking(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("variety", help="check membership in a named variety")
    algebra(sp, product=False)
    sp.add_argument("--name", required=True)
    sp.add_argument("--method", choices=("auto", "basis", "generic", "random"), default="auto")
    checking(sp)
    sp.set_defaults(func=cmd_variety)

    sp = sub.add_parser("analyze", help="series, annihilators, Jacobi space, derivations")
    algebra(sp)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("g-triples", help="nonassociating basis triples of a Cayley-Dickson algebra")
    algebra(sp)
    sp.set_defaults(func=cmd_g_triples)

    sp = sub.add_parser("alt-system", help="linear system on squared seed coordinates")
    algebra(sp)
    sp.set_defaults(func=cmd_alt_system)

    sp = sub.add_parser("iso", help="isomorphism a -> -a u^-1 onto the Kantor square")
    algebra(sp)
    sp.add_argument("--u", required=True)
    sp.set_defaults(func=cmd_iso)

    sp = sub.add_parser("construct", help="emit a built-in algebra")
    sp.add_argument("name", help=", ".join(sorted(CONSTRUCTORS)))
    sp.add_argument("--param", action="append", metavar="NAME=VALUE")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("search", help="enumerate small algebras of a variety")
    sp.add_argument("--spec", required=True, help="search spec JSON file")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_search)

    for name, func, helptext in (("mine", cmd_mine, "mine multilinear identities"),
                                 ("cross-check", cmd_cross_check, "re-verify identities on fresh samples")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--samples", required=True, help="directory of algebra JSON files")
        sp.add_argument("--kantor-seeds", type=int, metavar="N",
                        help="use Kantor squares at all basis seeds plus N pseudorandom seeds")
        sp.add_argument("--generic-u", action="store_true", help="with --kantor-seeds, use one generic-seed square")
        sp.add_argument("--seed", type=int, default=0)
        if name == "mine":
            sp.add_argument("--degree", type=int, required=True)
            sp.add_argument("--products", help="comma-separated product names (default m)")
            sp.add_argument("--out")
        else:
            sp.add_argument("--identities", required=True, help="file with one identity per line")
        sp.set_defaults(func=func)

    sp = sub.add_parser("suite", help="run the theorem suite")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--case", action="append", metavar="ID")
    sp.set_defaults(func=cmd_suite)

    sp = sub.add_parser("registry", help="print the variety registry in the identity DSL")
    sp.set_defaults(func=cmd_registry)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, AlgebraError, IdentitySyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except KeyError as exc:
        # unknown variety or product names
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
