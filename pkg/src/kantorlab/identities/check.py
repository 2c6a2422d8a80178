"""Deciding whether an identity holds in a given algebra.

Three methods:

``basis``
    Multilinear identities only.  Evaluates every monomial on all tuples of
    basis vectors at once, as a sparse tensor indexed by basis tuples.  Exact
    and complete over any field.
``generic``
    Substitutes elements whose coordinates are independent indeterminates;
    the identity holds iff the resulting defect is the zero polynomial (over
    an infinite field; over F_p zero still implies the identity).
``random``
    Exact evaluation on pseudorandom elements.  Can only falsify.
"""
from __future__ import annotations

import random as _random
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..algebra import Algebra, AlgebraError, normalize
from ..poly import Poly, natural_key
from .expr import IdentityExpr, Prod, Term, Var, leaves

__all__ = [
    "Verdict",
    "check_identity",
    "evaluate_identity",
    "evaluate_term",
    "basis_tensor",
    "resolve_products",
    "generic_element",
]

HOLDS = "holds"
HOLDS_GENERICALLY = "holds_generically"
NOT_FALSIFIED = "not_falsified"
FAILS = "fails"


@dataclass
class Verdict:
    holds: bool
    status: str
    method: str
    identity: str = ""
    witness: Optional[Dict[str, tuple]] = None
    seed_values: Dict[str, object] = dc_field(default_factory=dict)
    defect: Optional[tuple] = None
    note: str = ""

    def __bool__(self):
        return self.holds

    def to_json(self, field) -> dict:
        def fmt(x):
            return str(x) if isinstance(x, Poly) else field.format(x)

        out = {"identity": self.identity, "holds": self.holds, "status": self.status, "method": self.method}
        if self.witness is not None:
            out["witness"] = {k: [fmt(c) for c in v] for k, v in self.witness.items()}
            if self.seed_values:
                out["seed_values"] = {k: fmt(v) for k, v in sorted(self.seed_values.items())}
        if self.defect is not None:
            out["defect"] = [fmt(c) for c in self.defect]
        if self.note:
            out["note"] = self.note
        return out


def resolve_products(A: Algebra, ident: IdentityExpr, products: Optional[Mapping[str, str]] = None) -> Dict[str, str]:
    """Map the identity's product names onto product names of ``A``."""
    used = ident.products
    mapping = dict(products or {})
    for p in used:
        if p in mapping:
            continue
        if p in A.products:
            mapping[p] = p
    unresolved = [p for p in used if p not in mapping]
    if unresolved:
        if len(used) == 1 and len(A.products) == 1:
            mapping[unresolved[0]] = A.default_product
        else:
            raise AlgebraError(f"products {sorted(unresolved)} not found in algebra ({sorted(A.products)})")
    for p, q in mapping.items():
        A.table(q)
    return mapping


def generic_element(A: Algebra, name: str) -> tuple:
    return tuple(Poly.var(f"{name}__{i}", A.field.one) for i in range(A.dim))


# ---------------------------------------------------------------------------
# element-wise evaluation

def evaluate_term(A: Algebra, t: Term, values: Mapping[str, tuple], products: Mapping[str, str],
                  memo: Optional[dict] = None) -> tuple:
    if memo is not None and t in memo:
        return memo[t]
    if isinstance(t, Var):
        out = values[t.name]
    else:
        left = evaluate_term(A, t.left, values, products, memo)
        right = evaluate_term(A, t.right, values, products, memo)
        if not any(left) or not any(right):
            out = A.zero()
        else:
            out = A.multiply(products[t.op], left, right)
    if memo is not None:
        memo[t] = out
    return out


def evaluate_identity(A: Algebra, ident: IdentityExpr, values: Mapping[str, tuple],
                      products: Optional[Mapping[str, str]] = None, params: Optional[Mapping] = None) -> tuple:
    """Defect ``sum c_i t_i(values)`` as an element of ``A``."""
    if ident.params:
        ident = ident.bind(params or {})
    products = resolve_products(A, ident, products)
    memo: dict = {}
    acc = [0] * A.dim
    for c, t in ident.terms:
        v = evaluate_term(A, t, values, products, memo)
        cc = A.field(c)
        for k, x in enumerate(v):
            if x:
                acc[k] = acc[k] + cc * x
    return tuple(normalize(x, A.field) for x in acc)


# ---------------------------------------------------------------------------
# basis-tuple tensors

def _sparse(vec) -> dict:
    return {k: x for k, x in enumerate(vec) if x}


def _rowdicts(A: Algebra, pname: str, cache: dict):
    rd = cache.get(pname)
    if rd is None:
        t = A.table(pname)
        rd = [dict(r) for r in t.rows]
        cache[pname] = rd
    return rd


def _sparse_mul(rowd, a: dict, b: dict) -> dict:
    out: dict = {}
    for i, xi in a.items():
        row = rowd[i]
        if not row:
            continue
        if len(b) < len(row):
            pairs = ((j, yj, row.get(j)) for j, yj in b.items())
        else:
            pairs = ((j, b.get(j), terms) for j, terms in row.items())
        for j, yj, terms in pairs:
            if terms is None or yj is None:
                continue
            s = xi * yj
            for k, c in terms:
                v = out.get(k)
                out[k] = s * c if v is None else v + s * c
    return {k: x for k, x in out.items() if x}


def basis_tensor(A: Algebra, t: Term, order: Sequence[str], products: Mapping[str, str],
                 fixed: Optional[Mapping[str, tuple]] = None, memo: Optional[dict] = None,
                 rows_cache: Optional[dict] = None):
    """Values of a multilinear monomial on all basis tuples.

    Returns ``(vars, table)`` where ``vars`` are the free variables of ``t`` in
    ``order`` and ``table`` maps basis-index tuples (aligned with ``vars``) to
    sparse coordinate dicts of the nonzero values.
    """
    fixed = fixed or {}
    memo = {} if memo is None else memo
    rows_cache = {} if rows_cache is None else rows_cache
    pos = {v: i for i, v in enumerate(order)}

    def rec(t: Term):
        if t in memo:
            return memo[t]
        if isinstance(t, Var):
            if t.name in fixed:
                vec = _sparse(fixed[t.name])
                res = ((), {(): vec} if vec else {})
            else:
                one = A.field.one
                res = ((t.name,), {(i,): {i: one} for i in range(A.dim)})
        else:
            lv, ld = rec(t.left)
            rv, rd = rec(t.right)
            if set(lv) & set(rv):
                raise AlgebraError(f"monomial {t} is not multilinear")
            merged = tuple(sorted(lv + rv, key=pos.__getitem__))
            rowd = _rowdicts(A, products[t.op], rows_cache)
            out = {}
            if not ld or not rd:
                res = (merged, out)
            else:
                in_order = merged == lv + rv
                if not in_order:
                    src = [(0, lv.index(v)) if v in lv else (1, rv.index(v)) for v in merged]
                for a, va in ld.items():
                    for b, vb in rd.items():
                        vec = _sparse_mul(rowd, va, vb)
                        if not vec:
                            continue
                        if in_order:
                            key = a + b
                        else:
                            ab = (a, b)
                            key = tuple(ab[s][i] for s, i in src)
                        out[key] = vec
                res = (merged, out)
        memo[t] = res
        return res

    return rec(t)


def _basis_defect(A: Algebra, ident: IdentityExpr, products, fixed) -> Dict[tuple, dict]:
    free = [v for v in ident.variables if v not in fixed]
    memo: dict = {}
    rows_cache: dict = {}
    total: Dict[tuple, dict] = {}
    for c, t in ident.terms:
        cc = A.field(c)
        vars_, table = basis_tensor(A, t, free, products, fixed, memo, rows_cache)
        if tuple(vars_) != tuple(free):
            raise AlgebraError(f"monomial {t} does not contain every variable exactly once")
        for key, vec in table.items():
            slot = total.get(key)
            if slot is None:
                slot = total[key] = {}
            for k, x in vec.items():
                v = slot.get(k)
                slot[k] = cc * x if v is None else v + cc * x
    return {key: {k: x for k, x in vec.items() if x} for key, vec in total.items()
            if any(x for x in vec.values())}


# ---------------------------------------------------------------------------
# the checker

def _prepare(A: Algebra, ident: IdentityExpr, params, products, fixed):
    if ident.params:
        ident = ident.bind(params or {})
    products = resolve_products(A, ident, products)
    fixed = {k: tuple(v) for k, v in (fixed or {}).items()}
    for k, v in fixed.items():
        if len(v) != A.dim:
            raise AlgebraError(f"fixed element {k!r} has wrong dimension")
    return ident, products, fixed


def _random_point(A: Algebra, rng: _random.Random, bound: int) -> tuple:
    return tuple(A.field.random(rng, bound) for _ in range(A.dim))


def _seed_indeterminates(A: Algebra, fixed) -> List[str]:
    names = set(A.indeterminates())
    for v in fixed.values():
        for c in v:
            if isinstance(c, Poly):
                names |= c.variables()
    return sorted(names, key=natural_key)


def _concrete_search(A, ident, products, fixed, free, rng, attempts, bound):
    """Random concrete evaluations; returns a failing witness or None."""
    seeds = _seed_indeterminates(A, fixed)
    for _ in range(attempts):
        seed_values = {s: A.field.random(rng, bound) for s in seeds}
        B = A.specialize(seed_values) if A.is_polynomial else A
        fx = {k: tuple(normalize(c.subs(seed_values), A.field) if isinstance(c, Poly) else c for c in v)
              for k, v in fixed.items()}
        values = dict(fx)
        for v in free:
            values[v] = _random_point(A, rng, bound)
        defect = evaluate_identity(B, ident, values, products)
        if any(defect):
            return {v: values[v] for v in free}, seed_values, defect
    return None


def check_identity(A: Algebra, ident: IdentityExpr, method: str = "generic", *,
                   params: Optional[Mapping] = None, products: Optional[Mapping[str, str]] = None,
                   fixed: Optional[Mapping[str, Sequence]] = None, seed: int = 0, trials: int = 50,
                   bound: int = 5) -> Verdict:
    """Decide (or, for ``random``, try to falsify) ``ident`` on ``A``.

    ``fixed`` pins some variables to given elements (possibly with polynomial
    coordinates); the identity is then quantified over the remaining ones.
    """
    ident, products, fixed = _prepare(A, ident, params, products, fixed)
    free = [v for v in ident.variables if v not in fixed]
    text = str(ident)
    rng = _random.Random(seed)
    char0 = A.field.characteristic == 0

    if method == "basis":
        if not ident.is_multilinear(ignore=fixed):
            raise AlgebraError(f"method 'basis' needs a multilinear identity: {text}")
        defect = _basis_defect(A, ident, products, fixed)
        if not defect:
            return Verdict(True, HOLDS, method, text)
        key = min(defect)
        vec = defect[key]
        witness = {v: A.basis(i) for v, i in zip(free, key)}
        dvec = tuple(normalize(vec.get(k, A.field.zero), A.field) for k in range(A.dim))
        verdict = Verdict(False, FAILS, method, text, witness, {}, dvec)
        if any(isinstance(x, Poly) for x in dvec):
            found = _specialize_witness(A, ident, products, fixed, witness, rng, bound)
            if found:
                verdict.seed_values, verdict.defect = found
            else:
                verdict.note = "defect is a nonzero polynomial in the seed"
        return verdict

    if method == "generic":
        values = dict(fixed)
        for v in free:
            values[v] = generic_element(A, v)
        defect = evaluate_identity(A, ident, values, products)
        if not any(defect):
            return Verdict(True, HOLDS if char0 else HOLDS_GENERICALLY, method, text)
        found = _concrete_search(A, ident, products, fixed, free, rng, max(trials, 20), bound)
        if found:
            witness, seed_values, d = found
            return Verdict(False, FAILS, method, text, witness, seed_values, d)
        return Verdict(False, FAILS, method, text, None, {}, defect,
                       note="nonzero generic defect; no concrete witness found")

    if method == "random":
        found = _concrete_search(A, ident, products, fixed, free, rng, trials, bound)
        if found:
            witness, seed_values, d = found
            return Verdict(False, FAILS, method, text, witness, seed_values, d)
        return Verdict(True, NOT_FALSIFIED, method, text, note=f"{trials} random trials")

    raise ValueError(f"unknown method {method!r}")


def _specialize_witness(A, ident, products, fixed, witness, rng, bound):
    seeds = _seed_indeterminates(A, fixed)
    for _ in range(50):
        seed_values = {s: A.field.random(rng, bound) for s in seeds}
        B = A.specialize(seed_values)
        values = {k: tuple(normalize(c.subs(seed_values), A.field) if isinstance(c, Poly) else c for c in v)
                  for k, v in fixed.items()}
        values.update(witness)
        d = evaluate_identity(B, ident, values, products)
        if any(d):
            return seed_values, d
    return None
