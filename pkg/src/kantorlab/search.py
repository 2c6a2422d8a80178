"""Brute-force search for small algebras in a variety.

Structure constants are drawn from a finite coefficient set and assigned one
basis product ``e_i e_j`` (a whole coordinate vector) at a time.  After each
assignment every identity is evaluated on all basis tuples whose value is
already determined; a nonzero defect prunes the branch.  Complete candidates
are reduced modulo relabelling and sign changes of the basis and then
confirmed with :func:`check_variety`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Algebra, AlgebraError, MultTable
from .fields import QQ, Field
from .identities.expr import Term, Var
from .identities.registry import get_variety
from .identities.variety import check_variety

__all__ = ["SearchSpec", "SearchResult", "search_instance", "is_trivial"]

MAX_DIM = 4


@dataclass
class SearchSpec:
    variety: str
    dim: int
    coeffs: Sequence = (-1, 0, 1)
    params: Dict[str, object] = dc_field(default_factory=dict)
    budget: int = 1_000_000
    nontrivial: bool = False
    max_results: Optional[int] = None
    field: Field = QQ

    @classmethod
    def from_json(cls, data: dict) -> "SearchSpec":
        F = QQ
        coeffs = tuple(F.parse(str(c)) for c in data.get("coeffs", ["-1", "0", "1"]))
        params = {k: F.parse(str(v)) for k, v in data.get("params", {}).items()}
        return cls(data["variety"], int(data["dim"]), coeffs, params, int(data.get("budget", 1_000_000)),
                   bool(data.get("nontrivial", False)), data.get("max_results"))


@dataclass
class SearchResult:
    algebras: List[Algebra]
    complete: bool
    candidates: int
    nodes: int

    def to_json(self) -> dict:
        return {
            "complete": self.complete,
            "candidates": self.candidates,
            "nodes": self.nodes,
            "algebras": [A.to_json() for A in self.algebras],
        }


def is_trivial(A: Algebra) -> bool:
    """Every product is commutative and associative (the zero product included)."""
    for p in A.products:
        r = check_variety(A, "associative_commutative", products={"m": p})
        if not r.holds:
            return False
    return True


_UNKNOWN = None


class _Partial:
    """Partially assigned tables; ``None`` marks an unassigned product."""

    def __init__(self, n, products, field):
        self.n = n
        self.field = field
        self.tab = {p: [[_UNKNOWN] * n for _ in range(n)] for p in products}

    def mul(self, p, a, b):
        if a is _UNKNOWN or b is _UNKNOWN:
            return _UNKNOWN
        rows = self.tab[p]
        out = [0] * self.n
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                v = rows[i][j]
                if v is _UNKNOWN:
                    return _UNKNOWN
                s = x * y
                for k, c in enumerate(v):
                    if c:
                        out[k] += s * c
        return tuple(out)


def _eval(P: _Partial, t: Term, values, mapping, memo):
    if t in memo:
        return memo[t]
    if isinstance(t, Var):
        r = values[t.name]
    else:
        r = P.mul(mapping[t.op], _eval(P, t.left, values, mapping, memo),
                  _eval(P, t.right, values, mapping, memo))
    memo[t] = r
    return r


def _violates(P: _Partial, idents, mapping, basis) -> bool:
    for ident in idents:
        vars_ = ident.variables
        for combo in itertools.product(range(P.n), repeat=len(vars_)):
            values = {v: basis[i] for v, i in zip(vars_, combo)}
            memo: dict = {}
            acc = [0] * P.n
            known = True
            for c, t in ident.terms:
                r = _eval(P, t, values, mapping, memo)
                if r is _UNKNOWN:
                    known = False
                    break
                for k, x in enumerate(r):
                    if x:
                        acc[k] += c * x
            if known and any(acc):
                return True
    return False


def _transforms(n: int):
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            yield perm, signs


def _canonical_key(tables: Dict[str, list], order, n, perm, signs):
    # relabel e_i -> s_i e_perm(i); structure constants transform accordingly
    key = []
    inv = [0] * n
    for i, q in enumerate(perm):
        inv[q] = i
    for p in order:
        rows = tables[p]
        for a in range(n):
            for b in range(n):
                i, j = inv[a], inv[b]
                vec = rows[i][j]
                out = [0] * n
                for k, c in enumerate(vec):
                    if c:
                        out[perm[k]] = c * signs[i] * signs[j] * signs[k]
                key.extend(out)
    return tuple(key)


def search_instance(spec: SearchSpec) -> SearchResult:
    """Enumerate algebras of the given variety up to basis relabelling and signs."""
    if not 1 <= spec.dim <= MAX_DIM:
        raise AlgebraError(f"search dimension must be between 1 and {MAX_DIM}")
    vspec = get_variety(spec.variety)
    n, F = spec.dim, spec.field
    coeffs = [F(c) for c in spec.coeffs]
    if len(set(coeffs)) != len(coeffs):
        raise AlgebraError("coefficient set has duplicates")
    symmetric = all((-c) in coeffs for c in coeffs)
    order = list(vspec.products)
    mapping = {p: p for p in order}
    prune_idents = []
    fixed_names = {v for v, _ in vspec.fixed}
    for e in vspec.identities:
        if set(e.variables) & fixed_names:
            continue
        prune_idents.append(e.bind(spec.params) if e.params else e)
    basis = [tuple(F.one if k == i else 0 for k in range(n)) for i in range(n)]
    vectors = list(itertools.product(coeffs, repeat=n))
    # zero vector first so that sparse algebras come out early
    vectors.sort(key=lambda v: (sum(1 for x in v if x), [coeffs.index(x) for x in v]))
    slots = [(p, i, j) for p in order for i in range(n) for j in range(n)]
    P = _Partial(n, order, F)
    found: List[Algebra] = []
    seen_keys = set()
    counters = {"nodes": 0, "candidates": 0}
    transforms = list(_transforms(n)) if symmetric else [(perm, (1,) * n) for perm in itertools.permutations(range(n))]

    class _Stop(Exception):
        pass

    def emit():
        counters["candidates"] += 1
        tables = {p: [list(r) for r in P.tab[p]] for p in order}
        keys = [_canonical_key(tables, order, n, perm, signs) for perm, signs in transforms]
        ident_key = keys[0]
        if min(keys) != ident_key or ident_key in seen_keys:
            return
        seen_keys.add(ident_key)
        entries = {}
        for p in order:
            e = {}
            for i in range(n):
                for j in range(n):
                    for k, c in enumerate(tables[p][i][j]):
                        if c:
                            e[(i, j, k)] = c
            entries[p] = MultTable(n, e)
        A = Algebra(n, entries, F, name=f"{spec.variety}#{len(found)}")
        try:
            ok = check_variety(A, spec.variety, spec.params).holds
        except AlgebraError:
            ok = False
        if not ok:
            return
        if spec.nontrivial and is_trivial(A):
            return
        found.append(A)
        if spec.max_results is not None and len(found) >= spec.max_results:
            raise _Stop

    def rec(idx):
        if counters["nodes"] >= spec.budget:
            raise _Stop
        if idx == len(slots):
            emit()
            return
        p, i, j = slots[idx]
        for vec in vectors:
            counters["nodes"] += 1
            P.tab[p][i][j] = vec
            if not _violates(P, prune_idents, mapping, basis):
                rec(idx + 1)
            if counters["nodes"] >= spec.budget:
                P.tab[p][i][j] = _UNKNOWN
                raise _Stop
        P.tab[p][i][j] = _UNKNOWN

    complete = True
    try:
        rec(0)
    except _Stop:
        complete = False
    return SearchResult(found, complete, counters["candidates"], counters["nodes"])
