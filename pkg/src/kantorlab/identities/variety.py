"""Checking membership in a named variety."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence

from ..algebra import Algebra, AlgebraError
from ..linalg import solve
from ..poly import Poly
from .check import Verdict, check_identity, evaluate_identity, generic_element, resolve_products
from .expr import PARAM_PREFIX, IdentityExpr
from .registry import VarietySpec, get_variety

__all__ = ["VarietyReport", "check_variety", "product_mapping", "fit_parameter", "pick_method"]


@dataclass
class VarietyReport:
    variety: str
    verdicts: List[Verdict]
    mapping: Dict[str, str]

    @property
    def holds(self) -> bool:
        return all(v.holds for v in self.verdicts)

    def __bool__(self):
        return self.holds

    def failures(self) -> List[Verdict]:
        return [v for v in self.verdicts if not v.holds]

    def to_json(self, field) -> dict:
        return {
            "variety": self.variety,
            "holds": self.holds,
            "products": self.mapping,
            "identities": [v.to_json(field) for v in self.verdicts],
        }


def product_mapping(A: Algebra, spec: VarietySpec, products: Optional[Mapping[str, str]] = None) -> Dict[str, str]:
    """Map the variety's product names to products of ``A``.

    Explicit entries win, then equal names; a one-product variety on a
    one-product algebra maps automatically.
    """
    mapping = dict(products or {})
    for p in spec.products:
        if p not in mapping and p in A.products:
            mapping[p] = p
    missing = [p for p in spec.products if p not in mapping]
    if missing:
        if spec.arity == 1 and len(A.products) == 1:
            mapping[spec.products[0]] = A.default_product
        elif spec.arity == 1 and A.default_product and not products:
            raise AlgebraError(
                f"algebra has products {sorted(A.products)}; say which one plays {spec.products[0]!r}")
        else:
            raise AlgebraError(f"variety {spec.name} needs products {list(spec.products)}; "
                               f"algebra has {sorted(A.products)}")
    for q in mapping.values():
        A.table(q)
    return mapping


def pick_method(ident: IdentityExpr, ignore=()) -> str:
    return "basis" if ident.is_multilinear(ignore=ignore) else "generic"


def _fixed_values(A: Algebra, spec: VarietySpec, mapping) -> Dict[str, tuple]:
    out = {}
    for var, kind in spec.fixed:
        if kind != "unit":
            raise AlgebraError(f"unsupported fixed binding {kind!r}")
        # the unit of the first (commutative) product
        unit = A.find_unit(mapping[spec.products[0]])
        if unit is None:
            raise AlgebraError(f"variety {spec.name} needs a unital algebra")
        out[var] = unit
    return out


def check_variety(A: Algebra, name: str, params: Optional[Mapping] = None,
                  products: Optional[Mapping[str, str]] = None, method: str = "auto",
                  seed: int = 0, trials: int = 50) -> VarietyReport:
    spec = get_variety(name)
    params = dict(params or {})
    missing = set(spec.params) - set(params)
    if missing:
        raise AlgebraError(f"variety {name} needs parameters {sorted(missing)}")
    if name == "eps_commutative" and params.get("eps") not in (1, -1):
        raise AlgebraError("eps must be 1 or -1")
    mapping = product_mapping(A, spec, products)
    fixed = _fixed_values(A, spec, mapping)
    verdicts = []
    for ident in spec.identities:
        m = method
        if m == "auto":
            m = pick_method(ident, ignore=fixed)
        v = check_identity(A, ident, m, params=params, products=mapping, fixed=fixed,
                           seed=seed, trials=trials)
        v.identity = f"{ident.name}: {v.identity}"
        verdicts.append(v)
    return VarietyReport(name, verdicts, mapping)


def fit_parameter(A: Algebra, ident: IdentityExpr, param: str,
                  products: Optional[Mapping[str, str]] = None, fixed=None):
    """Scalar value of ``@param`` making ``ident`` hold on ``A``, if any.

    ``ident`` must be affine in the parameter.  The defect on generic
    elements splits as ``D0 + param*D1``; every coefficient of that
    polynomial vector gives one linear equation in the parameter.  Returns
    ``None`` when no value works, and ``"any"`` when every value works.
    """
    pname = PARAM_PREFIX + param
    products = resolve_products(A, ident, products)
    parts: Dict[int, list] = {0: [], 1: []}
    for c, t in ident.terms:
        if not isinstance(c, Poly):
            parts[0].append((c, t))
            continue
        for exps, q in c.items():
            e = exps.get(pname, 0)
            if e > 1 or set(exps) - {pname}:
                raise ValueError(f"identity is not affine in @{param}")
            parts[e].append((q, t))
    fixed = dict(fixed or {})
    values = dict(fixed)
    for v in ident.variables:
        if v not in values:
            values[v] = generic_element(A, v)
    d0 = evaluate_identity(A, IdentityExpr(parts[0], ident.variables), values, products)
    d1 = evaluate_identity(A, IdentityExpr(parts[1], ident.variables), values, products)
    rows, rhs = [], []
    F = A.field
    for a, b in zip(d0, d1):
        pa = a if isinstance(a, Poly) else Poly.const(a)
        pb = b if isinstance(b, Poly) else Poly.const(b)
        for k in set(pa.terms) | set(pb.terms):
            rows.append([pb.terms.get(k, F.zero)])
            rhs.append(-pa.terms.get(k, F.zero))
    if not rows:
        return "any"
    if all(not r[0] for r in rows):
        return "any" if all(not x for x in rhs) else None
    sol = solve(rows, rhs, F)
    return None if sol is None else sol[0]
