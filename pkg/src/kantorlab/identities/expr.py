"""Nonassociative monomials and formal linear combinations of them."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..fields import QQ
from ..poly import Poly

__all__ = [
    "Var",
    "Prod",
    "Term",
    "IdentityExpr",
    "param_symbol",
    "standard_polynomial",
    "left_normed",
]

PARAM_PREFIX = "param_"


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name

    @property
    def degree(self) -> int:
        return 1


@dataclass(frozen=True)
class Prod:
    op: str
    left: "Term"
    right: "Term"

    def __str__(self):
        return f"{self.op}({self.left},{self.right})"

    @property
    def degree(self) -> int:
        return self.left.degree + self.right.degree


Term = Union[Var, Prod]


def leaves(t: Term) -> List[str]:
    if isinstance(t, Var):
        return [t.name]
    return leaves(t.left) + leaves(t.right)


def ops(t: Term) -> set:
    if isinstance(t, Var):
        return set()
    return {t.op} | ops(t.left) | ops(t.right)


def rename(t: Term, mapping: Mapping[str, object]) -> Term:
    """Substitute variables by variable names or whole terms."""
    if isinstance(t, Var):
        new = mapping.get(t.name, t.name)
        return Var(new) if isinstance(new, str) else new
    return Prod(t.op, rename(t.left, mapping), rename(t.right, mapping))


def rename_ops(t: Term, mapping: Mapping[str, str]) -> Term:
    if isinstance(t, Var):
        return t
    return Prod(mapping.get(t.op, t.op), rename_ops(t.left, mapping), rename_ops(t.right, mapping))


def left_normed(op: str, names: Sequence[str]) -> Term:
    t: Term = Var(names[0])
    for n in names[1:]:
        t = Prod(op, t, Var(n))
    return t


def param_symbol(name: str) -> Poly:
    """Coefficient polynomial standing for the parameter ``@name``."""
    return Poly.var(PARAM_PREFIX + name)


def _clean(c):
    if isinstance(c, Poly):
        return QQ(c.constant_value(0)) if c.is_constant() else c
    return QQ(c)


class IdentityExpr:
    """``sum_i c_i * t_i`` where the ``t_i`` are distinct monomials.

    Coefficients are rationals, or polynomials in parameters ``@name`` that
    are bound to scalars before checking.  An identity ``lhs = rhs`` is
    stored as ``lhs - rhs`` (read: ``= 0``).
    """

    __slots__ = ("terms", "variables", "name")

    def __init__(self, terms: Iterable[Tuple[object, Term]], variables: Optional[Sequence[str]] = None,
                 name: str = ""):
        acc: Dict[Term, object] = {}
        for c, t in terms:
            acc[t] = acc.get(t, 0) + c
        self.terms: Tuple[Tuple[object, Term], ...] = tuple(
            (_clean(c), t) for t, c in acc.items() if c
        )
        seen: List[str] = []
        for _, t in self.terms:
            for v in leaves(t):
                if v not in seen:
                    seen.append(v)
        if variables is None:
            variables = seen
        else:
            variables = list(variables)
            missing = [v for v in seen if v not in variables]
            if missing:
                raise ValueError(f"variables {missing} not declared")
        self.variables: Tuple[str, ...] = tuple(variables)
        self.name = name

    # -- structure -------------------------------------------------------------
    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def products(self) -> set:
        out = set()
        for _, t in self.terms:
            out |= ops(t)
        return out

    @property
    def params(self) -> set:
        out = set()
        for c, _ in self.terms:
            if isinstance(c, Poly):
                out |= {v[len(PARAM_PREFIX):] for v in c.variables()}
        return out

    def degrees(self) -> Dict[str, int]:
        """Maximum degree of each variable over the terms."""
        out = {v: 0 for v in self.variables}
        for _, t in self.terms:
            for v, k in Counter(leaves(t)).items():
                out[v] = max(out[v], k)
        return out

    def is_multilinear(self, ignore: Iterable[str] = ()) -> bool:
        """Every (non-ignored) declared variable occurs exactly once in every term."""
        ignore = set(ignore)
        free = [v for v in self.variables if v not in ignore]
        for _, t in self.terms:
            cnt = Counter(x for x in leaves(t) if x not in ignore)
            if any(cnt.get(v, 0) != 1 for v in free) or set(cnt) - set(free):
                return False
        return True

    def degree(self) -> int:
        return max((t.degree for _, t in self.terms), default=0)

    # -- algebra of expressions ----------------------------------------------------
    def __add__(self, other: "IdentityExpr") -> "IdentityExpr":
        vars_ = list(self.variables) + [v for v in other.variables if v not in self.variables]
        return IdentityExpr(list(self.terms) + list(other.terms), vars_)

    def __neg__(self):
        return IdentityExpr([(-c, t) for c, t in self.terms], self.variables, self.name)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k) -> "IdentityExpr":
        return IdentityExpr([(k * c, t) for c, t in self.terms], self.variables, self.name)

    def bind(self, params: Mapping[str, object]) -> "IdentityExpr":
        """Replace parameters by scalars."""
        if not self.params:
            return self
        values = {PARAM_PREFIX + k: v for k, v in params.items()}
        missing = self.params - set(params)
        if missing:
            raise ValueError(f"unbound parameters {sorted(missing)}")
        out = []
        for c, t in self.terms:
            if isinstance(c, Poly):
                c = c.subs(values)
            out.append((c, t))
        return IdentityExpr(out, self.variables, self.name)

    def rename_products(self, mapping: Mapping[str, str]) -> "IdentityExpr":
        return IdentityExpr([(c, rename_ops(t, mapping)) for c, t in self.terms], self.variables, self.name)

    def substitute(self, mapping: Mapping[str, object]) -> "IdentityExpr":
        """Substitute variables by names or terms (e.g. ``x -> m(x, y)``)."""
        new_terms = [(c, rename(t, mapping)) for c, t in self.terms]
        return IdentityExpr(new_terms, None, self.name)

    def coefficient(self, term: Term):
        for c, t in self.terms:
            if t == term:
                return c
        return 0

    def __eq__(self, other):
        if not isinstance(other, IdentityExpr):
            return NotImplemented
        return dict((t, c) for c, t in self.terms) == dict((t, c) for c, t in other.terms) and set(
            self.variables) == set(other.variables)

    def __hash__(self):
        return hash(frozenset((t, c) for c, t in self.terms))

    def __str__(self):
        from .dsl import format_identity

        return format_identity(self)

    def __repr__(self):
        return f"IdentityExpr({str(self)!r})"


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def standard_polynomial(n: int, op: str = "m", prefix: str = "x") -> IdentityExpr:
    """``s_n = sum over permutations of sign * x_s(1) ... x_s(n)``, left-normed."""
    if n < 2:
        raise ValueError("the standard polynomial needs n >= 2")
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    terms = []
    for perm in itertools.permutations(range(n)):
        terms.append((_perm_sign(perm), left_normed(op, [names[i] for i in perm])))
    return IdentityExpr(terms, names, name=f"s{n}")
