"""Full polarization of identities into multilinear ones."""
from __future__ import annotations

import itertools
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

from .expr import IdentityExpr, Prod, Term, Var, leaves

__all__ = ["linearize", "homogeneous_components"]


def homogeneous_components(e: IdentityExpr) -> List[IdentityExpr]:
    """Split by multidegree in the declared variables."""
    groups: Dict[tuple, list] = {}
    for c, t in e.terms:
        cnt = Counter(leaves(t))
        key = tuple(cnt.get(v, 0) for v in e.variables)
        groups.setdefault(key, []).append((c, t))
    return [IdentityExpr(terms, e.variables, e.name) for _, terms in sorted(groups.items())]


def _expand_occurrences(t: Term, name: str, copies: Sequence[str]) -> List[Term]:
    """All terms obtained by replacing each occurrence of ``name`` with one of ``copies``
    such that every copy is used exactly once."""
    k = len(copies)
    out = []
    n_occ = leaves(t).count(name)
    if n_occ != k:
        return []
    for perm in itertools.permutations(copies):
        it = iter(perm)

        def sub(s: Term) -> Term:
            if isinstance(s, Var):
                return Var(next(it)) if s.name == name else s
            left = sub(s.left)
            return Prod(s.op, left, sub(s.right))

        out.append(sub(t))
    return out


def _polarize(e: IdentityExpr, name: str, k: int) -> IdentityExpr:
    copies = [f"{name}{i}" for i in range(1, k + 1)]
    clash = set(copies) & set(e.variables)
    if clash:
        copies = [f"{name}_{i}" for i in range(1, k + 1)]
    new_vars: List[str] = []
    for v in e.variables:
        new_vars.extend(copies if v == name else [v])
    terms = []
    for c, t in e.terms:
        for nt in _expand_occurrences(t, name, copies):
            terms.append((c, nt))
    return IdentityExpr(terms, new_vars, e.name)


def linearize(e: IdentityExpr, characteristic: int = 0) -> List[IdentityExpr]:
    """Multilinear identities jointly equivalent to ``e``.

    Each homogeneous component is polarized in every repeated variable.  Over
    characteristic ``p`` this is only an equivalence when ``p`` exceeds the
    degree of each repeated variable, so smaller characteristics are rejected.
    Components in which some declared variable is absent are kept as they
    are, with the variable dropped (they are identities in fewer variables).
    """
    out: List[IdentityExpr] = []
    for comp in homogeneous_components(e):
        degs = comp.degrees()
        if characteristic:
            worst = max(degs.values(), default=0)
            if worst >= characteristic:
                raise ValueError(
                    f"characteristic {characteristic} too small to linearize a variable of degree {worst}")
        present = [v for v in comp.variables if degs[v] > 0]
        cur = IdentityExpr(comp.terms, present, comp.name)
        for v in present:
            if degs[v] > 1:
                cur = _polarize(cur, v, degs[v])
        if cur.terms and cur not in out:
            out.append(cur)
    return out
