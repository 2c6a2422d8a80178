"""Mining multilinear identities satisfied by a family of algebras.

For degree ``d`` the multilinear monomials in ``x1..xd`` (all bracketings,
all orders of the variables, all labellings of the products) span the
multilinear part of the free algebra.  Evaluating every monomial on every
tuple of basis vectors of every sample gives a matrix whose kernel is the
space of degree-``d`` multilinear identities common to all samples.
"""
from __future__ import annotations

import itertools
import random as _random
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .algebra import Algebra, AlgebraError
from .identities.check import basis_tensor, check_identity
from .identities.expr import IdentityExpr, Prod, Term, Var
from .kantor import kantor_product_algebra
from .linalg import RowReducer, Subspace
from .poly import Poly

__all__ = [
    "monomial_basis",
    "MinedSpace",
    "mine",
    "cross_check",
    "CrossCheckReport",
    "default_seeds",
    "kantor_samples",
]

MAX_DEGREE = 5


@lru_cache(maxsize=None)
def _shapes(d: int) -> Tuple[object, ...]:
    """Bracketing shapes with ``d`` leaves; a shape is ``None`` (leaf) or a pair."""
    if d == 1:
        return (None,)
    out = []
    for k in range(1, d):
        for left in _shapes(k):
            for right in _shapes(d - k):
                out.append((left, right))
    return tuple(out)


def _fill(shape, leaves, labels):
    """Build a term from a shape, consuming leaves and product labels in order."""
    if shape is None:
        return Var(next(leaves))
    left = _fill(shape[0], leaves, labels)
    op = next(labels)
    right = _fill(shape[1], leaves, labels)
    return Prod(op, left, right)


def monomial_basis(d: int, products: Sequence[str] = ("m",), prefix: str = "x") -> List[Term]:
    """All multilinear monomials of degree ``d`` in ``x1..xd``.

    Ordered by bracketing shape, then permutation of the variables, then the
    assignment of products to the internal nodes (in-order).
    """
    if not 2 <= d <= MAX_DEGREE:
        raise AlgebraError(f"degree must be between 2 and {MAX_DEGREE}")
    names = [f"{prefix}{i}" for i in range(1, d + 1)]
    out = []
    for shape in _shapes(d):
        for perm in itertools.permutations(names):
            for labels in itertools.product(products, repeat=d - 1):
                out.append(_fill(shape, iter(perm), iter(labels)))
    return out


@dataclass
class MinedSpace:
    degree: int
    products: Tuple[str, ...]
    monomials: List[Term]
    space: Subspace
    rows: int

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def rank(self) -> int:
        return len(self.monomials) - self.space.dim

    def vector_of(self, ident: IdentityExpr) -> tuple:
        """Coefficient vector of a multilinear identity in this basis."""
        index = {t: i for i, t in enumerate(self.monomials)}
        v = [0] * len(self.monomials)
        for c, t in ident.terms:
            if t not in index:
                raise AlgebraError(f"monomial {t} is not in the degree-{self.degree} basis")
            v[index[t]] = c
        return tuple(v)

    def contains(self, ident: IdentityExpr) -> bool:
        return self.space.contains(self.vector_of(ident))

    def identity(self, vec: Sequence) -> IdentityExpr:
        names = [f"x{i}" for i in range(1, self.degree + 1)]
        return IdentityExpr([(c, t) for c, t in zip(vec, self.monomials) if c], names)

    def identities(self) -> List[IdentityExpr]:
        return [self.identity(v) for v in self.space.basis]


Sample = Tuple[Algebra, Mapping[str, str]]


def _as_sample(s) -> Sample:
    if isinstance(s, Algebra):
        if len(s.products) != 1:
            raise AlgebraError("a multi-product sample needs an explicit product mapping")
        return s, None
    A, mapping = s
    if isinstance(mapping, str):
        mapping = {"m": mapping}
    return A, mapping


def mine(samples: Sequence, d: int, products: Sequence[str] = ("m",)) -> MinedSpace:
    """Space of degree-``d`` multilinear identities holding on every sample.

    A sample is an :class:`Algebra` with one product, or ``(algebra,
    mapping)`` where ``mapping`` sends the mined product names to the
    algebra's products.  Samples may have polynomial tables; an identity
    must then hold for every value of the indeterminates.
    """
    if not samples:
        raise AlgebraError("mining needs at least one sample")
    products = tuple(products)
    monos = monomial_basis(d, products)
    order = [f"x{i}" for i in range(1, d + 1)]
    field = None
    red: Optional[RowReducer] = None
    nrows = 0
    for s in samples:
        A, mapping = _as_sample(s)
        if mapping is None:
            mapping = {products[0]: A.default_product} if len(products) == 1 else {p: p for p in products}
        if field is None:
            field = A.field
            red = RowReducer(len(monos), field)
        elif A.field != field:
            raise AlgebraError("samples over different fields")
        memo: dict = {}
        rows_cache: dict = {}
        rows: Dict[tuple, dict] = {}
        for col, t in enumerate(monos):
            _, table = basis_tensor(A, t, order, mapping, memo=memo, rows_cache=rows_cache)
            for key, vec in table.items():
                for k, x in vec.items():
                    if isinstance(x, Poly):
                        for m, q in x.terms.items():
                            rows.setdefault((key, k, m), {})[col] = q
                    else:
                        rows.setdefault((key, k, 0), {})[col] = x
        for key in sorted(rows):
            nrows += 1
            red.add(rows[key])
            if red.rank == len(monos):
                break
    space = Subspace(len(monos), red.kernel(), field)
    return MinedSpace(d, products, monos, space, nrows)


@dataclass
class CrossCheckReport:
    survivors: List[IdentityExpr]
    casualties: List[Tuple[IdentityExpr, int]]   # (identity, index of first refuting sample)

    def to_json(self) -> dict:
        return {
            "survivors": [str(e) for e in self.survivors],
            "casualties": [{"identity": str(e), "sample": i} for e, i in self.casualties],
        }


def cross_check(identities: Sequence[IdentityExpr], samples: Sequence) -> CrossCheckReport:
    """Re-verify mined identities on samples not used for mining."""
    survivors, casualties = [], []
    for ident in identities:
        refuted = None
        for idx, s in enumerate(samples):
            A, mapping = _as_sample(s)
            if not ident.terms:
                continue
            if not check_identity(A, ident, "basis", products=mapping).holds:
                refuted = idx
                break
        if refuted is None:
            survivors.append(ident)
        else:
            casualties.append((ident, refuted))
    return CrossCheckReport(survivors, casualties)


def default_seeds(A: Algebra, count: int = 3, seed: int = 0, bound: int = 3) -> List[tuple]:
    """All basis vectors followed by ``count`` pseudorandom small-integer seeds."""
    rng = _random.Random(seed)
    seeds = A.basis_vectors()
    for _ in range(count):
        seeds.append(tuple(A.field.random(rng, bound) for _ in range(A.dim)))
    return seeds


def kantor_samples(A: Algebra, seeds: Sequence[Sequence], pA: Optional[str] = None,
                   pB: Optional[str] = None) -> List[Algebra]:
    pA = pA or A.default_product
    pB = pB or pA
    return [kantor_product_algebra(A, pA, pB, u, allow_generic=True) for u in seeds]
