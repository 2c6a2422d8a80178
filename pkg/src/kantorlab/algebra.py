"""Finite-dimensional algebras given by structure constants.

An element is a plain tuple of coordinates.  Coordinates (and structure
constants) are field scalars or :class:`~kantorlab.poly.Poly` values; the
same multiplication routine serves both, which is what lets identity checks
run on fully generic elements.
"""
from __future__ import annotations

import json
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .fields import Field, QQ, field_from_json
from .linalg import RowReducer, Subspace, solve
from .poly import Poly, addmul_into, parse_poly

__all__ = [
    "MultTable",
    "Algebra",
    "AlgebraError",
    "vec_add",
    "vec_sub",
    "vec_scale",
    "is_zero_vec",
    "normalize",
]


class AlgebraError(ValueError):
    pass


def normalize(x, field: Field):
    """Canonical form of a coordinate: constant polynomials become scalars."""
    if isinstance(x, Poly):
        if x.is_constant():
            return field(x.constant_value(field.zero))
        return x
    return field(x)


def vec_add(a: Sequence, b: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Sequence, b: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c, a: Sequence) -> tuple:
    return tuple(c * x for x in a)


def is_zero_vec(a: Sequence) -> bool:
    return not any(a)


class MultTable:
    """Structure constants ``e_i e_j = sum_k c[i][j][k] e_k`` stored sparsely."""

    __slots__ = ("n", "entries", "rows", "has_poly")

    def __init__(self, n: int, entries: Mapping[Tuple[int, int, int], object] | None = None):
        self.n = n
        table: Dict[Tuple[int, int], Dict[int, object]] = {}
        has_poly = False
        for (i, j, k), c in (entries or {}).items():
            for idx in (i, j, k):
                if not 0 <= idx < n:
                    raise AlgebraError(f"index {idx} out of range for dimension {n}")
            if not c:
                continue
            if isinstance(c, Poly):
                has_poly = True
            table.setdefault((i, j), {})[k] = c
        self.entries = table
        self.has_poly = has_poly
        rows: List[list] = [[] for _ in range(n)]
        for (i, j) in sorted(table):
            rows[i].append((j, tuple(sorted(table[(i, j)].items()))))
        self.rows = rows

    @classmethod
    def from_products(cls, n: int, products: Mapping[Tuple[int, int], Sequence]) -> "MultTable":
        """Build from ``(i, j) -> coordinate vector of e_i e_j``."""
        entries = {}
        for (i, j), vec in products.items():
            for k, c in enumerate(vec):
                if c:
                    entries[(i, j, k)] = c
        return cls(n, entries)

    def triples(self):
        for (i, j) in sorted(self.entries):
            for k, c in sorted(self.entries[(i, j)].items()):
                yield i, j, k, c

    def coeff(self, i, j, k, zero=0):
        return self.entries.get((i, j), {}).get(k, zero)

    def product_vector(self, i: int, j: int, field: Field) -> tuple:
        row = self.entries.get((i, j), {})
        return tuple(row.get(k, field.zero) for k in range(self.n))

    def is_zero(self) -> bool:
        return not self.entries

    def transpose(self) -> "MultTable":
        return MultTable(self.n, {(j, i, k): c for i, j, k, c in self.triples()})

    def combine(self, a, other: "MultTable", b) -> "MultTable":
        """``a * self + b * other`` entrywise."""
        acc: Dict[Tuple[int, int, int], object] = {}
        for i, j, k, c in self.triples():
            acc[(i, j, k)] = a * c
        for i, j, k, c in other.triples():
            acc[(i, j, k)] = acc.get((i, j, k), 0) + b * c
        return MultTable(self.n, acc)

    def __eq__(self, other):
        if not isinstance(other, MultTable):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash((self.n, tuple(self.triples())))

    def __repr__(self):
        return f"MultTable(n={self.n}, nonzero={sum(len(r) for r in self.entries.values())})"


class Algebra:
    """Vector space ``field^dim`` with one or more named bilinear products."""

    def __init__(
        self,
        dim: int,
        products: Mapping[str, MultTable],
        field: Field = QQ,
        labels: Optional[Sequence[str]] = None,
        name: str = "",
    ):
        if dim < 1:
            raise AlgebraError("dimension must be positive")
        if not products:
            raise AlgebraError("an algebra needs at least one product")
        for pname, t in products.items():
            if t.n != dim:
                raise AlgebraError(f"product {pname!r} has dimension {t.n}, expected {dim}")
            for _, _, _, c in t.triples():
                if not isinstance(c, Poly) and not field.contains(field(c)):
                    raise AlgebraError(f"coefficient {c!r} not in {field!r}")
        self.dim = dim
        self.field = field
        self.products: Dict[str, MultTable] = dict(products)
        if labels is not None and len(labels) != dim:
            raise AlgebraError("one label per basis vector required")
        self.labels = tuple(labels) if labels else tuple(f"e{i}" for i in range(dim))
        self.name = name

    # -- basic access -----------------------------------------------------
    def table(self, product: str) -> MultTable:
        try:
            return self.products[product]
        except KeyError:
            raise AlgebraError(f"unknown product {product!r}; have {sorted(self.products)}") from None

    @property
    def product_names(self) -> List[str]:
        return list(self.products)

    @property
    def default_product(self) -> str:
        return next(iter(self.products))

    @property
    def is_polynomial(self) -> bool:
        return any(t.has_poly for t in self.products.values())

    def zero(self) -> tuple:
        return (self.field.zero,) * self.dim

    def basis(self, i: int) -> tuple:
        z, o = self.field.zero, self.field.one
        return tuple(o if k == i else z for k in range(self.dim))

    def basis_vectors(self) -> List[tuple]:
        return [self.basis(i) for i in range(self.dim)]

    def element(self, coords: Iterable) -> tuple:
        v = tuple(self.field(c) if not isinstance(c, Poly) else c for c in coords)
        if len(v) != self.dim:
            raise AlgebraError(f"expected {self.dim} coordinates, got {len(v)}")
        return v

    def index(self, label: str) -> int:
        return self.labels.index(label)

    # -- multiplication -----------------------------------------------------
    def multiply(self, product: str, x: Sequence, y: Sequence) -> tuple:
        t = self.table(product)
        if len(x) != self.dim or len(y) != self.dim:
            raise AlgebraError("element dimension mismatch")
        if t.has_poly or any(isinstance(v, Poly) for v in x) or any(isinstance(v, Poly) for v in y):
            return self._multiply_poly(t, x, y)
        F = self.field
        out = [0] * self.dim
        rows = t.rows
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, terms in rows[i]:
                yj = y[j]
                if not yj:
                    continue
                s = xi * yj
                for k, c in terms:
                    out[k] = out[k] + s * c
        return tuple(F(v) for v in out)

    def _multiply_poly(self, t: MultTable, x, y) -> tuple:
        F = self.field
        acc = [dict() for _ in range(self.dim)]
        xt = [Poly._terms_of(v) for v in x]
        yt = [Poly._terms_of(v) for v in y]
        for i, xi in enumerate(xt):
            if not xi:
                continue
            for j, terms in t.rows[i]:
                yj = yt[j]
                if not yj:
                    continue
                s: dict = {}
                addmul_into(s, xi, yj)
                if not s:
                    continue
                for k, c in terms:
                    addmul_into(acc[k], s, Poly._terms_of(c))
        return tuple(normalize(Poly._raw(a), F) for a in acc)

    def mul(self, product: str, x, y) -> tuple:
        return self.multiply(product, x, y)

    def left_operator(self, product: str, x: Sequence) -> List[tuple]:
        """Matrix of ``y -> x y`` (acting on column vectors)."""
        cols = [self.multiply(product, x, e) for e in self.basis_vectors()]
        return [tuple(col[r] for col in cols) for r in range(self.dim)]

    def right_operator(self, product: str, x: Sequence) -> List[tuple]:
        """Matrix of ``y -> y x``."""
        cols = [self.multiply(product, e, x) for e in self.basis_vectors()]
        return [tuple(col[r] for col in cols) for r in range(self.dim)]

    def subspace_product(self, product: str, U: Subspace, W: Subspace) -> Subspace:
        if U.n != self.dim or W.n != self.dim:
            raise AlgebraError("ambient dimension mismatch")
        if self.table(product).has_poly:
            raise AlgebraError("subspace products need scalar structure constants")
        vecs = [self.multiply(product, u, w) for u in U.basis for w in W.basis]
        return Subspace(self.dim, vecs, self.field)

    def find_unit(self, product: Optional[str] = None) -> Optional[tuple]:
        """Two-sided unit, found by solving the ``2 n^2`` linear conditions."""
        product = product or self.default_product
        t = self.table(product)
        if t.has_poly:
            raise AlgebraError("unit detection needs scalar structure constants")
        n, F = self.dim, self.field
        rows, rhs = [], []
        for j in range(n):
            for k in range(n):
                target = F.one if j == k else F.zero
                # e . e_j = e_j  and  e_j . e = e_j
                rows.append([t.coeff(i, j, k, F.zero) for i in range(n)])
                rhs.append(target)
                rows.append([t.coeff(j, i, k, F.zero) for i in range(n)])
                rhs.append(target)
        sol = solve(rows, rhs, F)
        return None if sol is None else tuple(F(v) for v in sol)

    def invert_element(self, product: Optional[str], x: Sequence) -> Optional[tuple]:
        """Two-sided inverse of ``x`` or None.  Requires a unit."""
        product = product or self.default_product
        one = self.find_unit(product)
        if one is None:
            raise AlgebraError("inverse requested in a non-unital algebra")
        L = self.left_operator(product, x)
        R = self.right_operator(product, x)
        sol = solve(list(L) + list(R), list(one) + list(one), self.field)
        if sol is None:
            return None
        sol = tuple(self.field(v) for v in sol)
        if self.multiply(product, x, sol) != one or self.multiply(product, sol, x) != one:
            return None
        return sol

    # -- derived algebras -----------------------------------------------------
    def with_products(self, products: Mapping[str, MultTable], name: str = "") -> "Algebra":
        return Algebra(self.dim, products, self.field, self.labels, name or self.name)

    def single(self, product: str, new_name: str = "m") -> "Algebra":
        """The one-product algebra ``(A, product)`` with the product renamed."""
        return self.with_products({new_name: self.table(product)})

    def specialize(self, values: Mapping[str, object]) -> "Algebra":
        """Substitute scalars for indeterminates in polynomial structure constants."""
        prods = {}
        for pname, t in self.products.items():
            entries = {}
            for i, j, k, c in t.triples():
                if isinstance(c, Poly):
                    c = normalize(c.subs(values), self.field)
                entries[(i, j, k)] = c
            prods[pname] = MultTable(self.dim, entries)
        return self.with_products(prods)

    def indeterminates(self) -> set:
        names = set()
        for t in self.products.values():
            for _, _, _, c in t.triples():
                if isinstance(c, Poly):
                    names |= c.variables()
        return names

    # -- serialisation -----------------------------------------------------------
    def _fmt(self, c) -> str:
        if isinstance(c, Poly):
            return str(c)
        return self.field.format(c)

    def to_json(self) -> dict:
        data = {
            "dim": self.dim,
            "field": self.field.to_json(),
            "products": {
                p: [[i, j, k, self._fmt(c)] for i, j, k, c in t.triples()] for p, t in self.products.items()
            },
            "labels": list(self.labels),
        }
        if self.name:
            data["name"] = self.name
        return data

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def from_json(cls, data: Mapping) -> "Algebra":
        try:
            dim = int(data["dim"])
            field = field_from_json(data.get("field", {"type": "rational"}))
            raw = data["products"]
        except (KeyError, TypeError, ValueError) as exc:
            raise AlgebraError(f"malformed algebra JSON: {exc}") from exc
        products = {}
        for pname, triples in raw.items():
            entries = {}
            for item in triples:
                if len(item) != 4:
                    raise AlgebraError(f"bad triple {item!r} in product {pname!r}")
                i, j, k, c = item
                key = (int(i), int(j), int(k))
                if key in entries:
                    raise AlgebraError(f"duplicate entry {key} in product {pname!r}")
                entries[key] = _parse_coeff(c, field)
            products[pname] = MultTable(dim, entries)
        return cls(dim, products, field, data.get("labels"), data.get("name", ""))

    @classmethod
    def loads(cls, text: str) -> "Algebra":
        return cls.from_json(json.loads(text))

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (self.dim, self.field, self.products) == (other.dim, other.field, other.products)

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<Algebra{label} dim={self.dim} over {self.field!r} products={self.product_names}>"


def _parse_coeff(c, field: Field):
    if isinstance(c, (int,)) and not isinstance(c, bool):
        return field(c)
    if not isinstance(c, str):
        raise AlgebraError(f"coefficient must be a string or integer, got {c!r}")
    text = c.strip()
    stripped = text.replace("mod", "")
    if any(ch.isalpha() for ch in stripped):
        return parse_poly(text, field)
    try:
        return field.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise AlgebraError(str(exc)) from exc
