"""Exact row reduction, kernels, linear solving and coordinate subspaces."""
from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

from .fields import Field, QQ

__all__ = [
    "rref",
    "rank",
    "nullspace",
    "solve",
    "RowReducer",
    "Subspace",
    "mat_mul",
    "mat_vec",
    "identity_matrix",
    "transpose",
    "inverse",
]

Vector = Tuple
Matrix = Sequence[Sequence]


class RowReducer:
    """Incrementally maintained reduced row-echelon basis.

    Rows are sparse dicts ``column -> value``; every pivot column occurs in
    exactly one stored row (with value 1), so reducing a new row against the
    basis needs one pass over its pivot entries.
    """

    def __init__(self, ncols: int, field: Field = QQ):
        self.ncols = ncols
        self.field = field
        self.rows: dict = {}  # pivot column -> sparse row

    def reduce(self, row: dict) -> dict:
        v = {c: x for c, x in row.items() if x}
        for col in sorted(c for c in v if c in self.rows):
            coef = v.get(col)
            if not coef:
                continue
            for c, x in self.rows[col].items():
                nv = v.get(c, 0) - coef * x
                if nv:
                    v[c] = nv
                else:
                    v.pop(c, None)
        return v

    def add(self, row) -> bool:
        """Insert a row (dict or dense sequence); True if the rank grew."""
        if not isinstance(row, dict):
            row = {i: x for i, x in enumerate(row) if x}
        v = self.reduce(row)
        if not v:
            return False
        piv = min(v)
        inv = self.field.inv(v[piv])
        v = {c: self.field(x * inv) for c, x in v.items()}
        for p, r in self.rows.items():
            coef = r.get(piv)
            if coef:
                for c, x in v.items():
                    nv = r.get(c, 0) - coef * x
                    if nv:
                        r[c] = self.field(nv)
                    else:
                        r.pop(c, None)
        self.rows[piv] = v
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def dense_rows(self) -> List[tuple]:
        zero = self.field.zero
        out = []
        for p in self.pivots():
            r = self.rows[p]
            out.append(tuple(r.get(c, zero) for c in range(self.ncols)))
        return out

    def kernel(self) -> List[tuple]:
        """Basis of ``{x : row . x = 0 for every stored row}``."""
        zero, one = self.field.zero, self.field.one
        pivots = self.rows
        out = []
        for f in range(self.ncols):
            if f in pivots:
                continue
            v = [zero] * self.ncols
            v[f] = one
            for p, r in pivots.items():
                x = r.get(f)
                if x:
                    v[p] = self.field(-x)
            out.append(tuple(v))
        return out


def rref(m: Matrix, field: Field = QQ) -> Tuple[List[tuple], List[int]]:
    """Reduced row-echelon form (same shape as ``m``) and pivot columns."""
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rows = [[field(x) for x in r] for r in m]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field(x * inv) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [field(a - f * b) for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [tuple(x) for x in rows], pivots


def rank(m: Matrix, field: Field = QQ) -> int:
    red = RowReducer(len(m[0]) if m else 0, field)
    for row in m:
        red.add(row)
    return red.rank


def nullspace(m: Matrix, field: Field = QQ, ncols: Optional[int] = None) -> "Subspace":
    """``{x : m x = 0}`` as a subspace of ``field^cols``."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    red = RowReducer(ncols, field)
    for row in m:
        red.add(row)
    return Subspace(ncols, red.kernel(), field)


def solve(m: Matrix, rhs: Sequence, field: Field = QQ) -> Optional[tuple]:
    """One solution of ``m x = rhs`` (free variables set to zero), or None."""
    ncols = len(m[0]) if m else 0
    aug = [list(row) + [b] for row, b in zip(m, rhs)]
    red = RowReducer(ncols + 1, field)
    for row in aug:
        red.add(row)
    if ncols in red.rows:
        return None
    x = [field.zero] * ncols
    for p, r in red.rows.items():
        x[p] = field(r.get(ncols, field.zero))
    return tuple(x)


def mat_mul(a: Matrix, b: Matrix, field: Field = QQ) -> List[tuple]:
    cols = list(zip(*b))
    return [tuple(field(sum((x * y for x, y in zip(row, col)), field.zero)) for col in cols) for row in a]


def mat_vec(a: Matrix, v: Sequence) -> tuple:
    out = []
    for row in a:
        s = 0
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s)
    return tuple(out)


def identity_matrix(n: int, field: Field = QQ) -> List[tuple]:
    return [tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)]


def transpose(a: Matrix) -> List[tuple]:
    return [tuple(c) for c in zip(*a)]


def inverse(a: Matrix, field: Field = QQ) -> Optional[List[tuple]]:
    n = len(a)
    aug = [list(row) + list(e) for row, e in zip(a, identity_matrix(n, field))]
    red, piv = rref(aug, field)
    if piv[:n] != list(range(n)):
        return None
    return [tuple(r[n:]) for r in red[:n]]


class Subspace:
    """Subspace of ``field^n`` stored as its reduced row-echelon basis."""

    __slots__ = ("n", "field", "basis", "pivots")

    def __init__(self, n: int, vectors: Iterable[Sequence] = (), field: Field = QQ):
        red = RowReducer(n, field)
        for v in vectors:
            if len(v) != n:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {n}")
            red.add(v)
        self.n = n
        self.field = field
        self.basis = tuple(red.dense_rows())
        self.pivots = tuple(red.pivots())

    @classmethod
    def span(cls, n: int, vectors: Iterable[Sequence], field: Field = QQ) -> "Subspace":
        return cls(n, vectors, field)

    @classmethod
    def zero(cls, n: int, field: Field = QQ) -> "Subspace":
        return cls(n, (), field)

    @classmethod
    def full(cls, n: int, field: Field = QQ) -> "Subspace":
        return cls(n, identity_matrix(n, field), field)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.n

    def _check(self, other: "Subspace"):
        if other.n != self.n:
            raise ValueError(f"ambient dimension mismatch: {self.n} vs {other.n}")

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.n:
            raise ValueError("ambient dimension mismatch")
        red = RowReducer(self.n, self.field)
        for p, row in zip(self.pivots, self.basis):
            red.rows[p] = {c: x for c, x in enumerate(row) if x}
        return not red.reduce({i: x for i, x in enumerate(v) if x})

    def __contains__(self, v):
        return self.contains(v)

    def issubspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.basis)

    def __le__(self, other):
        return self.issubspace(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.n, list(self.basis) + list(other.basis), self.field)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        k = self.dim
        if k == 0 or other.dim == 0:
            return Subspace.zero(self.n, self.field)
        # columns: basis of self, then negated basis of other
        cols = list(self.basis) + [tuple(-x for x in v) for v in other.basis]
        m = transpose(cols)
        ker = nullspace(m, self.field, ncols=len(cols))
        vecs = []
        for coeffs in ker.basis:
            v = [self.field.zero] * self.n
            for a, b in zip(coeffs[:k], self.basis):
                if a:
                    v = [x + a * y for x, y in zip(v, b)]
            vecs.append(v)
        return Subspace(self.n, vecs, self.field)

    __and__ = intersect

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, self.basis))

    def __repr__(self):
        return f"Subspace(n={self.n}, dim={self.dim})"

    def to_json(self) -> dict:
        return {"ambient": self.n, "basis": [[self.field.format(x) for x in v] for v in self.basis]}
