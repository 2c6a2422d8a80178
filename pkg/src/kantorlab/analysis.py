"""Structural computations on structure-constant algebras.

Power series and nilpotency indices, ideals, Jacobi space, derivations,
automorphisms, annihilators, the skew-field isomorphism ``a -> -a u^-1``,
and the octonion computations (g-triples, the seed system, operator
identities).

Tables with polynomial coefficients (generic seeds) are supported wherever
a statement "for all u" is meant: a linear condition with polynomial
coefficients holds for all u iff it holds for every u-monomial separately.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Algebra, AlgebraError, MultTable, normalize
from .fields import Field
from .identities.variety import check_variety
from .kantor import generic_seed, kantor_square, kantor_square_algebra
from .linalg import RowReducer, Subspace, inverse, mat_mul, nullspace, transpose
from .poly import Poly

__all__ = [
    "SeriesReport",
    "power_series",
    "is_ideal",
    "jacobi_space",
    "derivation_space",
    "check_automorphism",
    "annihilators",
    "fingerprint",
    "skewfield_isomorphism",
    "GTriple",
    "g_triples",
    "alt_seed_system",
    "probe_alternative_seed",
    "operator_identity_check",
    "conjugation",
]


# ---------------------------------------------------------------------------
# helpers for polynomial coordinates

def _components(vec: Sequence) -> Dict[int, list]:
    """Split a vector with polynomial coordinates by monomial.

    Returns ``packed monomial -> scalar vector``; scalar vectors come back
    under the key 0.
    """
    n = len(vec)
    out: Dict[int, list] = {}
    for k, c in enumerate(vec):
        if not c:
            continue
        if isinstance(c, Poly):
            for m, q in c.terms.items():
                out.setdefault(m, [0] * n)[k] = q
        else:
            out.setdefault(0, [0] * n)[k] = c
    return out


class _FlatSpan:
    """Span over the ground field of vectors with polynomial coordinates.

    Each vector is flattened to its (coordinate, monomial) coefficients.
    Generators that enlarged the span are kept for further products.
    """

    def __init__(self, n: int, field: Field):
        self.n = n
        self.field = field
        self.cols: Dict[Tuple[int, int], int] = {}
        self.red = RowReducer(0, field)
        self.gens: List[tuple] = []

    def _flat(self, vec) -> dict:
        row = {}
        for k, c in enumerate(vec):
            if not c:
                continue
            terms = c.terms.items() if isinstance(c, Poly) else [(0, c)]
            for m, q in terms:
                key = (k, m)
                col = self.cols.get(key)
                if col is None:
                    col = self.cols[key] = len(self.cols)
                row[col] = q
        return row

    def add(self, vec) -> bool:
        if self.red.add(self._flat(vec)):
            self.gens.append(tuple(vec))
            return True
        return False

    @property
    def dim(self) -> int:
        return self.red.rank

    def is_zero(self) -> bool:
        return self.red.rank == 0


# ---------------------------------------------------------------------------
# power series

@dataclass
class SeriesReport:
    kind: str
    dims: List[int]
    index: Optional[int]
    stabilized: bool = False
    note: str = ""

    @property
    def terminates(self) -> bool:
        return self.index is not None

    def to_json(self) -> dict:
        return {"kind": self.kind, "dims": self.dims, "index": self.index,
                "stabilized": self.stabilized, "note": self.note}


_KINDS = ("nilpotent", "right", "left", "derived")


def power_series(A: Algebra, p: Optional[str] = None, kind: str = "nilpotent",
                 bound: Optional[int] = None) -> SeriesReport:
    """Nilpotent, right, left or derived series and the index where it vanishes.

    ``nilpotent``: ``A^1 = A``, ``A^k = sum_{i+j=k} A^i A^j``; index = least
    ``k`` with ``A^k = 0``.  ``right``: ``A^[k+1] = A^[k] A``; ``left`` the
    mirror.  ``derived``: ``A^(0) = A``, ``A^(k+1) = A^(k) A^(k)``; index =
    least ``k`` with ``A^(k) = 0``.

    A finite-dimensional algebra with one of these properties reaches zero
    within ``dim + 1`` steps, which is the default bound.  For polynomial
    tables (generic seed) the terms are spans over the ground field of
    vectors with polynomial coordinates; dims then count independent
    coefficient vectors rather than subspace dimensions of ``A``.
    """
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}")
    p = p or A.default_product
    n = A.dim
    bound = bound or n + 1
    mul = lambda x, y: A.multiply(p, x, y)

    def span_of(vectors):
        s = _FlatSpan(n, A.field)
        for v in vectors:
            if any(v):
                s.add(v)
        return s

    base = span_of(A.basis_vectors())
    terms: Dict[int, _FlatSpan] = {1: base}
    dims = [base.dim]
    if kind == "derived":
        dims = [base.dim]
        cur = base
        for step in range(1, bound + 1):
            nxt = span_of(mul(a, b) for a in cur.gens for b in cur.gens)
            dims.append(nxt.dim)
            if nxt.is_zero():
                return SeriesReport(kind, dims, step)
            if nxt.dim == cur.dim:
                return SeriesReport(kind, dims, None, True, "chain stabilized at a nonzero term")
            cur = nxt
        return SeriesReport(kind, dims, None, False, f"no zero term within {bound} steps")

    if base.is_zero():
        return SeriesReport(kind, dims, 1)
    for k in range(2, bound + 2):
        if kind == "nilpotent":
            vecs = (mul(a, b) for i in range(1, k) for a in terms[i].gens for b in terms[k - i].gens)
        elif kind == "right":
            vecs = (mul(a, b) for a in terms[k - 1].gens for b in base.gens)
        else:
            vecs = (mul(b, a) for a in terms[k - 1].gens for b in base.gens)
        cur = span_of(vecs)
        terms[k] = cur
        dims.append(cur.dim)
        if cur.is_zero():
            return SeriesReport(kind, dims, k)
        if kind != "nilpotent" and cur.dim == terms[k - 1].dim:
            return SeriesReport(kind, dims, None, True, "chain stabilized at a nonzero term")
    return SeriesReport(kind, dims, None, False, f"no zero term within {bound + 1} steps")


# ---------------------------------------------------------------------------
# ideals, annihilators, Jacobi space

def _in_subspace(S: Subspace, vec) -> bool:
    return all(S.contains(tuple(v)) for v in _components(vec).values())


def is_ideal(A: Algebra, p: Optional[str], S: Subspace):
    """``(True, None)`` if ``A S + S A`` lies in ``S``; else ``(False, witness)``.

    The witness is ``(side, basis index of A, index into S.basis, product)``.
    With a polynomial table the inclusion must hold for every seed.
    """
    p = p or A.default_product
    if S.n != A.dim:
        raise AlgebraError("ambient dimension mismatch")
    for si, s in enumerate(S.basis):
        for i, e in enumerate(A.basis_vectors()):
            for side, prod in (("left", A.multiply(p, e, s)), ("right", A.multiply(p, s, e))):
                if any(prod) and not _in_subspace(S, prod):
                    return False, (side, i, si, prod)
    return True, None


def _kernel_of_linear_map(images_by_var: List[Sequence], ncols: int, field) -> Subspace:
    """Kernel of ``a -> sum_l a_l * images_by_var[l]`` (images may be polynomial)."""
    rows: Dict[tuple, list] = {}
    for l, img in enumerate(images_by_var):
        for pos, c in enumerate(img):
            if not c:
                continue
            terms = c.terms.items() if isinstance(c, Poly) else [(0, c)]
            for m, q in terms:
                rows.setdefault((pos, m), [0] * ncols)[l] = q
    return nullspace(list(rows.values()), field, ncols=ncols)


def annihilators(A: Algebra, p: Optional[str] = None):
    """Left, right and two-sided annihilators ``{x : xA = 0}``, ``{x : Ax = 0}``."""
    p = p or A.default_product
    n, F = A.dim, A.field
    basis = A.basis_vectors()
    left_imgs = [sum((A.multiply(p, e, f) for f in basis), ()) for e in basis]
    right_imgs = [sum((A.multiply(p, f, e) for f in basis), ()) for e in basis]
    left = _kernel_of_linear_map(left_imgs, n, F)
    right = _kernel_of_linear_map(right_imgs, n, F)
    return left, right, left & right


def jacobi_space(A: Algebra, p: Optional[str] = None) -> Subspace:
    """``{a : a(xy) = (ax)y + x(ay) for all x, y}``.

    The defect of ``a`` is the Kantor square table with seed ``a``, so the
    Jacobi space is the kernel of the (linear) seed-to-table map.
    """
    p = p or A.default_product
    n = A.dim
    imgs = []
    for l in range(n):
        t = kantor_square(A, p, A.basis(l))
        imgs.append(tuple(t.coeff(i, j, k) for i in range(n) for j in range(n) for k in range(n)))
    return _kernel_of_linear_map(imgs, n, A.field)


# ---------------------------------------------------------------------------
# derivations and automorphisms

def derivation_space(tables: Sequence[MultTable], n: int, field) -> Subspace:
    """Linear maps ``D`` with ``D(xy) = D(x)y + xD(y)`` for every given table.

    ``D`` is flattened row-major (``D[a][b]`` at ``a*n + b``; ``D`` acts on
    column vectors).  Polynomial tables impose their condition for every
    value of the indeterminates.
    """
    N = n * n
    rows: Dict[tuple, list] = {}

    def add(key, var, coeff):
        if not coeff:
            return
        terms = coeff.terms.items() if isinstance(coeff, Poly) else [(0, coeff)]
        for m, q in terms:
            row = rows.setdefault(key + (m,), [0] * N)
            row[var] = row[var] + q

    for ti, t in enumerate(tables):
        for i in range(n):
            for j in range(n):
                # D(e_i e_j) = sum_r c_ij^r D e_r -> coordinate k gets c_ij^r D[k][r]
                for r, c in dict(t.rows[i]).get(j, ()):
                    for k in range(n):
                        add((ti, i, j, k), k * n + r, c)
                # - D(e_i) e_j = - sum_s D[s][i] c_sj^k
                for s in range(n):
                    for k, c in dict(t.rows[s]).get(j, ()):
                        add((ti, i, j, k), s * n + i, -c)
                    for k, c in dict(t.rows[i]).get(s, ()):
                        add((ti, i, j, k), s * n + j, -c)
    cleaned = [[field(x) if not isinstance(x, Poly) else x for x in r] for r in rows.values()]
    return nullspace(cleaned, field, ncols=N)


def unflatten(vec: Sequence, n: int) -> List[tuple]:
    return [tuple(vec[a * n:(a + 1) * n]) for a in range(n)]


def _apply(mat, v) -> tuple:
    return tuple(sum((row[c] * v[c] for c in range(len(v)) if v[c] and row[c]), 0) for row in mat)


def check_automorphism(A: Algebra, p: Optional[str], phi: Sequence[Sequence]):
    """``(True, None)`` if ``phi`` is an invertible multiplicative map, else ``(False, witness)``.

    ``phi`` is a matrix acting on column vectors.  With a polynomial table
    the equality ``phi(xy) = phi(x)phi(y)`` must hold identically.
    """
    p = p or A.default_product
    n, F = A.dim, A.field
    phi = [tuple(F(x) for x in row) for row in phi]
    if inverse(phi, F) is None:
        return False, ("singular", None, None)
    imgs = [tuple(row[i] for row in phi) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = _apply(phi, A.multiply(p, A.basis(i), A.basis(j)))
            rhs = A.multiply(p, imgs[i], imgs[j])
            diff = tuple(normalize(a - b, F) for a, b in zip(lhs, rhs))
            if any(diff):
                return False, (i, j, diff)
    return True, None


def conjugation(k: int, g: Sequence[Sequence], field) -> List[tuple]:
    """Matrix of ``X -> g X g^-1`` on ``M_k`` in the matrix-unit basis."""
    g = [tuple(field(x) for x in row) for row in g]
    gi = inverse(g, field)
    if gi is None:
        raise AlgebraError("g is singular")
    n = k * k
    cols = []
    for a in range(k):
        for b in range(k):
            E = [[field.zero] * k for _ in range(k)]
            E[a][b] = field.one
            img = mat_mul(mat_mul(g, E, field), gi, field)
            cols.append(tuple(img[r][c] for r in range(k) for c in range(k)))
    return [tuple(cols[c][r] for c in range(n)) for r in range(n)]


# ---------------------------------------------------------------------------
# isomorphisms

def fingerprint(A: Algebra, p: Optional[str] = None) -> dict:
    """Isomorphism invariants: annihilator dims, series dims, unit existence."""
    p = p or A.default_product
    left, right, both = annihilators(A, p)
    return {
        "left_annihilator": left.dim,
        "right_annihilator": right.dim,
        "annihilator": both.dim,
        "derived": power_series(A, p, "derived").dims,
        "square_dim": A.subspace_product(p, Subspace.full(A.dim, A.field), Subspace.full(A.dim, A.field)).dim,
        "unital": A.find_unit(p) is not None,
    }


def skewfield_isomorphism(A: Algebra, u: Sequence, p: Optional[str] = None):
    """The map ``a -> -a u^-1`` as an isomorphism ``A -> (A, *_u)``, or None.

    ``A`` must be associative and unital; None is returned when ``u`` is not
    invertible.  The map is verified on all basis pairs before returning.
    """
    p = p or A.default_product
    if not check_variety(A, "associative", products={"m": p}).holds:
        raise AlgebraError("skew-field isomorphism needs an associative algebra")
    if A.find_unit(p) is None:
        raise AlgebraError("algebra has no unit")
    uinv = A.invert_element(p, u)
    if uinv is None:
        return None
    f = [tuple(-x for x in row) for row in A.right_operator(p, uinv)]
    K = kantor_square_algebra(A, p, u)
    ok, _ = check_homomorphism(A, p, K, "m", f)
    if not ok or inverse(f, A.field) is None:
        raise AlgebraError("constructed map is not an isomorphism")
    return f


def check_homomorphism(A: Algebra, p: str, B: Algebra, q: str, f):
    n = A.dim
    imgs = [tuple(row[i] for row in f) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = _apply(f, A.multiply(p, A.basis(i), A.basis(j)))
            rhs = B.multiply(q, imgs[i], imgs[j])
            if any(normalize(a - b, A.field) for a, b in zip(lhs, rhs)):
                return False, (i, j)
    return True, None


# ---------------------------------------------------------------------------
# octonions

@dataclass
class GTriple:
    indices: Tuple[int, int, int]
    value: tuple            # (e_i1, e_i2, (e_i1, e_i2, e_i3))
    reference: tuple        # e_i1^2 e_i2^2 e_i3
    factor: object          # value = factor * reference, or None


def _assoc(A, p, x, y, z):
    return tuple(a - b for a, b in zip(A.multiply(p, A.multiply(p, x, y), z),
                                       A.multiply(p, x, A.multiply(p, y, z))))


def _square_scalar(A: Algebra, p: str, i: int):
    sq = A.multiply(p, A.basis(i), A.basis(i))
    if any(sq[1:]):
        raise AlgebraError(f"e{i}^2 is not a multiple of the unit")
    return sq[0]


def g_triples(A: Algebra, p: Optional[str] = None) -> List[GTriple]:
    """Ordered triples of imaginary basis indices with a nonzero associator.

    For each, reports ``(e_i1, e_i2, (e_i1, e_i2, e_i3))`` and the scalar
    ``c`` with that value equal to ``c * e_i1^2 e_i2^2 e_i3`` (None if not
    proportional).
    """
    p = p or A.default_product
    out = []
    n = A.dim
    for i in range(1, n):
        for j in range(1, n):
            for k in range(1, n):
                if len({i, j, k}) < 3:
                    continue
                a = _assoc(A, p, A.basis(i), A.basis(j), A.basis(k))
                if not any(a):
                    continue
                val = _assoc(A, p, A.basis(i), A.basis(j), a)
                s = _square_scalar(A, p, i) * _square_scalar(A, p, j)
                ref = tuple(s * x for x in A.basis(k))
                factor = None
                if any(val) and all(not v for t, v in enumerate(val) if t != k):
                    factor = A.field.div(val[k], ref[k])
                out.append(GTriple((i, j, k), val, ref, factor))
    return out


def alt_seed_system(A: Algebra, p: Optional[str] = None):
    """Linear system in the squares ``s_k = u_k^2`` from the g-triple rule.

    For each line ``{i, j, ij}`` of imaginary indices, one equation
    ``sum_{k not on the line} e_k^2 s_k = 0``.  Returns ``(lines, rows,
    solution space)`` with unknowns ``s_1 .. s_{n-1}``.
    """
    p = p or A.default_product
    n = A.dim
    lines = set()
    for i in range(1, n):
        for j in range(i + 1, n):
            prod = A.multiply(p, A.basis(i), A.basis(j))
            nz = [k for k, c in enumerate(prod) if c]
            if len(nz) != 1 or nz[0] == 0:
                raise AlgebraError("not a Cayley-Dickson type basis")
            lines.add(tuple(sorted((i, j, nz[0]))))
    lines = sorted(lines, key=lambda l: tuple(sorted(set(range(1, n)) - set(l))))
    squares = [_square_scalar(A, p, k) for k in range(1, n)]
    rows = []
    for line in lines:
        rows.append(tuple(squares[k - 1] if k not in line else A.field.zero for k in range(1, n)))
    return lines, rows, nullspace(rows, A.field, ncols=n - 1)


def probe_alternative_seed(A: Algebra, u: Sequence, probes, p: Optional[str] = None):
    """Values of ``(x, u, (x, u, y))`` for the given ``(x, y)`` probe pairs."""
    p = p or A.default_product
    out = []
    for x, y in probes:
        inner = _assoc(A, p, x, u, y)
        out.append(tuple(normalize(c, A.field) for c in _assoc(A, p, x, u, inner)))
    return out


def _op_commutator(P, Q, F):
    a = mat_mul(P, Q, F)
    b = mat_mul(Q, P, F)
    return [tuple(F(x - y) for x, y in zip(r1, r2)) for r1, r2 in zip(a, b)]


def operator_identity_check(A: Algebra, u: Sequence, x: Sequence, p: Optional[str] = None) -> dict:
    """Compare the operator identities tied to the noncommutative Jordan law.

    Evaluates ``[L_a L_b L_a L_b, R_u R_x] == [L_w, R_{ux}]`` for both
    orderings ``(a, b) = (u, x)`` and ``(x, u)`` and both associations
    ``w = ((xu)x)u`` and ``w = (xu)(xu)``, and independently checks the
    Jordan law ``((x*x)*y)*x = (x*x)*(y*x)`` for all ``y`` in ``(A, *_u)``.
    """
    p = p or A.default_product
    F = A.field
    m = lambda a, b: A.multiply(p, a, b)
    L = lambda a: A.left_operator(p, a)
    R = lambda a: A.right_operator(p, a)
    Lu, Lx, Ru, Rx = L(u), L(x), R(u), R(x)
    words = {
        "((xu)x)u": m(m(m(x, u), x), u),
        "(xu)(xu)": m(m(x, u), m(x, u)),
    }
    orders = {
        "LuLxLuLx": mat_mul(mat_mul(Lu, Lx, F), mat_mul(Lu, Lx, F), F),
        "LxLuLxLu": mat_mul(mat_mul(Lx, Lu, F), mat_mul(Lx, Lu, F), F),
    }
    RuRx = mat_mul(Ru, Rx, F)
    Rux = R(m(u, x))
    variants = {}
    for oname, op in orders.items():
        lhs = _op_commutator(op, RuRx, F)
        for wname, w in words.items():
            rhs = _op_commutator(L(w), Rux, F)
            variants[f"{oname} vs {wname}"] = lhs == rhs
    K = kantor_square_algebra(A, p, u)
    mk = lambda a, b: K.multiply("m", a, b)
    xx = mk(x, x)
    jordan = all(
        not any(normalize(a - b, F) for a, b in zip(mk(mk(xx, e), x), mk(xx, mk(e, x))))
        for e in A.basis_vectors()
    )
    return {"variants": variants, "jordan_at_x": jordan}
