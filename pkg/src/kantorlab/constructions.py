"""Concrete algebras used as fixtures and examples."""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional, Tuple

from .algebra import Algebra, AlgebraError, MultTable
from .fields import Field, QQ

__all__ = [
    "dual_duplicial_example",
    "rota_baxter_tridendriform",
    "euler_bracket_algebra",
    "cayley_dickson",
    "cayley_dickson_symbolic_table",
    "generalized_quaternion",
    "matrix_algebra",
    "direct_sum",
    "truncated_polynomial",
    "dorofeev",
    "lambda_mutation",
    "commutator_algebra",
    "zinbiel_truncated",
    "derivation_left_novikov",
    "left_novikov_poisson",
    "right_novikov_poisson",
    "poisson_small",
    "lie_cross",
    "leibniz2",
    "zero_algebra",
    "small_examples",
]

# Octonion table on e1..e7: (i, j) -> (sign, k, parameter word).  The word
# lists which of alpha, beta, gamma multiply the result; k = 0 is the unit.
_CD_TABLE: Dict[Tuple[int, int], Tuple[int, int, str]] = {}


def _row(i, entries):
    for j, (sign, k, word) in enumerate(entries, start=1):
        _CD_TABLE[(i, j)] = (sign, k, word)


_row(1, [(1, 0, "a"), (1, 3, ""), (1, 2, "a"), (1, 5, ""), (1, 4, "a"), (-1, 7, ""), (-1, 6, "a")])
_row(2, [(-1, 3, ""), (1, 0, "b"), (-1, 1, "b"), (1, 6, ""), (1, 7, ""), (1, 4, "b"), (1, 5, "b")])
_row(3, [(-1, 2, "a"), (1, 1, "b"), (-1, 0, "ab"), (1, 7, ""), (1, 6, "a"), (-1, 5, "b"), (-1, 4, "ab")])
_row(4, [(-1, 5, ""), (-1, 6, ""), (-1, 7, ""), (1, 0, "c"), (-1, 1, "c"), (-1, 2, "c"), (-1, 3, "c")])
_row(5, [(-1, 4, "a"), (-1, 7, ""), (-1, 6, "a"), (1, 1, "c"), (-1, 0, "ac"), (1, 3, "c"), (1, 2, "ac")])
_row(6, [(1, 7, ""), (-1, 4, "b"), (1, 5, "b"), (1, 2, "c"), (-1, 3, "c"), (-1, 0, "bc"), (-1, 1, "bc")])
_row(7, [(1, 6, "a"), (-1, 5, "b"), (1, 4, "ab"), (1, 3, "c"), (-1, 2, "ac"), (1, 1, "bc"), (1, 0, "abc")])


# e5 e7 = +ac e2: with e5 = e1 e4 and e7 = e3 e4 the doubling formula gives
# e5 e7 = -c e3 e1 = ac e2 = -e7 e5.  A minus sign here would make e5 and e7
# commute and break alternativity.
TABLE_CORRECTIONS = {(5, 7): ((-1, 2, "ac"), (1, 2, "ac"))}


def cayley_dickson_symbolic_table() -> Dict[Tuple[int, int], Tuple[int, int, str]]:
    """The raw table ``(i, j) -> (sign, k, word)`` for ``e_i e_j`` with ``1 <= i, j <= 7``."""
    return dict(_CD_TABLE)


def _check_char(field: Field):
    if field.characteristic == 2:
        raise AlgebraError("characteristic 2 is not allowed for this construction")


def cayley_dickson(alpha=-1, beta=-1, gamma=-1, field: Field = QQ) -> Algebra:
    """Eight-dimensional Cayley-Dickson algebra with basis ``1, e1, ..., e7``."""
    _check_char(field)
    a, b, c = field(alpha), field(beta), field(gamma)
    if not (a and b and c):
        raise AlgebraError("Cayley-Dickson parameters must be nonzero")
    params = {"a": a, "b": b, "c": c}
    entries = {}
    for k in range(8):
        entries[(0, k, k)] = field.one
        entries[(k, 0, k)] = field.one
    for (i, j), (sign, k, word) in _CD_TABLE.items():
        coef = field(sign)
        for ch in word:
            coef = coef * params[ch]
        entries[(i, j, k)] = field(coef)
    labels = ["1"] + [f"e{i}" for i in range(1, 8)]
    return Algebra(8, {"m": MultTable(8, entries)}, field, labels, name=f"CD({alpha},{beta},{gamma})")


def generalized_quaternion(alpha=-1, beta=-1, field: Field = QQ) -> Algebra:
    """The subalgebra spanned by ``1, e1, e2, e3`` of the Cayley-Dickson table."""
    C = cayley_dickson(alpha, beta, 1, field)
    entries = {}
    for i, j, k, c in C.table("m").triples():
        if i < 4 and j < 4:
            entries[(i, j, k)] = c
    return Algebra(4, {"m": MultTable(4, entries)}, field, ["1", "e1", "e2", "e3"],
                   name=f"H({alpha},{beta})")


def matrix_algebra(k: int, field: Field = QQ) -> Algebra:
    """Full matrix algebra ``M_k``; basis ``e_{ij}`` at index ``i*k + j``."""
    n = k * k
    entries = {}
    for i in range(k):
        for j in range(k):
            for m in range(k):
                entries[(i * k + j, j * k + m, i * k + m)] = field.one
    labels = [f"e{i + 1}{j + 1}" for i in range(k) for j in range(k)]
    return Algebra(n, {"m": MultTable(n, entries)}, field, labels, name=f"M{k}")


def direct_sum(A: Algebra, B: Algebra) -> Algebra:
    if A.field != B.field:
        raise AlgebraError("direct sum of algebras over different fields")
    if set(A.products) != set(B.products):
        raise AlgebraError("direct sum needs matching product names")
    n = A.dim + B.dim
    prods = {}
    for p in A.products:
        entries = {(i, j, k): c for i, j, k, c in A.table(p).triples()}
        off = A.dim
        for i, j, k, c in B.table(p).triples():
            entries[(i + off, j + off, k + off)] = c
        prods[p] = MultTable(n, entries)
    labels = [f"{l}_1" for l in A.labels] + [f"{l}_2" for l in B.labels]
    return Algebra(n, prods, A.field, labels, name=f"{A.name}+{B.name}")


def truncated_polynomial(k: int, unital: bool = False, field: Field = QQ) -> Algebra:
    """``t F[t] / (t^{k+1})`` (basis ``t..t^k``) or, if unital, ``F[t]/(t^{k+1})``."""
    low = 0 if unital else 1
    degrees = list(range(low, k + 1))
    pos = {d: i for i, d in enumerate(degrees)}
    entries = {}
    for a in degrees:
        for b in degrees:
            if a + b <= k:
                entries[(pos[a], pos[b], pos[a + b])] = field.one
    n = len(degrees)
    labels = [f"t{d}" for d in degrees]
    return Algebra(n, {"m": MultTable(n, entries)}, field, labels,
                   name=f"{'' if unital else 't'}F[t]/(t^{k + 1})")


def dorofeev(field: Field = QQ) -> Algebra:
    """Five-dimensional right alternative algebra, right nilpotent but not nilpotent."""
    a, b, c, d, e = range(5)
    one = field.one
    entries = {
        (a, b, c): -one, (b, a, c): one,
        (a, e, c): -one, (e, a, c): one,
        (d, b, c): -one, (b, d, c): one,
        (a, c, d): one,
        (b, c, e): one,
    }
    return Algebra(5, {"m": MultTable(5, entries)}, field, list("abcde"), name="Dorofeev")


def lambda_mutation(A: Algebra, p: Optional[str] = None, lam=Fraction(1, 2), name: Optional[str] = None) -> Algebra:
    """New product ``x . y = lam * xy + (1 - lam) * yx``."""
    p = p or A.default_product
    F = A.field
    lam = F(lam)
    t = A.table(p)
    mutated = t.combine(lam, t.transpose(), F(1 - lam))
    return Algebra(A.dim, {name or p: mutated}, F, A.labels, name=f"{A.name}^({lam})")


def commutator_algebra(A: Algebra, p: Optional[str] = None) -> Algebra:
    """``[x, y] = xy - yx`` on the same space."""
    p = p or A.default_product
    t = A.table(p)
    return Algebra(A.dim, {p: t.combine(1, t.transpose(), -1)}, A.field, A.labels, name=f"[{A.name}]")


def zinbiel_truncated(k: int, field: Field = QQ) -> Algebra:
    """Left Zinbiel algebra ``a o b = b * integral(a)`` on ``t F[t] / (t^{k+1})``."""
    entries = {}
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            if i + j + 1 <= k:
                entries[(i - 1, j - 1, i + j)] = field(Fraction(1, i + 1))
    return Algebra(k, {"m": MultTable(k, entries)}, field, [f"t{d}" for d in range(1, k + 1)],
                   name=f"Zinb({k})")


def _np_field(p: int) -> Field:
    from .fields import PrimeField

    return PrimeField(p)


def derivation_left_novikov(p: int = 5, field: Optional[Field] = None) -> Algebra:
    """Left Novikov product ``a o b = D(a) b`` with ``D = d/dt`` on ``F_p[t]/(t^p)``.

    ``d/dt`` kills ``t^p`` only in characteristic ``p``, which is what makes
    the truncation compatible with the derivation.
    """
    return left_novikov_poisson(p, field).single("circ", "m")


def left_novikov_poisson(p: int = 5, field: Optional[Field] = None) -> Algebra:
    """Commutative product ``m`` and Novikov product ``circ = D(a) b`` on ``F_p[t]/(t^p)``."""
    field = field or _np_field(p)
    if field.characteristic != p:
        raise AlgebraError("d/dt is a derivation of F[t]/(t^p) only in characteristic p")
    degrees = range(p)
    mult, circ = {}, {}
    for a in degrees:
        for b in degrees:
            if a + b < p:
                mult[(a, b, a + b)] = field.one
            if a >= 1 and a - 1 + b < p:
                circ[(a, b, a - 1 + b)] = field(a)
    labels = [f"t{d}" for d in degrees]
    return Algebra(p, {"m": MultTable(p, mult), "circ": MultTable(p, circ)}, field, labels,
                   name=f"NP_left(F_{p})")


def right_novikov_poisson(p: int = 5, field: Optional[Field] = None) -> Algebra:
    """Mirror of :func:`left_novikov_poisson`: ``a o b = a D(b)``."""
    left = left_novikov_poisson(p, field)
    return left.with_products({"m": left.table("m"), "circ": left.table("circ").transpose()},
                              name=f"NP_right(F_{p})")


def poisson_small(field: Field = QQ) -> Algebra:
    """``F[x,y]/(x,y)^3`` with the biderivation bracket ``{x, y} = x^2``."""
    monos = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    pos = {m: i for i, m in enumerate(monos)}
    mult, br = {}, {}
    for f in monos:
        for g in monos:
            s = (f[0] + g[0], f[1] + g[1])
            if s in pos:
                mult[(pos[f], pos[g], pos[s])] = field.one
            # {f, g} = (f_x g_y - f_y g_x) x^2 on monomials
            terms = []
            if f[0] and g[1]:
                terms.append((f[0] * g[1], (f[0] - 1 + g[0] + 2, f[1] + g[1] - 1)))
            if f[1] and g[0]:
                terms.append((-f[1] * g[0], (f[0] + g[0] - 1 + 2, f[1] - 1 + g[1])))
            for coef, mono in terms:
                if mono in pos:
                    key = (pos[f], pos[g], pos[mono])
                    br[key] = field(br.get(key, 0) + coef)
    labels = ["1", "x", "y", "x2", "xy", "y2"]
    return Algebra(6, {"m": MultTable(6, mult), "b": MultTable(6, br)}, field, labels, name="Poisson6")


def euler_bracket_algebra(k: int = 4, field: Field = QQ) -> Algebra:
    """``F[t]/(t^(k+1))`` with ``{a, b} = a E(b) - E(a) b`` for ``E = t d/dt``.

    On monomials ``{t^i, t^j} = (j - i) t^(i+j)``.  ``{1, b} = E(b)`` is a
    nonzero derivation, so this is a unital generalized Poisson algebra for
    the law with ``-D(z)xy``.
    """
    n = k + 1
    mult, br = {}, {}
    for i in range(n):
        for j in range(n):
            if i + j < n:
                mult[(i, j, i + j)] = field.one
                if i != j:
                    br[(i, j, i + j)] = field(j - i)
    labels = [f"t{d}" for d in range(n)]
    return Algebra(n, {"m": MultTable(n, mult), "b": MultTable(n, br)}, field, labels, name=f"Euler{k}")


def rota_baxter_tridendriform(k: int = 4, field: Field = QQ) -> Algebra:
    """Products ``dot`` and ``prec`` on ``F[t]/(t^(k+1))``.

    ``dot`` is the polynomial product and ``x prec z = x R(z)`` with
    ``R(t^j) = t^(j+1)/(j+1)`` (truncated integration, a weight-zero
    Rota-Baxter operator).  Satisfies the commutative tridendriform laws.
    """
    n = k + 1
    mult, prec = {}, {}
    for i in range(n):
        for j in range(n):
            if i + j < n:
                mult[(i, j, i + j)] = field.one
            if i + j + 1 < n:
                prec[(i, j, i + j + 1)] = field(Fraction(1, j + 1))
    labels = [f"t{d}" for d in range(n)]
    return Algebra(n, {"dot": MultTable(n, mult), "prec": MultTable(n, prec)}, field, labels,
                   name=f"RB{k}")


def dual_duplicial_example(field: Field = QQ) -> Algebra:
    """Five-dimensional dual duplicial algebra with a nonzero ``[prec, succ]``.

    Basis ``a, b, c, d, e`` with ``a<b = c``, ``e<b = d``, ``a>c = d``,
    ``a>a = e``; all other products vanish.  For the seed ``a`` the Kantor
    product gives ``a * b = -a>(a<b) = -d``.
    """
    one = field.one
    prec = {(0, 1, 2): one, (4, 1, 3): one}
    succ = {(0, 2, 3): one, (0, 0, 4): one}
    return Algebra(5, {"prec": MultTable(5, prec), "succ": MultTable(5, succ)}, field, list("abcde"),
                   name="DualDup5")


def lie_cross(field: Field = QQ) -> Algebra:
    """``(F^3, cross product)``."""
    one = field.one
    entries = {
        (0, 1, 2): one, (1, 0, 2): -one,
        (1, 2, 0): one, (2, 1, 0): -one,
        (2, 0, 1): one, (0, 2, 1): -one,
    }
    return Algebra(3, {"m": MultTable(3, entries)}, field, ["e1", "e2", "e3"], name="cross")


def leibniz2(field: Field = QQ) -> Algebra:
    """Two-dimensional left Leibniz algebra with ``e1 e1 = e2``."""
    return Algebra(2, {"m": MultTable(2, {(0, 0, 1): field.one})}, field, ["e1", "e2"], name="leibniz2")


def zero_algebra(n: int, field: Field = QQ, products=("m",)) -> Algebra:
    return Algebra(n, {p: MultTable(n) for p in products}, field, name=f"zero({n})")


def small_examples(field: Field = QQ) -> Dict[str, Algebra]:
    return {
        "lie_sl2_cross": lie_cross(field),
        "leibniz2": leibniz2(field),
        "zero_algebra": zero_algebra(3, field),
    }
