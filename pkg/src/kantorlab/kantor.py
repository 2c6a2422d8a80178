"""The Kantor product of two bilinear multiplications.

For multiplications ``A``, ``B`` on the same space and a seed vector ``u``::

    x * y = A(u, B(x, y)) - B(A(u, x), y) - B(x, A(u, y))

The Kantor square of a multiplication is its Kantor product with itself,
i.e. the bracket of the left multiplication ``L_u`` with the product.
"""
from __future__ import annotations

from typing import Optional, Sequence

from .algebra import Algebra, AlgebraError, MultTable, normalize
from .poly import Poly, variables

__all__ = [
    "generic_seed",
    "kantor_product",
    "kantor_square",
    "kantor_square_algebra",
    "kantor_product_algebra",
]


def generic_seed(A: Algebra, prefix: str = "u") -> tuple:
    """Seed whose coordinates are the indeterminates ``u0 .. u{n-1}``."""
    return tuple(variables(prefix, A.dim, A.field.one))


def _linear_map(images: Sequence[tuple], v: Sequence, n: int) -> tuple:
    out = [0] * n
    for vk, img in zip(v, images):
        if not vk:
            continue
        for r, c in enumerate(img):
            if c:
                out[r] = out[r] + vk * c
    return tuple(out)


def kantor_product(A: Algebra, pA: str, pB: str, u: Sequence) -> MultTable:
    """Structure constants of ``(x, y) -> A(u,B(x,y)) - B(A(u,x),y) - B(x,A(u,y))``."""
    A.table(pA)
    A.table(pB)
    if len(u) != A.dim:
        raise AlgebraError(f"seed has {len(u)} coordinates, algebra has dimension {A.dim}")
    n, F = A.dim, A.field
    basis = A.basis_vectors()
    # L_u under product A, as images of basis vectors
    Lu = [A.multiply(pA, u, e) for e in basis]
    B = A.table(pB)
    entries = {}
    for i in range(n):
        for j in range(n):
            bij = B.product_vector(i, j, F)
            first = _linear_map(Lu, bij, n)
            second = A.multiply(pB, Lu[i], basis[j])
            third = A.multiply(pB, basis[i], Lu[j])
            for k in range(n):
                c = normalize(first[k] - second[k] - third[k], F)
                if c:
                    entries[(i, j, k)] = c
    return MultTable(n, entries)


def kantor_square(A: Algebra, p: Optional[str] = None, u: Sequence = ()) -> MultTable:
    p = p or A.default_product
    return kantor_product(A, p, p, u)


def kantor_product_algebra(A: Algebra, pA: str, pB: str, u: Sequence, name: str = "m",
                           allow_generic: bool = False) -> Algebra:
    """``(A, [pA, pB])`` as a standalone one-product algebra."""
    if not allow_generic and any(isinstance(c, Poly) for c in u):
        raise AlgebraError("seed with polynomial coordinates; pass allow_generic=True for a generic table")
    table = kantor_product(A, pA, pB, u)
    return Algebra(A.dim, {name: table}, A.field, A.labels, name=f"[{pA},{pB}]")


def kantor_square_algebra(A: Algebra, p: Optional[str] = None, u: Sequence = (), name: str = "m",
                          allow_generic: bool = False) -> Algebra:
    p = p or A.default_product
    return kantor_product_algebra(A, p, p, u, name, allow_generic)
