"""Exact computations with Kantor products of finite-dimensional algebras."""
from .algebra import Algebra, AlgebraError, MultTable
from .fields import QQ, PrimeField
from .kantor import generic_seed, kantor_product_algebra, kantor_square, kantor_square_algebra

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AlgebraError",
    "MultTable",
    "QQ",
    "PrimeField",
    "generic_seed",
    "kantor_product_algebra",
    "kantor_square",
    "kantor_square_algebra",
]
