"""hopfbench: exact construction and verification of finite-dimensional
pointed Hopf algebras over small finite fields."""

__version__ = "0.1.0"

from .gf import Field, make_field, field_arith, rank_nullspace, matrix_rank, roots_univariate, RowSpan

__all__ = [
    "Field",
    "make_field",
    "field_arith",
    "rank_nullspace",
    "matrix_rank",
    "roots_univariate",
    "RowSpan",
]
