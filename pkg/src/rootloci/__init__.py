"""Thom polynomials of coincident root loci and cohomology of binary-form moduli."""

from .arith import RatMatrix, Rational, nullspace, rank, rref, solve_in_span
from .partition import Partition, hilbert_degree, partitions
from .poly import (BiForm, InexactDivision, NotSymmetric, SymForm, divided_difference,
                   exact_div, from_sym, gcd_homogeneous, swap, to_sym)
from .thom import (ThomPoly, projective_degree, thom_polynomial, tp_naive,
                   tp_reduce, tp_sum)

__version__ = "0.1.0"

__all__ = [
    "RatMatrix", "Rational", "nullspace", "rank", "rref", "solve_in_span",
    "Partition", "hilbert_degree", "partitions",
    "BiForm", "SymForm", "InexactDivision", "NotSymmetric", "divided_difference",
    "exact_div", "from_sym", "gcd_homogeneous", "swap", "to_sym",
    "ThomPoly", "projective_degree", "thom_polynomial", "tp_naive", "tp_reduce", "tp_sum",
]
