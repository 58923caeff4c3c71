"""Exact verification of Novikov superalgebras given by structure constants."""
from .core import GradedVector, SuperAlgebra, is_graded, multiply, parity, transform
from .errors import NovikovError
from .laws import (
    AlgebraType,
    BracketAlgebra,
    check_gd,
    check_left_super_symmetry,
    check_right_super_commutativity,
    classify_type,
    commutator,
    is_abelian,
    is_lie_algebra,
    is_lie_superalgebra,
    is_novikov_algebra,
    is_novikov_superalgebra,
    super_commutator,
)
from .report import LawReport, Violation
from .scalars import QQ, Field, Scalar

__version__ = "0.1.0"

__all__ = [
    "GradedVector",
    "SuperAlgebra",
    "is_graded",
    "multiply",
    "parity",
    "transform",
    "NovikovError",
    "AlgebraType",
    "BracketAlgebra",
    "check_gd",
    "check_left_super_symmetry",
    "check_right_super_commutativity",
    "classify_type",
    "commutator",
    "is_abelian",
    "is_lie_algebra",
    "is_lie_superalgebra",
    "is_novikov_algebra",
    "is_novikov_superalgebra",
    "super_commutator",
    "LawReport",
    "Violation",
    "QQ",
    "Field",
    "Scalar",
]
