"""Exact Pontrjagin numbers and Hirzebruch genera of K3 x HP^k products.

Everything is computed over arbitrary-precision rationals: integer
partitions and fraction-free linear algebra (partitions, linalg), truncated
power series and multiplicative sequences (series, symfunc), the generator
manifolds with their ring structure and the kernel characterization check
(cobordism), and a small expression language plus CLI on top (expressions,
cli).
"""

from .cobordism import (
    DEFAULT_CAP,
    CobordismClass,
    OutOfRangeError,
    SNumberVector,
    VerificationReport,
    ahat_polynomial,
    basis_class,
    basis_matrix,
    generator,
    kummer_class,
    l_polynomial,
    point_class,
    product,
    product_p_basis_oracle,
    p_to_s,
    quaternionic_class,
    s_to_p,
    s_top_number,
    verify_basis_sequence,
    verify_characterization,
)
from .expressions import ManifoldExpr, ParseError, parse_manifold, to_cobordism_class
from .linalg import (
    NonSquareError,
    Rational,
    RationalMatrix,
    determinant,
    kernel_basis,
)
from .partitions import (
    Partition,
    partition_index,
    partition_splittings,
    partitions_of,
)
from .series import NonUnitError, PowerSeries, ahat_series, l_series, series_reciprocal
from .symfunc import (
    DegreeMismatchError,
    GenusPolynomial,
    TransitionMatrix,
    TruncationTooShortError,
    e_to_m_matrix,
    evaluate_genus,
    m_to_e_matrix,
    msequence_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CAP",
    "CobordismClass",
    "DegreeMismatchError",
    "GenusPolynomial",
    "ManifoldExpr",
    "NonSquareError",
    "NonUnitError",
    "OutOfRangeError",
    "ParseError",
    "Partition",
    "PowerSeries",
    "Rational",
    "RationalMatrix",
    "SNumberVector",
    "TransitionMatrix",
    "TruncationTooShortError",
    "VerificationReport",
    "ahat_polynomial",
    "ahat_series",
    "basis_class",
    "basis_matrix",
    "determinant",
    "e_to_m_matrix",
    "evaluate_genus",
    "generator",
    "kernel_basis",
    "kummer_class",
    "l_polynomial",
    "l_series",
    "m_to_e_matrix",
    "msequence_polynomial",
    "parse_manifold",
    "partition_index",
    "partition_splittings",
    "partitions_of",
    "point_class",
    "product",
    "product_p_basis_oracle",
    "p_to_s",
    "quaternionic_class",
    "s_to_p",
    "s_top_number",
    "series_reciprocal",
    "to_cobordism_class",
    "verify_basis_sequence",
    "verify_characterization",
]
