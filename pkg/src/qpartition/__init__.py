"""qpartition: exact discovery, proof, storage and evaluation of
quasi-polynomial formulas for restricted partition counts.

The package discovers closed forms for p_m(n) (partitions into at most m
parts), p_S(n) (parts drawn from a multiset S) and D_k(n) (Durfee square
size k) by exact partial fractions plus undetermined-coefficient fitting,
verifies them against independent counting oracles, persists them, and
evaluates them at astronomically large arguments.  A Hardy-Ramanujan-
Rademacher evaluator provides an analytic cross-check for p(n).
"""

from .discover import (
    GLOBAL_FIT,
    PER_COMPONENT,
    STRATEGIES,
    AnsatzShape,
    FormulaRecord,
    ansatz_shape,
    discover_durfee,
    discover_pmn,
    discover_ps,
    fit_component,
    leading_asymptotic,
)
from .errors import (
    CertificationError,
    DatabaseChecksumError,
    DatabaseError,
    DatabaseParseError,
    DatabaseVersionError,
    DomainError,
    IntegrityError,
    PrecisionError,
    QPartitionError,
    RecordNotFoundError,
    ResourceLimitError,
    SingularMatrixError,
)
from .hrr import BigReal, dedekind_sum, hrr_certified, hrr_partial_sum
from .linalg import solve_linear_consistent, solve_linear_exact
from .oracles import (
    denumerant_table,
    durfee_count_oracle,
    durfee_size,
    enumerate_partitions,
    euler_partition_series,
    pmn_oracle,
    pmn_table,
)
from .polys import (
    CyclotomicFactorization,
    PartialFractionDecomposition,
    PartialFractionTerm,
    Polynomial,
    PowerSeries,
    cyclotomic_normalized,
    factor_denominator,
    format_polynomial,
    partial_fractions,
    poly_xgcd,
    series_expand,
    series_of_ratio,
)
from .quasipoly import (
    FloorExpression,
    QuasiPolynomial,
    QuasiPolynomialSum,
    eval_floor_form,
    fit_pieces_from_values,
    format_floor_expression,
    format_quasipolynomial_sum,
    normalize_qps,
    qp_eval,
    qps_equal,
    qps_eval,
    qps_values,
    to_floor_form,
)
from .store import (
    DB_FORMAT_VERSION,
    FormulaDatabase,
    build_database,
    eval_from_db,
    load_database,
    parse_count,
    save_database,
)

__version__ = "0.1.0"

__all__ = [
    "AnsatzShape",
    "BigReal",
    "CertificationError",
    "CyclotomicFactorization",
    "DatabaseChecksumError",
    "DatabaseError",
    "DatabaseParseError",
    "DatabaseVersionError",
    "DB_FORMAT_VERSION",
    "DomainError",
    "FloorExpression",
    "FormulaDatabase",
    "FormulaRecord",
    "GLOBAL_FIT",
    "IntegrityError",
    "PER_COMPONENT",
    "PartialFractionDecomposition",
    "PartialFractionTerm",
    "Polynomial",
    "PowerSeries",
    "PrecisionError",
    "QPartitionError",
    "QuasiPolynomial",
    "QuasiPolynomialSum",
    "RecordNotFoundError",
    "ResourceLimitError",
    "STRATEGIES",
    "SingularMatrixError",
    "ansatz_shape",
    "build_database",
    "cyclotomic_normalized",
    "dedekind_sum",
    "denumerant_table",
    "discover_durfee",
    "discover_pmn",
    "discover_ps",
    "durfee_count_oracle",
    "durfee_size",
    "enumerate_partitions",
    "euler_partition_series",
    "eval_floor_form",
    "eval_from_db",
    "factor_denominator",
    "fit_component",
    "fit_pieces_from_values",
    "format_floor_expression",
    "format_polynomial",
    "format_quasipolynomial_sum",
    "hrr_certified",
    "hrr_partial_sum",
    "leading_asymptotic",
    "load_database",
    "normalize_qps",
    "parse_count",
    "partial_fractions",
    "pmn_oracle",
    "pmn_table",
    "poly_xgcd",
    "qp_eval",
    "qps_equal",
    "qps_eval",
    "qps_values",
    "save_database",
    "series_expand",
    "series_of_ratio",
    "solve_linear_consistent",
    "solve_linear_exact",
    "to_floor_form",
]
