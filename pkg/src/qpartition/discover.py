"""Rigorous guessing: fit quasi-polynomial formulas for restricted partition
counts from exact series data, then verify enough points to force equality.

The count of partitions with parts from a multiset S has generating function
1 / prod_{s in S} (1 - q^s), whose coefficient sequence lies in the space of
sums of quasi-polynomials with one component per divisor period d (piece
degree e_d - 1, where e_d counts elements of S divisible by d).  That space
embeds in the proper rational functions with the same denominator, of degree
sum(S), so agreement with the oracle series on sum(S) consecutive values
already forces equality; fitting uses the per-period block count
sum_d d*e_d >= sum(S) and verification re-checks as many points again.

Two strategies are implemented:

* per_component: decompose the generating function into cyclotomic partial
  fractions and fit each period's block separately (small decoupled
  Vandermonde systems; the default).
* global_fit: one linear system for all piece coefficients at once against
  the full series (rank-deficient but consistent; an independent cross-check
  whose failure modes are disjoint from per_component's).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .errors import DomainError, IntegrityError
from .linalg import solve_linear_consistent
from .oracles import denumerant_table
from .polys import (
    Polynomial,
    PowerSeries,
    cyclotomic_normalized,
    factor_denominator,
    partial_fractions,
    series_of_ratio,
)
from .quasipoly import (
    QuasiPolynomial,
    QuasiPolynomialSum,
    fit_pieces_from_values,
    normalize_qps,
    qps_values,
)

PER_COMPONENT = "per_component"
GLOBAL_FIT = "global_fit"
STRATEGIES = (PER_COMPONENT, GLOBAL_FIT)


@dataclass(frozen=True)
class AnsatzShape:
    """Periods and piece degrees the formula must have: one entry per
    divisor period d with multiplicity e_d >= 1, of degree e_d - 1."""

    entries: tuple[tuple[int, int], ...]

    @property
    def total_dimension(self) -> int:
        return sum(d * (g + 1) for d, g in self.entries)


@dataclass(frozen=True)
class FormulaRecord:
    """A proven formula plus the parameters it answers for and how it was built."""

    kind: str  # "pS" | "pmn" | "durfee"
    parameters: int | tuple[int, ...]
    shift: int
    formula: QuasiPolynomialSum
    provenance: dict

    def __post_init__(self):
        if self.kind not in ("pS", "pmn", "durfee"):
            raise DomainError(f"unknown formula kind {self.kind!r}")


def ansatz_shape(parts: Iterable[int]) -> AnsatzShape:
    """Shape of the quasi-polynomial ansatz for the multiset of parts."""
    fact = factor_denominator(parts)
    entries = tuple((d, fact.multiplicities[d] - 1) for d in fact.periods())
    return AnsatzShape(entries)


def fit_component(series: PowerSeries, period: int, degree: int) -> QuasiPolynomial:
    """Fit one period's quasi-polynomial to the Maclaurin series of its
    partial-fraction block, sampling at n = 0, 1, 2, ... per residue class."""
    need = period * (degree + 1)
    if len(series) < need:
        raise DomainError(
            f"series too short: fitting period {period} degree {degree} "
            f"needs {need} coefficients, got {len(series)}"
        )
    return fit_pieces_from_values(series.coeffs, period, degree)


def _normalized_parts(parts: Iterable[int]) -> tuple[int, ...]:
    out = tuple(sorted(parts))
    if not out:
        raise DomainError("the part multiset must be nonempty")
    if any(s < 1 for s in out):
        raise DomainError("all parts must be >= 1")
    return out


def _fit_per_component(parts: Sequence[int]) -> tuple[QuasiPolynomialSum, int]:
    fact = factor_denominator(parts)
    decomposition = partial_fractions(Polynomial.one(), fact)
    components = []
    max_fit_point = 0
    for d in fact.periods():
        e = fact.multiplicities[d]
        block = decomposition.terms_for_period(d)
        if not block:
            raise IntegrityError(
                f"period {d} has multiplicity {e} but no partial-fraction terms"
            )
        order = d * e - 1
        max_fit_point = max(max_fit_point, order)
        coeffs = [Fraction(0)] * (order + 1)
        c_d = cyclotomic_normalized(d)
        for t in block:
            for k, c in enumerate(series_of_ratio(t.numerator, c_d**t.power, order)):
                coeffs[k] += c
        components.append(fit_component(PowerSeries(tuple(coeffs)), d, e - 1))
    return QuasiPolynomialSum(0, tuple(components)), max_fit_point


def _fit_global(parts: Sequence[int]) -> tuple[QuasiPolynomialSum, int]:
    shape = ansatz_shape(parts)
    dim = shape.total_dimension
    data = denumerant_table(parts, dim - 1)
    unknowns = [
        (d, i, t) for d, g in shape.entries for i in range(1, d + 1) for t in range(g + 1)
    ]
    matrix = []
    for n in range(dim):
        row = []
        for d, i, t in unknowns:
            row.append(Fraction(n) ** t if (n - i) % d == 0 else Fraction(0))
        matrix.append(row)
    try:
        solution = solve_linear_consistent(matrix, data)
    except DomainError as exc:
        raise IntegrityError(f"global fit produced an inconsistent system: {exc}")
    components = []
    pos = 0
    for d, g in shape.entries:
        pieces = []
        for _ in range(d):
            pieces.append(Polynomial(solution[pos : pos + g + 1]))
            pos += g + 1
        qp = QuasiPolynomial(d, tuple(pieces))
        if not qp.is_zero():
            components.append(qp)
    return QuasiPolynomialSum(0, tuple(components)), dim - 1


def _verify(formula: QuasiPolynomialSum, parts: Sequence[int], max_fit_point: int) -> int:
    """Compare the formula with the coin-change oracle on every point used for
    fitting plus total_dimension further points; mismatch is fatal."""
    extra = ansatz_shape(parts).total_dimension
    stop = max_fit_point + 1 + extra
    expected = denumerant_table(parts, stop - 1)
    got = qps_values(formula, stop)
    for n, (a, b) in enumerate(zip(got, expected)):
        if a != b:
            raise IntegrityError(
                f"verification failed for parts {list(parts)} at n={n}: "
                f"formula gives {a}, oracle gives {b}"
            )
    return extra


def discover_ps(parts: Iterable[int], strategy: str = PER_COMPONENT) -> FormulaRecord:
    """Discover and prove the quasi-polynomial formula for the number of
    partitions with parts drawn from the given multiset."""
    parts = _normalized_parts(parts)
    if strategy == PER_COMPONENT:
        raw, max_fit_point = _fit_per_component(parts)
    elif strategy == GLOBAL_FIT:
        raw, max_fit_point = _fit_global(parts)
    else:
        raise DomainError(f"unknown strategy {strategy!r}; use one of {STRATEGIES}")
    formula = normalize_qps(raw)
    verified = _verify(formula, parts, max_fit_point)
    return FormulaRecord(
        kind="pS",
        parameters=parts,
        shift=0,
        formula=formula,
        provenance={
            "strategy": strategy,
            "verified_points": verified,
            "parts": ",".join(map(str, parts)),
        },
    )


def discover_pmn(m: int, strategy: str = PER_COMPONENT) -> FormulaRecord:
    """Formula for the number of partitions of n into at most m parts."""
    if m < 1:
        raise DomainError("m must be >= 1")
    base = discover_ps(range(1, m + 1), strategy)
    return FormulaRecord(
        kind="pmn",
        parameters=m,
        shift=0,
        formula=base.formula,
        provenance=base.provenance,
    )


def discover_durfee(k: int, strategy: str = PER_COMPONENT) -> FormulaRecord:
    """Formula for the number of partitions of n with Durfee square size k.

    Removing the k x k square leaves two independent partitions with parts
    at most k (the rows beside the square, transposed; and the rows below),
    so the generating function is q^(k*k) / prod_{i<=k} (1-q^i)^2: discover
    the unshifted denumerant for {1,1,2,2,...,k,k} and shift by k*k.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    parts = [i for i in range(1, k + 1) for _ in range(2)]
    base = discover_ps(parts, strategy)
    shifted = QuasiPolynomialSum(k * k, base.formula.components)
    return FormulaRecord(
        kind="durfee",
        parameters=k,
        shift=k * k,
        formula=shifted,
        provenance=base.provenance,
    )


def leading_asymptotic(
    m: int, formula: QuasiPolynomialSum | None = None
) -> tuple[int, Fraction]:
    """Degree and coefficient of the dominant term of the formula for
    partitions into at most m parts: (m-1, 1/(m! (m-1)!))."""
    if m < 1:
        raise DomainError("m must be >= 1")
    if formula is None:
        formula = discover_pmn(m).formula
    main = formula.component(1)
    if main is None:
        raise IntegrityError("formula has no period-1 component")
    poly = main.pieces[0]
    degree, coefficient = poly.degree, poly.lead
    expected = Fraction(1, factorial(m) * factorial(m - 1))
    if degree != m - 1 or coefficient != expected:
        raise IntegrityError(
            f"leading term {coefficient}*n^{degree} does not match the "
            f"required 1/(m!(m-1)!) * n^(m-1) for m={m}"
        )
    return degree, coefficient
