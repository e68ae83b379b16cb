"""Quasi-polynomial formula objects: evaluation, fitting, canonical
normalization, floor-function (integer-part) form, and text rendering.

A quasi-polynomial of period r is a list of r polynomial pieces
[P_1, ..., P_r]; its value at n is P_i(n) for the representative
i in 1..r of n mod r (i = r when r divides n).  A QuasiPolynomialSum is a
sum of such components with strictly increasing periods, optionally shifted:
the value is 0 for n < shift and the sum evaluated at n - shift otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import DomainError, IntegrityError
from .linalg import solve_linear_exact
from .polys import (
    Polynomial,
    PowerSeries,
    cyclotomic_normalized,
    factor_denominator,
    format_polynomial,
    partial_fractions,
    series_of_ratio,
)


@dataclass(frozen=True)
class QuasiPolynomial:
    """Period r and exactly r polynomial pieces, indexed by residue class."""

    period: int
    pieces: tuple[Polynomial, ...]

    def __post_init__(self):
        if self.period < 1:
            raise DomainError("period must be >= 1")
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if len(self.pieces) != self.period:
            raise DomainError(
                f"period-{self.period} quasi-polynomial needs exactly "
                f"{self.period} pieces, got {len(self.pieces)}"
            )

    def piece_index(self, n: int) -> int:
        """0-based index of the piece selecting n (residue r maps to index r-1)."""
        return (n - 1) % self.period

    @property
    def degree(self) -> int:
        return max(p.degree for p in self.pieces)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.pieces)


@dataclass(frozen=True)
class QuasiPolynomialSum:
    """Sum of quasi-polynomials of strictly increasing periods, with a shift."""

    shift: int
    components: tuple[QuasiPolynomial, ...]

    def __post_init__(self):
        if self.shift < 0:
            raise DomainError("shift must be >= 0")
        object.__setattr__(self, "components", tuple(self.components))
        periods = [c.period for c in self.components]
        if any(a >= b for a, b in zip(periods, periods[1:])):
            raise DomainError("component periods must be strictly increasing")

    def component(self, period: int) -> QuasiPolynomial | None:
        for c in self.components:
            if c.period == period:
                return c
        return None


def qp_eval(qp: QuasiPolynomial, n: int) -> Fraction:
    """Value of one quasi-polynomial at n >= 0 (piece chosen by residue)."""
    if n < 0:
        raise DomainError("quasi-polynomial evaluation requires n >= 0")
    return qp.pieces[qp.piece_index(n)](n)


def qps_eval(f: QuasiPolynomialSum, n: int) -> int:
    """Integer value of the sum at n >= 0; 0 below the shift.

    The rational total must be an exact integer; anything else means the
    formula object is corrupt and raises IntegrityError.
    """
    if n < 0:
        raise DomainError("evaluation requires n >= 0")
    if n < f.shift:
        return 0
    total = sum((qp_eval(c, n - f.shift) for c in f.components), Fraction(0))
    if total.denominator != 1:
        raise IntegrityError(f"formula value at n={n} is not an integer: {total}")
    return total.numerator


def qps_values(f: QuasiPolynomialSum, stop: int, start: int = 0) -> list[int]:
    """Values of the sum at n = start .. stop-1.

    Bulk variant of qps_eval: all coefficients are scaled to a common integer
    denominator once, so each point costs only integer Horner steps.  The
    divisibility check at each point is the same integrality tripwire.
    """
    if start < 0 or stop < start:
        raise DomainError("invalid evaluation range")
    denoms = [
        c.denominator for comp in f.components for p in comp.pieces for c in p.coeffs
    ]
    scale = lcm(*denoms) if denoms else 1
    scaled: list[tuple[int, list[list[int]]]] = []
    for comp in f.components:
        piece_coeffs = [
            [int(c * scale) for c in piece.coeffs] for piece in comp.pieces
        ]
        scaled.append((comp.period, piece_coeffs))
    out: list[int] = []
    for n in range(start, stop):
        if n < f.shift:
            out.append(0)
            continue
        v = n - f.shift
        acc = 0
        for period, piece_coeffs in scaled:
            cs = piece_coeffs[(v - 1) % period]
            h = 0
            for c in reversed(cs):
                h = h * v + c
            acc += h
        q, r = divmod(acc, scale)
        if r:
            raise IntegrityError(f"formula value at n={n} is not an integer")
        out.append(q)
    return out


def fit_pieces_from_values(
    values: Sequence[Fraction | int], period: int, degree: int
) -> QuasiPolynomial:
    """Fit a period-`period` quasi-polynomial of piece degree <= `degree` to
    the sequence values[0], values[1], ... (value at n is values[n]).

    Per residue class this solves the Vandermonde system on the first
    degree+1 sample points in that class; needs period*(degree+1) values.
    """
    if period < 1:
        raise DomainError("period must be >= 1")
    if degree < 0:
        raise DomainError("degree must be >= 0")
    need = period * (degree + 1)
    if len(values) < need:
        raise DomainError(
            f"fitting period {period} degree {degree} needs {need} values, "
            f"got {len(values)}"
        )
    pieces: list[Polynomial] = []
    for i in range(1, period + 1):
        base = i % period
        points = [base + t * period for t in range(degree + 1)]
        matrix = [[Fraction(n) ** j for j in range(degree + 1)] for n in points]
        rhs = [Fraction(values[n]) for n in points]
        coeffs = solve_linear_exact(matrix, rhs)
        pieces.append(Polynomial(coeffs))
    return QuasiPolynomial(period, tuple(pieces))


def _component_canonical_parts(comp: QuasiPolynomial) -> dict[int, QuasiPolynomial]:
    """Split one component into its exact-period parts, keyed by period.

    Works through the component's generating function: the value sequence
    equals A(q) / (1-q^r)^{D+1} for a unique polynomial A, whose cyclotomic
    partial fractions separate the content by pole order; refitting each
    block gives the part whose minimal period is exactly that divisor.
    """
    r = comp.period
    if r == 1:
        return {} if comp.is_zero() else {1: comp}
    deg = comp.degree
    if deg < 0:
        return {}
    length = r * (deg + 1)
    values = Polynomial([qp_eval(comp, n) for n in range(length)])
    numerator = (values * (Polynomial((1,) + (0,) * (r - 1) + (-1,)) ** (deg + 1))).truncated(length)
    if numerator.is_zero():
        return {}
    fact = factor_denominator([r] * (deg + 1))
    decomposition = partial_fractions(numerator, fact)
    parts: dict[int, QuasiPolynomial] = {}
    for d in fact.periods():
        block = decomposition.terms_for_period(d)
        if not block:
            continue
        top = max(t.power for t in block)
        order = d * top - 1
        series = [Fraction(0)] * (order + 1)
        c_d = cyclotomic_normalized(d)
        for t in block:
            for k, c in enumerate(series_of_ratio(t.numerator, c_d**t.power, order)):
                series[k] += c
        parts[d] = fit_pieces_from_values(series, d, top - 1)
    return parts


def normalize_qps(f: QuasiPolynomialSum) -> QuasiPolynomialSum:
    """Canonical form: each component carries exactly its own period's content.

    Content of a smaller period hiding inside a component (repeating pieces,
    constant-across-residue parts, or any cross-period mixture) is moved to
    the component of that period; zero components are dropped.  Two sums are
    equal as functions iff their normal forms are identical.
    """
    buckets: dict[int, list[Polynomial]] = {}
    for comp in f.components:
        for d, part in _component_canonical_parts(comp).items():
            if d in buckets:
                buckets[d] = [a + b for a, b in zip(buckets[d], part.pieces)]
            else:
                buckets[d] = list(part.pieces)
    components = []
    for d in sorted(buckets):
        pieces = buckets[d]
        if any(not p.is_zero() for p in pieces):
            components.append(QuasiPolynomial(d, tuple(pieces)))
    return QuasiPolynomialSum(f.shift, tuple(components))


def qps_equal(f: QuasiPolynomialSum, g: QuasiPolynomialSum) -> bool:
    """Functional equality via identity of normal forms."""
    return normalize_qps(f) == normalize_qps(g)


@dataclass(frozen=True)
class FloorExpression:
    """Polynomial-with-integer-part form: per period r a bivariate polynomial
    Q_r(n, rho) with deg_rho < r, where rho stands for n - r*floor(n/r).

    Each Q_r is stored as a tuple of polynomials in n, indexed by rho power.
    """

    terms: tuple[tuple[int, tuple[Polynomial, ...]], ...]


def to_floor_form(f: QuasiPolynomialSum) -> FloorExpression:
    """Rewrite an unshifted formula using only n and rho_r = n - r*floor(n/r).

    The piece for residue class i is selected by the Lagrange basis
    polynomial on nodes {0..r-1} that is 1 at node i mod r, so
    Q_r(n, rho_r(n)) reproduces the component's value at every n >= 0.
    """
    if f.shift != 0:
        raise DomainError("floor form is defined only for unshifted formulas")
    terms = []
    for comp in f.components:
        r = comp.period
        rho_polys = [Polynomial.zero() for _ in range(r)]
        for idx, piece in enumerate(comp.pieces):
            node = (idx + 1) % r
            basis = Polynomial.one()
            for other in range(r):
                if other != node:
                    basis = basis * Polynomial((-other, 1)) * Fraction(1, node - other)
            for j, c in enumerate(basis.coeffs):
                if c:
                    rho_polys[j] = rho_polys[j] + piece * c
        while rho_polys and rho_polys[-1].is_zero():
            rho_polys.pop()
        if rho_polys:
            terms.append((r, tuple(rho_polys)))
    return FloorExpression(tuple(terms))


def eval_floor_form(fe: FloorExpression, n: int) -> int:
    """Evaluate a floor expression at n >= 0; asserts the total is an integer."""
    if n < 0:
        raise DomainError("evaluation requires n >= 0")
    total = Fraction(0)
    for r, rho_polys in fe.terms:
        rho = n - r * (n // r)
        acc = Fraction(0)
        for poly in reversed(rho_polys):
            acc = acc * rho + poly(n)
        total += acc
    if total.denominator != 1:
        raise IntegrityError(f"floor-form value at n={n} is not an integer: {total}")
    return total.numerator


def format_quasipolynomial_sum(f: QuasiPolynomialSum, var: str = "n") -> str:
    """Stable text rendering: one `period r: [...]` line per component."""
    lines = []
    if f.shift:
        lines.append(f"shift: {f.shift}")
    if not f.components:
        lines.append("period 1: [0]")
    for comp in f.components:
        rendered = ", ".join(format_polynomial(p, var) for p in comp.pieces)
        lines.append(f"period {comp.period}: [{rendered}]")
    return "\n".join(lines)


def format_floor_expression(fe: FloorExpression, var: str = "n") -> str:
    """One line per period; rho denotes n - r*floor(n/r) for that period."""
    if not fe.terms:
        return "period 1: 0"
    lines = []
    for r, rho_polys in fe.terms:
        pieces = []
        for j, poly in enumerate(rho_polys):
            if poly.is_zero():
                continue
            body = format_polynomial(poly, var)
            if j == 0:
                pieces.append(f"({body})")
            elif j == 1:
                pieces.append(f"({body})*rho")
            else:
                pieces.append(f"({body})*rho^{j}")
        lines.append(f"period {r}: " + (" + ".join(pieces) if pieces else "0"))
    return "\n".join(lines)
