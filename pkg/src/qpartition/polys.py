"""Exact dense polynomial arithmetic over the rationals, truncated power
series of rational functions, cyclotomic factorizations of products
(1-q^s), and partial fraction decomposition over cyclotomic bases.

Polynomials are dense coefficient tuples in ascending degree with no
trailing zeros; the zero polynomial is the empty tuple.  All coefficients
are `fractions.Fraction`, so every identity in this module is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DomainError

Rat = Fraction | int


def _frac(x: Rat | str) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Polynomial:
    """Dense univariate polynomial over Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rat | str] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial((1,))

    @staticmethod
    def constant(c: Rat | str) -> "Polynomial":
        return Polynomial((c,))

    @staticmethod
    def monomial(c: Rat | str, degree: int) -> "Polynomial":
        if degree < 0:
            raise DomainError("monomial degree must be >= 0")
        return Polynomial((0,) * degree + (c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial | Rat") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise DomainError("negative polynomial power")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise DomainError("polynomial division by zero")
        q = [Fraction(0)] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        rem = list(self.coeffs)
        dlead = other.lead
        dn = len(other.coeffs)
        while len(rem) >= dn:
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) < dn:
                break
            t = rem[-1] / dlead
            shift = len(rem) - dn
            q[shift] = t
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= t * c
            rem.pop()
        return Polynomial(q), Polynomial(rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise DomainError("polynomial division is not exact")
        return q

    def __call__(self, x: Rat) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self * (1 / self.lead)

    def truncated(self, length: int) -> "Polynomial":
        """Coefficients 0..length-1 only (discard higher-degree terms)."""
        return Polynomial(self.coeffs[:length])

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self, 'q')!r})"


def format_rational(x: Fraction) -> str:
    return str(x)


def format_polynomial(p: Polynomial, var: str = "n") -> str:
    """Stable human-readable rendering, descending degree: `n^3/144 + 5*n^2/48`."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if c == 0:
            continue
        num, den = abs(c.numerator), c.denominator
        if k == 0:
            body = str(num) + (f"/{den}" if den != 1 else "")
        else:
            varpart = var if k == 1 else f"{var}^{k}"
            body = ("" if num == 1 else f"{num}*") + varpart + (f"/{den}" if den != 1 else "")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


@dataclass(frozen=True)
class PowerSeries:
    """Truncated power series: exactly truncation_order+1 coefficients."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError("a power series holds at least the order-0 coefficient")
        object.__setattr__(self, "coeffs", tuple(_frac(c) for c in self.coeffs))

    @property
    def truncation_order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)


def series_expand(numerator: Polynomial, parts: Iterable[int], order: int) -> PowerSeries:
    """Maclaurin coefficients 0..order of numerator(q) / prod (1-q^s) for s in parts.

    Each 1/(1-q^s) factor is applied as a cumulative sum with stride s (the
    coin-change recurrence), so the result doubles as an exact counting oracle.
    """
    parts = list(parts)
    if not parts:
        raise DomainError("the part multiset must be nonempty")
    if any(s < 1 for s in parts):
        raise DomainError("all parts must be >= 1")
    if order < 0:
        raise DomainError("series order must be >= 0")
    cs = [numerator[k] for k in range(order + 1)]
    for s in parts:
        for i in range(s, order + 1):
            cs[i] += cs[i - s]
    return PowerSeries(tuple(cs))


def series_of_ratio(numerator: Polynomial, denominator: Polynomial, order: int) -> PowerSeries:
    """Maclaurin coefficients 0..order of numerator/denominator (denominator(0) != 0)."""
    if order < 0:
        raise DomainError("series order must be >= 0")
    d0 = denominator[0]
    if d0 == 0:
        raise DomainError("denominator must have nonzero constant term")
    dn = denominator.coeffs
    out: list[Fraction] = []
    for t in range(order + 1):
        acc = numerator[t]
        for u in range(1, min(t, len(dn) - 1) + 1):
            acc -= dn[u] * out[t - u]
        out.append(acc / d0)
    return PowerSeries(tuple(out))


@lru_cache(maxsize=None)
def cyclotomic_normalized(d: int) -> Polynomial:
    """The d-th cyclotomic polynomial C_d, normalized to constant term 1.

    C_1 = 1-q and C_d is the usual cyclotomic polynomial for d >= 2, so that
    1 - q^s = prod over d | s of C_d(q).
    """
    if d < 1:
        raise DomainError("cyclotomic index must be >= 1")
    if d == 1:
        return Polynomial((1, -1))
    # (1 - q^d) divided by the C_e for all proper divisors e of d.
    p = Polynomial((1,) + (0,) * (d - 1) + (-1,))
    for e in range(1, d):
        if d % e == 0:
            p = p.exact_div(cyclotomic_normalized(e))
    return p


@dataclass
class CyclotomicFactorization:
    """Multiplicities e_d such that prod C_d^{e_d} equals prod (1-q^s)."""

    multiplicities: dict[int, int]

    def periods(self) -> list[int]:
        return sorted(self.multiplicities)

    def degree(self) -> int:
        return sum(e * cyclotomic_normalized(d).degree for d, e in self.multiplicities.items())

    def denominator(self) -> Polynomial:
        p = Polynomial.one()
        for d, e in sorted(self.multiplicities.items()):
            p = p * cyclotomic_normalized(d) ** e
        return p


def factor_denominator(parts: Iterable[int]) -> CyclotomicFactorization:
    """Cyclotomic factorization of prod (1-q^s) over the multiset of parts."""
    parts = list(parts)
    if not parts:
        raise DomainError("the part multiset must be nonempty")
    if any(s < 1 for s in parts):
        raise DomainError("all parts must be >= 1")
    mult: dict[int, int] = {}
    for d in range(1, max(parts) + 1):
        e = sum(1 for s in parts if s % d == 0)
        if e:
            mult[d] = e
    return CyclotomicFactorization(mult)


def _int_coeffs(p: Polynomial) -> list[int]:
    return [c.numerator for c in p.coeffs]


def _int_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return out


def _int_pow(a: list[int], n: int) -> list[int]:
    result = [1]
    while n:
        if n & 1:
            result = _int_mul(result, a)
        a = _int_mul(a, a) if n > 1 else a
        n >>= 1
    return result


def _int_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Integer-polynomial division; requires den with leading coefficient +-1
    so every quotient step stays integral."""
    lead = den[-1]
    assert lead in (1, -1)
    rem = list(num)
    q = [0] * max(0, len(rem) - len(den) + 1)
    while len(rem) >= len(den):
        if rem[-1] == 0:
            rem.pop()
            continue
        t = rem[-1] * lead
        shift = len(rem) - len(den)
        q[shift] = t
        for i, c in enumerate(den):
            rem[shift + i] -= t * c
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return q, rem


def poly_xgcd(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Extended gcd: returns monic g and u, v with u*a + v*b = g exactly."""
    if a.is_zero() and b.is_zero():
        raise DomainError("gcd of two zero polynomials is undefined")
    r0, r1 = a, b
    u0, u1 = Polynomial.one(), Polynomial.zero()
    v0, v1 = Polynomial.zero(), Polynomial.one()
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    scale = 1 / r0.lead
    return r0 * scale, u0 * scale, v0 * scale


def _invert_mod_power(a: Polynomial, base: Polynomial, power: int) -> Polynomial:
    """Inverse of a modulo base**power; base-level inverse via poly_xgcd, then
    Newton lifting (doubles the precision each step)."""
    g, u, _ = poly_xgcd(a % base, base)
    if g.degree != 0:
        raise DomainError("polynomial is not invertible modulo the given base")
    x = (u * (1 / g[0])) % base
    k = 1
    while k < power:
        k = min(2 * k, power)
        modulus = base**k
        ak = a % modulus
        x = (x * (Polynomial.constant(2) - ak * x)) % modulus
    return x


@dataclass(frozen=True)
class PartialFractionTerm:
    """One term numerator / C_period^power with deg(numerator) < deg(C_period)."""

    period: int
    power: int
    numerator: Polynomial


@dataclass(frozen=True)
class PartialFractionDecomposition:
    polynomial_part: Polynomial
    terms: tuple[PartialFractionTerm, ...]

    def terms_for_period(self, d: int) -> list[PartialFractionTerm]:
        return [t for t in self.terms if t.period == d]

    def series(self, order: int) -> PowerSeries:
        """Expand the whole decomposition as a series (for reconstruction checks)."""
        cs = [self.polynomial_part[k] for k in range(order + 1)]
        for t in self.terms:
            den = cyclotomic_normalized(t.period) ** t.power
            for k, c in enumerate(series_of_ratio(t.numerator, den, order)):
                cs[k] += c
        return PowerSeries(tuple(cs))


def partial_fractions(
    numerator: Polynomial, fact: CyclotomicFactorization
) -> PartialFractionDecomposition:
    """Exact decomposition of numerator / prod C_d^{e_d} into cyclotomic blocks.

    Per period d the block numerator is numerator * (D/C_d^{e_d})^{-1} modulo
    C_d^{e_d}; C_d-adic digit extraction then splits the block across powers
    1..e_d.  Requires a proper rational function (polynomial part is zero).
    """
    total_degree = fact.degree()
    if numerator.degree >= total_degree:
        raise DomainError(
            "partial_fractions requires a proper rational function "
            f"(numerator degree {numerator.degree} >= denominator degree {total_degree})"
        )
    terms: list[PartialFractionTerm] = []
    if not numerator.is_zero():
        # Cyclotomic products have integer coefficients and unit lead, so the
        # big denominator divisions run on plain ints; only the block-local
        # work (degree < deg C_d^{e_d}) touches Fractions.
        blocks = {
            d: _int_pow(_int_coeffs(cyclotomic_normalized(d)), e)
            for d, e in fact.multiplicities.items()
        }
        denominator_int = [1]
        for d in fact.periods():
            denominator_int = _int_mul(denominator_int, blocks[d])
        for d in fact.periods():
            e = fact.multiplicities[d]
            c_d = cyclotomic_normalized(d)
            block_mod = c_d**e
            quotient, remainder = _int_divmod(denominator_int, blocks[d])
            assert not remainder
            cofactor = Polynomial(_int_divmod(quotient, blocks[d])[1])
            inv = _invert_mod_power(cofactor, c_d, e)
            block = (numerator % block_mod) * inv % block_mod
            # C_d-adic digits: block = sum_t digit_t * C_d^t, deg(digit) < deg(C_d).
            for t in range(e):
                block, digit = divmod(block, c_d)
                if not digit.is_zero():
                    terms.append(PartialFractionTerm(d, e - t, digit))
    terms.sort(key=lambda t: (t.period, t.power))
    return PartialFractionDecomposition(Polynomial.zero(), tuple(terms))
