"""Symmetric-function transition matrices and multiplicative sequences.

Everything at weight k happens in k formal root variables x_1..x_k, whose
elementary symmetric functions play the role of the Pontrjagin classes
(e_j <-> p_j).  A characteristic series Q with Q(0) = 1 determines one
polynomial per weight: the weight-k part of prod_i Q(x_i).  In the
monomial-symmetric basis that part has coefficient prod_i Q_{mu_i} on m_mu,
so building the polynomial in the p's reduces to the single change of basis
m -> e done by m_to_e_matrix.

Expansions never materialize individual monomials.  A symmetric polynomial
is carried as its orbit sums (coefficient times orbit size, one integer per
dominant exponent), and multiplying by e_j only redistributes those sums:
each way of incrementing d_v of the c_v coordinates that currently hold the
value v contributes prod_v C(c_v, d_v) monomial pairs.  This keeps e_(1^k),
whose raw expansion has ~10^8 monomials at k = 16, down to p(k) numbers.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .linalg import RationalMatrix, invert
from .partitions import Partition, partition_index, partitions_of
from .series import PowerSeries


class TruncationTooShortError(ValueError):
    """Raised when a series is truncated below the requested weight."""


class DegreeMismatchError(ValueError):
    """Raised when a genus polynomial meets numbers of the wrong weight."""


class TransitionMatrix:
    """Integer change-of-basis matrix at one weight, partition-indexed.

    Rows and columns follow the canonical partition order.  For the e -> m
    direction, row lambda holds the monomial-basis coordinates of
    e_lambda = prod_i e_{lambda_i}; the m -> e direction is its inverse.
    """

    __slots__ = ("degree", "entries")

    def __init__(self, degree: int, entries):
        entries = tuple(tuple(int(e) for e in row) for row in entries)
        n = len(partitions_of(degree))
        if len(entries) != n or any(len(row) != n for row in entries):
            raise ValueError(f"expected a {n}x{n} matrix at degree {degree}")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("TransitionMatrix is immutable")

    def entry(self, row: Partition, col: Partition) -> int:
        return self.entries[partition_index(row)][partition_index(col)]

    def apply(self, vector) -> tuple[Fraction, ...]:
        """Matrix times column vector (vector indexed in canonical order)."""
        vector = [Fraction(v) for v in vector]
        return tuple(
            sum((Fraction(e) * v for e, v in zip(row, vector) if e), Fraction(0))
            for row in self.entries
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TransitionMatrix)
            and self.degree == other.degree
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"TransitionMatrix(degree={self.degree})"


def _orbit_size(mu: Partition, k: int) -> int:
    """Number of distinct permutations of mu's exponent vector in k variables."""
    denom = factorial(k - len(mu))
    for m in Counter(mu.parts).values():
        denom *= factorial(m)
    return factorial(k) // denom


def _bounded_compositions(total: int, bounds: list[int]):
    """All tuples d with 0 <= d_i <= bounds[i] and sum(d) = total."""
    if not bounds:
        if total == 0:
            yield ()
        return
    head = bounds[0]
    rest_cap = sum(bounds[1:])
    for d in range(min(head, total), -1, -1):
        if total - d > rest_cap:
            continue
        for tail in _bounded_compositions(total - d, bounds[1:]):
            yield (d,) + tail


def _multiply_by_elementary(counts: dict[Partition, int], j: int, k: int) -> dict[Partition, int]:
    """Multiply an orbit-sum representation by e_j in k variables."""
    out: dict[Partition, int] = {}
    for mu, c in counts.items():
        values = sorted(set(mu.parts), reverse=True) + [0]
        mults = [mu.parts.count(v) for v in values[:-1]] + [k - len(mu)]
        for d in _bounded_compositions(j, mults):
            weight = c * prod(comb(m, dv) for m, dv in zip(mults, d))
            new_parts = []
            for v, m, dv in zip(values, mults, d):
                new_parts.extend([v + 1] * dv)
                if v:
                    new_parts.extend([v] * (m - dv))
            nu = Partition(sorted(new_parts, reverse=True))
            out[nu] = out.get(nu, 0) + weight
    return out


@lru_cache(maxsize=None)
def e_to_m_matrix(k: int) -> TransitionMatrix:
    """Expansion of each e_lambda in the monomial-symmetric basis at degree k."""
    if k < 1:
        raise ValueError(f"degree must be positive, got {k}")
    parts = partitions_of(k)
    rows = []
    for lam in parts:
        counts = {Partition(()): 1}
        for part in lam.parts:
            counts = _multiply_by_elementary(counts, part, k)
        row = []
        for mu in parts:
            total = counts.get(mu, 0)
            orbit = _orbit_size(mu, k)
            q, r = divmod(total, orbit)
            if r:
                raise ArithmeticError("orbit sum not divisible by orbit size")
            row.append(q)
        rows.append(row)
    return TransitionMatrix(k, rows)


@lru_cache(maxsize=None)
def m_to_e_matrix(k: int) -> TransitionMatrix:
    """Exact inverse of e_to_m_matrix(k); integral because both bases are."""
    e2m = e_to_m_matrix(k)
    inv = invert(RationalMatrix.from_rows(e2m.entries))
    rows = []
    for i in range(inv.rows):
        row = []
        for j in range(inv.cols):
            e = inv.entry(i, j)
            if e.denominator != 1:
                raise ArithmeticError("m -> e transition came out non-integral")
            row.append(e.numerator)
        rows.append(row)
    return TransitionMatrix(k, rows)


class GenusPolynomial:
    """A rational linear combination of Pontrjagin monomials at one weight.

    Coefficients are keyed by the partition lambda of the monomial
    p_lambda = p_{lambda_1} ... p_{lambda_t}; absent keys mean zero.
    """

    __slots__ = ("_degree", "_coeffs")

    def __init__(self, degree: int, coefficients):
        if degree < 1:
            raise ValueError(f"degree must be positive, got {degree}")
        coeffs = {}
        for key, value in dict(coefficients).items():
            key = Partition(key)
            if key.weight != degree:
                raise ValueError(f"key {key} has weight {key.weight}, expected {degree}")
            value = Fraction(value)
            if value:
                coeffs[key] = value
        object.__setattr__(self, "_degree", degree)
        object.__setattr__(self, "_coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("GenusPolynomial is immutable")

    @property
    def degree(self) -> int:
        return self._degree

    def coefficient(self, p) -> Fraction:
        return self._coeffs.get(Partition(p), Fraction(0))

    def items(self):
        """(partition, coefficient) pairs over all partitions, canonical order."""
        return [(lam, self.coefficient(lam)) for lam in partitions_of(self._degree)]

    def coefficient_vector(self) -> tuple[Fraction, ...]:
        return tuple(c for _, c in self.items())

    def scaled(self, factor) -> "GenusPolynomial":
        factor = Fraction(factor)
        return GenusPolynomial(
            self._degree, {lam: c * factor for lam, c in self._coeffs.items()}
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GenusPolynomial)
            and self._degree == other._degree
            and self._coeffs == other._coeffs
        )

    def __repr__(self) -> str:
        terms = ", ".join(f"{lam}: {c}" for lam, c in sorted(
            self._coeffs.items(), key=lambda kv: partition_index(kv[0])))
        return f"GenusPolynomial(degree={self._degree}, {{{terms}}})"


def msequence_polynomial(series: PowerSeries, k: int) -> GenusPolynomial:
    """Degree-k polynomial of the multiplicative sequence attached to a series.

    The weight-k part of prod_{i=1..k} Q(x_i) carries coefficient
    prod_i Q_{mu_i} on each m_mu; converting m -> e and reading e_j as p_j
    yields the polynomial.
    """
    if k < 1:
        raise ValueError(f"weight must be positive, got {k}")
    if series.truncation_order < k:
        raise TruncationTooShortError(
            f"series truncated at {series.truncation_order}, need at least {k}"
        )
    if series.coefficient(0) != 1:
        raise ValueError("a characteristic series must have constant term 1")
    parts = partitions_of(k)
    m_coeffs = [prod((series.coefficient(p) for p in mu), start=Fraction(1)) for mu in parts]
    m2e = m_to_e_matrix(k)
    coeffs = {}
    for col, lam in enumerate(parts):
        c = sum(
            (mc * m2e.entries[row][col] for row, mc in enumerate(m_coeffs)
             if m2e.entries[row][col]),
            Fraction(0),
        )
        if c:
            coeffs[lam] = c
    return GenusPolynomial(k, coeffs)


def evaluate_genus(g: GenusPolynomial, v) -> Fraction:
    """Pair a genus polynomial with a vector of Pontrjagin numbers.

    Accepts either a mapping Partition -> Rational or any object exposing
    one as .p_numbers (a cobordism class).  Returns
    sum_lambda g[lambda] * v[lambda].
    """
    numbers = getattr(v, "p_numbers", v)
    total = Fraction(0)
    for lam, value in numbers.items():
        lam = Partition(lam)
        if lam.weight != g.degree:
            raise DegreeMismatchError(
                f"numbers have weight {lam.weight}, polynomial has degree {g.degree}"
            )
        c = g.coefficient(lam)
        if c:
            total += c * Fraction(value)
    return total
