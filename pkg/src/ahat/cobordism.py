"""Generator manifolds, their products, and the kernel characterization check.

Rational oriented cobordism in dimension 4k is coordinatized by the full
vector of Pontrjagin numbers indexed by partitions of k.  The generators
used here are the Kummer quartic surface (weight 1) and the quaternionic
projective spaces HP^k (weight k >= 2); partition products of generators
give a basis of each graded piece, certified two ways (evaluation-matrix
determinant and Thom's top-s-number test).

The headline computation, verify_characterization, removes the all-Kummer
basis class (1,...,1) from the evaluation matrix and checks that the
remaining rows leave exactly a one-dimensional kernel spanned by the degree-k
A-hat polynomial, normalized by its value 2^k on that removed class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from types import MappingProxyType

from .linalg import RationalMatrix, determinant, kernel_basis
from .partitions import Partition, partition_splittings, partitions_of
from .series import PowerSeries, ahat_series, l_series
from .symfunc import GenusPolynomial, e_to_m_matrix, evaluate_genus, m_to_e_matrix, msequence_polynomial

DEFAULT_CAP = 16


class OutOfRangeError(ValueError):
    """Raised when a weight falls outside 1..cap."""


def _check_weight(k: int, cap: int, *, minimum: int = 1) -> None:
    if not minimum <= k <= cap:
        raise OutOfRangeError(f"weight {k} outside [{minimum}, {cap}]")


class CobordismClass:
    """A rational cobordism class of dimension 4k as its Pontrjagin numbers.

    p_numbers maps each partition of k to the number p_lambda[M]; zero
    entries are dropped.  The point class has weight 0 and number 1 on the
    empty partition.
    """

    __slots__ = ("_weight", "_p_numbers")

    def __init__(self, weight: int, p_numbers):
        if weight < 0:
            raise ValueError(f"weight must be nonnegative, got {weight}")
        numbers = {}
        for key, value in dict(p_numbers).items():
            key = Partition(key)
            if key.weight != weight:
                raise ValueError(f"key {key} has weight {key.weight}, expected {weight}")
            value = Fraction(value)
            if value:
                numbers[key] = value
        object.__setattr__(self, "_weight", weight)
        object.__setattr__(self, "_p_numbers", numbers)

    def __setattr__(self, name, value):
        raise AttributeError("CobordismClass is immutable")

    @property
    def weight(self) -> int:
        return self._weight

    @property
    def p_numbers(self):
        return MappingProxyType(self._p_numbers)

    def p_number(self, lam) -> Fraction:
        lam = Partition(lam)
        if lam.weight != self._weight:
            raise ValueError(f"{lam} has weight {lam.weight}, class has weight {self._weight}")
        return self._p_numbers.get(lam, Fraction(0))

    def p_vector(self) -> tuple[Fraction, ...]:
        """All Pontrjagin numbers in canonical partition order."""
        return tuple(self._p_numbers.get(lam, Fraction(0)) for lam in partitions_of(self._weight))

    def __mul__(self, other) -> "CobordismClass":
        if not isinstance(other, CobordismClass):
            return NotImplemented
        return product(self, other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CobordismClass)
            and self._weight == other._weight
            and self._p_numbers == other._p_numbers
        )

    def __hash__(self) -> int:
        return hash((self._weight, frozenset(self._p_numbers.items())))

    def __repr__(self) -> str:
        nums = ", ".join(f"{lam}: {v}" for lam, v in zip(partitions_of(self._weight), self.p_vector()))
        return f"CobordismClass(weight={self._weight}, {{{nums}}})"


@dataclass(frozen=True)
class SNumberVector:
    """Characteristic numbers in the monomial-symmetric (s-number) basis."""

    weight: int
    s_numbers: dict

    def s_number(self, lam) -> Fraction:
        return self.s_numbers.get(Partition(lam), Fraction(0))


def point_class() -> CobordismClass:
    """Unit of the cobordism ring: the class of a point."""
    return CobordismClass(0, {Partition(()): Fraction(1)})


def kummer_class() -> CobordismClass:
    """The Kummer surface (smooth quartic in CP^3) as a weight-1 class.

    Its first Chern class vanishes and its Euler characteristic is 24, so
    p_1 = c_1^2 - 2 c_2 evaluates to -48.  Cross-checks: signature
    p_1/3 = -16, A-hat value (-1/24)(-48) = 2.
    """
    return CobordismClass(1, {Partition((1,)): Fraction(-48)})


@lru_cache(maxsize=None)
def _quaternionic_p_classes(k: int) -> tuple[Fraction, ...]:
    """Coefficients (p_1, ..., p_k) of HP^k from (1+u)^(2k+2) (1+4u)^-1."""
    binomials = PowerSeries([comb(2 * k + 2, i) for i in range(k + 1)])
    linear = PowerSeries([1, 4] + [0] * (k - 1))
    total = binomials * linear.reciprocal()
    return tuple(total.coefficient(i) for i in range(1, k + 1))


@lru_cache(maxsize=None)
def _quaternionic_class(k: int) -> CobordismClass:
    ps = _quaternionic_p_classes(k)
    numbers = {}
    for lam in partitions_of(k):
        value = Fraction(1)
        for part in lam:
            value *= ps[part - 1]
        numbers[lam] = value
    return CobordismClass(k, numbers)


def quaternionic_class(k: int, *, cap: int = DEFAULT_CAP) -> CobordismClass:
    """HP^k (real dimension 4k) via its closed-form total Pontrjagin class.

    p_i is the u^i coefficient of (1+u)^(2k+2) (1+4u)^-1 and <u^k, [HP^k]> = 1,
    so every p_lambda is just the product of the matching coefficients.
    Note p_1(HP^1) = 0: HP^1 = S^4 is rationally null-cobordant.
    """
    _check_weight(k, cap)
    return _quaternionic_class(k)


def _generator(k: int) -> CobordismClass:
    return kummer_class() if k == 1 else _quaternionic_class(k)


def generator(k: int, *, cap: int = DEFAULT_CAP) -> CobordismClass:
    """The weight-k ring generator: Kummer at k = 1, HP^k for k >= 2."""
    _check_weight(k, cap)
    return _generator(k)


def p_to_s(c: CobordismClass) -> SNumberVector:
    """Convert Pontrjagin numbers to s-numbers (monomial-symmetric basis)."""
    if c.weight == 0:
        return SNumberVector(0, dict(c.p_numbers))
    s_vec = m_to_e_matrix(c.weight).apply(c.p_vector())
    parts = partitions_of(c.weight)
    return SNumberVector(c.weight, {lam: v for lam, v in zip(parts, s_vec) if v})


def s_to_p(v: SNumberVector) -> CobordismClass:
    """Inverse of p_to_s."""
    if v.weight == 0:
        return CobordismClass(0, dict(v.s_numbers))
    parts = partitions_of(v.weight)
    s_vector = [v.s_numbers.get(lam, Fraction(0)) for lam in parts]
    p_vec = e_to_m_matrix(v.weight).apply(s_vector)
    return CobordismClass(v.weight, {lam: val for lam, val in zip(parts, p_vec) if val})


def product(a: CobordismClass, b: CobordismClass) -> CobordismClass:
    """Ring product, computed by the s-number splitting rule.

    s_lambda[A x B] = sum over splittings mu + nu = lambda (as multisets)
    of s_mu[A] s_nu[B]; only splittings with matching weights contribute.
    """
    sa = p_to_s(a).s_numbers
    sb = p_to_s(b).s_numbers
    k = a.weight + b.weight
    out = {}
    for lam in partitions_of(k):
        total = Fraction(0)
        for mu, nu in partition_splittings(lam):
            if mu.weight != a.weight:
                continue
            x = sa.get(mu)
            if not x:
                continue
            y = sb.get(nu)
            if y:
                total += x * y
        if total:
            out[lam] = total
    return s_to_p(SNumberVector(k, out))


def product_p_basis_oracle(a: CobordismClass, b: CobordismClass) -> CobordismClass:
    """Brute-force product in the p-basis, kept as a cross-validation oracle.

    Expands each factor of p_lambda(A x B) by the Whitney rule
    p_j(A x B) = sum_{i} p_i(A) (x) p_{j-i}(B) and keeps the bidegree that
    pairs with [A] (x) [B].
    """
    import itertools

    k = a.weight + b.weight
    out = {}
    for lam in partitions_of(k):
        total = Fraction(0)
        for split in itertools.product(*(range(part + 1) for part in lam)):
            if sum(split) != a.weight:
                continue
            alpha = Partition(sorted((i for i in split if i), reverse=True))
            beta = Partition(sorted((p - i for p, i in zip(lam, split) if p - i), reverse=True))
            x = a.p_number(alpha)
            if not x:
                continue
            y = b.p_number(beta)
            if y:
                total += x * y
        if total:
            out[lam] = total
    return CobordismClass(k, out)


@lru_cache(maxsize=None)
def _basis_class(parts: tuple[int, ...]) -> CobordismClass:
    if not parts:
        return point_class()
    return product(_generator(parts[0]), _basis_class(parts[1:]))


def basis_class(lam, *, cap: int = DEFAULT_CAP) -> CobordismClass:
    """The class of prod_i N^{lambda_i}; the empty partition gives the point."""
    lam = Partition(lam)
    _check_weight(lam.weight, cap, minimum=0)
    return _basis_class(lam.parts)


def s_top_number(c: CobordismClass) -> Fraction:
    """s-number of the one-part partition (k): Thom's indecomposability detector."""
    return p_to_s(c).s_number(Partition((c.weight,)) if c.weight else ())


def basis_matrix(k: int, *, cap: int = DEFAULT_CAP) -> RationalMatrix:
    """Square evaluation matrix: rows are basis classes, columns p-monomials.

    Entry (lambda, mu) is p_mu of prod_i N^{lambda_i}, both indices in
    canonical partition order.
    """
    _check_weight(k, cap)
    return RationalMatrix.from_rows(
        [basis_class(lam, cap=cap).p_vector() for lam in partitions_of(k)]
    )


def verify_basis_sequence(k: int, *, cap: int = DEFAULT_CAP) -> bool:
    """Certify the generator products form bases in every weight up to k.

    Two independent certificates per weight j <= k: the evaluation matrix
    has nonzero determinant, and the generator has nonzero top s-number.
    """
    _check_weight(k, cap)
    return all(
        determinant(basis_matrix(j, cap=cap)) != 0
        and s_top_number(generator(j, cap=cap)) != 0
        for j in range(1, k + 1)
    )


@lru_cache(maxsize=None)
def _ahat_polynomial(k: int) -> GenusPolynomial:
    return msequence_polynomial(ahat_series(k), k)


def ahat_polynomial(k: int, *, cap: int = DEFAULT_CAP) -> GenusPolynomial:
    """Degree-k polynomial of the A-hat genus, e.g. -p_1/24 at k = 1."""
    _check_weight(k, cap)
    return _ahat_polynomial(k)


@lru_cache(maxsize=None)
def _l_polynomial(k: int) -> GenusPolynomial:
    return msequence_polynomial(l_series(k), k)


def l_polynomial(k: int, *, cap: int = DEFAULT_CAP) -> GenusPolynomial:
    """Degree-k polynomial of the signature genus, e.g. p_1/3 at k = 1."""
    _check_weight(k, cap)
    return _l_polynomial(k)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the kernel characterization check at one weight."""

    weight: int
    basis_ok: bool
    kernel_dimension: int
    kernel_matches_ahat: bool
    ahat_value_on_kummer_power: Fraction
    generator_ahat_values: dict

    @property
    def passed(self) -> bool:
        return (
            self.basis_ok
            and self.kernel_dimension == 1
            and self.kernel_matches_ahat
            and self.ahat_value_on_kummer_power == 2**self.weight
            and all(
                value == (2 if j == 1 else 0)
                for j, value in self.generator_ahat_values.items()
            )
        )


def _normalized(vector, reference):
    """Scale so the dot product with the reference vector is 1.

    Falls back to first-nonzero normalization when the pairing vanishes;
    used with the (K3)^k vector this mirrors the 2^k scaling of A-hat.
    """
    pairing = sum((x * r for x, r in zip(vector, reference) if x), Fraction(0))
    if pairing:
        return tuple(x / pairing for x in vector)
    pivot = next((x for x in vector if x), None)
    if pivot is None:
        return tuple(vector)
    return tuple(x / pivot for x in vector)


def verify_characterization(k: int, *, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Check that vanishing off (K3)^k pins a combination down to A-hat.

    Builds the (p(k)-1) x p(k) matrix of Pontrjagin vectors of every basis
    class except (1,...,1), takes its exact kernel, and compares the kernel
    line with the degree-k A-hat polynomial after both are normalized to
    value 1 on (K3)^k.  At k = 1 the constraint matrix has no rows and the
    kernel is the whole (one-dimensional) space.
    """
    _check_weight(k, cap)
    parts = partitions_of(k)
    kummer_power = parts[-1]  # canonical order puts (1,...,1) last
    constraint_rows = [
        basis_class(lam, cap=cap).p_vector() for lam in parts if lam != kummer_power
    ]
    matrix = RationalMatrix(len(constraint_rows), len(parts),
                            [e for row in constraint_rows for e in row])
    kernel = kernel_basis(matrix)

    reference = basis_class(kummer_power, cap=cap).p_vector()
    ahat = ahat_polynomial(k, cap=cap)
    ahat_vector = ahat.coefficient_vector()
    ahat_on_kummer_power = sum(
        (c * r for c, r in zip(ahat_vector, reference) if c), Fraction(0)
    )
    matches = len(kernel) == 1 and _normalized(kernel[0], reference) == _normalized(
        ahat_vector, reference
    )
    generator_values = {
        j: evaluate_genus(ahat_polynomial(j, cap=cap), generator(j, cap=cap))
        for j in range(1, k + 1)
    }
    return VerificationReport(
        weight=k,
        basis_ok=verify_basis_sequence(k, cap=cap),
        kernel_dimension=len(kernel),
        kernel_matches_ahat=matches,
        ahat_value_on_kummer_power=ahat_on_kummer_power,
        generator_ahat_values=generator_values,
    )
