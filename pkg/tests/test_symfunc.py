import itertools
from fractions import Fraction

import pytest

from ahat.partitions import Partition, partitions_of
from ahat.series import PowerSeries, ahat_series, l_series
from ahat.symfunc import (
    DegreeMismatchError,
    GenusPolynomial,
    TruncationTooShortError,
    e_to_m_matrix,
    evaluate_genus,
    m_to_e_matrix,
    msequence_polynomial,
)


def naive_e_to_m_row(lam, k):
    """Oracle: expand e_lambda monomial by monomial in k variables.

    Keeps a dict keyed by full exponent tuples, then reads the coefficient
    of the dominant (sorted) representative of each orbit.  Exponential in
    k, so only used at small degree.
    """
    poly = {(0,) * k: 1}
    for part in lam:
        grown = {}
        for expo, c in poly.items():
            for positions in itertools.combinations(range(k), part):
                bumped = list(expo)
                for i in positions:
                    bumped[i] += 1
                key = tuple(bumped)
                grown[key] = grown.get(key, 0) + c
        poly = grown
    row = []
    for mu in partitions_of(k):
        dominant = tuple(mu.parts) + (0,) * (k - len(mu))
        row.append(poly.get(dominant, 0))
    return row


def idx(k, parts):
    return list(partitions_of(k)).index(Partition(parts))


class TestEToMMatrix:
    def test_degree_one(self):
        assert e_to_m_matrix(1).entries == ((1,),)

    def test_degree_two(self):
        # rows e_2, e_1^2 against columns m_(2), m_(1,1)
        assert e_to_m_matrix(2).entries == ((0, 1), (1, 2))

    def test_degree_three_row_e1e2(self):
        m = e_to_m_matrix(3)
        row = m.entries[idx(3, (2, 1))]
        assert row[idx(3, (2, 1))] == 1
        assert row[idx(3, (1, 1, 1))] == 3
        assert row[idx(3, (3,))] == 0

    @pytest.mark.parametrize("k", range(1, 6))
    def test_matches_naive_expansion(self, k):
        m = e_to_m_matrix(k)
        for i, lam in enumerate(partitions_of(k)):
            assert list(m.entries[i]) == naive_e_to_m_row(lam, k)

    def test_invalid_degree(self):
        with pytest.raises(ValueError):
            e_to_m_matrix(0)


class TestMToEMatrix:
    def test_degree_one(self):
        assert m_to_e_matrix(1).entries == ((1,),)

    def test_newton_identity_at_degree_two(self):
        # m_(2) = e_1^2 - 2 e_2
        m = m_to_e_matrix(2)
        row = m.entries[idx(2, (2,))]
        assert row[idx(2, (2,))] == -2
        assert row[idx(2, (1, 1))] == 1

    @pytest.mark.parametrize("k", range(1, 9))
    def test_inverse_of_e_to_m(self, k):
        e2m = e_to_m_matrix(k).entries
        m2e = m_to_e_matrix(k).entries
        n = len(e2m)
        for i in range(n):
            for j in range(n):
                entry = sum(e2m[i][t] * m2e[t][j] for t in range(n))
                assert entry == (1 if i == j else 0)

    @pytest.mark.parametrize("k", range(1, 9))
    def test_transition_is_unimodular(self, k):
        from ahat.linalg import RationalMatrix, determinant

        det = determinant(RationalMatrix.from_rows(e_to_m_matrix(k).entries))
        assert det in (1, -1)


class TestGenusPolynomial:
    def test_rejects_wrong_weight_keys(self):
        with pytest.raises(ValueError):
            GenusPolynomial(2, {Partition((1,)): 1})

    def test_zero_coefficients_dropped(self):
        g = GenusPolynomial(2, {Partition((2,)): 0, Partition((1, 1)): 1})
        h = GenusPolynomial(2, {Partition((1, 1)): 1})
        assert g == h

    def test_coefficient_default_zero(self):
        g = GenusPolynomial(2, {Partition((1, 1)): 1})
        assert g.coefficient(Partition((2,))) == 0

    def test_items_in_canonical_order(self):
        g = GenusPolynomial(2, {Partition((1, 1)): 5, Partition((2,)): 7})
        assert [(lam.parts, c) for lam, c in g.items()] == [((2,), 7), ((1, 1), 5)]

    def test_scaled(self):
        g = GenusPolynomial(1, {Partition((1,)): Fraction(-1, 24)})
        assert g.scaled(-24) == GenusPolynomial(1, {Partition((1,)): 1})


class TestMSequencePolynomial:
    def test_ahat_weight_one(self):
        g = msequence_polynomial(ahat_series(1), 1)
        assert g == GenusPolynomial(1, {Partition((1,)): Fraction(-1, 24)})

    def test_ahat_weight_two(self):
        g = msequence_polynomial(ahat_series(2), 2)
        assert g == GenusPolynomial(2, {
            Partition((2,)): Fraction(-4, 5760),
            Partition((1, 1)): Fraction(7, 5760),
        })

    def test_l_weight_two(self):
        g = msequence_polynomial(l_series(2), 2)
        assert g == GenusPolynomial(2, {
            Partition((2,)): Fraction(7, 45),
            Partition((1, 1)): Fraction(-1, 45),
        })

    @pytest.mark.parametrize("k", range(1, 7))
    def test_one_plus_z_reproduces_top_class(self, k):
        # Q = 1 + z makes prod(1 + x_i) = sum of elementary functions,
        # so the weight-k polynomial is exactly p_k
        q = PowerSeries([1, 1] + [0] * (k - 1))
        g = msequence_polynomial(q, k)
        assert g == GenusPolynomial(k, {Partition((k,)): 1})

    def test_truncation_too_short(self):
        with pytest.raises(TruncationTooShortError):
            msequence_polynomial(ahat_series(2), 3)

    def test_constant_term_must_be_one(self):
        with pytest.raises(ValueError):
            msequence_polynomial(PowerSeries([2, 1, 1]), 2)


class TestEvaluateGenus:
    def test_ahat_two_on_quaternionic_numbers(self):
        g = msequence_polynomial(ahat_series(2), 2)
        value = evaluate_genus(g, {Partition((2,)): 7, Partition((1, 1)): 4})
        assert value == 0

    def test_ahat_one_on_kummer_numbers(self):
        g = msequence_polynomial(ahat_series(1), 1)
        assert evaluate_genus(g, {Partition((1,)): -48}) == 2

    def test_zero_vector(self):
        g = msequence_polynomial(ahat_series(2), 2)
        assert evaluate_genus(g, {}) == 0
        assert evaluate_genus(g, {Partition((2,)): 0}) == 0

    def test_degree_mismatch(self):
        g = msequence_polynomial(ahat_series(2), 2)
        with pytest.raises(DegreeMismatchError):
            evaluate_genus(g, {Partition((1,)): 1})
