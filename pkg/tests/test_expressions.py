import pytest
from hypothesis import given, strategies as st

from ahat.cobordism import OutOfRangeError, kummer_class, product, quaternionic_class
from ahat.expressions import (
    Kummer,
    ParseError,
    Power,
    Product,
    Quaternionic,
    parse_manifold,
    to_cobordism_class,
)
from ahat.partitions import Partition


atoms = st.one_of(st.builds(Kummer), st.builds(Quaternionic, st.integers(1, 9)))
expressions = st.recursive(
    atoms,
    lambda children: st.one_of(
        st.builds(Power, children, st.integers(1, 4)),
        st.lists(children, min_size=2, max_size=3).map(lambda fs: Product(tuple(fs))),
    ),
    max_leaves=8,
)


class TestParsing:
    def test_product(self):
        assert parse_manifold("K3 x HP2") == Product((Kummer(), Quaternionic(2)))

    def test_power(self):
        assert parse_manifold("K3^2") == Power(Kummer(), 2)

    def test_star_separator(self):
        assert parse_manifold("K3 * HP2") == parse_manifold("K3 x HP2")

    def test_whitespace_insensitive(self):
        assert parse_manifold("K3xHP2") == parse_manifold("  K3   x  HP 2 ")

    def test_case_insensitive(self):
        assert parse_manifold("k3 X hp2") == parse_manifold("K3 x HP2")

    def test_parenthesized_power(self):
        expr = parse_manifold("(K3 x HP2)^2")
        assert expr == Power(Product((Kummer(), Quaternionic(2))), 2)

    def test_nested_products_preserved(self):
        expr = parse_manifold("(K3 x K3) x HP2")
        assert expr == Product((Product((Kummer(), Kummer())), Quaternionic(2)))


class TestParseErrors:
    def test_hp_zero(self):
        with pytest.raises(ParseError) as exc:
            parse_manifold("HP0")
        assert exc.value.column == 3

    def test_zero_exponent(self):
        with pytest.raises(ParseError) as exc:
            parse_manifold("K3^0")
        assert exc.value.column == 4

    def test_unexpected_character(self):
        with pytest.raises(ParseError) as exc:
            parse_manifold("K3 + HP2")
        assert exc.value.column == 4

    def test_missing_exponent(self):
        with pytest.raises(ParseError) as exc:
            parse_manifold("K3 ^")
        assert exc.value.column == 5

    def test_missing_hp_index(self):
        with pytest.raises(ParseError) as exc:
            parse_manifold("HP")
        assert exc.value.column == 3

    def test_empty_input(self):
        with pytest.raises(ParseError) as exc:
            parse_manifold("")
        assert exc.value.column == 1

    def test_unclosed_paren(self):
        with pytest.raises(ParseError) as exc:
            parse_manifold("(K3 x HP2")
        assert exc.value.column == 10

    def test_trailing_garbage(self):
        with pytest.raises(ParseError) as exc:
            parse_manifold("K3 HP2")
        assert exc.value.column == 4

    def test_message_carries_column_and_expectation(self):
        with pytest.raises(ParseError, match="column 1: expected 'K3'"):
            parse_manifold("^2")


class TestWeights:
    def test_atom_weights(self):
        assert Kummer().weight == 1
        assert Quaternionic(3).weight == 3

    def test_compound_weight(self):
        assert parse_manifold("K3 x HP2").weight == 3
        assert parse_manifold("(K3 x HP2)^2").weight == 6
        assert parse_manifold("K3^2").weight == 2


class TestEvaluation:
    def test_kummer(self):
        assert to_cobordism_class(parse_manifold("K3")) == kummer_class()

    def test_product_expression(self):
        expected = product(kummer_class(), quaternionic_class(2))
        assert to_cobordism_class(parse_manifold("K3 x HP2")) == expected

    def test_power_expression(self):
        expected = product(kummer_class(), kummer_class())
        assert to_cobordism_class(parse_manifold("K3^2")) == expected

    def test_hp_one_is_zero_class(self):
        cls = to_cobordism_class(parse_manifold("HP1"))
        assert cls.weight == 1
        assert cls.p_number(Partition((1,))) == 0

    def test_weight_above_cap_rejected(self):
        with pytest.raises(OutOfRangeError):
            to_cobordism_class(parse_manifold("K3^17"))
        with pytest.raises(OutOfRangeError):
            to_cobordism_class(parse_manifold("K3^3"), cap=2)

    @given(expressions)
    def test_weight_matches_class_weight(self, expr):
        if expr.weight <= 8:
            assert to_cobordism_class(expr).weight == expr.weight


class TestRoundTrip:
    @given(expressions)
    def test_render_then_parse_is_identity(self, expr):
        assert parse_manifold(expr.render()) == expr

    def test_render_examples(self):
        assert parse_manifold("K3^2 x HP3").render() == "K3^2 x HP3"
        assert parse_manifold("(K3 x HP2)^2").render() == "(K3 x HP2)^2"
