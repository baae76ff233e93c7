"""Tests for the expression parser and evaluator."""

import math

import pytest

from exprlang import (
    BinaryOp,
    Constant,
    Coordinate,
    Power,
    evaluate,
    parse_expression,
)
from jets import seed
from tests.unit.exprlang.test_exprlang_constants import EXACT, SPHERE_FACTOR
from utils.errors import (
    CoordinateRangeError,
    EvaluationDomainError,
    ExpressionSyntaxError,
    UnknownIdentifierError,
)


class TestParseExpression:
    """Test the grammar."""

    def test_sum_of_power_and_product(self) -> None:
        """Test the shape of x1^2 + 2*x2."""
        ast = parse_expression("x1^2 + 2*x2", 2)
        assert ast == BinaryOp(
            "+",
            Power(Coordinate(1), 2),
            BinaryOp("*", Constant(2.0), Coordinate(2)),
        )

    def test_sphere_factor(self) -> None:
        """Test that the conformal factor of the sphere parses and evaluates."""
        ast = parse_expression(SPHERE_FACTOR, 2)
        assert evaluate(ast, [0.0, 2.0], {}) == pytest.approx(0.25, abs=EXACT)

    def test_coordinate_out_of_range(self) -> None:
        """Test that x3 is rejected in dimension 2."""
        with pytest.raises(CoordinateRangeError):
            parse_expression("sqrt(x3)", 2)

    def test_unknown_identifier(self) -> None:
        """Test that unbound names are rejected."""
        with pytest.raises(UnknownIdentifierError):
            parse_expression("k*x1", 2)
        assert evaluate(parse_expression("k*x1", 2, {"k"}), [2.0, 0.0], {"k": 3.0}) == 6.0

    def test_unknown_function(self) -> None:
        """Test that calls to unknown functions are rejected."""
        with pytest.raises(UnknownIdentifierError):
            parse_expression("tan(x1)", 2)

    def test_half_power_rejected(self) -> None:
        """Test that ^0.5 is refused in favour of sqrt."""
        with pytest.raises(ExpressionSyntaxError, match="sqrt"):
            parse_expression("x1^0.5", 2)

    def test_syntax_error_offset(self) -> None:
        """Test that the byte offset of the offending token is reported."""
        with pytest.raises(ExpressionSyntaxError) as error:
            parse_expression("x1 + * x2", 2)
        assert error.value.offset == 5

    def test_unbalanced_parenthesis(self) -> None:
        """Test that a missing closing parenthesis is a syntax error."""
        with pytest.raises(ExpressionSyntaxError):
            parse_expression("(x1 + x2", 2)

    def test_unary_minus_binds_before_power(self) -> None:
        """Test that -x1^2 parses as -(x1^2)."""
        assert evaluate(parse_expression("-x1^2", 1), [3.0], {}) == -9.0

    def test_pretty_reparses(self) -> None:
        """Test that pretty output evaluates like the original text."""
        text = "exp(-x1)*cos(x2)/(2 - x1*x2) + log(1 + x2^2)"
        ast = parse_expression(text, 2)
        again = parse_expression(ast.pretty(), 2)
        for x in ([0.1, 0.2], [-0.7, 0.4], [1.3, -0.9]):
            assert evaluate(again, x, {}) == pytest.approx(evaluate(ast, x, {}), rel=1e-15)


class TestEvaluate:
    """Test evaluation on floats and jets."""

    def test_product(self) -> None:
        """Test x1*x2 at (3, 4)."""
        assert evaluate(parse_expression("x1*x2", 2), [3.0, 4.0], {}) == 12.0

    def test_sqrt_jet(self) -> None:
        """Test that jets carry the derivative of sqrt."""
        jet = evaluate(parse_expression("sqrt(x1)", 1), seed([4.0], [0], 1), {})
        assert jet.value == 2.0
        assert jet.partial((1,)) == pytest.approx(0.25)

    def test_float_matches_jet_constant_term(self) -> None:
        """Test that float evaluation equals the jet value exactly."""
        ast = parse_expression("sin(x1)*exp(x2)/(1 + x1^2) - sqrt(2 + x2)", 2)
        x = [0.37, -0.81]
        assert evaluate(ast, seed(x, [0, 1], 3), {}).value == evaluate(ast, x, {})

    def test_division_by_zero(self) -> None:
        """Test that dividing by zero raises a domain error."""
        with pytest.raises(EvaluationDomainError):
            evaluate(parse_expression("1/(x1 - 1)", 1), [1.0], {})

    def test_log_domain(self) -> None:
        """Test that log of a negative value raises a domain error."""
        with pytest.raises(EvaluationDomainError):
            evaluate(parse_expression("log(x1)", 1), [-math.e], {})
