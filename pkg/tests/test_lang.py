import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from surreal.conway import OMEGA, Surreal, format_surreal
from surreal.errors import CutViolation, ParseError, PreconditionError, SurrealError
from surreal.lang import Command, Cut, Let, Num, Omega, evaluate, parse_expr, parse_line, show

from fuzz import expr, inputs
from strategies import surreals


@pytest.mark.parametrize("text,tree", [
    ("w + 1/2", "add(omega, 1/2)"),
    ("{0 | 1}", "cut([0], [1])"),
    ("w^(1/2)*2 - 3", "sub(mul(power(w, 1/2), 2), 3)"),
    ("-w^-1", "neg(power(w, neg(1)))"),
    ("{ | }", "cut([], [])"),
    ("x * (w - 1)", "mul(x, sub(omega, 1))"),
])
def test_parse_examples(text, tree):
    assert show(parse_expr(text)) == tree


def test_ast_nodes():
    assert parse_expr("{0 | 1}") == Cut((Num(Fraction(0)),), (Num(Fraction(1)),))
    assert parse_expr("ω") == Omega()
    assert parse_expr("6/4") == Num(Fraction(3, 2))


@pytest.mark.parametrize("text,value", [
    ("{0 | 1}", "1/2"),
    ("w - 1 + 1", "w"),
    ("{ | }", "0"),
    ("{0, 1, 2 | }", "3"),
    ("{1/2 - 1 | 1/2 + 1}", "0"),
    ("{w - 1 | w + 1}", "w"),
    ("{0 | w^-1}", "w^(-1)*(1/2)"),
    ("(w + 1)*(w - 1)", "w^2 - 1"),
    ("w^(w^-1)", "w^(w^(-1))"),
])
def test_evaluate_examples(text, value):
    assert format_surreal(evaluate(parse_expr(text))) == value


def test_lines():
    assert parse_line("let x = w - 1") == Let("x", parse_expr("w - 1"))
    c = parse_line(":sign 3/4")
    assert isinstance(c, Command) and c.verb == "sign" and c.argument == "3/4"
    assert parse_line("  :quit") == Command("quit", "", 7)
    assert evaluate(parse_expr("x + 1"), {"x": OMEGA}) == OMEGA + Surreal.from_rational(1)


@pytest.mark.parametrize("text,column", [
    ("w +", 4),
    ("w + 1/0", 5),
    ("(w", 3),
    ("{0 | 1", 7),
    ("w $ 1", 3),
    ("w^", 3),
    ("1 2", 3),
])
def test_error_positions(text, column):
    with pytest.raises(ParseError) as info:
        parse_expr(text)
    assert info.value.line == 1 and info.value.column == column


def test_let_errors():
    with pytest.raises(ParseError) as info:
        parse_line("let x = 1 +")
    assert info.value.column == 12
    with pytest.raises(ParseError):
        parse_line("let w = 1")
    with pytest.raises(ParseError):
        parse_line(": sign 1")


def test_evaluation_errors():
    with pytest.raises(CutViolation) as info:
        evaluate(parse_expr("{1 | 0}"))
    assert "cut([1], [0])" in str(info.value)
    with pytest.raises(PreconditionError):
        evaluate(parse_expr("y + 1"))


def test_nesting_limit_is_a_parse_error():
    with pytest.raises(ParseError):
        parse_expr("(" * 500 + "1" + ")" * 500)


def test_long_chains_evaluate():
    assert evaluate(parse_expr("+".join(["1"] * 3000))) == Surreal.from_rational(3000)
    assert evaluate(parse_expr("*".join(["w"] * 2000))) == Surreal([(2000, 1)])


@settings(max_examples=200, deadline=None)
@given(surreals)
def test_print_parse_round_trip(x):
    assert evaluate(parse_expr(format_surreal(x))) == x
    assert evaluate(parse_expr(format_surreal(x, explicit=True))) == x


def test_random_valid_expressions_round_trip():
    rng = random.Random(1)
    for _ in range(300):
        try:
            v = evaluate(parse_expr(expr(rng)))
        except SurrealError:
            continue
        assert evaluate(parse_expr(format_surreal(v))) == v


def test_fuzz_smoke():
    for line in inputs(7, 3000):
        try:
            parse_line(line)
        except ParseError as exc:
            assert 0 <= exc.pos <= len(line)
