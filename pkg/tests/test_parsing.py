import pytest

from qsphere.exactq import ONE, RatQ
from qsphere.ncalg import Mono, NCPoly, nc_mul, render_ncpoly
from qsphere.parsing import ParseError, parse_expr


def test_relation_examples():
    assert parse_expr("a*d - q^-1*b*c") == NCPoly.scalar(1)
    assert parse_expr("zeta") == NCPoly.mono(Mono(0, 1, 1, 0), RatQ.q_power(-1, -1))
    assert parse_expr("d*a - q*b*c") == NCPoly.scalar(1)


@pytest.mark.parametrize("text", ["b^-1", "zeta^-1", "a^-2", "(a + 1)^-1"])
def test_negative_exponent_on_letters(text):
    with pytest.raises(ParseError):
        parse_expr(text)


@pytest.mark.parametrize("text, pos", [("a*", 2), ("a b", 2), ("ab", 0), ("a + $", 4), ("(a", 2), ("a^q", 2)])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(ParseError) as err:
        parse_expr(text)
    assert err.value.pos == pos


def test_scalars_and_grouping():
    assert parse_expr("(q^2 - 1)^-1*(q - 1)*(q + 1)") == NCPoly.scalar(1)
    assert parse_expr("1/2*a + 1/2*a") == NCPoly.gen("a")
    assert parse_expr("-(a - b)") == parse_expr("b - a")
    assert parse_expr("  a *  d ") == parse_expr("a*d")


def test_precedence():
    assert parse_expr("a*b + c") == nc_mul(NCPoly.gen("a"), NCPoly.gen("b")) + NCPoly.gen("c")
    assert parse_expr("a*b^2") == nc_mul(NCPoly.gen("a"), parse_expr("b*b"))
    assert parse_expr("(a*b)^2") == parse_expr("a*b*a*b")


def test_render_parse_roundtrip():
    for text in ["a*d", "d*a*c*b", "zeta^3 + a*b*c*d", "(q + q^-1)*a^2*c - 3/2*b*d"]:
        x = parse_expr(text)
        assert parse_expr(render_ncpoly(x)) == x
