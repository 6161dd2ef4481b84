"""Ring-file format: round trips, positions on errors, semantics."""

import pytest

from gradedrings import (
    GradingGroup,
    Zmod,
    build_rings,
    eval_expression,
    parse_expression,
    parse_ring_file,
    polynomial_ring,
)
from gradedrings.dsl import print_expr
from gradedrings.errors import ParseError, PresentationError


def _fixture_files():
    files = [
        "ring A { base Z grading Z gen x deg 1 }",
        "ring A { base Q grading Z gen x deg 1 gen y deg 2 }",
        "ring A { base Z/6 grading Z gen x deg 1 rel x^3 }",
        "ring A { base Z/4 grading Z gen x deg 1 rel x^2 reduction monic }",
        "ring A { base Q grading Z gen x deg 1 gen y deg 1 rel x*y reduction linear }",
        "ring A { base Z/5 grading Z/5 gen x deg 1 rel x^5 - 1 }",
        "ring A { base Z/6 grading Z gen x deg 1 invertible }",
        "ring A { base Z grading Z^2 gen x deg (1, 0) gen y deg (0, 1) }",
        "ring A { base Z grading Z^3 gen x deg (1, 0, -2) }",
        "ring A { base Q grading Z gen T deg 1 rel T^2 - 3*T }",
        "ring A { base Q grading Z/3 gen g deg 1 rel g^3 - 1 }",
        "ring A { base Z/9 grading Z gen x deg 2 rel x^3 }",
        "ring A { base Z/12 grading Z gen x deg 1 gen y deg 1 rel x^2 rel y^2 }",
        "ring A { base Z grading Z gen x deg -1 }",
        "ring A { base Q grading Z gen x deg 0 gen T deg 1 rel x*T - T }",
        "ring A { base Q grading Z gen x deg 1 rel 1/2*x^2 - x^2 reduction linear }",
        "ring A { base Z/8 grading Z gen x deg 1 rel x^2 - 4*x }",
        "ring A { base Z/6 grading Z gen x deg 1 rel -x^3 }",
        "ring A { base Q grading Z gen x deg 1 rel (x + 1)*x - x^2 - x reduction none }",
        "ring A { base Z/7 grading Z gen x deg 1 rel x^4 reduction monic }",
        "ring A { base Z grading Z gen a deg 1 gen b deg 1 gen c deg 1 }",
        ("ring A { base Z/6 grading Z gen x deg 1 rel x^3 }\n"
         "ring B { base Z/6 grading Z gen y deg 1 rel y^2 }"),
    ]
    assert len(files) >= 20
    return files


@pytest.mark.parametrize("text", _fixture_files())
def test_round_trip_identity(text):
    ast = parse_ring_file(text)
    printed = ast.to_text()
    again = parse_ring_file(printed)
    assert again == ast
    assert again.to_text() == printed


@pytest.mark.parametrize("expr", [
    "x", "-x", "x + y", "x - y - z", "x*y^2", "-(x + y)^3", "2*x + 3*x^-1",
    "1/3*g - g^2", "x*-y + 4", "-x^2", "(x - 1)*(x + 1)", "x^2 - -y",
])
def test_expression_round_trip(expr):
    node = parse_expression(expr)
    assert parse_expression(print_expr(node)) == node


@pytest.mark.parametrize("text,line,col,frag", [
    ("", 1, 1, "no ring blocks"),
    ("ring A { base Z gen x deg 1 rel 1/2 }", 1, 33, "rational literals"),
    ("ring A { grading Z gen x deg 1 }", 1, 1, "no base"),
    ("ring A { base Z base Q }", 1, 17, "duplicate base"),
    ("ring A { base Z/1 }", 1, 15, "at least 2"),
    ("ring A { base Z grading Z^0 }", 1, 25, "rank"),
    ("ring A { base Z gen rel deg 1 }", 1, 21, "keyword"),
    ("ring A { base Z gen x deg }", 1, 27, "expected"),
    ("ring A { base Z\ngen x deg 1\nrel x +\n}", 4, 1, "expected an expression"),
    ("ring A { base W }", 1, 15, "unknown base"),
    ("ring A { base Z reduction fast }", 1, 27, "unknown reduction"),
    ("ring A { base Z } ring A { base Z }", 1, 19, "duplicate ring name"),
])
def test_errors_carry_line_and_column(text, line, col, frag):
    with pytest.raises(ParseError) as exc:
        build_rings(parse_ring_file(text))
    err = exc.value
    assert err.line == line and err.col == col, str(err)
    assert frag in str(err)


def test_unexpected_character_position():
    with pytest.raises(ParseError) as exc:
        parse_ring_file("ring A { base Z }\nring B { b@se Z }")
    assert exc.value.line == 2 and exc.value.col == 11


def test_comments_and_whitespace_are_ignored():
    ast = parse_ring_file("""
        # leading comment
        ring A {   # trailing comment
          base Z/6
          grading Z
          gen x deg 1   # a generator
          rel x^3
        }
    """)
    assert len(ast.blocks) == 1
    assert ast.blocks[0].rels[0] is not None


def test_build_produces_working_rings():
    rings = build_rings(parse_ring_file(
        "ring Q6 { base Z/6 grading Z gen x deg 1 rel x^3 }"))
    ring = rings["Q6"]
    manual_free = polynomial_ring(Zmod(6), "x")
    manual = manual_free.quotient([manual_free.gen("x") ** 3])
    f = eval_expression(ring, "(1 + 2*x)^3")
    g = manual.convert((manual_free.one() + 2 * manual_free.gen("x")) ** 3)
    assert str(f) == str(g)
    assert (eval_expression(ring, "x^3")).is_zero()


def test_build_respects_grading_and_reduction_hints():
    rings = build_rings(parse_ring_file("""
        ring T { base Z/3 grading Z/3 gen x deg 1 rel x^3 - 1 }
        ring L { base Q grading Z gen x deg 1 gen y deg 1
                 rel x*y reduction linear }
    """))
    assert rings["T"].grading == GradingGroup.cyclic(3)
    assert rings["L"].reduction == "linear"
    assert (eval_expression(rings["T"], "x^3 - 1")).is_zero()


def test_semantic_errors_surface_from_build():
    ast = parse_ring_file(
        "ring A { base Z/5 grading Z gen x deg 1 rel x^5 - 1 }")
    with pytest.raises(PresentationError):
        build_rings(ast)


def test_eval_rejects_unknown_generators_and_bad_literals():
    rings = build_rings(parse_ring_file(
        "ring A { base Z/6 grading Z gen x deg 1 }"))
    with pytest.raises(ParseError):
        eval_expression(rings["A"], "x + q")
    with pytest.raises(Exception):
        eval_expression(rings["A"], "1/2")


def test_power_binds_tightest_and_unary_minus():
    rings = build_rings(parse_ring_file(
        "ring A { base Q grading Z gen x deg 1 }"))
    R = rings["A"]
    assert eval_expression(R, "-x^2") == -(R.gen("x") ** 2)
    assert eval_expression(R, "(-x)^2") == R.gen("x") ** 2
    assert eval_expression(R, "2*x^3") == 2 * R.gen("x") ** 3
