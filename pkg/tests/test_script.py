import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chernkit.script import evaluate, parse, render, to_source
from chernkit.script.lexer import tokenize
from chernkit.script.evaluator import AssertionFailure, EvalError
from chernkit.script.parser import (
    BinOp,
    Call,
    IntLit,
    ListLit,
    Neg,
    ParseError,
    StaticError,
    parse_expression,
)


def run(src, fmt="text"):
    return evaluate(parse(src), fmt)


# lexer -----------------------------------------------------------------------

def test_tokens_positions():
    toks = tokenize("let X = P(2); # comment\nprint X;")
    assert [(t.kind, t.lexeme, t.line, t.column) for t in toks[:3]] == [
        ("keyword", "let", 1, 1), ("ident", "X", 1, 5), ("punct", "=", 1, 7)]
    assert toks[-1].kind == "eof"
    assert (toks[-3].lexeme, toks[-3].line, toks[-3].column) == ("X", 2, 7)


def test_lexing_is_total():
    toks = tokenize("a $ b == != @")
    kinds = [t.kind for t in toks]
    assert kinds.count("error") == 2 and kinds[-1] == "eof"
    assert "==" in [t.lexeme for t in toks] and "!=" in [t.lexeme for t in toks]


# parser ----------------------------------------------------------------------

def test_parse_valid():
    s = parse("let X = P(2); print disc_degree(twist(tangent(X), line(X,[1])));")
    assert len(s.statements) == 2


@pytest.mark.parametrize("src,line,col,msg", [
    ("let = 3;", 1, 5, "expected identifier"),
    ("print c(E,2;", 1, 12, "expected ')'"),
    ("print 1 +;", 1, 10, "expected expression"),
    ("print h^x;", 1, 9, "expected integer exponent"),
    ("assert 1 2;", 1, 10, "expected '==' or '!='"),
    ("print 1\nprint 2;", 2, 1, "expected ';'"),
    ("print $;", 1, 7, "unexpected character '$'"),
    ("3;", 1, 1, "expected 'let', 'print' or 'assert'"),
])
def test_parse_errors(src, line, col, msg):
    with pytest.raises(ParseError) as info:
        parse(src)
    assert (info.value.line, info.value.column, info.value.message) == (line, col, msg)


def test_precedence():
    e = parse_expression("-a^2 * b + c")
    assert isinstance(e, BinOp) and e.op == "+"
    mul = e.left
    assert mul.op == "*" and isinstance(mul.left, Neg)
    assert isinstance(mul.left.operand, BinOp) and mul.left.operand.op == "^"
    assert parse_expression("[1, -2]") == ListLit((1, -2))
    assert parse_expression("f()") == Call("f", ())
    assert parse_expression("1 - 2 - 3").left == BinOp("-", IntLit(1), IntLit(2))


def test_static_errors():
    for src, msg in [("print X;", "undefined variable 'X'"),
                     ("let X = 1; let X = 2;", "'X' is already defined"),
                     ("print nope(1);", "unknown function 'nope'")]:
        with pytest.raises(StaticError) as info:
            run(src)
        assert info.value.message == msg


CORPUS = [
    "let X = P(2); print disc_degree(twist(tangent(X), line(X,[1])));",
    "assert disc_degree(dsum(line(P(2),[1]), line(P(2),[1]))) == 0;",
    "print integral(P(2), ctotal(tangent(P(2))));",
    "let h = gen(P(3), 1); print (1 + h)^4 - -h * 2;",
    "print line(multiP(1, 2), [-1, 2]); # trailing comment",
    "let S = surface(); assert bog_branch(3) != 0;",
]


@pytest.mark.parametrize("src", CORPUS)
def test_round_trip_corpus(src):
    s = parse(src)
    assert parse(to_source(s)) == s


idents = st.sampled_from(["a", "b", "X", "h2"])
atoms = st.one_of(st.integers(0, 50).map(str), idents,
                  st.lists(st.integers(-5, 5), max_size=3).map(lambda v: "[" + ", ".join(map(str, v)) + "]"))


def _compose(children):
    return st.one_of(
        st.tuples(children, st.sampled_from(["+", "-", "*"]), children).map(lambda t: f"{t[0]} {t[1]} {t[2]}"),
        children.map(lambda c: f"-{c}"),
        children.map(lambda c: f"({c})"),
        st.tuples(children, st.integers(0, 4)).map(lambda t: f"({t[0]})^{t[1]}"),
        st.tuples(idents, st.lists(children, max_size=3)).map(lambda t: f"{t[0]}({', '.join(t[1])})"),
    )


expressions = st.recursive(atoms, _compose, max_leaves=12)


@settings(max_examples=150, deadline=None)
@given(expressions)
def test_round_trip_generated(src):
    node = parse_expression(src)
    assert parse_expression(to_source(node)) == node


# evaluation ------------------------------------------------------------------

def test_evaluate_examples():
    assert run("let X = P(2); print disc_degree(twist(tangent(X), line(X,[1])));") == ["24"]
    assert run("assert disc_degree(dsum(line(P(2),[1]), line(P(2),[1]))) == 0;") == []
    assert run("print integral(P(2), ctotal(tangent(P(2))));") == ["3"]


def test_evaluate_classes():
    assert run("let h = gen(P(2), 1); print 1 + 2*h;") == ["1 + 2*h"]
    assert run("let X = P(2); print ctotal(twist(tangent(X), 1));") == ["1 + 5*h + 7*h^2"]
    assert run("print c(sym(dsum(line(P(2),[1]), line(P(2),[2])), 2), 2);") == ["26*h^2"]
    assert run("print ch(dsum(line(P(2),[1]), line(P(2),[-1])));") == ["2 + h^2"]
    assert run("print 7 * 3 - 1;") == ["20"]
    assert run("print (1 + gen(P(1), 1))^3;") == ["1 + 3*h"]


def test_evaluate_projective_bundles():
    out = run("let F = projb(dsum(line(P(1),[0]), line(P(1),[1]))); let x = xi(F); print x^2; print integral(F, x^2);")
    assert out == ["(h)*xi", "1"]
    assert run("print bog_gamma(2);") == ["(-D*A + A^2) + (2*D - 2*A)*xi"]
    assert run("print bog_branch(3);") == ["6*D - 4*A"]
    assert run("assert bog_gamma(4) == bog_gamma_jet(4);") == []
    assert run("print disc_degree_jet(tangent(P(2)));") == ["6"]


def test_evaluate_bog_check():
    out = run("print bog_check(0, 0, -1, 1, 0, -1, 0);")[0]
    assert out.splitlines() == ["InstabilityReport", "  discriminant: 4",
                                "  bogomolov_inequality: true", "  destabilizer_valid: true",
                                "  c2_consistent: true"]


def test_runtime_errors_carry_position():
    with pytest.raises(EvalError) as info:
        run("let X = P(2);\nprint disc_degree(dsum(line(X,[1]), line(X,[1]), line(X,[1])));")
    assert (info.value.line, info.value.column) == (2, 7)
    assert "rank" in info.value.message
    with pytest.raises(EvalError):
        run("print P(2) + 1;")
    with pytest.raises(EvalError):
        run("print line(P(2), [1, 2]);")


def test_assertion_failure():
    with pytest.raises(AssertionFailure) as info:
        run("print 1;\nassert 1 + 1 == 3;")
    assert (info.value.line, info.value.column) == (2, 1)
    assert info.value.message == "assertion failed: 2 != 3"
    assert run("assert 1 != 2;") == []


# rendering -------------------------------------------------------------------

def test_render_number():
    from fractions import Fraction
    assert render(Fraction(24), "text") == "24"
    assert render(Fraction(24), "json") == '{"type":"number","text":"24","value":"24"}'
    assert render(Fraction(-1, 3), "text") == "-1/3"


def test_render_class_and_report():
    out = run("let h = gen(P(2), 1); print 1 + 2*h;", "json")[0]
    doc = json.loads(out)
    assert doc["type"] == "class" and doc["text"] == "1 + 2*h"
    assert doc["value"] == {"model": "P(2)", "terms": [["1", {}], ["2", {"h": 1}]]}
    rep = json.loads(run("print classify(dsum(line(P(3),[1]), line(P(3),[1])));", "json")[0])
    assert rep["type"] == "report"
    assert rep["value"]["defect_positive"] is True and rep["value"]["expected_degree"] == "0"


def test_render_is_stable():
    src = "print classify(twist(tangent(P(2)), 1)); print segre(tangent(P(3)));"
    assert run(src, "json") == run(src, "json")
