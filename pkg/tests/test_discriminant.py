import pytest

from chernkit.bundle_calculus import direct_sum, trivial_bundle, twist_by_line
from chernkit.catalog import cotangent, line_bundle, multi_projective, projective_space, tangent
from chernkit.discriminant import (
    HYPOTHESES_NOTE,
    classify,
    closed_form_degree,
    degree_terms,
    expected_degree,
    jet_route_degree,
    ramification_profile,
)
from chernkit.errors import ModeRankMismatch, RankOutOfRange
from corpus import has_closed_form, split, split_corpus, tangent_twists
from oracles import expected_degree_split

P1, P2, P3 = (projective_space(n) for n in (1, 2, 3))


def test_profile_line_on_p1():
    prof = ramification_profile(line_bundle(P1, [2]))
    assert prof.rhos == (0, 1)
    assert prof.codimension == 1
    assert str(prof) == "(1)*zeta"


def test_profile_tangent_p2():
    prof = ramification_profile(tangent(P2))
    assert prof.rhos == (0, 2)


def test_profile_rank_equals_dim_shape():
    # rho_0 = c1(Ω) + c1(E), rho_1 = n
    for n in range(1, 5):
        X = projective_space(n)
        E = split(X, [1] * (n - 1) + [2])
        prof = ramification_profile(E)
        assert prof.rhos[0] == cotangent(X).c(1) + E.c(1)
        assert prof.rhos[1] == n


def test_profile_homogeneous():
    for n, _, E in split_corpus(4, 2):
        prof = ramification_profile(E)
        assert len(prof.rhos) == prof.codimension + 1
        for j, rho in enumerate(prof.rhos):
            assert rho.is_homogeneous(prof.codimension - j)


def test_expected_degree_examples():
    for n in range(1, 5):
        assert expected_degree(split(projective_space(n), [1] * n)) == 0
    assert expected_degree(split(P3, [1, 2])) == 5
    h = P2.gen("h")
    for d in range(4):
        assert expected_degree(twist_by_line(tangent(P2), d * h)) == 6 * (d + 1) ** 2


def test_closed_forms():
    assert closed_form_degree(line_bundle(P2, [2]), "e1") == 3
    for n, d, val in [(1, 3, 4), (2, 3, 12), (3, 2, 4)]:
        assert closed_form_degree(line_bundle(projective_space(n), [d]), "e1") == val
    assert closed_form_degree(split(P3, [1, 1]), "en_minus_1") == 0
    assert closed_form_degree(split(P3, [1, 2])) == 5
    with pytest.raises(ModeRankMismatch):
        closed_form_degree(split(P3, [1, 1]), "en")
    with pytest.raises(ModeRankMismatch):
        closed_form_degree(split(projective_space(4), [1, 1]))


def test_jet_route_examples():
    assert jet_route_degree(line_bundle(P1, [3])) == 4
    assert jet_route_degree(tangent(P2)) == 6
    assert jet_route_degree(split(P2, [1, 1])) == 0


def test_classify():
    r = classify(split(P3, [1, 1, 1]))
    assert r.expected_degree == 0 and r.defect_positive and r.hypotheses_note == HYPOTHESES_NOTE
    r = classify(twist_by_line(tangent(P2), P2.gen("h")))
    assert r.expected_degree == 24 and not r.defect_positive
    assert classify(split(P3, [1, 1])).defect_positive


def test_rank_out_of_range():
    with pytest.raises(RankOutOfRange):
        expected_degree(split(P2, [1, 1, 1]))
    with pytest.raises(RankOutOfRange):
        ramification_profile(trivial_bundle(P2, 0))
    with pytest.raises(RankOutOfRange):
        jet_route_degree(split(P1, [1, 1]))


@pytest.mark.parametrize("n,degrees,E", split_corpus(4, 3), ids=lambda v: None)
def test_against_sympy_oracle(n, degrees, E):
    assert expected_degree(E) == expected_degree_split(n, degrees)


@pytest.mark.parametrize("degrees", [(-1, 2), (0, 0), (-2,), (3, -1, 0)])
def test_signed_values_against_oracle(degrees):
    X = projective_space(3)
    assert expected_degree(split(X, degrees)) == expected_degree_split(3, degrees)


def test_tail_terms_vanish():
    for _, _, E in split_corpus(4, 3) + tangent_twists():
        terms = degree_terms(ramification_profile(E))
        assert sum(terms[2:]) == 0


def test_pipelines_agree():
    for n, _, E in split_corpus(4, 2) + tangent_twists(4, 2):
        delta = expected_degree(E)
        assert jet_route_degree(E) == delta
        if has_closed_form(n, E.rank):
            assert closed_form_degree(E) == delta


def test_product_base():
    X = multi_projective(1, 1)
    L = line_bundle(X, [2, 2])
    # e1 closed form by hand: c2(Ω) + 2 c1(Ω)L + 3 L^2 = 4 - 16 + 24
    delta = expected_degree(L)
    assert delta == jet_route_degree(L) == closed_form_degree(L, "e1") == 12
    E = direct_sum(line_bundle(X, [1, 0]), line_bundle(X, [0, 1]))
    assert expected_degree(E) == jet_route_degree(E) == closed_form_degree(E)
