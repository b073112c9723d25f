import pytest

from chernkit.catalog import projective_space
from chernkit.discriminant import closed_form_degree, expected_degree
from chernkit.catalog import line_bundle
from chernkit.errors import ModelMismatch, OutOfTable
from chernkit.oracle_split import (
    CLASSICAL_DISCRIMINANT_DEGREES,
    SplitBundle,
    oracle_disc_small,
    oracle_dual,
    oracle_sum,
    oracle_sym,
    oracle_tensor,
    oracle_twist,
)
from oracles import binary_form_discriminant_degree, conic_discriminant_degree

P2 = projective_space(2)
h = P2.gen("h")


def test_spec_examples():
    T = oracle_tensor(SplitBundle(P2, (1, 1)), SplitBundle(P2, (1, 2)))
    assert T.degrees == (2, 2, 3, 3)
    assert T.chern() == 1 + 10 * h + 37 * h ** 2
    assert oracle_sym(SplitBundle(P2, (1, 2)), 2).degrees == (2, 3, 4)
    D = oracle_dual(SplitBundle(P2, (1, 2)))
    assert D.degrees == (-2, -1) and D.chern() == 1 - 3 * h + 2 * h ** 2
    assert oracle_twist(SplitBundle(P2, (0, 1)), 2).degrees == (2, 3)
    assert oracle_sum(SplitBundle(P2, (1,)), SplitBundle(P2, (0,))).rank == 2


def test_model_mismatch():
    with pytest.raises(ModelMismatch):
        oracle_tensor(SplitBundle(P2, (1,)), SplitBundle(projective_space(3), (1,)))


def test_rank_limits():
    with pytest.raises(ValueError):
        oracle_sym(SplitBundle(P2, (1, 1, 1)), 2)
    assert oracle_sym(SplitBundle(P2, (3,)), 2).degrees == (6,)


def test_disc_table_lookup():
    assert oracle_disc_small(1, 3) == 4
    assert oracle_disc_small(2, 2) == 3
    assert oracle_disc_small(1, 2) == 2
    with pytest.raises(OutOfTable):
        oracle_disc_small(7, 7)


@pytest.mark.parametrize("d", range(2, 6))
def test_binary_forms_against_sympy(d):
    assert oracle_disc_small(1, d) == binary_form_discriminant_degree(d)


def test_conic_against_sympy():
    assert oracle_disc_small(2, 2) == conic_discriminant_degree()


@pytest.mark.parametrize("key", sorted(CLASSICAL_DISCRIMINANT_DEGREES))
def test_table_matches_engine(key):
    n, d = key
    X = projective_space(n)
    L = line_bundle(X, [d])
    assert expected_degree(L) == oracle_disc_small(n, d)
    assert closed_form_degree(L, "e1") == oracle_disc_small(n, d)
