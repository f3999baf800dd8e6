from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from coha.exterior import d_left, d_right, monomial, one, phi, wedge
from coha.operators import (
    GradedOperator,
    ad_pow,
    anticommutator,
    chevalley_generators,
    commutator,
    grading_h,
    index_of,
    lemma_action_table,
    lower,
    mask_of,
    operator_by_name,
    projected_generators,
    raise_,
    twisted_lower,
)
from coha.partitions import wedge_indices


def P(*k, n):
    return monomial(k, 1, n)


@st.composite
def operators(draw, n=3):
    names = ["H"] + [f"{h}:{i}" for h in ("raise", "lower", "tlower", "T", "S") for i in range(n)]
    names += [f"{h}:{i}" for h in ("E", "F", "Hi") for i in range(n + 1)]
    op = operator_by_name(draw(st.sampled_from(names)), n)
    return op * Fraction(draw(st.integers(-3, 3)), draw(st.integers(1, 4)))


# -- storage -------------------------------------------------------------------


def test_mask_round_trip():
    for m in range(64):
        assert mask_of(index_of(m)) == m


def test_normalised_by_gcd():
    op = GradedOperator(1, np.array([[2, 0], [0, 4]]), 6)
    assert op.den == 3
    assert op.num.toarray().tolist() == [[1, 0], [0, 2]]
    assert GradedOperator(1, np.zeros((2, 2)), 5).den == 1


def test_shape_and_denominator_checked():
    with pytest.raises(ValueError):
        GradedOperator(2, np.eye(2))
    with pytest.raises(ValueError):
        GradedOperator(1, np.eye(2), 0)


def test_from_columns_matches_action():
    n = 3
    op = twisted_lower(1, n) * Fraction(2, 3)
    assert GradedOperator.from_columns(n, op.action) == op


@given(operators(), operators(), operators())
def test_operator_algebra(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)
    assert a @ (b + c) == a @ b + a @ c
    assert commutator(a, b) == -commutator(b, a)
    # Jacobi identity
    jac = (commutator(a, commutator(b, c)) + commutator(b, commutator(c, a))
           + commutator(c, commutator(a, b)))
    assert jac.is_zero()


@given(operators())
def test_commutator_with_self(a):
    assert commutator(a, a).is_zero()
    b = raise_(1, 3)
    assert ad_pow(a, 0, b) == b
    assert ad_pow(a, 2, b) == commutator(a, commutator(a, b))


@given(operators(), st.sampled_from(list(wedge_indices(3))))
def test_call_matches_matrix(a, k):
    dense = a.num.toarray()
    col = dense[:, mask_of(k)]
    expect = {index_of(r): Fraction(int(v), a.den) for r, v in enumerate(col) if v}
    assert a(monomial(k, 1, 3)).terms == expect


def test_first_difference_and_ratio():
    a, b = raise_(0, 2), raise_(1, 2)
    assert a.first_difference(a) is None
    assert a.first_difference(b) == 0
    assert (a * Fraction(-3, 2)).scalar_ratio(a) == Fraction(-3, 2)
    assert a.scalar_ratio(b) is None
    with pytest.raises(ZeroDivisionError):
        a.scalar_ratio(GradedOperator.zero(2))


def test_mismatched_bounds():
    with pytest.raises(ValueError):
        raise_(0, 2) + raise_(0, 3)
    with pytest.raises(ValueError):
        raise_(0, 2)(monomial((0,), 1, 3))


# -- basic operators ------------------------------------------------------------


def test_raise_examples():
    assert raise_(2, 4)(P(0, 1, n=4)) == P(0, 1, 2, n=4)
    assert raise_(1, 4)(P(0, n=4)) == -P(0, 1, n=4)
    assert raise_(4, 4).is_zero()


def test_lower_examples():
    assert lower(1, 2)(P(0, 1, n=2)) == P(0, n=2)
    assert lower(0, 2)(P(0, 1, n=2)) == -P(1, n=2)
    assert lower(0, 2)(one(2)).terms == {}


def test_twisted_lower_examples():
    assert twisted_lower(1, 2)(P(0, 1, n=2)) == -P(0, n=2)
    assert twisted_lower(0, 2)(P(0, 1, n=2)) == P(1, n=2)
    assert twisted_lower(0, 2)(one(2)).terms == {}


def test_index_checks():
    with pytest.raises(ValueError):
        lower(2, 2)
    with pytest.raises(ValueError):
        twisted_lower(-1, 2)
    with pytest.raises(ValueError):
        raise_(-1, 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_basic_operators_match_element_calculus(n):
    for k in wedge_indices(n):
        e = monomial(k, 1, n)
        for i in range(n):
            assert raise_(i, n)(e) == wedge(phi(i, n), e)
            assert lower(i, n)(e) == d_right(i, e)
            assert twisted_lower(i, n)(e) == d_left(i, e)


# -- H, T, S ---------------------------------------------------------------------


def test_grading_examples():
    assert grading_h(1)(one(1)) == -one(1)
    assert grading_h(1)(P(0, n=1)) == P(0, n=1)
    assert grading_h(2)(P(0, 1, n=2)) == -P(0, 1, n=2)


@pytest.mark.parametrize("n", range(1, 9))
def test_grading_is_parity(n):
    h = grading_h(n)
    assert h.is_diagonal()
    diag = h.num.diagonal()
    for m in range(1 << n):
        assert Fraction(int(diag[m]), h.den) == (-1) ** (bin(m).count("1") - 1)


def test_projected_examples():
    ts, ss = projected_generators(2)
    assert ts[0](one(2)) == P(0, n=2)
    assert ts[0](P(1, n=2)).terms == {}
    assert ss[1](P(1, n=2)) == one(2)


@pytest.mark.parametrize("n", range(1, 7))
def test_projected_parity(n):
    ts, ss = projected_generators(n)
    for k in wedge_indices(n):
        e = monomial(k, 1, n)
        for i in range(n):
            if len(k) % 2:
                assert not ts[i](e)
                assert ss[i](e) == d_right(i, e)
            else:
                assert not ss[i](e)
                assert ts[i](e) == wedge(phi(i, n), e)


# -- Chevalley generators --------------------------------------------------------


def test_chevalley_examples():
    g = chevalley_generators(2)
    assert g.E[2](P(1, n=2)) == P(0, n=2)
    assert g.F[2](P(0, n=2)) == P(1, n=2)
    assert g.H[1](one(2)) == one(2)


@pytest.mark.parametrize("n", range(2, 7))
def test_partial_swaps(n):
    g = chevalley_generators(n)
    for i in range(2, n + 1):
        a, b = i - 1, i - 2
        for k in wedge_indices(n):
            e = monomial(k, 1, n)
            if a in k and b not in k:
                assert g.E[i](e) == monomial(sorted(b if x == a else x for x in k), 1, n)
            else:
                assert not g.E[i](e)
            if b in k and a not in k:
                assert g.F[i](e) == monomial(sorted(a if x == b else x for x in k), 1, n)
            else:
                assert not g.F[i](e)


@pytest.mark.parametrize("n", range(1, 7))
def test_cartan_subalgebra(n):
    hs = chevalley_generators(n).H
    for h in hs:
        assert h.is_diagonal()
    for a, b in combinations(hs, 2):
        assert commutator(a, b).is_zero()


# -- action lemma --------------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 3])
def test_lemma_examples(n):
    assert lemma_action_table(n).status == "pass"


def test_lemma_degenerate():
    assert lemma_action_table(0).status == "vacuous"


def test_lemma_item_count():
    rep = lemma_action_table(4)
    # items 1-5, 10, 11 once; items 6-9 and 12 once per i in 2..n
    assert rep.relations_checked == 7 + 5 * 3


def test_anticommutator_helper():
    a = raise_(0, 2)
    assert anticommutator(a, twisted_lower(0, 2)) == GradedOperator.identity(2)


# -- names -------------------------------------------------------------------------


@pytest.mark.parametrize("name", ["raise:1", "lower:0", "tlower:1", "H", "T:0", "S:1", "E:2", "F:0", "Hi:1"])
def test_operator_names(name):
    assert operator_by_name(name, 2).n == 2


@pytest.mark.parametrize("name", ["bogus:1", "E:3", "T:2", "raise", "lower:x"])
def test_operator_names_rejected(name):
    with pytest.raises(ValueError):
        operator_by_name(name, 2)
