import random
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from coha.partitions import BoxShape, Partition, box_partitions
from coha.symfunc import (
    CoinvariantElement,
    MultiPoly,
    SchurClass,
    coinvariant_reduce,
    complete,
    elementary,
    schur,
    schur_eval,
    schur_expand,
    standard_monomials,
    verify_he_duality,
    verify_transpose_identity,
)


def poly(nvars, **kw):
    return MultiPoly(nvars, kw)


def x(j, nvars):
    return MultiPoly.variable(j, nvars)


@st.composite
def small_polys(draw, nvars=3, max_deg=3, max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        e = tuple(draw(st.integers(0, max_deg)) for _ in range(nvars))
        terms[e] = Fraction(draw(st.integers(-3, 3)), draw(st.integers(1, 3)))
    return MultiPoly(nvars, terms)


# -- construction and arithmetic --------------------------------------------


def test_multipoly_drops_zero_terms():
    p = MultiPoly(2, {(1, 0): 1, (0, 1): 0})
    assert p.terms == {(1, 0): Fraction(1)}
    assert not (p - p)


def test_multipoly_rejects_bad_exponents():
    with pytest.raises(ValueError):
        MultiPoly(2, {(1,): 1})
    with pytest.raises(ValueError):
        MultiPoly(1, {(-1,): 1})


@given(small_polys(), small_polys(), small_polys())
def test_ring_axioms(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p


@given(small_polys(), small_polys())
def test_exact_divide_inverts_multiplication(p, q):
    if q:
        assert (p * q).exact_divide(q) == p


def test_exact_divide_remainder():
    with pytest.raises(ArithmeticError):
        (x(0, 2) + 1).exact_divide(x(1, 2))


# -- elementary and complete -------------------------------------------------


def test_elementary_examples():
    assert elementary(0, 2) == MultiPoly.constant(1, 2)
    assert elementary(1, 2) == x(0, 2) + x(1, 2)
    assert elementary(3, 2) == MultiPoly(2)


def test_complete_examples():
    assert complete(0, 1) == MultiPoly.constant(1, 1)
    x1, x2 = x(0, 2), x(1, 2)
    assert complete(2, 2) == x1 * x1 + x1 * x2 + x2 * x2
    assert complete(1, 3) == x(0, 3) + x(1, 3) + x(2, 3)


def test_variable_subsets_by_position():
    assert elementary(1, [1, 2], 3) == x(1, 3) + x(2, 3)
    assert complete(2, [], 3) == MultiPoly(3)
    assert complete(0, [], 3) == MultiPoly.constant(1, 3)


@pytest.mark.parametrize("m", range(1, 5))
def test_generating_function_identity(m):
    # sum_{i} (-1)^i e_i h_{r-i} = 0 for r >= 1
    for r in range(1, 5):
        acc = MultiPoly(m)
        for i in range(r + 1):
            acc = acc + elementary(i, m) * complete(r - i, m) * (-1) ** i
        assert not acc


# -- Schur polynomials ---------------------------------------------------------


def test_schur_examples():
    x1, x2 = x(0, 2), x(1, 2)
    assert schur((1,), 2) == x1 + x2
    assert schur((2, 1), 2) == x1 * x1 * x2 + x1 * x2 * x2
    assert schur((1, 1, 1), 2) == MultiPoly(2)


def test_schur_eval_examples():
    assert schur_eval((), (3, 7, 11)) == 1
    assert schur_eval((1,), (1, 2)) == 3
    assert schur_eval((2, 1), (1, 2)) == 6


def test_schur_eval_needs_distinct_points():
    with pytest.raises(ValueError):
        schur_eval((1,), (2, 2))


POINTS = [Fraction(2), Fraction(-3), Fraction(5, 7), Fraction(11)]


@pytest.mark.parametrize("m", range(1, 5))
def test_jacobi_trudi_matches_bialternant(m):
    for lam in box_partitions(BoxShape(3, 6)):
        assert schur(lam, m).evaluate(POINTS[:m]) == schur_eval(lam, POINTS[:m])


@pytest.mark.parametrize("m", range(1, 4))
def test_schur_expand_of_schur(m):
    for lam in box_partitions(BoxShape(3, 6)):
        if lam.length <= m:
            assert schur_expand(schur(lam, m), m) == {lam: 1}


def test_schur_expand_examples():
    x1, x2 = x(0, 2), x(1, 2)
    assert schur_expand(elementary(2, 2), 2) == {Partition((1, 1)): 1}
    assert schur_expand(complete(2, 2), 2) == {Partition((2,)): 1}
    assert schur_expand(x1 * x1 * x2 + x1 * x2 * x2, 2) == {Partition((2, 1)): 1}


def test_schur_expand_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        schur_expand(x(0, 2), 2)


@given(st.dictionaries(st.sampled_from(list(box_partitions(BoxShape(3, 6)))),
                       st.integers(-4, 4), max_size=4))
def test_schur_expand_linear_combination(coeffs):
    p = MultiPoly(3)
    for lam, c in coeffs.items():
        p = p + schur(lam, 3) * c
    assert schur_expand(p, 3) == {lam: Fraction(c) for lam, c in coeffs.items() if c}


# -- coinvariant ring -------------------------------------------------------------


def test_coinvariant_examples():
    assert coinvariant_reduce(x(1, 2), 2).normal_form == -x(0, 2)
    assert coinvariant_reduce(x(0, 2) * x(0, 2), 2).is_zero()


@pytest.mark.parametrize("n", range(1, 7))
def test_elementary_reduce_to_zero(n):
    for k in range(1, n + 1):
        assert coinvariant_reduce(elementary(k, n), n).is_zero()


@pytest.mark.parametrize("n", range(1, 7))
def test_standard_monomial_count(n):
    basis = standard_monomials(n)
    assert len(basis) == factorial(n)
    for e in basis:
        m = MultiPoly.monomial(e)
        assert coinvariant_reduce(m, n).normal_form == m


@pytest.mark.parametrize("n", range(1, 7))
def test_box_partition_count(n):
    for d in range(n + 1):
        assert sum(1 for _ in box_partitions(BoxShape(d, n))) == comb(n, d)


def _random_poly(rng, n, terms=4, deg=4):
    out = {}
    for _ in range(terms):
        e = tuple(rng.randint(0, deg) for _ in range(n))
        out[e] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return MultiPoly(n, out)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_reduction_is_multiplicative(n):
    rng = random.Random(20240611 + n)
    for _ in range(15):
        p, q = _random_poly(rng, n), _random_poly(rng, n)
        lhs = coinvariant_reduce(p * q, n)
        rp, rq = coinvariant_reduce(p, n), coinvariant_reduce(q, n)
        assert lhs == coinvariant_reduce(rp.normal_form * rq.normal_form, n)


@given(small_polys(nvars=3), small_polys(nvars=3))
def test_reduction_is_linear(p, q):
    r = lambda f: coinvariant_reduce(f, 3).normal_form
    assert r(p + q) == r(p) + r(q)


def test_reduction_pads_fewer_variables():
    assert coinvariant_reduce(MultiPoly.variable(0, 1), 2).normal_form == x(0, 2)
    with pytest.raises(ValueError):
        coinvariant_reduce(x(2, 3), 2)


def test_coinvariant_element_validates():
    with pytest.raises(ValueError):
        CoinvariantElement(2, MultiPoly.monomial((2, 0)))


@pytest.mark.parametrize("n, d, r", [(2, 1, 1), (4, 2, 2), (3, 3, 1)])
def test_he_duality_examples(n, d, r):
    assert verify_he_duality(n, d, r)


@pytest.mark.parametrize("n", range(0, 7))
def test_he_duality_sweep(n):
    for d in range(n + 1):
        for r in range(n + 1):
            assert verify_he_duality(n, d, r)


def test_he_duality_is_not_vacuous():
    # without the sign the identity fails
    lhs = complete(1, [0], 2)
    rhs = elementary(1, [1], 2)
    assert not coinvariant_reduce(lhs - rhs, 2).is_zero()


@pytest.mark.parametrize("n, d, lam", [(2, 1, (1,)), (4, 2, (2, 1))])
def test_transpose_identity_examples(n, d, lam):
    assert verify_transpose_identity(n, d, lam)


@pytest.mark.parametrize("n", range(0, 5))
def test_transpose_identity_empty_partition(n):
    for d in range(n + 1):
        assert verify_transpose_identity(n, d, ())


def test_transpose_identity_outside_box():
    with pytest.raises(ValueError):
        verify_transpose_identity(4, 2, (3,))


# -- Schur classes -------------------------------------------------------------------


def test_schur_class_validates_box():
    with pytest.raises(ValueError):
        SchurClass(2, 4, {(3,): 1})
    assert SchurClass.truncated(2, 4, {(3,): 1, (1,): 2}).coeffs == {Partition((1,)): 2}


def test_schur_class_arithmetic():
    a = SchurClass(1, 3, {(1,): 1})
    b = SchurClass(1, 3, {(1,): -1, (): 2})
    assert (a + b).coeffs == {Partition(()): 2}
    assert (a * 3).coeffs == {Partition((1,)): 3}
    assert not SchurClass(1, 3, {(1,): 0})
