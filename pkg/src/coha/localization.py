"""Pushforward sums on Grassmannian cohomology and the transpose-presentation route.

The increasing action is a sum over ways to split the variables into a
chosen block (carrying the Schur class) and the rest (carrying ``x^i``),
divided by the products of differences between the two blocks.  The sum is
taken over the Vandermonde common denominator and divided out exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exterior import ExteriorElement, from_schur, monomial, phi, to_schur, truncate, wedge
from .partitions import index_to_partition, partition_to_index, transpose, transpose_index
from .symfunc import MultiPoly, SchurClass, schur, schur_expand


@dataclass(frozen=True)
class ShuffleSumSpec:
    total_vars: int
    chosen: int
    left_factor: MultiPoly
    right_factor: MultiPoly

    def __post_init__(self):
        m, p = self.total_vars, self.chosen
        if not 0 <= p <= m:
            raise ValueError(f"need 0 <= chosen <= total_vars, got {p}, {m}")
        if self.left_factor.nvars != p or self.right_factor.nvars != m - p:
            raise ValueError("factor variable counts must be chosen and total_vars - chosen")


def _difference(a: int, b: int, m: int) -> MultiPoly:
    ea, eb = [0] * m, [0] * m
    ea[a] = 1
    eb[b] = 1
    return MultiPoly(m, {tuple(ea): 1, tuple(eb): -1})


def _product(factors, m: int) -> MultiPoly:
    acc = MultiPoly.constant(1, m)
    for f in factors:
        acc = acc * f
    return acc


def shuffle_sum(spec: ShuffleSumSpec) -> MultiPoly:
    """``sum_S L(x_S) R(x_rest) / prod_{a in S, b in rest} (x_a - x_b)`` as a polynomial.

    Raises ``ArithmeticError`` if the sum is not a polynomial.
    """
    m, p = spec.total_vars, spec.chosen
    numerator = MultiPoly(m)
    for chosen in combinations(range(m), p):
        rest = [b for b in range(m) if b not in chosen]
        term = spec.left_factor.embed(chosen, m) * spec.right_factor.embed(rest, m)
        # multiplying by the Vandermonde prod_{a<b}(x_a - x_b) leaves the
        # within-block differences, with a sign per cross pair in the wrong order
        flips = sum(1 for a in rest for b in chosen if a < b)
        within = [
            _difference(a, b, m)
            for block in (chosen, rest)
            for a, b in combinations(block, 2)
        ]
        term = term * _product(within, m)
        numerator = numerator - term if flips % 2 else numerator + term
    result = numerator
    for a, b in combinations(range(m), 2):
        try:
            result = result.exact_divide(_difference(a, b, m))
        except ArithmeticError:
            raise ArithmeticError("localization sum is not a polynomial") from None
    return result


def _phi_poly(i: int) -> MultiPoly:
    return MultiPoly.monomial((i,))


def raise_localized(i: int, c: SchurClass) -> SchurClass:
    """``phi_i^+``: H*(Gr(d, n)) -> H*(Gr(d + 1, n)) via the pushforward sum."""
    d, n = c.d, c.n
    if d + 1 > n:
        raise ValueError(f"cannot raise from Gr({d},{n}): d + 1 > n")
    if i < 0:
        raise ValueError("generator index must be non-negative")
    total: dict = {}
    for lam, coeff in c.coeffs.items():
        spec = ShuffleSumSpec(d + 1, d, schur(lam, d), _phi_poly(i))
        for mu, v in schur_expand(shuffle_sum(spec), d + 1).items():
            total[mu] = total.get(mu, 0) + v * coeff
    return SchurClass.truncated(d + 1, n, total)


def _back_to_ordinary(image: ExteriorElement) -> dict:
    """Schur coefficients of a transpose-presentation element, in the ordinary presentation."""
    out: dict = {}
    for kp, v in image.terms.items():
        mu = transpose(index_to_partition(kp))
        # s_mu'(x_{d+1..n}) = (-1)^|mu| s_mu(x_1..x_d)
        sign = -1 if mu.weight % 2 else 1
        out[mu] = out.get(mu, 0) + sign * v
    return out


def _lower_basis(i: int, k, n: int, raise_fn) -> dict:
    d = len(k)
    lam = index_to_partition(k)
    kp = transpose_index(k, n)
    sign = -1 if (lam.weight + n - d) % 2 else 1
    image = raise_fn(i, kp, n) * sign
    return _back_to_ordinary(image)


def _wedge_on_transpose(i: int, kp, n: int) -> ExteriorElement:
    free = wedge(phi(i), monomial(kp))
    return truncate(free, n)


def _shuffle_on_transpose(i: int, kp, n: int) -> ExteriorElement:
    dual = SchurClass(len(kp), n, {index_to_partition(kp): 1})
    return from_schur(raise_localized(i, dual))


def _lower(i: int, c: SchurClass, raise_fn) -> SchurClass:
    if c.d == 0:
        raise ValueError("cannot lower from Gr(0, n)")
    if not 0 <= i < c.n:
        raise ValueError(f"generator index {i} outside 0..{c.n - 1}")
    total: dict = {}
    for lam, coeff in c.coeffs.items():
        k = partition_to_index(lam, c.d)
        for mu, v in _lower_basis(i, k, c.n, raise_fn).items():
            total[mu] = total.get(mu, 0) + v * coeff
    return SchurClass(c.d - 1, c.n, total)


def lower_via_transpose(i: int, c: SchurClass) -> SchurClass:
    """``phi_i^-``: H*(Gr(d, n)) -> H*(Gr(d - 1, n)) through the transpose presentation.

    Each ``Phi_k`` is rewritten as ``(-1)^|lam| Phi_k'`` on the complementary
    variables, ``phi_i`` is wedged on from the left, the sign
    ``(-1)^(|lam| + n - d)`` applied, and the result read back in the ordinary
    presentation.
    """
    return _lower(i, c, _wedge_on_transpose)


def lower_localized_raw(i: int, c: SchurClass) -> SchurClass:
    """Same map as ``lower_via_transpose`` with the wedge step done by pushforward sums."""
    return _lower(i, c, _shuffle_on_transpose)


def twisted_lower_via_transpose(i: int, c: SchurClass) -> SchurClass:
    """Twisted decreasing operator: ``(-1)^(d-1)`` times the untwisted one on Gr(d, n)."""
    return lower_via_transpose(i, c) * (-1) ** (c.d - 1)


def basis_class(k, n: int) -> SchurClass:
    return to_schur(monomial(k, 1, n), n)


__all__ = [
    "ShuffleSumSpec",
    "basis_class",
    "lower_localized_raw",
    "lower_via_transpose",
    "raise_localized",
    "shuffle_sum",
    "twisted_lower_via_transpose",
]
