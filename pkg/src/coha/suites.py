"""Named verification suites, one per ``coha verify`` subcheck."""

from __future__ import annotations

import os
from fractions import Fraction
from math import prod

from .exterior import ExteriorElement, format_element, from_schur, monomial, multiply_ed_power, truncate, zero
from .localization import (
    basis_class,
    lower_localized_raw,
    lower_via_transpose,
    raise_localized,
    twisted_lower_via_transpose,
)
from .operators import lemma_action_table, lower, raise_, twisted_lower
from .partitions import BoxShape, box_partitions, index_to_partition, wedge_indices
from .relations import check_clifford, check_serre
from .reports import Counterexample, VerificationReport, timed
from .symfunc import schur_eval, verify_he_duality, verify_transpose_identity


def _compare(report, relation, witness, got, want):
    bad = None
    if got != want:
        bad = Counterexample(relation, tuple(witness), _text(got), _text(want))
    report.record(relation, bad)


def _text(x) -> str:
    return format_element(x) if isinstance(x, ExteriorElement) else repr(x)


def transpose_suite(n: int) -> VerificationReport:
    """``s_lam(x_1..x_d) = (-1)^|lam| s_lam'(x_{d+1}..x_n)`` for every box partition."""
    report = VerificationReport("transpose", {"n": n})
    with timed(report):
        for d in range(n + 1):
            for lam in box_partitions(BoxShape(d, n)):
                rel = f"d={d} lam={tuple(lam)}"
                ok = verify_transpose_identity(n, d, lam)
                report.record(rel, None if ok else Counterexample(rel, tuple(lam), "lhs", "rhs"))
    return report


def he_duality_suite(n: int) -> VerificationReport:
    """``h_r(x_1..x_d) = (-1)^r e_r(x_{d+1}..x_n)`` for ``0 <= d, r <= n``."""
    report = VerificationReport("he-duality", {"n": n})
    with timed(report):
        for d in range(n + 1):
            for r in range(n + 1):
                rel = f"d={d} r={r}"
                ok = verify_he_duality(n, d, r)
                report.record(rel, None if ok else Counterexample(rel, (d, r), "lhs", "rhs"))
    return report


def equivalence_suite(n: int) -> VerificationReport:
    """Pushforward and transpose routes against the wedge/derivative operators."""
    report = VerificationReport("equivalence", {"n": n})
    with timed(report):
        for d in range(n + 1):
            for k in wedge_indices(n, d):
                c = basis_class(k, n)
                e = monomial(k, 1, n)
                if d < n:
                    for i in range(n):
                        _compare(report, f"raise_localized:{i}", k,
                                 from_schur(raise_localized(i, c)), raise_(i, n)(e))
                if d > 0:
                    for r in range(n):
                        via = lower_via_transpose(r, c)
                        _compare(report, f"lower_via_transpose:{r}", k,
                                 from_schur(via), lower(n - r - 1, n)(e))
                        _compare(report, f"twisted_lower_via_transpose:{r}", k,
                                 from_schur(twisted_lower_via_transpose(r, c)),
                                 twisted_lower(n - r - 1, n)(e))
                        _compare(report, f"lower_localized_raw:{r}", k,
                                 from_schur(lower_localized_raw(r, c)), from_schur(via))
    return report


_POINT_SETS = (
    tuple(Fraction(p) for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
    tuple(Fraction(-1, p) for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)


def kernel_suite(n: int) -> VerificationReport:
    """Index shift by ``e_d^n`` and its annihilation by the quotient onto ``/\\*(V(n))``."""
    report = VerificationReport("kernel", {"n": n})
    with timed(report):
        for k in wedge_indices(n):
            d = len(k)
            shifted = multiply_ed_power(monomial(k), n)
            _compare(report, "shift", k, shifted, monomial([x + n for x in k]))
            if d:
                _compare(report, "truncate", k, truncate(shifted, n), zero(n))
            # the underlying Schur identity s_{lam + (n^d)} = e_d^n s_lam, at exact points
            lam = index_to_partition(k)
            lifted = index_to_partition([x + n for x in k])
            for points in _POINT_SETS:
                pts = points[:d]
                _compare(report, "schur_shift", k,
                         schur_eval(lifted, pts), prod(pts, start=Fraction(1)) ** n * schur_eval(lam, pts))
    return report


SUITES = {
    "serre": check_serre,
    "clifford": check_clifford,
    "lemma-actions": lemma_action_table,
    "transpose": transpose_suite,
    "he-duality": he_duality_suite,
    "equivalence": equivalence_suite,
    "kernel": kernel_suite,
}

# desk-scale caps on n; COHA_MAX_N overrides all of them
CAPS = {
    "serre": 8,
    "clifford": 12,
    "lemma-actions": 10,
    "transpose": 7,
    "he-duality": 8,
    "equivalence": 6,
    "kernel": 8,
}


def cap_for(check: str) -> int:
    override = os.environ.get("COHA_MAX_N")
    if override:
        return int(override)
    return CAPS[check]


def run_suite(check: str, n: int) -> VerificationReport:
    if check not in SUITES:
        raise KeyError(check)
    return SUITES[check](n)
