"""Serre relations for ``D_{n+1}`` and the finite Clifford relations."""

from __future__ import annotations

from dataclasses import dataclass

from .exterior import format_element
from .operators import (
    GradedOperator,
    ad_pow,
    anticommutator,
    chevalley_generators,
    commutator,
    index_of,
    lower,
    raise_,
    twisted_lower,
)
from .reports import Counterexample, VerificationReport, timed


@dataclass(frozen=True)
class CartanMatrix:
    m: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.m or any(len(r) != self.m for r in self.entries):
            raise ValueError(f"need an {self.m} x {self.m} matrix")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def format(self) -> str:
        width = max(len(str(v)) for row in self.entries for v in row)
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in self.entries)


def _d_type(m: int) -> CartanMatrix:
    # nodes 0 and 1 both attach to node 2; chain 2 - 3 - ... - (m-1)
    a = [[0] * m for _ in range(m)]
    for i in range(m):
        a[i][i] = 2
    if m >= 3:
        for leaf in (0, 1):
            a[leaf][2] = a[2][leaf] = -1
    for i in range(3, m):
        a[i - 1][i] = a[i][i - 1] = -1
    return CartanMatrix(m, tuple(tuple(r) for r in a))


def cartan_D(m: int) -> CartanMatrix:
    """``D_m`` Cartan matrix on nodes ``0..m-1`` with the fork at node 2."""
    if m < 3:
        raise ValueError(f"D_m needs m >= 3, got {m}")
    return _d_type(m)


def _witness(lhs: GradedOperator, rhs: GradedOperator, relation: str) -> Counterexample | None:
    m = lhs.first_difference(rhs)
    if m is None:
        return None
    return Counterexample(
        relation, tuple(index_of(m)), format_element(lhs.column(m)), format_element(rhs.column(m))
    )


def check_serre(n: int) -> VerificationReport:
    """All five Serre families for ``E_i, F_i, H_i`` (``0 <= i, j <= n``)."""
    params = {"n": n}
    if n == 1:
        # D_2 is the reduced matrix on {0, 1} with a_01 = 0
        params["note"] = "degenerate D_2"
    report = VerificationReport("serre", params)
    with timed(report):
        if n < 1:
            return report
        a = _d_type(n + 1)
        gens = chevalley_generators(n)
        E, F, H = gens.E, gens.F, gens.H
        zero = GradedOperator.zero(n)
        idx = range(n + 1)
        for i in idx:
            for j in idx:
                rel = f"[H_{i},H_{j}]=0"
                report.record(rel, _witness(commutator(H[i], H[j]), zero, rel))
        for i in idx:
            for j in idx:
                rel = f"[E_{i},F_{j}]=" + (f"H_{i}" if i == j else "0")
                report.record(rel, _witness(commutator(E[i], F[j]), H[i] if i == j else zero, rel))
        for i in idx:
            for j in idx:
                c = a[j, i]
                rel = f"[H_{i},E_{j}]={c}*E_{j}"
                report.record(rel, _witness(commutator(H[i], E[j]), E[j] * c, rel))
                rel = f"[H_{i},F_{j}]={-c}*F_{j}"
                report.record(rel, _witness(commutator(H[i], F[j]), F[j] * -c, rel))
        for i in idx:
            for j in idx:
                if i == j:
                    continue
                p = 1 - a[j, i]
                rel = f"(ad E_{i})^{p}(E_{j})=0"
                report.record(rel, _witness(ad_pow(E[i], p, E[j]), zero, rel))
                rel = f"(ad F_{i})^{p}(F_{j})=0"
                report.record(rel, _witness(ad_pow(F[i], p, F[j]), zero, rel))
    return report


def extract_cartan(n: int) -> CartanMatrix:
    """Read ``a_ji`` off ``[H_i, E_j] = a_ji E_j``."""
    if n < 2:
        raise ValueError(f"extract_cartan needs n >= 2, got {n}")
    gens = chevalley_generators(n)
    m = n + 1
    a = [[0] * m for _ in range(m)]
    for j in range(m):
        if gens.E[j].is_zero():
            raise ArithmeticError(f"E_{j} vanishes; column {j} is undetermined")
        for i in range(m):
            c = commutator(gens.H[i], gens.E[j]).scalar_ratio(gens.E[j])
            if c is None:
                raise ArithmeticError(f"[H_{i},E_{j}] is not a multiple of E_{j}")
            if c.denominator != 1:
                raise ArithmeticError(f"non-integral Cartan entry a_{j}{i} = {c}")
            a[j][i] = int(c)
    return CartanMatrix(m, tuple(tuple(r) for r in a))


def check_clifford(n: int, twisted: bool = True) -> VerificationReport:
    """Anticommutation relations of creation and (twisted) annihilation operators.

    With ``twisted=False`` the right derivative replaces the left one; the
    mixed relation then fails for ``n >= 2``.
    """
    report = VerificationReport("clifford" if twisted else "clifford-untwisted", {"n": n})
    with timed(report):
        if n < 1:
            return report
        down = twisted_lower if twisted else lower
        plus = [raise_(i, n) for i in range(n)]
        minus = [down(i, n) for i in range(n)]
        zero = GradedOperator.zero(n)
        ident = GradedOperator.identity(n)
        for i in range(n):
            for j in range(n):
                rel = f"{{a+_{i},a+_{j}}}=0"
                report.record(rel, _witness(anticommutator(plus[i], plus[j]), zero, rel))
                rel = f"{{a-_{i},a-_{j}}}=0"
                report.record(rel, _witness(anticommutator(minus[i], minus[j]), zero, rel))
                rel = f"{{a+_{i},a-_{j}}}=" + ("Id" if i == j else "0")
                report.record(
                    rel, _witness(anticommutator(plus[i], minus[j]), ident if i == j else zero, rel)
                )
    return report
