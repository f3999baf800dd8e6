"""Representation operators on ``/\\*(V(n))``.

Basis monomials are addressed by bitmask (bit ``i`` <-> ``phi_i``).  An
operator is stored as an integer sparse matrix ``num`` and a positive integer
denominator ``den``; the operator is ``num / den`` with ``gcd(num, den) == 1``.
Column ``m`` is the image of basis monomial ``m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np
import scipy.sparse as sp

from . import _kernels
from .exterior import ExteriorElement, canonicalize, d_right, format_element, monomial, phi, wedge
from .partitions import WedgeIndex
from .reports import Counterexample, VerificationReport, timed

_SAFE = 1 << 62


def mask_of(k) -> int:
    m = 0
    for i in k:
        m |= 1 << i
    return m


def index_of(mask: int) -> WedgeIndex:
    return WedgeIndex(i for i in range(mask.bit_length()) if mask >> i & 1)


class GradedOperator:
    """Exact linear endomorphism of ``/\\*(V(n))`` given by its basis action."""

    __slots__ = ("n", "num", "den", "label")

    def __init__(self, n: int, num, den: int = 1, label: str = ""):
        size = 1 << n
        num = sp.csr_array(num, dtype=np.int64)
        if num.shape != (size, size):
            raise ValueError(f"expected a {size} x {size} matrix, got {num.shape}")
        if den <= 0:
            raise ValueError("denominator must be positive")
        num.eliminate_zeros()
        g = int(np.gcd.reduce(np.abs(num.data))) if num.nnz else 0
        g = gcd(g, int(den))
        if g > 1:
            num = sp.csr_array((num.data // g, num.indices, num.indptr), shape=num.shape)
            den //= g
        if not num.nnz:
            den = 1
        self.n = n
        self.num = num
        self.den = int(den)
        self.label = label

    # constructors
    @classmethod
    def zero(cls, n: int, label: str = "0") -> "GradedOperator":
        return cls(n, sp.csr_array((1 << n, 1 << n), dtype=np.int64), 1, label)

    @classmethod
    def identity(cls, n: int, label: str = "Id") -> "GradedOperator":
        return cls(n, sp.identity(1 << n, dtype=np.int64, format="csr"), 1, label)

    @classmethod
    def from_action(cls, n: int, targets, signs, label: str = "") -> "GradedOperator":
        size = 1 << n
        cols = np.arange(size, dtype=np.int64)
        keep = signs != 0
        mat = sp.csr_array(
            (signs[keep], (targets[keep], cols[keep])), shape=(size, size), dtype=np.int64
        )
        return cls(n, mat, 1, label)

    @classmethod
    def from_columns(cls, n: int, columns: dict, label: str = "") -> "GradedOperator":
        """Build from ``{basis index: ExteriorElement}``; missing columns are zero."""
        rows, cols, vals = [], [], []
        entries = []
        for k, image in columns.items():
            for t, c in image.terms.items():
                entries.append((mask_of(t), mask_of(k), Fraction(c)))
        den = 1
        for _, _, c in entries:
            den = den * c.denominator // gcd(den, c.denominator)
        for r, c, v in entries:
            rows.append(r)
            cols.append(c)
            vals.append(int(v * den))
        size = 1 << n
        mat = sp.csr_array((vals, (rows, cols)), shape=(size, size), dtype=np.int64)
        return cls(n, mat, den, label)

    # arithmetic
    def _same(self, other: "GradedOperator"):
        if not isinstance(other, GradedOperator):
            raise TypeError(f"expected GradedOperator, got {type(other).__name__}")
        if self.n != other.n:
            raise ValueError(f"bound mismatch: {self.n} vs {other.n}")

    def _maxabs(self) -> int:
        return int(np.abs(self.num.data).max()) if self.num.nnz else 0

    def __add__(self, other: "GradedOperator") -> "GradedOperator":
        self._same(other)
        den = self.den * other.den // gcd(self.den, other.den)
        a, b = den // self.den, den // other.den
        if (self._maxabs() * a + other._maxabs() * b) >= _SAFE:
            raise OverflowError("operator entries too large for exact int64 arithmetic")
        return GradedOperator(self.n, self.num * a + other.num * b, den)

    def __neg__(self):
        return GradedOperator(self.n, -self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c) -> "GradedOperator":
        c = Fraction(c)
        if abs(c.numerator) * max(self._maxabs(), 1) >= _SAFE:
            raise OverflowError("operator entries too large for exact int64 arithmetic")
        return GradedOperator(self.n, self.num * c.numerator, self.den * c.denominator)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Fraction(c))

    def __matmul__(self, other: "GradedOperator") -> "GradedOperator":
        """Composition ``self o other``."""
        self._same(other)
        if self._maxabs() * other._maxabs() * (1 << self.n) >= _SAFE:
            raise OverflowError("operator entries too large for exact int64 arithmetic")
        return GradedOperator(self.n, self.num @ other.num, self.den * other.den)

    def __eq__(self, other):
        if not isinstance(other, GradedOperator):
            return NotImplemented
        if self.n != other.n:
            return False
        # both sides are in lowest terms
        return self.den == other.den and (self.num != other.num).nnz == 0

    __hash__ = None

    def is_zero(self) -> bool:
        return self.num.nnz == 0

    def named(self, label: str) -> "GradedOperator":
        op = GradedOperator.__new__(GradedOperator)
        op.n, op.num, op.den, op.label = self.n, self.num, self.den, label
        return op

    def __repr__(self):
        return f"GradedOperator({self.label or '?'}, n={self.n}, nnz={self.num.nnz}, den={self.den})"

    # action
    def column(self, k) -> ExteriorElement:
        m = mask_of(k) if not isinstance(k, (int, np.integer)) else int(k)
        col = self.num[:, [m]].tocoo()
        return ExteriorElement(
            {index_of(int(r)): Fraction(int(v), self.den) for r, v in zip(col.row, col.data)},
            self.n,
        )

    @property
    def action(self) -> dict:
        """``{basis index: image}`` over all ``2**n`` basis monomials."""
        csc = self.num.tocsc()
        out = {}
        for m in range(1 << self.n):
            lo, hi = csc.indptr[m], csc.indptr[m + 1]
            out[index_of(m)] = ExteriorElement(
                {index_of(int(r)): Fraction(int(v), self.den)
                 for r, v in zip(csc.indices[lo:hi], csc.data[lo:hi])},
                self.n,
            )
        return out

    def __call__(self, a: ExteriorElement) -> ExteriorElement:
        if a.bound != self.n:
            raise ValueError(f"element bound {a.bound} does not match operator bound {self.n}")
        out = ExteriorElement((), self.n)
        for k, c in a.terms.items():
            out = out + self.column(k) * c
        return out

    def first_difference(self, other: "GradedOperator") -> int | None:
        """Smallest basis mask on which the two operators differ."""
        self._same(other)
        diff = (self.num * other.den - other.num * self.den).tocsc()
        diff.eliminate_zeros()
        cols = np.flatnonzero(np.diff(diff.indptr))
        return int(cols[0]) if cols.size else None

    def scalar_ratio(self, other: "GradedOperator") -> Fraction | None:
        """``c`` with ``self == c * other`` (``other`` nonzero), else ``None``."""
        self._same(other)
        if other.is_zero():
            raise ZeroDivisionError("ratio against the zero operator")
        if self.is_zero():
            return Fraction(0)
        a = self.num.tocoo()
        b = other.num.tocoo()
        if a.nnz != b.nnz:
            return None
        ka = sorted(zip(a.row.tolist(), a.col.tolist(), a.data.tolist()))
        kb = sorted(zip(b.row.tolist(), b.col.tolist(), b.data.tolist()))
        if [x[:2] for x in ka] != [x[:2] for x in kb]:
            return None
        c = Fraction(ka[0][2], kb[0][2])
        if any(Fraction(x[2], y[2]) != c for x, y in zip(ka, kb)):
            return None
        return c * Fraction(other.den, self.den)

    def is_diagonal(self) -> bool:
        coo = self.num.tocoo()
        return bool(np.all(coo.row == coo.col))


def commutator(a: GradedOperator, b: GradedOperator) -> GradedOperator:
    return a @ b - b @ a


def anticommutator(a: GradedOperator, b: GradedOperator) -> GradedOperator:
    return a @ b + b @ a


def ad_pow(a: GradedOperator, m: int, b: GradedOperator) -> GradedOperator:
    """``(ad a)^m (b)``."""
    if m < 0:
        raise ValueError("ad power must be non-negative")
    for _ in range(m):
        b = commutator(a, b)
    return b


# -- the representation -------------------------------------------------------


@lru_cache(maxsize=None)
def raise_(i: int, n: int) -> GradedOperator:
    """Creation ``alpha_i^+``: left wedge with ``phi_i``; zero when ``i >= n``."""
    if i < 0:
        raise ValueError(f"generator index must be non-negative, got {i}")
    if i >= n:
        return GradedOperator.zero(n, f"raise:{i}")
    return GradedOperator.from_action(n, *_kernels.creation(i, n), label=f"raise:{i}")


def _check_index(i: int, n: int):
    if not 0 <= i < n:
        raise ValueError(f"generator index {i} outside 0..{n - 1}")


@lru_cache(maxsize=None)
def lower(i: int, n: int) -> GradedOperator:
    """Annihilation ``alpha_i^-``: the right partial derivative by ``phi_i``."""
    _check_index(i, n)
    return GradedOperator.from_action(n, *_kernels.derivative(i, n, right=True), label=f"lower:{i}")


@lru_cache(maxsize=None)
def twisted_lower(i: int, n: int) -> GradedOperator:
    """Twisted annihilation: the left partial derivative by ``phi_i``."""
    _check_index(i, n)
    return GradedOperator.from_action(n, *_kernels.derivative(i, n, right=False), label=f"tlower:{i}")


@lru_cache(maxsize=None)
def grading_h(n: int) -> GradedOperator:
    if n < 1:
        raise ValueError("grading operator needs n >= 1")
    return commutator(raise_(0, n), lower(0, n)).named("H")


@lru_cache(maxsize=None)
def projected_generators(n: int) -> tuple[tuple, tuple]:
    """``(T, S)`` with ``T_i = (a_i^+ + [H, a_i^+]/2)/2`` and ``S_i = (a_i^- - [H, a_i^-]/2)/2``."""
    h = grading_h(n)
    half = Fraction(1, 2)
    ts = tuple(
        ((raise_(i, n) + commutator(h, raise_(i, n)) * half) * half).named(f"T:{i}")
        for i in range(n)
    )
    ss = tuple(
        ((lower(i, n) - commutator(h, lower(i, n)) * half) * half).named(f"S:{i}")
        for i in range(n)
    )
    return ts, ss


@dataclass(frozen=True)
class ChevalleyGenerators:
    n: int
    E: tuple
    F: tuple
    H: tuple


@lru_cache(maxsize=None)
def chevalley_generators(n: int) -> ChevalleyGenerators:
    """``E_i, F_i, H_i`` for ``0 <= i <= n``."""
    h = grading_h(n)
    ts, ss = projected_generators(n)
    half = Fraction(1, 2)
    a0p, a0m = raise_(0, n), lower(0, n)
    es = [-((a0m + commutator(h, a0m) * half) * half), ss[0]]
    fs = [(a0p - commutator(h, a0p) * half) * half, ts[0]]
    for i in range(2, n + 1):
        es.append(commutator(ts[i - 2], ss[i - 1]))
        fs.append(commutator(ts[i - 1], ss[i - 2]))
    es = tuple(e.named(f"E:{i}") for i, e in enumerate(es))
    fs = tuple(f.named(f"F:{i}") for i, f in enumerate(fs))
    hs = tuple(commutator(e, f).named(f"Hi:{i}") for i, (e, f) in enumerate(zip(es, fs)))
    return ChevalleyGenerators(n, es, fs, hs)


def operator_by_name(name: str, n: int) -> GradedOperator:
    """Resolve ``raise:i``, ``lower:i``, ``tlower:i``, ``H``, ``T:i``, ``S:i``, ``E:i``, ``F:i``, ``Hi:i``."""
    head, _, arg = name.strip().partition(":")
    if head == "H" and not arg:
        return grading_h(n)
    if not arg.strip().lstrip("-").isdigit():
        raise ValueError(f"unknown operator {name!r}")
    i = int(arg)
    if head == "raise":
        return raise_(i, n)
    if head == "lower":
        return lower(i, n)
    if head == "tlower":
        return twisted_lower(i, n)
    if head in ("T", "S"):
        _check_index(i, n)
        ts, ss = projected_generators(n)
        return (ts if head == "T" else ss)[i]
    if head in ("E", "F", "Hi"):
        if not 0 <= i <= n:
            raise ValueError(f"index {i} outside 0..{n}")
        gens = chevalley_generators(n)
        return {"E": gens.E, "F": gens.F, "Hi": gens.H}[head][i]
    raise ValueError(f"unknown operator {name!r}")


# -- action lemma ---------------------------------------------------------------


def _swap_factor(k: WedgeIndex, old: int, new: int, n: int) -> ExteriorElement:
    """``R_old^new``: replace the factor ``phi_old`` by ``phi_new`` in place."""
    return canonicalize([new if x == old else x for x in k], n)


def _lemma_items(n: int):
    """Yield ``(item name, operator, expected-image function)``."""
    gens = chevalley_generators(n)
    ts, ss = projected_generators(n)
    h = grading_h(n)

    def z(k):
        return ExteriorElement((), n)

    def P(k):
        return monomial(k, 1, n)

    yield "1: H", h, lambda k: P(k) * (-1) ** (len(k) - 1)
    yield "2: E_0", gens.E[0], lambda k: (
        -d_right(0, P(k)) if len(k) % 2 == 0 and 0 in k else z(k)
    )
    yield "3: F_0", gens.F[0], lambda k: (
        wedge(phi(0, n), P(k)) if len(k) % 2 == 1 and 0 not in k else z(k)
    )
    yield "4: E_1", gens.E[1], lambda k: (
        d_right(0, P(k)) if len(k) % 2 == 1 and 0 in k else z(k)
    )
    yield "5: F_1", gens.F[1], lambda k: (
        wedge(phi(0, n), P(k)) if len(k) % 2 == 0 and 0 not in k else z(k)
    )
    for i in range(2, n + 1):
        a, b = i - 1, i - 2
        yield f"6: S_{a}", ss[a], lambda k, a=a: (
            d_right(a, P(k)) if len(k) % 2 == 1 and a in k else z(k)
        )
        yield f"7: T_{a}", ts[a], lambda k, a=a: (
            wedge(phi(a, n), P(k)) if len(k) % 2 == 0 and a not in k else z(k)
        )
        yield f"8: E_{i}", gens.E[i], lambda k, a=a, b=b: (
            _swap_factor(k, a, b, n) if a in k and b not in k else z(k)
        )
        yield f"9: F_{i}", gens.F[i], lambda k, a=a, b=b: (
            _swap_factor(k, b, a, n) if b in k and a not in k else z(k)
        )

    def h0(k):
        even, has0 = len(k) % 2 == 0, 0 in k
        if even and has0:
            return -P(k)
        if not even and not has0:
            return P(k)
        return z(k)

    def h1(k):
        even, has0 = len(k) % 2 == 0, 0 in k
        if even and not has0:
            return P(k)
        if not even and has0:
            return -P(k)
        return z(k)

    yield "10: H_0", gens.H[0], h0
    yield "11: H_1", gens.H[1], h1
    for i in range(2, n + 1):
        a, b = i - 1, i - 2

        def hi(k, a=a, b=b):
            if a in k and b not in k:
                return -P(k)
            if b in k and a not in k:
                return P(k)
            return z(k)

        yield f"12: H_{i}", gens.H[i], hi


def lemma_action_table(n: int) -> VerificationReport:
    """Check the twelve-item action lemma on every basis monomial."""
    report = VerificationReport("lemma-actions", {"n": n})
    with timed(report):
        if n < 1:
            return report
        for name, op, expected in _lemma_items(n):
            bad = None
            action = op.action
            for m in range(1 << n):
                k = index_of(m)
                got, want = action[k], expected(k)
                if got != want:
                    bad = Counterexample(name, tuple(k), format_element(got), format_element(want))
                    break
            report.record(name, bad)
    return report
