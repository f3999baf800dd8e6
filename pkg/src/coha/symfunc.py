"""Exact symmetric polynomials and the coinvariant ring ``Q[x_1..x_n]/(e_1..e_n)``.

Variables are addressed by 0-based position: position ``j`` is ``x_{j+1}``.
Everywhere a "variable subset" is expected, either an ``int`` ``m``
(meaning ``x_1..x_m``) or an explicit sequence of positions is accepted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from typing import Iterable, Mapping, Sequence

from .partitions import BoxShape, Partition, fits_box, transpose

Exponent = tuple


def _positions(variables) -> tuple:
    if isinstance(variables, int):
        return tuple(range(variables))
    return tuple(variables)


class MultiPoly:
    """Sparse polynomial in ``nvars`` variables with rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | Iterable = ()):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, Fraction] = {}
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent {exps} does not have length {nvars}")
            if any(a < 0 for a in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = Fraction(c)
            if c:
                c = clean.get(exps, 0) + c
                if c:
                    clean[exps] = c
                else:
                    del clean[exps]
        self.terms = clean

    # construction helpers
    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, j: int, nvars: int) -> "MultiPoly":
        exps = [0] * nvars
        exps[j] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "MultiPoly":
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "MultiPoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    # arithmetic
    def _check(self, other: "MultiPoly"):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other, self.nvars)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            c = out.get(e, 0) + c
            if c:
                out[e] = c
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = Fraction(other)
            if not c:
                return MultiPoly(self.nvars)
            return MultiPoly._raw(self.nvars, {e: c * v for e, v in self.terms.items()})
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = MultiPoly.constant(1, self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"x{j + 1}" + (f"^{a}" if a > 1 else "") for j, a in enumerate(e) if a
            )
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    # structure
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def leading(self) -> tuple[Exponent, Fraction]:
        """Lex-greatest term with ``x_1 > x_2 > ...``."""
        e = max(self.terms)
        return e, self.terms[e]

    def embed(self, positions: Sequence[int], nvars: int) -> "MultiPoly":
        """Rename variable ``j`` to position ``positions[j]`` of an ``nvars`` ring."""
        if len(positions) != self.nvars:
            raise ValueError("need one target position per variable")
        out = {}
        for e, c in self.terms.items():
            new = [0] * nvars
            for j, a in zip(positions, e):
                new[j] += a
            new = tuple(new)
            out[new] = out.get(new, 0) + c
        return MultiPoly._raw(nvars, {e: c for e, c in out.items() if c})

    def swap(self, a: int, b: int) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[a], e[b] = e[b], e[a]
            out[tuple(e)] = c
        return MultiPoly._raw(self.nvars, out)

    def is_symmetric(self) -> bool:
        return all(self.swap(j, j + 1) == self for j in range(self.nvars - 1))

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("point has the wrong number of coordinates")
        point = [Fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, a in zip(point, e):
                if a:
                    term *= v**a
            total += term
        return total

    def exact_divide(self, divisor: "MultiPoly") -> "MultiPoly":
        """Quotient ``self / divisor``; ``ArithmeticError`` if it is not exact."""
        self._check(divisor)
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        lt_e, lt_c = divisor.leading()
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            e = max(rem)
            c = rem[e]
            qe = tuple(a - b for a, b in zip(e, lt_e))
            if any(a < 0 for a in qe):
                raise ArithmeticError("polynomial division leaves a remainder")
            qc = c / lt_c
            quot[qe] = qc
            for de, dc in divisor.terms.items():
                t = tuple(a + b for a, b in zip(qe, de))
                v = rem.get(t, 0) - qc * dc
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return MultiPoly._raw(self.nvars, quot)


def _as_poly(f, nvars: int) -> MultiPoly:
    return f if isinstance(f, MultiPoly) else MultiPoly.constant(f, nvars)


@lru_cache(maxsize=None)
def _elementary(r: int, positions: tuple, nvars: int) -> MultiPoly:
    terms = {}
    for chosen in combinations(positions, r):
        e = [0] * nvars
        for j in chosen:
            e[j] += 1
        terms[tuple(e)] = 1
    return MultiPoly(nvars, terms)


@lru_cache(maxsize=None)
def _complete(r: int, positions: tuple, nvars: int) -> MultiPoly:
    terms: dict = {}
    for chosen in combinations_with_replacement(positions, r):
        e = [0] * nvars
        for j in chosen:
            e[j] += 1
        e = tuple(e)
        terms[e] = terms.get(e, 0) + 1
    return MultiPoly(nvars, terms)


def elementary(r: int, variables, nvars: int | None = None) -> MultiPoly:
    pos = _positions(variables)
    nvars = _ambient(pos, nvars)
    if r < 0:
        return MultiPoly(nvars)
    return _elementary(r, pos, nvars)


def complete(r: int, variables, nvars: int | None = None) -> MultiPoly:
    pos = _positions(variables)
    nvars = _ambient(pos, nvars)
    if r < 0 or (r > 0 and not pos):
        return MultiPoly(nvars)
    return _complete(r, pos, nvars)


def _ambient(pos: tuple, nvars: int | None) -> int:
    need = max(pos) + 1 if pos else 0
    if nvars is None:
        return need
    if nvars < need:
        raise ValueError(f"variable position {need - 1} outside a {nvars}-variable ring")
    return nvars


def _det(matrix: list[list[MultiPoly]], nvars: int) -> MultiPoly:
    """Cofactor expansion along the first row, memoised on the column set."""
    size = len(matrix)
    if size == 0:
        return MultiPoly.constant(1, nvars)
    memo: dict = {}

    def minor(row: int, cols: tuple) -> MultiPoly:
        if row == size:
            return MultiPoly.constant(1, nvars)
        key = (row, cols)
        if key not in memo:
            acc = MultiPoly(nvars)
            for pos, c in enumerate(cols):
                entry = matrix[row][c]
                if not entry:
                    continue
                sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
                term = entry * sub
                acc = acc - term if pos % 2 else acc + term
            memo[key] = acc
        return memo[key]

    return minor(0, tuple(range(size)))


def schur(lam: Iterable[int], variables, nvars: int | None = None) -> MultiPoly:
    """Schur polynomial via the Jacobi-Trudi determinant ``det(h_{lam_i - i + j})``."""
    lam = Partition(lam)
    pos = _positions(variables)
    nvars = _ambient(pos, nvars)
    return _schur(lam, pos, nvars)


@lru_cache(maxsize=4096)
def _schur(lam: Partition, pos: tuple, nvars: int) -> MultiPoly:
    if len(lam) > len(pos):
        return MultiPoly(nvars)
    size = len(lam)
    matrix = [
        [complete(lam[i] - i + j, pos, nvars) for j in range(size)] for i in range(size)
    ]
    return _det(matrix, nvars)


def _fraction_det(rows: list[list[Fraction]]) -> Fraction:
    a = [list(r) for r in rows]
    size = len(a)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, size):
            f = a[r][col] / a[col][col]
            if f:
                for c in range(col, size):
                    a[r][c] -= f * a[col][c]
    return det


def schur_eval(lam: Iterable[int], points: Sequence) -> Fraction:
    """Evaluate ``s_lam`` at distinct points via the bialternant ratio."""
    lam = Partition(lam)
    pts = [Fraction(p) for p in points]
    if len(set(pts)) != len(pts):
        raise ValueError("bialternant formula needs pairwise distinct points")
    m = len(pts)
    if len(lam) > m:
        return Fraction(0)
    padded = list(lam) + [0] * (m - len(lam))
    num = _fraction_det([[x ** (padded[i] + m - 1 - i) for x in pts] for i in range(m)])
    den = _fraction_det([[x ** (m - 1 - i) for x in pts] for i in range(m)])
    return num / den


def schur_expand(p: MultiPoly, m: int | None = None) -> dict[Partition, Fraction]:
    """Coefficients ``c`` with ``p = sum c[lam] s_lam(x_1..x_m)``."""
    m = p.nvars if m is None else m
    if m != p.nvars:
        raise ValueError(f"polynomial has {p.nvars} variables, expected {m}")
    if not p.is_symmetric():
        raise ValueError("schur_expand needs a symmetric polynomial")
    rem = p
    out: dict[Partition, Fraction] = {}
    while rem:
        e, c = rem.leading()
        if any(a < b for a, b in zip(e, e[1:])):
            raise ArithmeticError(f"leading exponent {e} is not a partition")
        lam = Partition(e)
        out[lam] = c
        rem = rem - schur(lam, m) * c
    return out


# -- coinvariant ring -------------------------------------------------------


@dataclass(frozen=True)
class CoinvariantElement:
    """Normal form in R(n): every monomial has ``a_i <= n - i`` (1-based i)."""

    n: int
    normal_form: MultiPoly

    def __post_init__(self):
        if self.normal_form.nvars != self.n:
            raise ValueError("normal form must live in n variables")
        for e in self.normal_form.terms:
            if any(a > self.n - 1 - j for j, a in enumerate(e)):
                raise ValueError(f"monomial {e} is not standard for n={self.n}")

    def is_zero(self) -> bool:
        return not self.normal_form

    def __bool__(self):
        return bool(self.normal_form)


@lru_cache(maxsize=None)
def _rewrite_tail(n: int, j: int) -> tuple:
    """``x_j^(n-j) == tail`` modulo the ideal, with 0-based ``j``.

    Comes from ``h_{n-j}(x_1..x_{j+1})``, whose lex-leading term under
    ``x_n > ... > x_1`` is ``x_{j+1}^(n-j)``.
    """
    gen = complete(n - j, j + 1, n)
    lead = [0] * n
    lead[j] = n - j
    lead = tuple(lead)
    return tuple((e, -c) for e, c in gen.terms.items() if e != lead)


def coinvariant_reduce(p: MultiPoly, n: int) -> CoinvariantElement:
    """Normal form of ``p`` in ``R(n)`` (polynomials in fewer variables are padded).

    Variables are cleared from ``x_n`` down to ``x_1``; rewriting ``x_j`` only
    introduces ``x_1..x_j``, so each variable is finished in one pass, working
    down through its exponent levels so like terms merge before expanding.
    """
    if p.nvars > n:
        raise ValueError(f"polynomial in {p.nvars} variables does not live in R({n})")
    if p.nvars < n:
        p = p.embed(range(p.nvars), n)
    terms = dict(p.terms)
    for j in range(n - 1, -1, -1):
        bound, step = n - 1 - j, n - j
        tail = _rewrite_tail(n, j)
        levels: dict[int, list] = {}
        for e in terms:
            if e[j] > bound:
                levels.setdefault(e[j], []).append(e)
        while levels:
            top = max(levels)
            for e in levels.pop(top):
                c = terms.pop(e, 0)
                if not c:
                    continue
                base = list(e)
                base[j] -= step
                for te, tc in tail:
                    ne = tuple(a + b for a, b in zip(base, te))
                    v = terms.get(ne, 0) + c * tc
                    if v:
                        if ne not in terms and ne[j] > bound:
                            levels.setdefault(ne[j], []).append(ne)
                        terms[ne] = v
                    else:
                        terms.pop(ne, None)
    return CoinvariantElement(n, MultiPoly._raw(n, terms))


def standard_monomials(n: int) -> list[tuple]:
    """Exponent vectors with ``a_i <= n - i``; a basis of R(n) of size ``n!``."""
    from itertools import product

    return [tuple(e) for e in product(*(range(n - j) for j in range(n)))]


def verify_he_duality(n: int, d: int, r: int) -> bool:
    """``h_r(x_1..x_d) == (-1)^r e_r(x_{d+1}..x_n)`` in R(n)."""
    if not 0 <= d <= n or r < 0:
        raise ValueError(f"need 0 <= d <= n and r >= 0, got n={n}, d={d}, r={r}")
    lhs = complete(r, range(d), n)
    rhs = elementary(r, range(d, n), n) * (-1) ** r
    return coinvariant_reduce(lhs - rhs, n).is_zero()


def verify_transpose_identity(n: int, d: int, lam: Iterable[int]) -> bool:
    """``s_lam(x_1..x_d) == (-1)^|lam| s_lam'(x_{d+1}..x_n)`` in R(n)."""
    lam = Partition(lam)
    if not fits_box(lam, BoxShape(d, n).validate()):
        raise ValueError(f"{tuple(lam)} does not fit the {d} x {n - d} box")
    lhs = schur(lam, range(d), n)
    rhs = schur(transpose(lam), range(d, n), n) * (-1) ** lam.weight
    return coinvariant_reduce(lhs - rhs, n).is_zero()


# -- Grassmannian classes ---------------------------------------------------


@dataclass(frozen=True)
class SchurClass:
    """Element of H*(Gr(d, n)) in the Schur basis."""

    d: int
    n: int
    coeffs: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        box = BoxShape(self.d, self.n).validate()
        clean = {}
        for lam, c in dict(self.coeffs).items():
            lam = Partition(lam)
            c = Fraction(c)
            if not fits_box(lam, box):
                raise ValueError(f"{tuple(lam)} does not fit the {self.d} x {self.n - self.d} box")
            if c:
                clean[lam] = clean.get(lam, 0) + c
        object.__setattr__(self, "coeffs", {k: v for k, v in clean.items() if v})

    @classmethod
    def truncated(cls, d: int, n: int, coeffs: Mapping) -> "SchurClass":
        """Drop the Schur terms that vanish on Gr(d, n)."""
        box = BoxShape(d, n).validate()
        return cls(d, n, {Partition(lam): c for lam, c in coeffs.items() if fits_box(lam, box)})

    def __add__(self, other: "SchurClass") -> "SchurClass":
        if (self.d, self.n) != (other.d, other.n):
            raise ValueError("classes live on different Grassmannians")
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SchurClass(self.d, self.n, out)

    def __mul__(self, c) -> "SchurClass":
        return SchurClass(self.d, self.n, {lam: v * c for lam, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.coeffs)

    def to_poly(self, nvars: int | None = None) -> MultiPoly:
        """Representative polynomial ``sum c s_lam(x_1..x_d)``."""
        nvars = self.d if nvars is None else nvars
        acc = MultiPoly(nvars)
        for lam, c in self.coeffs.items():
            acc = acc + schur(lam, self.d, nvars) * c
        return acc
