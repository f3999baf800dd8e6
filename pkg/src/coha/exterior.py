"""Exterior algebra on generators ``phi_0, phi_1, ...``.

An element is a finite rational combination of canonical monomials
``Phi_k`` (``k`` strictly increasing).  With ``bound=n`` the algebra is
``/\\*(V(n))`` and every index is below ``n``; with ``bound=None`` it is the
free (unbounded) algebra.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping

from .partitions import WedgeIndex, index_to_partition, partition_to_index
from .symfunc import SchurClass


def _inversions(seq) -> int:
    return sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])


class ExteriorElement:
    __slots__ = ("bound", "terms")

    def __init__(self, terms: Mapping | Iterable = (), bound: int | None = None):
        if bound is not None and bound < 0:
            raise ValueError("bound must be non-negative")
        self.bound = bound
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[WedgeIndex, Fraction] = {}
        for k, c in items:
            k = WedgeIndex(k)
            if bound is not None and k and k[-1] >= bound:
                raise ValueError(f"index {tuple(k)} exceeds bound {bound}")
            c = Fraction(c)
            v = clean.get(k, 0) + c
            if v:
                clean[k] = v
            else:
                clean.pop(k, None)
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict, bound):
        el = cls.__new__(cls)
        el.bound = bound
        el.terms = terms
        return el

    def _bound_with(self, other: "ExteriorElement"):
        if self.bound != other.bound:
            raise ValueError(f"bound mismatch: {self.bound} vs {other.bound}")
        return self.bound

    def __add__(self, other: "ExteriorElement") -> "ExteriorElement":
        bound = self._bound_with(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return ExteriorElement._raw(out, bound)

    def __neg__(self):
        return ExteriorElement._raw({k: -c for k, c in self.terms.items()}, self.bound)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = Fraction(c)
        if not c:
            return ExteriorElement._raw({}, self.bound)
        return ExteriorElement._raw({k: v * c for k, v in self.terms.items()}, self.bound)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        return self.bound == other.bound and self.terms == other.terms

    def __hash__(self):
        return hash((self.bound, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"ExteriorElement({format_element(self)!r}, bound={self.bound})"

    def degrees(self) -> set[int]:
        return {len(k) for k in self.terms}

    def homogeneous_degree(self) -> int | None:
        """Degree if homogeneous, ``None`` for zero; raises otherwise."""
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError(f"element is not homogeneous (degrees {sorted(degs)})")
        return degs.pop() if degs else None

    def with_bound(self, bound: int | None) -> "ExteriorElement":
        return ExteriorElement(self.terms, bound)


def zero(bound: int | None = None) -> ExteriorElement:
    return ExteriorElement((), bound)


def one(bound: int | None = None) -> ExteriorElement:
    return ExteriorElement({(): 1}, bound)


def monomial(k: Iterable[int], coeff=1, bound: int | None = None) -> ExteriorElement:
    return ExteriorElement({WedgeIndex(k): coeff}, bound)


def phi(i: int, bound: int | None = None) -> ExteriorElement:
    return monomial((i,), 1, bound)


def canonicalize(generators: Iterable[int], bound: int | None = None) -> ExteriorElement:
    """``phi_{g_1} ^ ... ^ phi_{g_r}`` rewritten as a signed canonical monomial."""
    gens = [int(g) for g in generators]
    if len(set(gens)) != len(gens):
        return zero(bound)
    sign = -1 if _inversions(gens) % 2 else 1
    return monomial(sorted(gens), sign, bound)


def wedge(a: ExteriorElement, b: ExteriorElement) -> ExteriorElement:
    bound = a._bound_with(b)
    out: dict = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            if set(ka) & set(kb):
                continue
            merged = ka + kb
            sign = -1 if _inversions(merged) % 2 else 1
            key = WedgeIndex(sorted(merged))
            out[key] = out.get(key, 0) + sign * ca * cb
    return ExteriorElement._raw({k: c for k, c in out.items() if c}, bound)


def _derivative(i: int, a: ExteriorElement, right: bool) -> ExteriorElement:
    out: dict = {}
    for k, c in a.terms.items():
        if i not in k:
            continue
        p = k.index(i) + 1
        expo = len(k) - p if right else p - 1
        key = WedgeIndex(k[: p - 1] + k[p:])
        out[key] = out.get(key, 0) + (-c if expo % 2 else c)
    return ExteriorElement._raw({k: c for k, c in out.items() if c}, a.bound)


def d_right(i: int, a: ExteriorElement) -> ExteriorElement:
    """Delete ``phi_i`` at 1-based position ``p`` of ``d`` with sign ``(-1)^(d-p)``."""
    return _derivative(i, a, right=True)


def d_left(i: int, a: ExteriorElement) -> ExteriorElement:
    """Delete ``phi_i`` at 1-based position ``p`` with sign ``(-1)^(p-1)``."""
    return _derivative(i, a, right=False)


def to_schur(a: ExteriorElement, n: int | None = None) -> SchurClass:
    n = a.bound if n is None else n
    if n is None:
        raise ValueError("to_schur needs a bound n")
    if a.bound is not None and a.bound != n:
        raise ValueError(f"bound mismatch: {a.bound} vs {n}")
    d = a.homogeneous_degree()
    if d is None:
        # zero element: degree is not recoverable, use the empty class on Gr(0, n)
        return SchurClass(0, n, {})
    coeffs = {}
    for k, c in a.terms.items():
        if k and k[-1] >= n:
            raise ValueError(f"index {tuple(k)} exceeds n={n}")
        coeffs[index_to_partition(k)] = c
    return SchurClass(d, n, coeffs)


def from_schur(c: SchurClass) -> ExteriorElement:
    return ExteriorElement(
        {partition_to_index(lam, c.d): v for lam, v in c.coeffs.items()}, c.n
    )


def multiply_ed_power(a: ExteriorElement, p: int) -> ExteriorElement:
    """Cup with ``e_d^p``: shifts every index of ``Phi_k`` up by ``p``."""
    if a.bound is not None:
        raise ValueError("multiply_ed_power acts on the free algebra")
    if p < 0:
        raise ValueError("power must be non-negative")
    a.homogeneous_degree()
    return ExteriorElement._raw(
        {WedgeIndex(x + p for x in k): c for k, c in a.terms.items()}, None
    )


def truncate(a: ExteriorElement, n: int) -> ExteriorElement:
    """Quotient map onto ``/\\*(V(n))``: kill monomials using some ``phi_i``, ``i >= n``."""
    return ExteriorElement._raw(
        {k: c for k, c in a.terms.items() if not k or k[-1] < n}, n
    )


# -- text form ----------------------------------------------------------------


def _coeff_text(c: Fraction) -> str:
    sign = "-" if c < 0 else "+"
    c = abs(c)
    return f"{sign}{c.numerator}" if c.denominator == 1 else f"{sign}{c.numerator}/{c.denominator}"


def sort_key(k: WedgeIndex):
    return (len(k), tuple(k))


def format_element(a: ExteriorElement) -> str:
    """``+1 * [0,1] -1/2 * [2]``; the zero element prints as ``0``."""
    if not a.terms:
        return "0"
    return " ".join(
        f"{_coeff_text(a.terms[k])} * [{','.join(map(str, k))}]"
        for k in sorted(a.terms, key=sort_key)
    )


def element_to_json(a: ExteriorElement) -> list[dict]:
    return [
        {"coeff": str(a.terms[k]), "index": list(k)} for k in sorted(a.terms, key=sort_key)
    ]


class ElementParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TERM = re.compile(r"\s*([+-])\s*(\d+)(?:/(\d+))?\s*\*\s*\[([^\]]*)\]")
_MONO = re.compile(r"\s*\d+(\s*,\s*\d+)*\s*")


def _parse_indices(body: str, offset: int) -> list[int]:
    if not body.strip():
        return []
    out = []
    pos = offset
    for piece in body.split(","):
        if not piece.strip().isdigit():
            raise ElementParseError(f"bad generator index {piece.strip()!r}", pos)
        out.append(int(piece))
        pos += len(piece) + 1
    return out


def _add_generators(acc: dict, gens: list[int], coeff: Fraction, bound, position: int):
    if bound is not None and any(g >= bound for g in gens):
        raise ElementParseError(f"generator index exceeds bound {bound}", position)
    for k, c in canonicalize(gens, bound).terms.items():
        acc[k] = acc.get(k, 0) + c * coeff


def parse_element(text: str, bound: int | None = None) -> ExteriorElement:
    """Parse the CLI element syntax.

    Accepted forms: a bare comma-separated monomial (``0,1,3``; empty text is
    the unit), the printed term list (``+1 * [0,1] -1/2 * [2]``, or ``0``), or a
    JSON list of ``{"coeff": "p/q", "index": [...]}`` objects.  Unsorted
    indices are canonicalised with their permutation sign.
    """
    stripped = text.strip()
    acc: dict = {}
    if stripped.startswith("{") or stripped.startswith("[{") or stripped == "[]":
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ElementParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
        if not isinstance(data, list):
            data = [data]
        for n_term, term in enumerate(data):
            try:
                coeff = Fraction(str(term["coeff"]))
                gens = [int(g) for g in term["index"]]
            except (KeyError, TypeError, ValueError, ZeroDivisionError):
                raise ElementParseError(f"malformed term #{n_term}", 0) from None
            _add_generators(acc, gens, coeff, bound, 0)
        return ExteriorElement(acc, bound)
    if not stripped:
        return one(bound)
    if stripped == "0":
        return zero(bound)
    if _MONO.fullmatch(text):
        gens = _parse_indices(stripped, text.index(stripped[0]))
        _add_generators(acc, gens, Fraction(1), bound, 0)
        return ExteriorElement(acc, bound)
    pos = 0
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _TERM.match(text, pos)
        if m is None:
            skip = len(text[pos:]) - len(text[pos:].lstrip())
            raise ElementParseError("expected a term like '+1 * [0,1]'", pos + skip)
        sign, num, den, body = m.groups()
        if den is not None and int(den) == 0:
            raise ElementParseError("zero denominator", m.start(3))
        coeff = Fraction(int(num), int(den or 1)) * (-1 if sign == "-" else 1)
        gens = _parse_indices(body, m.start(4))
        _add_generators(acc, gens, coeff, bound, m.start(4))
        pos = m.end()
    return ExteriorElement(acc, bound)


__all__ = [
    "ExteriorElement",
    "ElementParseError",
    "canonicalize",
    "d_left",
    "d_right",
    "element_to_json",
    "format_element",
    "from_schur",
    "monomial",
    "parse_element",
    "multiply_ed_power",
    "one",
    "phi",
    "to_schur",
    "truncate",
    "wedge",
    "zero",
]
