"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`MultiPoly` maps exponent tuples to nonzero :class:`~fractions.Fraction`
coefficients. Values are immutable and canonical, so ``==`` is structural
equality and polynomials can be dict keys.

Text form, accepted by :func:`parse_poly` and produced by :func:`to_text`::

    1/2*x1^2 - x1*x2 + 1/2*(x2 - 3)^2

Variables are ``x1 .. xd``; for ``d <= 3`` the aliases ``x``, ``y``, ``z``
stand for ``x1``, ``x2``, ``x3``.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import Counter
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Optional, Sequence

from .exact import Scalar, fmt, to_fraction

Exponent = tuple[int, ...]

#: symmetrize enumerates d! permutations; beyond this it is refused
MAX_SYMMETRIZE_VARS = 8

_ALIASES = {"x": 1, "y": 2, "z": 3}


def grlex_key(exp: Exponent) -> tuple:
    """Graded lexicographic sort key (total degree first, then lex)."""
    return (sum(exp), exp)


class MultiPoly:
    """Immutable sparse polynomial in ``num_vars`` variables."""

    __slots__ = ("num_vars", "_terms", "_hash")

    def __init__(self, num_vars: int, terms: Optional[Mapping[Sequence[int], Scalar]] = None):
        if not isinstance(num_vars, int) or num_vars < 1:
            raise ValueError(f"num_vars must be a positive integer, got {num_vars!r}")
        clean: dict[Exponent, Fraction] = {}
        for exp, coef in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != num_vars:
                raise ValueError(
                    f"exponent {exp} has length {len(exp)}, expected {num_vars}"
                )
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = clean.get(exp, Fraction(0)) + to_fraction(coef)
            if c:
                clean[exp] = c
            else:
                clean.pop(exp, None)
        self.num_vars = num_vars
        self._terms = clean
        self._hash = None

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int) -> "MultiPoly":
        return cls(num_vars)

    @classmethod
    def constant(cls, value: Scalar, num_vars: int) -> "MultiPoly":
        return cls(num_vars, {(0,) * num_vars: value})

    @classmethod
    def variable(cls, index: int, num_vars: int) -> "MultiPoly":
        """The coordinate ``x_index`` (1-based)."""
        if not 1 <= index <= num_vars:
            raise ValueError(f"variable index {index} out of range 1..{num_vars}")
        exp = [0] * num_vars
        exp[index - 1] = 1
        return cls(num_vars, {tuple(exp): 1})

    @classmethod
    def _raw(cls, num_vars: int, terms: dict) -> "MultiPoly":
        # terms already canonical: tuple keys, nonzero Fraction values
        obj = cls.__new__(cls)
        obj.num_vars = num_vars
        obj._terms = terms
        obj._hash = None
        return obj

    # -- inspection -----------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def sorted_terms(self, descending: bool = True) -> list[tuple[Exponent, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=descending)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Total degree; the zero polynomial reports 0."""
        return max((sum(e) for e in self._terms), default=0)

    @property
    def max_entry(self) -> int:
        """Largest single exponent entry over all terms."""
        return max((max(e) for e in self._terms), default=0)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.num_vars != self.num_vars:
                raise ValueError(
                    f"mismatched num_vars: {self.num_vars} vs {other.num_vars}"
                )
            return other
        if isinstance(other, (int, Fraction, str)) and not isinstance(other, bool):
            return MultiPoly.constant(other, self.num_vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return MultiPoly._raw(self.num_vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.num_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: Scalar) -> "MultiPoly":
        c = to_fraction(c)
        if not c:
            return MultiPoly.zero(self.num_vars)
        return MultiPoly._raw(self.num_vars, {e: c * v for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, str)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                out[exp] = out.get(exp, 0) + c1 * c2
        return MultiPoly._raw(self.num_vars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = MultiPoly.constant(1, self.num_vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.num_vars == other.num_vars and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == MultiPoly.constant(other, self.num_vars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self._terms.items())))
        return self._hash

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return eval_poly(self, point)

    def permute(self, perm: Sequence[int]) -> "MultiPoly":
        """Return ``p(x_{perm[0]+1}, ..., x_{perm[d-1]+1})`` (0-based perm)."""
        d = self.num_vars
        if sorted(perm) != list(range(d)):
            raise ValueError(f"{perm} is not a permutation of 0..{d - 1}")
        out = {}
        for exp, c in self._terms.items():
            new = [0] * d
            for i, e in enumerate(exp):
                new[perm[i]] += e
            out[tuple(new)] = c
        return MultiPoly._raw(d, out)

    def __repr__(self):
        return f"MultiPoly({self.num_vars}, {to_text(self)!r})"

    def __str__(self):
        return to_text(self)


# ---------------------------------------------------------------------------
# text form


class PolySyntaxError(ValueError):
    """Raised by :func:`parse_poly`; ``pos`` is the 0-based offset in the text."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<var>x\d+|[xyz])|(?P<op>[-+*^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise PolySyntaxError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, num_vars: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.d = num_vars

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            what = "end of input" if kind == "end" else repr(val)
            raise PolySyntaxError(f"expected {op!r}, found {what}", pos)

    def poly(self) -> MultiPoly:
        kind, val, _ = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        result = self.term().scale(sign)
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                result = result + t if val == "+" else result - t
            else:
                return result

    def term(self) -> MultiPoly:
        result = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                result = result * self.factor()
            else:
                return result

    def factor(self) -> MultiPoly:
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "num" or "/" in val:
                raise PolySyntaxError("exponent must be a nonnegative integer", pos)
            base = base ** int(val)
        return base

    def atom(self) -> MultiPoly:
        kind, val, pos = self.take()
        if kind == "num":
            return MultiPoly.constant(to_fraction(val), self.d)
        if kind == "var":
            if val in _ALIASES:
                if self.d > 3:
                    raise PolySyntaxError(
                        f"alias {val!r} only allowed with at most 3 variables", pos
                    )
                index = _ALIASES[val]
            else:
                index = int(val[1:])
            if not 1 <= index <= self.d:
                raise PolySyntaxError(
                    f"variable index {index} out of range 1..{self.d}", pos
                )
            return MultiPoly.variable(index, self.d)
        if kind == "op" and val == "(":
            inner = self.poly()
            self.expect_op(")")
            return inner
        what = "end of input" if kind == "end" else repr(val)
        raise PolySyntaxError(f"unexpected {what}", pos)


def infer_num_vars(text: str) -> int:
    """Smallest variable count that makes ``text`` well formed."""
    best = 1
    for m in re.finditer(r"x(\d+)|([xyz])", text):
        best = max(best, int(m.group(1)) if m.group(1) else _ALIASES[m.group(2)])
    return best


def parse_poly(text: str, num_vars: Optional[int] = None) -> MultiPoly:
    """Parse and fully expand a polynomial.

    ``num_vars`` defaults to the largest variable index mentioned.
    Raises :class:`PolySyntaxError` on malformed input.
    """
    if num_vars is None:
        num_vars = infer_num_vars(text)
    parser = _Parser(text, num_vars)
    result = parser.poly()
    kind, val, pos = parser.peek()
    if kind != "end":
        raise PolySyntaxError(f"unexpected {val!r}", pos)
    return result


def _monomial_text(exp: Exponent) -> str:
    parts = []
    for i, e in enumerate(exp, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def to_text(p: MultiPoly) -> str:
    """Canonical text, terms in descending graded-lex order."""
    if p.is_zero():
        return "0"
    pieces = []
    for k, (exp, c) in enumerate(p.sorted_terms()):
        mono = _monomial_text(exp)
        mag = abs(c)
        if not mono:
            body = fmt(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{fmt(mag)}*{mono}"
        if k == 0:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


def to_json(p: MultiPoly) -> dict:
    return {
        "num_vars": p.num_vars,
        "terms": [{"exp": list(e), "coef": fmt(c)} for e, c in p.sorted_terms()],
    }


def from_json(obj: Mapping) -> MultiPoly:
    d = obj["num_vars"]
    terms: dict = {}
    for t in obj["terms"]:
        exp = tuple(t["exp"])
        terms[exp] = terms.get(exp, Fraction(0)) + to_fraction(t["coef"])
    return MultiPoly(d, terms)


# ---------------------------------------------------------------------------
# operations


def poly_arith(p: MultiPoly, q: Optional[MultiPoly], op: str, c: Scalar = 1) -> MultiPoly:
    """Dispatch ``op`` in ``{"add", "sub", "mul", "scale"}``; scale ignores ``q``."""
    if op == "scale":
        return p.scale(c)
    if q is None:
        raise ValueError(f"{op} needs two polynomials")
    if p.num_vars != q.num_vars:
        raise ValueError(f"mismatched num_vars: {p.num_vars} vs {q.num_vars}")
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def eval_poly(p: MultiPoly, point: Sequence[Scalar]) -> Fraction:
    """Exact value of ``p`` at ``point``."""
    if len(point) != p.num_vars:
        raise ValueError(f"point has {len(point)} coordinates, expected {p.num_vars}")
    xs = [to_fraction(v) for v in point]
    cache: dict[tuple[int, int], Fraction] = {}
    total = Fraction(0)
    for exp, c in p.terms.items():
        term = c
        for i, e in enumerate(exp):
            if e:
                key = (i, e)
                if key not in cache:
                    cache[key] = xs[i] ** e
                term *= cache[key]
        total += term
    return total


def symmetrize(p: MultiPoly) -> MultiPoly:
    """Average of ``p`` over all permutations of its variables."""
    d = p.num_vars
    if d > MAX_SYMMETRIZE_VARS:
        raise ValueError(
            f"symmetrize enumerates d! permutations; d={d} exceeds {MAX_SYMMETRIZE_VARS}"
        )
    perms = list(itertools.permutations(range(d)))
    nperm = math.factorial(d)
    out: dict[Exponent, Fraction] = {}
    for exp, c in p.terms.items():
        orbit = Counter(tuple(exp[s] for s in perm) for perm in perms)
        for new, count in orbit.items():
            out[new] = out.get(new, 0) + c * count / nperm
    return MultiPoly._raw(d, {e: v for e, v in out.items() if v})


def is_symmetric(p: MultiPoly) -> bool:
    # cheaper than symmetrize: check invariance under the two generators of S_d
    d = p.num_vars
    if d == 1:
        return True
    swap = [1, 0] + list(range(2, d))
    cycle = list(range(1, d)) + [0]
    return p.permute(swap) == p and p.permute(cycle) == p


def is_homogeneous(p: MultiPoly) -> Optional[int]:
    """Common total degree of all terms, or None; the zero polynomial gives 0."""
    degrees = {sum(e) for e in p.terms}
    if not degrees:
        return 0
    if len(degrees) == 1:
        return degrees.pop()
    return None


def _check_increasing(name: str, seq: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(int(s) for s in seq)
    if not seq:
        raise ValueError(f"{name} must be non-empty")
    if seq[0] <= 0 or any(a >= b for a, b in zip(seq, seq[1:])):
        raise ValueError(f"{name} must be strictly increasing positive integers, got {seq}")
    return seq


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _leibniz(row_shift: Sequence[int], col_exp: Sequence[int]) -> MultiPoly:
    # det[x_i^(row_shift[i] + col_exp[j])] expanded; all monomials distinct
    d = len(row_shift)
    terms = {}
    for perm in itertools.permutations(range(d)):
        exp = tuple(row_shift[i] + col_exp[perm[i]] for i in range(d))
        terms[exp] = terms.get(exp, 0) + _perm_sign(perm)
    return MultiPoly(d, terms)


def vandermonde_poly(beta: Sequence[int], d: Optional[int] = None) -> MultiPoly:
    """Generalized Vandermonde determinant: row i is ``(1, x_i^b1, ..., x_i^b(d-1))``."""
    beta = _check_increasing("beta", beta)
    if d is None:
        d = len(beta) + 1
    if d < 2 or d != len(beta) + 1:
        raise ValueError(f"beta of length {len(beta)} needs d = {len(beta) + 1}, got {d}")
    return _leibniz([0] * d, (0,) + beta)


def minor_poly(r: Sequence[int], t: Sequence[int]) -> MultiPoly:
    """Polynomial whose T-operator image is the Hankel minor with column
    offsets ``(0, *r)`` and row offsets ``(0, *t)``.

    Row i of the determinant is ``x_i^t(i-1) * (1, x_i^r1, ..., x_i^r(d-1))``.
    """
    r = _check_increasing("r", r)
    t = _check_increasing("t", t)
    if len(r) != len(t):
        raise ValueError(f"r and t must have equal length, got {len(r)} and {len(t)}")
    return _leibniz((0,) + t, (0,) + r)


def quadratic_form_poly(A: Sequence[Sequence[Scalar]]) -> MultiPoly:
    """``x^T A x`` for a symmetric matrix ``A``."""
    A = [[to_fraction(v) for v in row] for row in A]
    d = len(A)
    if d == 0 or any(len(row) != d for row in A):
        raise ValueError("A must be a non-empty square matrix")
    if any(A[i][j] != A[j][i] for i in range(d) for j in range(i)):
        raise ValueError("A must be symmetric")
    terms: dict = {}
    for i in range(d):
        for j in range(d):
            exp = [0] * d
            exp[i] += 1
            exp[j] += 1
            exp = tuple(exp)
            terms[exp] = terms.get(exp, 0) + A[i][j]
    return MultiPoly(d, terms)


def collapse(p: MultiPoly, groups: Sequence[int], num_groups: int) -> MultiPoly:
    """Substitute ``x_i -> y_{groups[i]}`` (0-based groups) into ``p``."""
    if len(groups) != p.num_vars:
        raise ValueError("groups must assign every variable")
    out: dict = {}
    for exp, c in p.terms.items():
        new = [0] * num_groups
        for i, e in enumerate(exp):
            new[groups[i]] += e
        new = tuple(new)
        out[new] = out.get(new, 0) + c
    return MultiPoly(num_groups, out)


def one_var(coeffs: Iterable[Scalar]) -> MultiPoly:
    """One-variable polynomial from coefficients ``[c0, c1, ...]``."""
    return MultiPoly(1, {(i,): c for i, c in enumerate(coeffs)})
