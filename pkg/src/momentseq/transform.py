"""Operators that build new sequences from a given one.

For a ``d``-variable polynomial ``p = sum_i p_i x^i`` the operator ``T_p``
sends ``alpha`` to ``(sum_i p_i alpha_{n+i_1} ... alpha_{n+i_d})_n``. If
``alpha`` has a representing measure on ``[0, inf)`` and ``p`` (or its
symmetrization) is nonnegative on the orthant, the image does too.

Prefixes are finite, so every operator stops at the last ``n`` whose terms
are all available.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import Scalar, to_fraction
from .linalg import det
from .poly import MultiPoly, eval_poly, to_json as poly_json
from .seq import SequencePrefix, as_prefix, catalog


@dataclass(frozen=True)
class MinorSpec:
    r: tuple[int, ...]
    t: tuple[int, ...]

    def __post_init__(self):
        r, t = tuple(int(v) for v in self.r), tuple(int(v) for v in self.t)
        for name, s in (("r", r), ("t", t)):
            if not s or s[0] <= 0 or any(a >= b for a, b in zip(s, s[1:])):
                raise ValueError(f"{name} must be strictly increasing positive integers, got {s}")
        if len(r) != len(t):
            raise ValueError("r and t must have the same length")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "t", t)

    @property
    def d(self) -> int:
        return len(self.r) + 1


@dataclass(frozen=True)
class WitnessReport:
    xi: Fraction
    value: Fraction
    prefix: SequencePrefix
    transformed: SequencePrefix

    @property
    def certifies_failure(self) -> bool:
        """True when ``T_p`` provably lacks the Stieltjes moment property."""
        return self.value < 0


def apply_tp(p: MultiPoly, alpha: SequencePrefix) -> SequencePrefix:
    """The sequence ``T_p(alpha)``, as long as the prefix allows."""
    alpha = as_prefix(alpha)
    reach = p.max_entry
    n_out = len(alpha) - reach
    if n_out < 1:
        raise ValueError(f"T_p needs at least {reach + 1} terms, prefix has {len(alpha)}")
    a = alpha.values
    terms = list(p.terms.items())
    out = []
    for n in range(n_out):
        total = Fraction(0)
        for exp, c in terms:
            prod = c
            for e in exp:
                prod *= a[n + e]
            total += prod
        out.append(total)
    return SequencePrefix(
        tuple(out), None, None, {"operator": "T_p", "poly": poly_json(p)}
    )


def minor_sequence(alpha: SequencePrefix, spec: MinorSpec) -> SequencePrefix:
    """``n``-th term: ``det[alpha_{n + r_j + t_i}]`` with ``r_0 = t_0 = 0``."""
    alpha = as_prefix(alpha)
    if not isinstance(spec, MinorSpec):
        spec = MinorSpec(*spec)
    r, t = (0,) + spec.r, (0,) + spec.t
    reach = r[-1] + t[-1]
    n_out = len(alpha) - reach
    if n_out < 1:
        raise ValueError(f"minor sequence needs at least {reach + 1} terms, prefix has {len(alpha)}")
    a = alpha.values
    out = [det([[a[n + rj + ti] for rj in r] for ti in t]) for n in range(n_out)]
    return SequencePrefix(
        tuple(out), None, None, {"operator": "minor", "spec": {"r": list(spec.r), "t": list(spec.t)}}
    )


def riesz(alpha: SequencePrefix, q: MultiPoly) -> Fraction:
    """Riesz functional: ``sum_i q_i alpha_i`` for one-variable ``q``."""
    alpha = as_prefix(alpha)
    if q.num_vars != 1:
        raise ValueError("riesz takes a one-variable polynomial")
    if q.degree >= len(alpha):
        raise ValueError(f"degree {q.degree} needs {q.degree + 1} terms, prefix has {len(alpha)}")
    return sum((c * alpha[e[0]] for e, c in q.terms.items()), Fraction(0))


def copositive_form_sequence(A: Sequence[Sequence[Scalar]], alpha: SequencePrefix) -> SequencePrefix:
    """``sum_i a_ii alpha_{n+2} alpha_n^(d-1) + sum_{i!=j} a_ij alpha_{n+1}^2 alpha_n^(d-2)``.

    This is ``T_p(alpha)`` for ``p(x) = x^T A x``.
    """
    alpha = as_prefix(alpha)
    A = [[to_fraction(v) for v in row] for row in A]
    d = len(A)
    if d < 2 or any(len(row) != d for row in A):
        raise ValueError("A must be a square matrix of size at least 2")
    if any(A[i][j] != A[j][i] for i in range(d) for j in range(i)):
        raise ValueError("A must be symmetric")
    if len(alpha) < 3:
        raise ValueError("copositive form sequence needs at least 3 terms")
    diag = sum(A[i][i] for i in range(d))
    off = sum(A[i][j] for i in range(d) for j in range(d) if i != j)
    a = alpha.values
    out = [
        diag * a[n + 2] * a[n] ** (d - 1) + off * a[n + 1] ** 2 * a[n] ** (d - 2)
        for n in range(len(a) - 2)
    ]
    return SequencePrefix(
        tuple(out), None, None,
        {"operator": "copositive_form", "spec": {"A": [[str(v) for v in row] for row in A]}},
    )


def dirac_witness(p: MultiPoly, xi: Scalar, prefix_len: int) -> WitnessReport:
    """Apply ``T_p`` to the moments of a point mass at ``xi > 0``.

    The first output term is ``p(xi)``; when it is negative the image cannot
    be a Stieltjes moment sequence, which shows ``T_p`` lacks the property.
    """
    if p.num_vars != 1:
        raise ValueError("dirac_witness takes a one-variable polynomial")
    xi = to_fraction(xi)
    if xi <= 0:
        raise ValueError(f"xi must be positive, got {xi}")
    if prefix_len <= p.degree:
        raise ValueError(f"prefix_len must exceed deg p = {p.degree}")
    alpha = catalog("dirac", prefix_len, xi)
    image = apply_tp(p, alpha)
    value = image[0]
    expected = eval_poly(p, [xi])
    if value != expected:  # pragma: no cover - would mean apply_tp is wrong
        raise AssertionError(f"T_p(dirac)_0 = {value} but p(xi) = {expected}")
    return WitnessReport(xi, value, alpha, image)
