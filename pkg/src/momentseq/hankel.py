"""Hankel matrices and the moment-sequence verifiers built on them.

All checks are exact and depth-bounded: a *pass* at depth ``m`` means every
Hankel matrix up to size ``(m+1) x (m+1)`` satisfied the criterion. A *fail*
is a proof that the sequence is not a moment sequence of the tested kind.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import fmt
from .interval import QuadraticInterval, map_interval
from .linalg import (
    DEFAULT_MINOR_BUDGET,
    BudgetExceeded,
    ExactMatrix,
    charpoly,
    is_psd,
    min_minor,
    psd_violation,
)
from .seq import SequencePrefix, as_prefix, interval_transform

__all__ = [
    "BudgetExceeded",
    "CheckReport",
    "ExactMatrix",
    "QuadraticInterval",
    "Witness",
    "check_hamburger",
    "check_interval",
    "check_stieltjes",
    "check_total_nonneg",
    "hankel_matrix",
    "is_psd",
    "map_interval",
    "max_depth",
    "min_minor",
]


@dataclass(frozen=True)
class Witness:
    m: int
    detail: str
    value: Fraction


@dataclass(frozen=True)
class CheckReport:
    verdict: str
    criterion: str
    depth_checked: int
    witness: Optional[Witness] = None

    def __post_init__(self):
        if self.verdict not in ("pass", "fail"):
            raise ValueError(f"verdict must be pass or fail, got {self.verdict!r}")
        if self.verdict == "fail" and (self.witness is None or self.witness.value >= 0):
            raise ValueError("a failing report needs a strictly negative witness")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        w = self.witness
        return {
            "verdict": self.verdict,
            "criterion": self.criterion,
            "depth": self.depth_checked,
            "witness": None if w is None else {"m": w.m, "detail": w.detail, "value": fmt(w.value)},
        }


def hankel_matrix(alpha: SequencePrefix, m: int, offset: int = 0) -> ExactMatrix:
    """``(m+1) x (m+1)`` matrix with entry ``(j, k) = alpha[j + k + offset]``."""
    alpha = as_prefix(alpha)
    if m < 0 or offset not in (0, 1):
        raise ValueError("need m >= 0 and offset in {0, 1}")
    if len(alpha) < 2 * m + 1 + offset:
        raise ValueError(
            f"H_{m} with offset {offset} needs {2 * m + 1 + offset} terms, prefix has {len(alpha)}"
        )
    a = alpha.values
    return ExactMatrix(tuple(tuple(a[j + k + offset] for k in range(m + 1)) for j in range(m + 1)))


def max_depth(length: int, extra: int = 0) -> int:
    """Largest ``m`` with ``2m + 1 + extra <= length`` (-1 if none)."""
    return (length - 1 - extra) // 2


def _resolve_depth(alpha, depth, extra, name):
    deepest = max_depth(len(alpha), extra)
    if depth is None:
        depth = deepest
    if depth < 0 or depth > deepest:
        raise ValueError(
            f"{name} at depth {depth} needs {2 * depth + 1 + extra} terms, prefix has {len(alpha)}"
        )
    return depth


def _psd_failure(M: ExactMatrix, m: int, what: str) -> Optional[Witness]:
    bad = psd_violation(charpoly(M))
    if bad is None:
        return None
    k, value = bad
    return Witness(m, f"{what}: sum of principal {k}x{k} minors is negative", value)


def _check_psd_family(name: str, depth: int, families) -> CheckReport:
    for m in range(depth + 1):
        for what, build in families:
            w = _psd_failure(build(m), m, what.format(m=m))
            if w is not None:
                return CheckReport("fail", name, m, w)
    return CheckReport("pass", name, depth)


def check_hamburger(alpha: SequencePrefix, depth: Optional[int] = None) -> CheckReport:
    """PSD of ``H_m(alpha)`` for every ``m <= depth``."""
    alpha = as_prefix(alpha)
    depth = _resolve_depth(alpha, depth, 0, "hamburger")
    return _check_psd_family(
        "hamburger", depth, [("H_{m}(alpha)", lambda m: hankel_matrix(alpha, m))]
    )


def check_stieltjes(alpha: SequencePrefix, depth: Optional[int] = None) -> CheckReport:
    """PSD of ``H_m(alpha)`` and ``H_m(E alpha)`` for every ``m <= depth``."""
    alpha = as_prefix(alpha)
    depth = _resolve_depth(alpha, depth, 1, "stieltjes")
    return _check_psd_family(
        "stieltjes",
        depth,
        [
            ("H_{m}(alpha)", lambda m: hankel_matrix(alpha, m)),
            ("H_{m}(E alpha)", lambda m: hankel_matrix(alpha, m, 1)),
        ],
    )


def check_total_nonneg(
    alpha: SequencePrefix, m: Optional[int] = None, budget: int = DEFAULT_MINOR_BUDGET
) -> CheckReport:
    """Every minor of ``H_m(alpha)`` is nonnegative.

    This is what the moment literature calls *totally positive* for Hankel
    matrices (elsewhere: totally nonnegative).
    """
    alpha = as_prefix(alpha)
    m = _resolve_depth(alpha, m, 0, "total_nonneg")
    value, rows, cols = min_minor(hankel_matrix(alpha, m), budget)
    if value < 0:
        detail = f"minor of H_{m}(alpha) with rows {list(rows)} and cols {list(cols)}"
        return CheckReport("fail", "total_nonneg", m, Witness(m, detail, value))
    return CheckReport("pass", "total_nonneg", m)


def check_interval(
    alpha: SequencePrefix, interval: QuadraticInterval, depth: Optional[int] = None
) -> CheckReport:
    """PSD of ``H_m(alpha)`` and of ``H_m(s E alpha - E^2 alpha - q alpha)``
    for every ``m <= depth``, where ``s = a + b`` and ``q = a b``."""
    alpha = as_prefix(alpha)
    depth = _resolve_depth(alpha, depth, 2, "interval")
    beta = interval_transform(alpha, interval.s, interval.q)
    return _check_psd_family(
        f"interval {interval}",
        depth,
        [
            ("H_{m}(alpha)", lambda m: hankel_matrix(alpha, m)),
            ("H_{m}((a+b) E alpha - E^2 alpha - ab alpha)", lambda m: hankel_matrix(beta, m)),
        ],
    )
