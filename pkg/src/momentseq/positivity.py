"""Nonnegativity evidence and exact counterexamples for polynomials.

Nothing here proves that a polynomial is nonnegative on an unbounded set
(the 2x2 copositivity test excepted). A grid search either finds a point
with an exactly negative value, which is a proof of failure, or reports the
smallest value it saw, which is evidence only.

Unbounded coordinates are sampled through ``x = u / (1 - |u|)`` on a uniform
grid of ``u``. Homogeneous polynomials keep their sign under positive
scaling, so for them the orthant search runs on the unit simplex and the
search over the reals on the boundary of the cube ``[-1, 1]^d``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .exact import Scalar, fmt, to_fraction
from .linalg import BudgetExceeded
from .poly import (
    MultiPoly,
    collapse,
    eval_poly,
    is_homogeneous,
    is_symmetric,
    quadratic_form_poly,
    symmetrize,
)

DEFAULT_RESOLUTION = 33
DEFAULT_BUDGET = 1_000_000


@dataclass(frozen=True)
class DomainSpec:
    kind: str  # "orthant" | "all_reals" | "box"
    dim: int
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind not in ("orthant", "all_reals", "box"):
            raise ValueError(f"unknown domain kind {self.kind!r}")
        if self.dim < 1:
            raise ValueError("dim must be positive")
        if self.kind == "box":
            lo, hi = to_fraction(self.lo), to_fraction(self.hi)
            if lo > hi:
                raise ValueError(f"box needs lo <= hi, got [{lo}, {hi}]")
            object.__setattr__(self, "lo", lo)
            object.__setattr__(self, "hi", hi)

    @classmethod
    def orthant(cls, dim: int) -> "DomainSpec":
        return cls("orthant", dim)

    @classmethod
    def all_reals(cls, dim: int) -> "DomainSpec":
        return cls("all_reals", dim)

    @classmethod
    def box(cls, lo: Scalar, hi: Scalar, dim: int) -> "DomainSpec":
        return cls("box", dim, to_fraction(lo), to_fraction(hi))

    def with_dim(self, dim: int) -> "DomainSpec":
        return DomainSpec(self.kind, dim, self.lo, self.hi)


@dataclass(frozen=True)
class PositivityVerdict:
    kind: str  # "counterexample" | "no_counterexample"
    point: Optional[tuple[Fraction, ...]]
    value: Optional[Fraction]
    resolution: int
    samples: int
    route: str = "grid"
    exact: bool = False

    @property
    def found_counterexample(self) -> bool:
        return self.kind == "counterexample"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "point": None if self.point is None else [fmt(v) for v in self.point],
            "value": None if self.value is None else fmt(self.value),
            "resolution": self.resolution,
            "samples": self.samples,
            "route": self.route,
            "exact": self.exact,
        }


# ---------------------------------------------------------------------------
# grids


def _axis(dom: DomainSpec, resolution: int) -> list[Fraction]:
    if dom.kind == "box":
        if resolution == 1 or dom.lo == dom.hi:
            return [dom.lo]
        step = (dom.hi - dom.lo) / (resolution - 1)
        return [dom.lo + i * step for i in range(resolution)]
    if dom.kind == "orthant":
        us = [Fraction(i, resolution) for i in range(resolution)]
    else:
        us = [Fraction(2 * i - (resolution - 1), resolution + 1) for i in range(resolution)]
    return [u / (1 - abs(u)) for u in us]


def _simplex(dim: int, resolution: int) -> Iterator[tuple[Fraction, ...]]:
    den = max(resolution - 1, 1)
    # compositions of den into dim nonnegative parts, via stars and bars
    for bars in itertools.combinations(range(den + dim - 1), dim - 1):
        parts, prev = [], -1
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(den + dim - 2 - prev)
        yield tuple(Fraction(k, den) for k in parts)


def _sphere(dim: int, resolution: int) -> Iterator[tuple[Fraction, ...]]:
    res = max(resolution, 2)
    axis = [Fraction(2 * i, res - 1) - 1 for i in range(res)]
    for pt in itertools.product(axis, repeat=dim):
        if max(abs(v) for v in pt) == 1:
            yield pt


def _plan(p: MultiPoly, dom: DomainSpec, resolution: int):
    """Return (sample count, point iterator) for a grid search."""
    d = dom.dim
    homogeneous = is_homogeneous(p) is not None and dom.kind != "box"
    if homogeneous and dom.kind == "orthant":
        den = max(resolution - 1, 1)
        return math.comb(den + d - 1, d - 1), _simplex(d, resolution), "simplex"
    if homogeneous:
        return max(resolution, 2) ** d, _sphere(d, resolution), "sphere"
    axis = _axis(dom, resolution)
    return len(axis) ** d, itertools.product(axis, repeat=d), "grid"


def _point_key(pt):
    return (sum(pt), pt)


def _grid_min(p, dom, resolution, budget):
    if p.num_vars != dom.dim:
        raise ValueError(f"polynomial has {p.num_vars} variables, domain has {dom.dim}")
    if resolution < 1:
        raise ValueError("resolution must be positive")
    count, points, route = _plan(p, dom, resolution)
    if count > budget:
        raise BudgetExceeded(count, budget)
    best_val, best_pt, seen = None, None, 0
    for pt in points:
        seen += 1
        v = eval_poly(p, pt)
        if best_val is None or v < best_val or (v == best_val and _point_key(pt) < _point_key(best_pt)):
            best_val, best_pt = v, pt
    return best_val, best_pt, seen, route


def grid_search(
    p: MultiPoly, dom: DomainSpec, resolution: int = DEFAULT_RESOLUTION, budget: int = DEFAULT_BUDGET
) -> PositivityVerdict:
    """Evaluate ``p`` exactly on a grid over ``dom``.

    The reported point is the sampled minimizer (ties go to the smallest
    point in graded-lex order). A negative minimum is a counterexample.
    """
    val, pt, seen, route = _grid_min(p, dom, resolution, budget)
    if val < 0:
        return PositivityVerdict("counterexample", pt, val, resolution, seen, route)
    return PositivityVerdict("no_counterexample", pt, val, resolution, seen, route)


# ---------------------------------------------------------------------------
# half degree principle


def _partitions(n: int, max_parts: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, max_parts - 1, first):
            yield (first,) + rest


def _groups(sizes: Sequence[int]) -> list[int]:
    out = []
    for g, size in enumerate(sizes):
        out.extend([g] * size)
    return out


def half_degree_reduce(p: MultiPoly) -> list[tuple[tuple[int, ...], MultiPoly]]:
    """Reductions of a symmetric form of degree ``2m`` to points with at most
    ``k = max(2, m)`` distinct coordinates.

    Each entry is ``(group sizes, reduced polynomial)``: the variables are split
    into consecutive blocks of the given sizes and each block is identified to
    one new variable. By symmetry one block layout per size multiset suffices.
    When ``k >= d`` the only entry is ``p`` itself under the all-ones layout.
    """
    if not is_symmetric(p):
        raise ValueError("half degree reduction needs a symmetric polynomial")
    deg = is_homogeneous(p)
    if deg is None or deg % 2:
        raise ValueError("half degree reduction needs a homogeneous polynomial of even degree")
    d = p.num_vars
    k = max(2, deg // 2)
    if k >= d:
        return [((1,) * d, p)]
    return [(sizes, collapse(p, _groups(sizes), len(sizes))) for sizes in _partitions(d, k)]


def check_nonneg(
    p: MultiPoly,
    dom: DomainSpec,
    budget: int = DEFAULT_BUDGET,
    resolution: int = DEFAULT_RESOLUTION,
) -> PositivityVerdict:
    """Look for a point where the symmetrization of ``p`` is negative.

    A counterexample is reported for the symmetrized polynomial, with the
    point given in the original ``d`` variables. On unbounded domains a
    symmetric form of even degree is first reduced by the half degree
    principle; the verdict's ``route`` says which path was taken.
    """
    pbar = symmetrize(p)
    d = pbar.num_vars
    deg = is_homogeneous(pbar)
    reducible = (
        dom.kind != "box"
        and deg is not None
        and deg > 0
        and deg % 2 == 0
        and max(2, deg // 2) < d
    )
    if not reducible:
        v = grid_search(pbar, dom, resolution, budget)
        return PositivityVerdict(v.kind, v.point, v.value, v.resolution, v.samples, f"direct/{v.route}")

    reductions = half_degree_reduce(pbar)
    plans = [(sizes, q, _plan(q, dom.with_dim(q.num_vars), resolution)[0]) for sizes, q in reductions]
    total = sum(c for _, _, c in plans)
    if total > budget:
        raise BudgetExceeded(total, budget)
    best = None
    seen = 0
    for sizes, q, _ in plans:
        val, pt, n, _route = _grid_min(q, dom.with_dim(q.num_vars), resolution, budget)
        seen += n
        lifted = tuple(pt[g] for g in _groups(sizes))
        if best is None or val < best[0]:
            best = (val, lifted)
    val, pt = best
    # the reduced value is p-bar at the lifted point; re-evaluate to be sure
    assert eval_poly(pbar, pt) == val
    kind = "counterexample" if val < 0 else "no_counterexample"
    return PositivityVerdict(kind, pt, val, resolution, seen, "half_degree")


# ---------------------------------------------------------------------------
# copositivity


def copositive_check(
    A: Sequence[Sequence[Scalar]], budget: int = DEFAULT_BUDGET, resolution: int = DEFAULT_RESOLUTION
) -> PositivityVerdict:
    """Is ``x^T A x >= 0`` on the nonnegative orthant?

    Exact for ``2 x 2`` matrices (the verdict has ``exact=True``); for larger
    matrices a simplex grid search.
    """
    q = quadratic_form_poly(A)
    d = q.num_vars
    if d == 1:
        a = q.coefficient((2,))
        if a < 0:
            return PositivityVerdict("counterexample", (Fraction(1),), a, 0, 1, "exact", True)
        return PositivityVerdict("no_counterexample", None, None, 0, 0, "exact", True)
    if d == 2:
        a11 = q.coefficient((2, 0))
        a22 = q.coefficient((0, 2))
        a12 = q.coefficient((1, 1)) / 2
        if a11 >= 0 and a22 >= 0 and (a12 >= 0 or a11 * a22 >= a12 * a12):
            return PositivityVerdict("no_counterexample", None, None, 0, 0, "exact", True)
        if a11 < 0:
            pt = (Fraction(1), Fraction(0))
        elif a22 < 0:
            pt = (Fraction(0), Fraction(1))
        elif a11 > 0:
            # minimizer direction of the form restricted to the orthant
            pt = (-a12, a11)
        elif a22 > 0:
            pt = (a22, -a12)
        else:
            pt = (Fraction(1), Fraction(1))
        return PositivityVerdict("counterexample", pt, eval_poly(q, pt), 0, 1, "exact", True)
    v = grid_search(q, DomainSpec.orthant(d), resolution, budget)
    return v


# ---------------------------------------------------------------------------
# min(p) against min(p-bar)


@dataclass(frozen=True)
class MinComparison:
    min_p: Fraction
    point_p: tuple[Fraction, ...]
    min_pbar: Fraction
    point_pbar: tuple[Fraction, ...]
    resolution: int

    def to_json(self) -> dict:
        return {
            "min_p": fmt(self.min_p),
            "point_p": [fmt(v) for v in self.point_p],
            "min_pbar": fmt(self.min_pbar),
            "point_pbar": [fmt(v) for v in self.point_pbar],
            "resolution": self.resolution,
        }


def compare_min(p: MultiPoly, dom: DomainSpec, resolution: int = DEFAULT_RESOLUTION,
                budget: int = DEFAULT_BUDGET) -> MinComparison:
    """Grid minima of ``p`` and of its symmetrization on the same product grid."""
    if dom.kind != "box":
        raise ValueError("compare_min needs a bounded box domain")
    pbar = symmetrize(p)
    vp, pp, _, _ = _grid_min(p, dom, resolution, budget)
    vq, pq, _, _ = _grid_min(pbar, dom, resolution, budget)
    return MinComparison(vp, pp, vq, pq, resolution)
