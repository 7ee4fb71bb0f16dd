"""Acceptance suite: one marked group per criterion.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints a
PASS/FAIL line for each criterion number.
"""

import itertools
import math
import random
import time
from fractions import Fraction as F

import pytest

from conftest import atomic_moments, random_poly, random_prefix
from momentseq.hankel import check_interval, check_stieltjes, check_total_nonneg, hankel_matrix
from momentseq.interval import QuadraticInterval, map_interval
from momentseq.linalg import det
from momentseq.poly import (
    MultiPoly,
    eval_poly,
    is_symmetric,
    minor_poly,
    one_var,
    parse_poly,
    symmetrize,
    vandermonde_poly,
)
from momentseq.positivity import DomainSpec, compare_min, grid_search
from momentseq.seq import SequencePrefix, catalog
from momentseq.transform import (
    MinorSpec,
    apply_tp,
    copositive_form_sequence,
    dirac_witness,
    minor_sequence,
    riesz,
)

C = pytest.mark.criterion
ZERO_FOUR = QuadraticInterval(2, 2, 1)
ONE_FIVE = QuadraticInterval(3, 2, 1)
SURD = QuadraticInterval(3, 2, 2)


# 1 ---------------------------------------------------------------------------


@C(1, "Catalan Hankel determinants H_m and H_m(E) equal 1 for m <= 7, under 1 s")
def test_c01_catalan_hankel_determinants():
    start = time.perf_counter()
    cat = catalog("catalan", 16)
    for m in range(8):
        assert det(hankel_matrix(cat, m).rows) == 1
        assert det(hankel_matrix(cat, m, 1).rows) == 1
    assert time.perf_counter() - start < 1.0


# 2 ---------------------------------------------------------------------------

CLAIMS = [
    ("catalan", ZERO_FOUR),
    ("catalan_shifted", ZERO_FOUR),
    ("central_binomial", ZERO_FOUR),
    ("fine", ZERO_FOUR),
    pytest.param("hexagonal", ONE_FIVE, id="hexagonal-advisory"),
    ("delannoy_central", SURD),
    ("schroder_large", SURD),
    ("schroder_little", SURD),
]


@C(2, "catalog interval claims hold to depth >= 4 (hexagonal advisory)")
@pytest.mark.parametrize("name,interval", CLAIMS)
def test_c02_catalog_interval_claims(name, interval):
    alpha = catalog(name, 16)
    report = check_interval(alpha, interval)
    assert report.depth_checked >= 4
    assert report.passed, report.to_json()


# 3 ---------------------------------------------------------------------------


@C(3, "T_p with p = 1/2 (x^r - y^r)(x^s - y^s) equals the 2x2 minor sequence and is Stieltjes")
@pytest.mark.parametrize("r,s", list(itertools.product([1, 2, 3], repeat=2)))
def test_c03_two_by_two_minor(r, s):
    cat = catalog("catalan", 24)
    p = parse_poly(f"1/2*(x^{r}-y^{r})*(x^{s}-y^{s})")
    out = apply_tp(p, cat)
    assert out.values == minor_sequence(cat, MinorSpec((r,), (s,))).values
    assert check_stieltjes(out, 5).passed


# 4 ---------------------------------------------------------------------------


@C(4, "3x3 minor sequence of Catalan equals T_p of the squared Vandermonde form")
def test_c04_three_by_three_minor():
    cat = catalog("catalan", 14)
    seq = minor_sequence(cat, MinorSpec((1, 2), (1, 2)))
    assert seq.values == apply_tp(parse_poly("1/6*(x-y)^2*(y-z)^2*(z-x)^2"), cat).values
    assert list(seq)[:3] == [1, 1, 4]
    assert check_stieltjes(seq, 3).passed


# 5 ---------------------------------------------------------------------------


@C(5, "the eight symmetrization properties on 500 random polynomials")
def test_c05_symmetrization_suite():
    rng = random.Random(20260501)
    sample = [F(-2), F(-1, 2), F(0), F(1), F(3, 2)]
    for _ in range(500):
        d = rng.randint(1, 4)
        p = random_poly(rng, d, max_degree=6)
        q = random_poly(rng, d, max_degree=6)
        c = F(rng.randint(-9, 9), rng.randint(1, 5))
        pb, qb = symmetrize(p), symmetrize(q)
        assert is_symmetric(pb)
        assert symmetrize(p + q) == pb + qb
        assert symmetrize(p.scale(c)) == pb.scale(c)
        assert symmetrize(p + c) == pb + c
        assert symmetrize(pb) == pb
        if d <= 3:
            pts = list(itertools.product(sample, repeat=d))
            if all(eval_poly(p, x) >= 0 for x in pts):
                assert all(eval_poly(pb, x) >= 0 for x in pts)
            sq = p * p
            assert all(eval_poly(symmetrize(sq), x) >= 0 for x in pts)
        alpha = SequencePrefix(random_prefix(rng, 12))
        tp = apply_tp(p, alpha)
        assert tp == apply_tp(pb, alpha)
        # T_p = T_q on a generic prefix forces equal symmetrizations, and a
        # permuted copy of p always has the same image
        perm = list(range(d))
        rng.shuffle(perm)
        assert apply_tp(p.permute(perm), alpha) == tp and symmetrize(p.permute(perm)) == pb
        same_len = p.max_entry == q.max_entry
        if same_len and apply_tp(q, alpha) == tp:
            assert qb == pb
        if pb != qb and same_len:
            assert apply_tp(q, alpha) != tp


# 6 ---------------------------------------------------------------------------


def _increasing(d, top=4):
    return list(itertools.combinations(range(1, top + 1), d - 1))


@C(6, "d! sym(minor_poly(r, t)) = D_r D_t for d in {2, 3}, entries <= 4")
@pytest.mark.parametrize("d", [2, 3])
def test_c06_vandermonde_factorization(d):
    fact = math.factorial(d)
    for r in _increasing(d):
        for t in _increasing(d):
            lhs = symmetrize(minor_poly(r, t)).scale(fact)
            assert lhs == vandermonde_poly(r, d) * vandermonde_poly(t, d), (r, t)


# 7 ---------------------------------------------------------------------------


@C(7, "Riesz identity L(T_p alpha, q) = L(alpha, p q) on 200 random pairs")
def test_c07_riesz_identity():
    rng = random.Random(7)
    cat = catalog("catalan", 16)
    for _ in range(200):
        p = one_var([F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(rng.randint(1, 6))])
        q = one_var([F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(rng.randint(1, 6))])
        assert riesz(apply_tp(p, cat), q) == riesz(cat, p * q)


# 8 ---------------------------------------------------------------------------


@C(8, "point-mass witness certifies failure for x - 3 and 50 random polynomials")
def test_c08_dirac_witness():
    w = dirac_witness(parse_poly("x-3", 1), 2, 8)
    assert w.value == -1
    report = check_stieltjes(apply_tp(parse_poly("x-3", 1), catalog("geometric(2)", 8)), 0)
    assert not report.passed and report.depth_checked == 0

    rng = random.Random(8)
    dom = DomainSpec.orthant(1)
    certified = 0
    while certified < 50:
        p = one_var([F(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(rng.randint(1, 6))])
        if p.is_zero():
            continue
        v = grid_search(p, dom, 33)
        if not v.found_counterexample or v.point[0] <= 0:
            continue
        w = dirac_witness(p, v.point[0], p.degree + 2)
        assert w.certifies_failure and w.value == v.value
        assert not check_stieltjes(w.transformed, 0).passed
        certified += 1


# 9 ---------------------------------------------------------------------------


@C(9, "interval mapping reproduces [0,16], [1,25], (17,12,2) and the mapped claim verifies")
def test_c09_interval_mapping():
    assert map_interval(ZERO_FOUR, 2) == QuadraticInterval.from_endpoints(0, 16)
    assert map_interval(ONE_FIVE, 2) == QuadraticInterval.from_endpoints(1, 25)
    assert map_interval(SURD, 2) == QuadraticInterval(17, 12, 2)
    image = apply_tp(parse_poly("1/2*(x-y)^2"), catalog("catalan", 12))
    assert check_interval(image, map_interval(ZERO_FOUR, 2), 3).passed


# 10 --------------------------------------------------------------------------


@C(10, "negative controls with exact witness values")
def test_c10_negative_controls():
    r = check_stieltjes(SequencePrefix((1, 2, 1, 2)), 1)
    assert not r.passed and r.depth_checked == 1 and r.witness.value == -3
    r = check_interval(catalog("geometric(5)", 3), ZERO_FOUR, 0)
    assert not r.passed and r.depth_checked == 0 and r.witness.value == -5
    p = MultiPoly(2, {(1, 1): -1, (0, 2): 1})
    v = grid_search(p, DomainSpec.orthant(2))
    assert v.found_counterexample and eval_poly(p, v.point) == v.value < 0
    assert eval_poly(p, [2, 1]) == -1


# 11 --------------------------------------------------------------------------


@C(11, "Stieltjes and total-nonnegativity agree on 100 atomic prefixes, under 30 s")
def test_c11_criterion_agreement():
    start = time.perf_counter()
    rng = random.Random(11)
    for _ in range(100):
        k = rng.randint(1, 3)
        atoms = [F(rng.randint(0, 100), 10) for _ in range(k)]
        weights = [F(rng.randint(1, 50), 10) for _ in range(k)]
        alpha = SequencePrefix(atomic_moments(atoms, weights, 10))
        for m in range(5):
            assert check_stieltjes(alpha, m).passed
            assert check_total_nonneg(alpha, m).passed
    assert time.perf_counter() - start < 30.0


# 12 --------------------------------------------------------------------------


@C(12, "copositive form sequence equals the 2x2 Hankel determinants and is Stieltjes")
def test_c12_copositive_pipeline():
    cat = catalog("catalan", 14)
    A = [[F(1, 2), F(-1, 2)], [F(-1, 2), F(1, 2)]]
    out = copositive_form_sequence(A, cat)
    dets = [det(hankel_matrix(SequencePrefix(cat.values[n:]), 1).rows) for n in range(len(cat) - 2)]
    assert list(out) == dets
    assert check_stieltjes(out, 5).passed


# 13 --------------------------------------------------------------------------


@C(13, "grid min p <= grid min p-bar, diagonal equality and orbit property on 200 polynomials")
def test_c13_min_comparison():
    rng = random.Random(13)
    for _ in range(200):
        d = rng.randint(1, 3)
        p = random_poly(rng, d, max_degree=4)
        half = F(rng.randint(1, 3))
        res = 7 if d == 3 else 9
        r = compare_min(p, DomainSpec.box(-half, half, d), res)
        assert r.min_p <= r.min_pbar
        if len(set(r.point_p)) == 1:
            assert r.min_p == r.min_pbar
        if r.min_p == r.min_pbar:
            for perm in itertools.permutations(r.point_pbar):
                assert eval_poly(p, perm) == r.min_p
