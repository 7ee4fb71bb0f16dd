"""Hankel-minor sequences are moment sequences.

For increasing r and t the sequence of minors det[alpha_{n + r_j + t_i}] is
T_p(alpha) for a determinant polynomial p, and the symmetrization of p is a
product of two generalized Vandermonde determinants divided by d!.
"""

import math

from momentseq.hankel import check_stieltjes
from momentseq.poly import minor_poly, symmetrize, to_text, vandermonde_poly
from momentseq.seq import catalog
from momentseq.transform import MinorSpec, apply_tp, minor_sequence

cat = catalog("catalan", 24)
for r, t in [((1,), (1,)), ((1,), (2,)), ((1, 2), (1, 2)), ((1, 3), (2, 3))]:
    d = len(r) + 1
    p = minor_poly(r, t)
    pbar = symmetrize(p)
    assert pbar.scale(math.factorial(d)) == vandermonde_poly(r, d) * vandermonde_poly(t, d)
    seq = minor_sequence(cat, MinorSpec(r, t))
    assert seq == apply_tp(p, cat)
    rep = check_stieltjes(seq)
    print(f"r={r} t={t}")
    shown = to_text(pbar) if len(pbar.terms) <= 6 else f"{len(pbar.terms)} terms"
    print(f"  p-bar = {shown}")
    print(f"  minors: {', '.join(str(v) for v in seq.values[:8])}, ...")
    print(f"  stieltjes: {rep.verdict} to depth {rep.depth_checked}")
