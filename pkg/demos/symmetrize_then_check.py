"""From a polynomial to a verdict on T_p.

p_theta = (1-theta)/2 x^2 - xy + (1+theta)/2 y^2 is negative somewhere on the
orthant for theta != 0, yet every p_theta symmetrizes to (x-y)^2 / 2, so T_p
preserves Stieltjes sequences regardless. One-variable p is different: a
negative value at xi > 0 turns the point mass at xi into a counterexample.
"""

from fractions import Fraction

from momentseq.hankel import check_stieltjes
from momentseq.poly import MultiPoly, parse_poly, symmetrize, to_text
from momentseq.positivity import DomainSpec, check_nonneg, grid_search
from momentseq.seq import catalog
from momentseq.transform import apply_tp, dirac_witness

orthant = DomainSpec.orthant(2)
for theta in (Fraction(0), Fraction(1), Fraction(-3, 2)):
    p = MultiPoly(2, {(2, 0): (1 - theta) / 2, (1, 1): -1, (0, 2): (1 + theta) / 2})
    raw = grid_search(p, orthant)
    sym = check_nonneg(p, orthant)
    print(f"theta={theta}: p = {to_text(p)}")
    print(f"  p itself: {raw.kind} (min {raw.value} at {tuple(map(str, raw.point))})")
    print(f"  p-bar = {to_text(symmetrize(p))}: {sym.kind}")
    print(f"  T_p(Catalan) stieltjes: {check_stieltjes(apply_tp(p, catalog('catalan', 14))).verdict}")

q = parse_poly("x^2 - 5*x + 6", 1)
v = grid_search(q, DomainSpec.orthant(1))
w = dirac_witness(q, v.point[0], 6)
print(f"\n{to_text(q)} is {v.value} at x = {v.point[0]};"
      f" T_q(point mass) fails stieltjes: {not check_stieltjes(w.transformed, 0).passed}")
