"""Support intervals under T_p.

If alpha lives on [a, b] and p >= 0 on [a, b]^d then T_p(alpha) lives on the
range of x_1 ... x_d over the cube. The surd interval of the Delannoy numbers
maps to another surd interval, still exactly representable.
"""

from momentseq.hankel import check_interval
from momentseq.interval import QuadraticInterval, map_interval
from momentseq.poly import parse_poly
from momentseq.seq import catalog
from momentseq.transform import apply_tp

p = parse_poly("1/2*(x-y)^2")
for name in ("catalan", "hexagonal", "delannoy_central"):
    alpha = catalog(name, 20)
    image = map_interval(alpha.claimed_support, 2)
    out = apply_tp(p, alpha)
    rep = check_interval(out, image)
    print(f"{name}: {alpha.claimed_support} -> {image}; T_p check {rep.verdict} to depth {rep.depth_checked}")

iv = QuadraticInterval(3, 2, 2)
print("\nd = 2 image endpoints:", map_interval(iv, 2).lo.to_decimal(8), map_interval(iv, 2).hi.to_decimal(8))
print("mixed sign [-2, 3], d = 2:", map_interval(QuadraticInterval.from_endpoints(-2, 3), 2))
