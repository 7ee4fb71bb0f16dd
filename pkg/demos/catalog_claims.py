"""Which catalog sequences live where they are said to live?

Prints Catalan Hankel determinants, then runs the interval criterion on each
catalog family against its claimed support interval.
"""

from momentseq.hankel import check_interval, hankel_matrix
from momentseq.linalg import det
from momentseq.seq import catalog, shift

cat = catalog("catalan", 18)
print("det H_m(C), det H_m(EC) for m = 0..7:")
print("  ", [str(det(hankel_matrix(cat, m).rows)) for m in range(8)])
print("  ", [str(det(hankel_matrix(cat, m, 1).rows)) for m in range(8)])
print()

names = ["catalan", "catalan_shifted", "central_binomial", "fine", "hexagonal",
         "delannoy_central", "schroder_large", "schroder_little"]
for name in names:
    alpha = catalog(name, 16)
    rep = check_interval(alpha, alpha.claimed_support)
    line = f"{name:18s} on {alpha.claimed_support}: {rep.verdict} (depth {rep.depth_checked})"
    if not rep.passed:
        line += f", witness {rep.witness.value} at m={rep.witness.m}"
    print(line)

# The little Schroeder numbers carry an extra half unit at n = 0 (an atom at 0).
# Dropping the first term removes it.
little = shift(catalog("schroder_little", 17), 1)
surd = catalog("schroder_large", 1).claimed_support
print(f"\nschroder_little from n=1 on {surd}: {check_interval(little, surd).verdict}")
