#!/usr/bin/env python3
"""Curve neighborhoods of Schubert varieties, computed on partitions.

The degree-d neighborhood removes the first d rows and columns; removing
one outer rim at a time gets there in d steps.  The two-pointed
neighborhood of the last special class and an opposite Schubert variety is
again a Schubert variety with an explicit partition.
"""

from qkgr import context, curve_neighborhood, dual, gamma_special, rim_peel, seidel_up

ctx = context(4, 9)
lam = (4, 3, 2, 1)
print(f"neighborhoods of O{lam} in Gr(4,9):")
for d in range(5):
    print(f"  d={d}:", curve_neighborhood(lam, d, ctx))

print("\npeeling one rim at a time:")
cur = lam
for step in range(3):
    cur = rim_peel(cur, ctx)
    print(f"  peel {step + 1}:", cur)

# gamma_special(eta, d) caps eta_{j-d+1} + d at the box width; rows with no
# constraint saturate.
c36 = context(3, 6)
print("\ntwo-pointed neighborhoods in Gr(3,6), eta = (2,2,1):")
for d in (1, 2):
    print(f"  d={d}:", gamma_special((2, 2, 1), d, c36))

# For mu with a full last row these agree with a shifted one-pointed
# neighborhood, one degree lower.
mu = (3, 2, 1)
mv = dual(mu, c36)
up = seidel_up(mv, 1, c36)
for d in (1, 2):
    lhs = gamma_special(mv, d, c36)
    rhs = dual(curve_neighborhood(dual(up, c36), d - 1, c36), c36)
    print(f"  mu={mu}, d={d}: {lhs} == {rhs}")
