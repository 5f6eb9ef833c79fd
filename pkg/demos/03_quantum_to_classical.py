#!/usr/bin/env python3
"""Rewriting quantum structure constants as classical ones.

Whenever the target partition fails to dominate a factor, one Seidel shift
lowers the q-degree by one; iterating reaches degree zero, where the
constant is a classical K-theory Littlewood-Richardson coefficient.  The
showcase is a degree-3 constant of Gr(6, 17), far beyond brute force.
"""

from qkgr import (
    context,
    reduce_deg_one,
    reduce_higher,
    reduce_third_row,
    reduction_trace,
    structure_constant,
)

ctx = context(6, 17, trunc=7)
lam = mu = (10, 8, 6, 4, 2, 0)

print("chain of single reductions for nu = (6,2,2,1,0,0), d = 3:")
for step in reduction_trace(lam, mu, (6, 2, 2, 1, 0, 0), 3, ctx):
    print(f"  {step['rule']:>16}: N[{step['lhs']}, {step['rhs']} -> {step['nu']}, q^{step['deg']}]")

print("\none jump of size s = 3 for nu = (3,3,2,1,0,0):")
print(" ", reduce_higher(lam, mu, (3, 3, 2, 1, 0, 0), 3, 3, ctx))

# In a ring small enough to brute-force, the reductions are verifiable:
c36 = context(3, 6)
lam, mu, nu, d = (2, 2, 1), (3, 3, 1), (1, 0, 0), 2
print(f"\nGr(3,6): N[{lam}, {mu} -> {nu}, q^{d}] =", structure_constant(lam, mu, nu, d, c36))
step = reduce_deg_one(lam, mu, nu, d, c36)
print("  after one reduction:", step, "->", structure_constant(*step, c36))

# For k = 3, stripping third rows off both factors is another reduction.
red = reduce_third_row(lam, mu, nu, d, c36)
print("  third rows stripped:", red, "->", structure_constant(*red, c36))
