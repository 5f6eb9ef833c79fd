#!/usr/bin/env python3
"""Multiply Schubert classes in QK(Gr(k, n)) and read off structure constants.

Everything is exact integer arithmetic; products are polynomials in the
quantum parameter q.
"""

import io

from qkgr import (
    QKElement,
    context,
    giambelli_lift_general,
    product,
    product_basis,
    structure_constant,
)

# The running example: QK(Gr(4, 9)).  Multiplying the special class O^4 by
# O^(4,3,2,1) produces one classical term and four quantum corrections,
# including a coefficient of -3.
ctx = context(4, 9)
prod = product_basis((4, 0, 0, 0), (4, 3, 2, 1), ctx)
print("O(4) * O(4,3,2,1) =", prod)
print("N_{4,(4,3,2,1)}^{(3,2,1,0), q^1} =", structure_constant((4, 0, 0, 0), (4, 3, 2, 1), (3, 2, 1, 0), 1, ctx))

# Products extend bilinearly over Z[q].
a = QKElement({((4, 0, 0, 0), 0): 2, ((1, 1, 1, 1), 1): -1})
b = QKElement.basis((4, 3, 2, 1))
print("\nbilinear:", product(a, b, ctx))

# The square of the point class in Gr(2,4) is purely quantum: q^2 times the unit.
c24 = context(2, 4)
print("\nin QK(Gr(2,4)):  O(2,2) * O(2,2) =", product_basis((2, 2), (2, 2), c24))

# Full multiplication tables dump as JSON lines, one record per pair.
table = giambelli_lift_general(c24)
buf = io.StringIO()
table.dump_jsonl(buf)
print("\nfirst table records for Gr(2,4):")
for line in buf.getvalue().splitlines()[:4]:
    print(" ", line)
print("largest q-degree in the Gr(2,4) table:", table.max_q_degree())
