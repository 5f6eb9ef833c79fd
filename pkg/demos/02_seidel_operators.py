#!/usr/bin/env python3
"""The Seidel operators T and H and the smallest q-power of a product.

T multiplies by the column class O^(1,...,1) and H by the row class
O^(n-k,0,...,0).  On basis elements both act by a cyclic shift of the
partition with an explicit q-power, which forces T^n = q^k Id,
H^n = q^(n-k) Id and HT = q Id.
"""

from qkgr import H, QKElement, T, all_partitions, context, d_min, product_basis, seidel_up

ctx = context(2, 4, trunc=4)

print("T on the Gr(2,4) basis:")
for lam in all_partitions(ctx):
    print(f"  T O{lam} =", T(QKElement.basis(lam), ctx))

print("\nH T = q Id, T^4 = q^2 Id:")
e = QKElement.basis((2, 1))
print("  H(T(O(2,1))) =", H(T(e, ctx), ctx))
x = e
for _ in range(ctx.n):
    x = T(x, ctx)
print("  T^4(O(2,1))  =", x)

# The smallest power of q in O^lam * O^mu comes from a max over Seidel
# shifts, and the whole product is a shifted product of smaller classes.
c37 = context(3, 7)
lam, mu = (4, 3, 2), (4, 4, 1)
d, r = d_min(lam, mu, c37)
print(f"\nd_min for O{lam} * O{mu} in QK(Gr(3,7)):", d, "achieved at shift", r)
prod = product_basis(lam, mu, c37)
print("  product:        ", prod)
up_l = seidel_up(lam, r, c37)
up_m = seidel_up(mu, c37.n - r, c37)
print(f"  q^{d} * O{up_l} * O{up_m} =", product_basis(up_l, up_m, c37).q_shift(d))
