#!/usr/bin/env python3
"""Walk through the exact arithmetic layer: admissible levels, Kac tables,
and the quantities every other computation is built from.

Run:  python demos/kac_tables.py
"""

from sl2wt import OMEGA, admissible_level, conf_wt_gap, kac_data, ks_dual_level, pi_conf_weight

# An admissible level is k = -2 + u/v with coprime u, v >= 2.  Everything is
# an exact Fraction; there is no floating point anywhere in the package.
for u, v in [(3, 2), (2, 3), (5, 3)]:
    lv = admissible_level(u, v)
    print(f"t = {lv}:  k = {lv.k},  Virasoro central charge c = {lv.c_k}")
print()

# The Kac table at t = 5/3.  lambda/Delta parametrize affine weights, nu the
# Pi-sector labels of the free-field side, h the Virasoro minimal-model weights.
lv = admissible_level(5, 3)
print(f"Kac table at t = {lv}:")
print(f"{'(r,s)':>7} {'lambda':>8} {'Delta':>8} {'nu':>8} {'h':>8}")
for r in range(1, lv.u):
    for s in range(1, lv.v):
        d = kac_data(lv, r, s)
        print(f"({r},{s})".rjust(7), f"{str(d.lam):>8} {str(d.delta):>8} {str(d.nu):>8} {str(d.h):>8}")
print()

# The table is symmetric under (r,s) -> (u-r,v-s) ...
d, dm = kac_data(lv, 1, 1), kac_data(lv, 4, 2)
print(f"lambda(4,2) = {dm.lam} = -lambda(1,1) - 2 = {-d.lam - 2}")
print(f"Delta(4,2)  = {dm.delta} = Delta(1,1) = {d.delta},   h(4,2) = {dm.h} = h(1,1) = {d.h}")
print()

# ... and the conformal-weight gap Delta(r,s+1) - Delta(r,s-1) is never an
# integer, which is what pins the two summands of the key fusion product apart.
for r in range(1, lv.u):
    for s in range(1, lv.v):
        gap = conf_wt_gap(lv, r, s)
        assert gap.denominator > 1
        print(f"gap({r},{s}) = {gap}", end="   ")
print("\n")

# Weights may carry a formal irrational part w; e.g. the lowest conformal
# weight of a generic Pi-sector label:
print("pi_conf_weight(flow=2, lam=w) =", pi_conf_weight(lv, 2, OMEGA))
print("pi_conf_weight(flow=-1, lam=w) =", pi_conf_weight(lv, -1, OMEGA), "(the lam term drops out)")
print()

# The Kazama-Suzuki dual level, defined by (l+1)(k+2) = 1:
for u, v in [(3, 2), (2, 3), (5, 3)]:
    lv = admissible_level(u, v)
    ell = ks_dual_level(lv)
    print(f"k = {lv.k}: dual level l = {ell}   (check: (l+1)(k+2) = {(ell + 1) * (lv.k + 2)})")
