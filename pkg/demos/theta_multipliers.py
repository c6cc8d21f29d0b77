"""Theta constants, transformation multipliers and the Z/4 invariant.

Run with:  python3 demos/theta_multipliers.py
"""

import numpy as np

from thetalab import (
    Characteristic,
    SiegelPoint,
    compatible_pair_generators,
    e_value,
    d_sign,
    igusa_generator,
    multiplier_product,
    multiplier_squared,
    random_compatible_pair,
    siegel_samples,
    theta_eval,
)
from thetalab.errors import NotConverged

print("== Certified theta evaluation ==")
tv = theta_eval(Characteristic((0, 0)), SiegelPoint([[1j]]), tol=1e-13)
print(f"theta_00(i) = {tv.value:.10f}  "
      f"(radius {tv.radius}, tail bound {tv.tail_bound:.2e})")

print()
print("== Root-of-unity multipliers at genus 2 ==")
g = 2
rng = np.random.default_rng(0)
taus = siegel_samples(g, rng)
m = Characteristic((0, 0, 0, 1))
n = Characteristic((0, 0, 0, 0))
corner = igusa_generator("gamma", g, g, g)
r = multiplier_product(corner, m, n, taus)
print(f"gamma_m gamma_n on the corner generator: i^({r.k}/2), order {r.order()}")
sq = multiplier_squared(corner, n, taus)
print(f"gamma^2 on the same generator: exponent {sq.k} mod 8, order {sq.order()}")

print()
print("== The Z/4 invariant on distinguished pairs ==")
taus_small = siegel_samples(g - 1, rng)
mt = Characteristic((0, 0))
pairs = compatible_pair_generators(g)
a_hat, deck = pairs[0], pairs[1]
ev = e_value(a_hat, mt, taus_small, taus)
print(f"corner pair: exponent {ev.k} mod 8, order {ev.order()}, "
      f"d-sign {d_sign(a_hat, mt)}")
ev = e_value(deck, mt, taus_small, taus)
print(f"deck pair:   exponent {ev.k} mod 8, order {ev.order()}")

print()
print("== Multiplicativity on random short words ==")
done = 0
while done < 5:
    p1 = random_compatible_pair(g, rng)
    p2 = random_compatible_pair(g, rng)
    try:
        e1 = e_value(p1, mt, taus_small, taus)
        e2 = e_value(p2, mt, taus_small, taus)
        e12 = e_value(p1 @ p2, mt, taus_small, taus)
    except NotConverged:
        continue
    print(f"  e(p1)*e(p2) = i^({(e1 * e2).k}/2) "
          f"{'==' if (e1 * e2).k == e12.k else '!='} e(p1 p2) = i^({e12.k}/2)")
    done += 1
