"""Walk through the integer symplectic side of the toolkit.

Run with:  python3 demos/level_subgroups.py
"""

import numpy as np

from thetalab import (
    a_class,
    all_igusa_generators,
    b_class,
    chain_shadow,
    igusa_generator,
    in_gamma_p2,
    orbit_index,
    psi,
    transvection,
    verify_factorizations,
)

g = 3
print(f"== Level-2 generators at genus {g} ==")
gens = all_igusa_generators(g)
print(f"{len(gens)} generators, all symplectic and congruent to I mod 2.")
beta_gg = igusa_generator("beta", g, g, g)
print("beta_gg equals the squared transvection about A_g:",
      beta_gg == transvection(a_class(g, g), 2))

print()
print("== The mod-4 corner invariant ==")
print("psi(beta_gg)   =", psi(beta_gg))
print("psi(beta_gg^2) =", psi(beta_gg @ beta_gg))
rng = np.random.default_rng(0)
sigma = beta_gg @ igusa_generator("gamma", 1, g, g)
tau = igusa_generator("alpha", g, 1, g) @ beta_gg
assert in_gamma_p2(sigma) and in_gamma_p2(tau)
lhs = int((sigma @ tau).entries[g - 1, 2 * g - 1])
rhs = int(sigma.entries[g - 1, 2 * g - 1]) + int(tau.entries[g - 1, 2 * g - 1])
print("corner entry of a product vs sum of corners, mod 4:",
      lhs % 4, "=", rhs % 4)

print()
print("== Squared-twist factorizations ==")
for claim, ok in verify_factorizations(g).items():
    print(f"  {claim}: {'exact' if ok else 'FAILED'}")

print()
print("== Chain relation shadow ==")
rep = chain_shadow(a_class(1, g), b_class(1, g), a_class(1, g) + a_class(2, g))
print("(t1 t2 t3)^4 equals two boundary transvections:", rep.holds)
print("boundary classes found by search:", rep.boundary, rep.boundary2)

print()
print("== Orbit certification of the stabilizer generators ==")
for gg in (2, 3):
    cert = orbit_index(gg)
    print(f"  genus {gg}: orbit size {cert.orbit_size} "
          f"(expected {2**(2*gg) - 1})")
