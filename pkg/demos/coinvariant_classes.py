"""Boolean-polynomial coinvariants under the mod-2 stabilizer.

Run with:  python3 demos/coinvariant_classes.py
"""

from thetalab import (
    a_class,
    b_class,
    b3_space,
    bar_of_class,
    coinvariants,
    contraction,
    johnson_mu_reference,
    sp2_action,
    stabilizer_generators_mod2,
)


def label(p):
    parts = []
    for m in sorted(p.monomials, key=lambda m: (bin(m).count("1"), m)):
        if m == 0:
            parts.append("1")
            continue
        name = "*".join(
            (f"A{k + 1}" if k < p.g else f"B{k - p.g + 1}")
            for k in range(2 * p.g)
            if m >> k & 1
        )
        parts.append(name)
    return " + ".join(parts) if parts else "0"


g = 4
print(f"== Degree-at-most-3 polynomial spaces at genus {g} ==")
for r in (1, 0):
    space = b3_space(g, r)
    print(f"  r={r}: dimension {space.dimension}")

print()
print("== Bar map on homology classes ==")
x = a_class(1, g) + b_class(2, g)
print("bar(A1 + B2) =", label(bar_of_class(x.coords)))

print()
print("== Mod-2 symplectic action on polynomials ==")
gens = stabilizer_generators_mod2(g)
mu = johnson_mu_reference(g)
print("mu reference class:", label(mu))
print("image under the first stabilizer generator:", label(sp2_action(gens[0], mu)))

print()
print("== Coinvariants ==")
for gg, r in ((4, 1), (4, 0), (5, 1), (5, 0)):
    space = b3_space(gg, r)
    dim, reps, proj = coinvariants(space, stabilizer_generators_mod2(gg))
    rep = label(reps[0]) if reps else "-"
    cls = label(proj(johnson_mu_reference(gg)))
    print(f"  (g={gg}, r={r}): dim {dim}, representative {rep}, [mu] = {cls}")

print()
print("== Contraction of a triple product ==")
p = bar_of_class(a_class(1, g).coords) * bar_of_class(b_class(1, g).coords)
p = p * bar_of_class(a_class(g, g).coords)
print("contraction of", label(p), "=", contraction(p), "(mod 2)")
