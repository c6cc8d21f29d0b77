"""Seeded random words in congruence subgroup generators.

Word lengths are drawn uniformly from 1..30 unless stated otherwise; all
randomness flows through a numpy Generator so runs are reproducible.
"""

from __future__ import annotations

import numpy as np

from .homology import a_class, b_class, transvection
from .symplectic import SymplecticMatrix, all_igusa_generators


def gamma_p2_generators(g: int) -> list[SymplecticMatrix]:
    """Integer generators used to sample the mod-2 stabilizer of B_g:
    the level-2 generators together with transvections about classes
    supported away from A_g."""
    gens = list(all_igusa_generators(g))
    for i in range(1, g):
        gens.append(transvection(a_class(i, g), 1))
        gens.append(transvection(b_class(i, g), 1))
    for i in range(1, g - 1):
        gens.append(transvection(b_class(i, g) + a_class(i + 1, g), 1))
    gens.append(transvection(b_class(g, g), 1))
    if g >= 2:
        gens.append(transvection(a_class(1, g) + b_class(g, g), 1))
    return gens


def sp_generators(g: int) -> list[SymplecticMatrix]:
    """Transvection generators of the full symplectic group."""
    gens = []
    for i in range(1, g + 1):
        gens.append(transvection(a_class(i, g), 1))
        gens.append(transvection(b_class(i, g), 1))
    for i in range(1, g):
        gens.append(transvection(b_class(i, g) + a_class(i + 1, g), 1))
    return gens


def random_word(
    gens: list[SymplecticMatrix],
    rng: np.random.Generator,
    min_len: int = 1,
    max_len: int = 30,
) -> SymplecticMatrix:
    length = int(rng.integers(min_len, max_len + 1))
    out = SymplecticMatrix.identity(gens[0].g)
    for _ in range(length):
        out = out @ gens[int(rng.integers(len(gens)))]
    return out


def compatible_pair_generators(g: int):
    """Generating pairs (small side, integer lift).

    Only pairings observed to keep the Z/4 invariant independent of the
    characteristic are included: the corner pair (I, gamma_gg), the deck
    pair (-I, I), embedded transvections acting away from the last handle,
    and identity-paired level-2 generators whose support touches the last
    handle.  Pairing an arbitrary level-2 generator with the identity is
    mod-2 compatible but does not correspond to an integer lift, and the
    invariant picks up characteristic dependence on such pairs.
    """
    from .symplectic import igusa_generator
    from .theta import CompatiblePair, embed_prym

    h = g - 1
    ident_small = SymplecticMatrix.identity(h)
    pairs = [
        CompatiblePair(ident_small, igusa_generator("gamma", g, g, g)),
        CompatiblePair(
            SymplecticMatrix(-np.eye(2 * h, dtype=object)),
            SymplecticMatrix.identity(g),
        ),
        CompatiblePair(ident_small, igusa_generator("beta", g, g, g)),
        CompatiblePair(ident_small, igusa_generator("alpha", g, g, g)),
    ]
    for small in sp_generators(h):
        pairs.append(CompatiblePair(small, embed_prym(small)))
    for i in range(1, g):
        pairs.append(CompatiblePair(ident_small, igusa_generator("beta", i, g, g)))
        pairs.append(CompatiblePair(ident_small, igusa_generator("alpha", g, i, g)))
    return pairs


def random_compatible_pair(
    g: int,
    rng: np.random.Generator,
    min_len: int = 1,
    max_len: int = 3,
):
    """A short random word in the generating pairs.  Longer words shrink
    the imaginary part of the transformed Siegel points until the theta
    tail bound can no longer be certified at the radius cap, so the
    default length is kept small."""
    gens = compatible_pair_generators(g)
    length = int(rng.integers(min_len, max_len + 1))
    out = gens[int(rng.integers(len(gens)))]
    for _ in range(length - 1):
        out = out @ gens[int(rng.integers(len(gens)))]
    return out


def random_word_pool(
    gens: list[SymplecticMatrix],
    rng: np.random.Generator,
    size: int,
    min_len: int = 1,
    max_len: int = 30,
) -> list[SymplecticMatrix]:
    return [random_word(gens, rng, min_len, max_len) for _ in range(size)]
