"""Square-free boolean polynomials over F2 and their coinvariants.

The algebra is generated by the 2g barred symbols Abar_1..Abar_g,
Bbar_1..Bbar_g subject to xbar^2 = xbar, truncated at degree 3; the bar
of a sum of basis classes picks up the constant x.y from the relation
overline{x+y} = xbar + ybar + x.y.  Polynomials are stored as sets of
square-free monomials (bitmasks over the 2g variables), and the linear
algebra for quotients runs on bit-packed integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import (
    DegreeOverflow,
    DimensionMismatch,
    GeneratorNotInStabilizer,
    IndexOutOfRange,
    NotSymplecticMod2,
)
from .symplectic import fixes_bg_mod2, is_symplectic_mod2


def var_name(k: int, g: int) -> str:
    return f"Abar{k + 1}" if k < g else f"Bbar{k - g + 1}"


def monomial_basis(g: int) -> list[int]:
    """Bitmasks of the square-free monomials of degree <= 3, by degree
    then lexicographic variable order."""
    masks = [0]
    for d in (1, 2, 3):
        for combo in combinations(range(2 * g), d):
            masks.append(sum(1 << k for k in combo))
    return masks


@dataclass(frozen=True)
class BooleanPolynomial:
    """An F2 combination of square-free monomials of degree <= 3."""

    g: int
    monomials: frozenset

    def __init__(self, g: int, monomials: Iterable[int] = ()):
        if g < 1:
            raise IndexOutOfRange("genus must be positive")
        mons = frozenset(int(m) for m in monomials)
        for m in mons:
            if m < 0 or m >> (2 * g):
                raise DimensionMismatch(f"monomial mask {m} outside 2g variables")
            if bin(m).count("1") > 3:
                raise DegreeOverflow(f"monomial mask {m} has degree > 3")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "monomials", mons)

    @classmethod
    def zero(cls, g: int) -> "BooleanPolynomial":
        return cls(g, ())

    @classmethod
    def one(cls, g: int) -> "BooleanPolynomial":
        return cls(g, (0,))

    @classmethod
    def variable(cls, k: int, g: int) -> "BooleanPolynomial":
        if not 0 <= k < 2 * g:
            raise IndexOutOfRange(f"variable index {k} at genus {g}")
        return cls(g, (1 << k,))

    @property
    def degree(self) -> int:
        return max((bin(m).count("1") for m in self.monomials), default=0)

    def __add__(self, other: "BooleanPolynomial") -> "BooleanPolynomial":
        self._check(other)
        return BooleanPolynomial(self.g, self.monomials ^ other.monomials)

    def __mul__(self, other: "BooleanPolynomial") -> "BooleanPolynomial":
        return bp_mul(self, other)

    def __bool__(self) -> bool:
        return bool(self.monomials)

    def _check(self, other: "BooleanPolynomial"):
        if self.g != other.g:
            raise DimensionMismatch("genus mismatch between boolean polynomials")

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        terms = []
        for m in sorted(self.monomials, key=lambda m: (bin(m).count("1"), m)):
            if m == 0:
                terms.append("1")
            else:
                terms.append("".join(var_name(k, self.g) for k in range(2 * self.g) if m >> k & 1))
        return " + ".join(terms)


def abar(i: int, g: int) -> BooleanPolynomial:
    """The generator Abar_i (1-based)."""
    if not 1 <= i <= g:
        raise IndexOutOfRange(f"Abar_{i} undefined at genus {g}")
    return BooleanPolynomial.variable(i - 1, g)


def bbar(i: int, g: int) -> BooleanPolynomial:
    """The generator Bbar_i (1-based)."""
    if not 1 <= i <= g:
        raise IndexOutOfRange(f"Bbar_{i} undefined at genus {g}")
    return BooleanPolynomial.variable(g + i - 1, g)


def bar_of_class(v: Sequence[int]) -> BooleanPolynomial:
    """Bar of a mod-2 homology class: sum of the bars of its support plus
    the constant counting pairs with odd intersection."""
    v = [int(x) % 2 for x in v]
    if len(v) % 2 != 0 or not v:
        raise DimensionMismatch("class vector length must be 2g")
    g = len(v) // 2
    mons = set()
    for k in range(2 * g):
        if v[k]:
            mons ^= {1 << k}
    constant = sum(v[k] & v[g + k] for k in range(g)) % 2
    if constant:
        mons ^= {0}
    return BooleanPolynomial(g, mons)


def bp_mul(p: BooleanPolynomial, q: BooleanPolynomial) -> BooleanPolynomial:
    """Product with xbar^2 = xbar; degree-3 truncation is an error, not a
    silent drop."""
    p._check(q)
    mons = set()
    for mp in p.monomials:
        for mq in q.monomials:
            u = mp | mq
            if bin(u).count("1") > 3:
                raise DegreeOverflow(
                    "product monomial exceeds degree 3 in the truncated algebra"
                )
            mons ^= {u}
    return BooleanPolynomial(p.g, mons)


def sp2_action(sigma_bar: np.ndarray, p: BooleanPolynomial) -> BooleanPolynomial:
    """Action induced from mod-2 homology: each variable maps to the bar of
    the image column, extended multiplicatively and linearly."""
    g = p.g
    sigma_bar = np.asarray(sigma_bar, dtype=np.int64) % 2
    if sigma_bar.shape != (2 * g, 2 * g):
        raise DimensionMismatch("matrix size does not match polynomial genus")
    if not is_symplectic_mod2(sigma_bar):
        raise NotSymplecticMod2("action matrix is not symplectic mod 2")
    images = [bar_of_class(sigma_bar[:, k]) for k in range(2 * g)]
    out = BooleanPolynomial.zero(g)
    for m in p.monomials:
        term = BooleanPolynomial.one(g)
        for k in range(2 * g):
            if m >> k & 1:
                term = bp_mul(term, images[k])
        out = out + term
    return out


def _to_bits(p: BooleanPolynomial, index: dict) -> int:
    word = 0
    for m in p.monomials:
        word |= 1 << index[m]
    return word


def _from_bits(word: int, masks: list, g: int) -> BooleanPolynomial:
    return BooleanPolynomial(g, (masks[i] for i in range(word.bit_length()) if word >> i & 1))


class _Span:
    """Row-reduced span of bit-packed F2 vectors, keyed by pivot bit."""

    def __init__(self):
        self.pivots: dict[int, int] = {}

    def reduce(self, word: int) -> int:
        out = 0
        while word:
            piv = word.bit_length() - 1
            row = self.pivots.get(piv)
            if row is None:
                out |= 1 << piv
                word ^= 1 << piv
            else:
                word ^= row
        return out

    def add(self, word: int) -> bool:
        word = self.reduce(word)
        if word == 0:
            return False
        self.pivots[word.bit_length() - 1] = word
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


@dataclass
class QuotientSpace:
    """Ambient monomial space of B^3 at a given genus modulo a subspace."""

    g: int
    masks: list
    index: dict
    span: _Span

    @property
    def ambient_dimension(self) -> int:
        return len(self.masks)

    @property
    def dimension(self) -> int:
        return self.ambient_dimension - self.span.rank

    def to_bits(self, p: BooleanPolynomial) -> int:
        if p.g != self.g:
            raise DimensionMismatch("genus mismatch with quotient space")
        return _to_bits(p, self.index)

    def from_bits(self, word: int) -> BooleanPolynomial:
        return _from_bits(word, self.masks, self.g)

    def project(self, p: BooleanPolynomial) -> BooleanPolynomial:
        """Canonical representative of the class of p (fully reduced against
        the subspace); idempotent, kernel exactly the subspace."""
        return self.from_bits(self.span.reduce(self.to_bits(p)))


def b3_space(g: int, r: int) -> QuotientSpace:
    """The degree-<=3 boolean polynomial space for a surface with r
    boundary components; at r=0 the image of the degree-<=1 subspace under
    multiplication by alpha = sum Abar_i Bbar_i is quotiented out."""
    if g < 2:
        raise IndexOutOfRange("boolean polynomial spaces need genus >= 2")
    if r not in (0, 1):
        raise IndexOutOfRange("r must be 0 or 1")
    masks = monomial_basis(g)
    index = {m: i for i, m in enumerate(masks)}
    space = QuotientSpace(g, masks, index, _Span())
    if r == 0:
        alpha = BooleanPolynomial.zero(g)
        for i in range(1, g + 1):
            alpha = alpha + bp_mul(abar(i, g), bbar(i, g))
        space.span.add(space.to_bits(alpha))
        for k in range(2 * g):
            space.span.add(space.to_bits(bp_mul(alpha, BooleanPolynomial.variable(k, g))))
    return space


def coinvariants(
    space: QuotientSpace, gens: Sequence[np.ndarray]
) -> tuple[int, list, Callable[[BooleanPolynomial], BooleanPolynomial]]:
    """Coinvariants of the quotient space under the group generated by gens.

    Every generator must fix B_g mod 2 (the action has to descend to the
    r=0 quotient).  Returns the dimension, one monomial-combination
    representative per quotient coordinate, and the projection map.
    """
    g = space.g
    sub = _Span()
    sub.pivots = dict(space.span.pivots)
    out = QuotientSpace(g, space.masks, space.index, sub)
    for sigma_bar in gens:
        sigma_bar = np.asarray(sigma_bar, dtype=np.int64) % 2
        if not fixes_bg_mod2(sigma_bar):
            raise GeneratorNotInStabilizer(
                "coinvariant generator does not fix B_g mod 2"
            )
        for m in space.masks:
            v = BooleanPolynomial(g, (m,))
            sub.add(out.to_bits(sp2_action(sigma_bar, v) + v))
    free = [i for i in range(len(space.masks)) if i not in sub.pivots]
    reps = [BooleanPolynomial(g, (space.masks[i],)) for i in free]
    return len(free), reps, out.project


def contraction(p: BooleanPolynomial) -> int:
    """Pair each degree-3 monomial XbarYbarZbar against B_g via
    (X.Y)(B_g.Z) + (Y.Z)(B_g.X) + (Z.X)(B_g.Y) mod 2; lower degrees give 0."""
    g = p.g
    total = 0
    for m in p.monomials:
        vars_ = [k for k in range(2 * g) if m >> k & 1]
        if len(vars_) != 3:
            continue
        for (x, y), z in (
            ((vars_[0], vars_[1]), vars_[2]),
            ((vars_[1], vars_[2]), vars_[0]),
            ((vars_[2], vars_[0]), vars_[1]),
        ):
            pair_xy = 1 if abs(x - y) == g else 0
            bg_z = 1 if z == g - 1 else 0  # B_g pairs oddly only with A_g
            total ^= pair_xy & bg_z
    return total


def johnson_mu_reference(g: int) -> BooleanPolynomial:
    """The reference coinvariant-generator value Abar1 Bbar1 (Abar_g + 1),
    expanded."""
    x = bp_mul(abar(1, g), bbar(1, g))
    return bp_mul(x, abar(g, g)) + x
