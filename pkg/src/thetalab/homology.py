"""Dehn-twist transvections on first homology and exact identity checks.

The k-th power of a twist about a curve of class x acts on homology by

    v  ->  v + k (x . v) x

with x . v the intersection number.  The sign of the pairing in this
formula is the orientation convention that makes the squared twist about
A_g equal to the level-2 generator beta_gg; everything downstream relies
on that normalization.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import DimensionMismatch, IndexOutOfRange, NotAChain
from .symplectic import SymplecticMatrix, igusa_generator, j_matrix


@dataclass(frozen=True)
class HomologyClass:
    """An integer vector in the basis (A_1..A_g, B_1..B_g)."""

    g: int
    coords: tuple

    def __init__(self, coords):
        coords = tuple(int(x) for x in coords)
        if len(coords) % 2 != 0 or not coords:
            raise DimensionMismatch("coordinate length must be 2g")
        object.__setattr__(self, "g", len(coords) // 2)
        object.__setattr__(self, "coords", coords)

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        self._check(other)
        return HomologyClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "HomologyClass") -> "HomologyClass":
        self._check(other)
        return HomologyClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(tuple(-a for a in self.coords))

    def _check(self, other):
        if self.g != other.g:
            raise DimensionMismatch("genus mismatch between homology classes")


def a_class(i: int, g: int) -> HomologyClass:
    if not 1 <= i <= g:
        raise IndexOutOfRange(f"A_{i} undefined at genus {g}")
    return HomologyClass(tuple(1 if k == i - 1 else 0 for k in range(2 * g)))


def b_class(i: int, g: int) -> HomologyClass:
    if not 1 <= i <= g:
        raise IndexOutOfRange(f"B_{i} undefined at genus {g}")
    return HomologyClass(tuple(1 if k == g + i - 1 else 0 for k in range(2 * g)))


def intersection(x: HomologyClass, y: HomologyClass) -> int:
    """x . y with A_i . B_i = +1."""
    x._check(y)
    g = x.g
    return sum(
        x.coords[i] * y.coords[g + i] - x.coords[g + i] * y.coords[i] for i in range(g)
    )


def curve_class(kind: str, i: int, j: int | None, g: int) -> HomologyClass:
    """Homology class of a labelled simple closed curve.

    kind "C" with one index: A_i; "C'" one index: B_i;
    "C" with two indices: A_i + A_j; "C'" two: B_i + B_j;
    "C''" two: A_i + B_j.
    """
    if kind == "C''":
        if j is None:
            raise IndexOutOfRange("C'' needs two indices")
        return a_class(i, g) + b_class(j, g)
    if kind == "C":
        return a_class(i, g) if j is None else a_class(i, g) + a_class(j, g)
    if kind == "C'":
        return b_class(i, g) if j is None else b_class(i, g) + b_class(j, g)
    raise IndexOutOfRange(f"unknown curve label {kind!r}")


def transvection(x: HomologyClass, k: int) -> SymplecticMatrix:
    """Matrix of v -> v + k (x . v) x."""
    g = x.g
    col = np.array(x.coords, dtype=object)
    J = j_matrix(g)
    row = np.dot(col, J)  # v -> (x . v) is the row vector tx J
    m = np.eye(2 * g, dtype=object) + k * np.outer(col, row)
    return SymplecticMatrix(m)


def verify_factorizations(g: int) -> dict[str, bool]:
    """Exact matrix identities expressing the remaining level-2 generators
    through squared twists supported near the last handle.

    Checks, for all valid indices:

        alpha_gj = T(A_g-B_j, 2) T(B_j, -2) T(A_g, -2)
        beta_ig  = T(A_i+A_g, 2) T(A_i, -2) T(A_g, -2)
        alpha_gg = T(A_g+B_g, 2) beta_gg gamma_gg^-1
        beta_gg  = T(A_g, 2)
    """
    if g < 2:
        raise IndexOutOfRange("factorization identities need genus >= 2")
    report: dict[str, bool] = {}
    ag = a_class(g, g)
    for j in range(1, g):
        lhs = igusa_generator("alpha", g, j, g)
        rhs = transvection(ag - b_class(j, g), 2) @ transvection(b_class(j, g), -2) @ transvection(ag, -2)
        report[f"alpha_g{j}"] = lhs == rhs
    for i in range(1, g):
        lhs = igusa_generator("beta", i, g, g)
        rhs = transvection(a_class(i, g) + ag, 2) @ transvection(a_class(i, g), -2) @ transvection(ag, -2)
        report[f"beta_{i}g"] = lhs == rhs
    beta_gg = igusa_generator("beta", g, g, g)
    gamma_gg = igusa_generator("gamma", g, g, g)
    report["alpha_gg"] = igusa_generator("alpha", g, g, g) == (
        transvection(ag + b_class(g, g), 2) @ beta_gg @ gamma_gg.inverse()
    )
    report["beta_gg"] = beta_gg == transvection(ag, 2)
    return report


@dataclass(frozen=True)
class ChainReport:
    holds: bool
    boundary: tuple | None
    boundary2: tuple | None


def chain_shadow(x1: HomologyClass, x2: HomologyClass, x3: HomologyClass) -> ChainReport:
    """Homology shadow of the chain relation.

    For a chain configuration (|x1.x2| = |x2.x3| = 1, x1.x3 = 0) the fourth
    power of the product of the three twists equals a product of two
    boundary transvections.  The boundary classes are found by exhaustive
    search over +-x1 +- x3 rather than assumed.
    """
    if abs(intersection(x1, x2)) != 1 or abs(intersection(x2, x3)) != 1 or intersection(x1, x3) != 0:
        raise NotAChain("classes do not form a chain configuration")
    lhs = (transvection(x1, 1) @ transvection(x2, 1) @ transvection(x3, 1)) ** 4
    candidates = [x1 + x3, x1 - x3]
    for d, d2 in product(candidates, repeat=2):
        if transvection(d, 1) @ transvection(d2, 1) == lhs:
            return ChainReport(True, d.coords, d2.coords)
    return ChainReport(False, None, None)
