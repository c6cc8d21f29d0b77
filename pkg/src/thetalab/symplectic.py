"""Exact arithmetic for Sp(2g;Z), its level and stabilizer subgroups.

Conventions, fixed once and used everywhere:

* homology classes are column vectors in the basis (A_1..A_g, B_1..B_g);
* matrices act on the left;
* the symplectic form is J = (0, I_g; -I_g, 0), so A_i . B_i = +1;
* a matrix sigma carries the block decomposition (alpha, beta; gamma, delta)
  with alpha the top-left g x g block.

All integer arithmetic uses Python's arbitrary-precision integers (numpy
object arrays), so nothing ever wraps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    DimensionMismatch,
    GeneratorNotInStabilizer,
    GenusTooLarge,
    IndexOutOfRange,
    NotInSubgroup,
    NotSiegel,
    NotSymplectic,
    NotSymplecticMod2,
    OddDimension,
    SingularCocycle,
)


def _as_object_array(entries) -> np.ndarray:
    a = np.array(entries, dtype=object)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
    # normalize every entry to a Python int
    out = np.empty(a.shape, dtype=object)
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            out[i, j] = int(a[i, j])
    return out


def j_matrix(g: int) -> np.ndarray:
    """The symplectic form J = (0, I_g; -I_g, 0) as an object array."""
    J = np.zeros((2 * g, 2 * g), dtype=object)
    for i in range(g):
        J[i, g + i] = 1
        J[g + i, i] = -1
    return J


class SymplecticMatrix:
    """A 2g x 2g integer matrix sigma with tsigma J sigma = J, exactly."""

    __slots__ = ("g", "entries")

    def __init__(self, entries):
        a = _as_object_array(entries)
        n = a.shape[0]
        if n % 2 != 0 or n == 0:
            raise OddDimension(f"matrix of size {n} has no genus")
        g = n // 2
        J = j_matrix(g)
        if not np.array_equal(np.dot(a.T, np.dot(J, a)), J):
            raise NotSymplectic("matrix does not preserve the symplectic form")
        self.g = g
        self.entries = a
        a.setflags(write=False)

    @classmethod
    def identity(cls, g: int) -> "SymplecticMatrix":
        return cls(np.eye(2 * g, dtype=object))

    @property
    def alpha(self) -> np.ndarray:
        g = self.g
        return self.entries[:g, :g]

    @property
    def beta(self) -> np.ndarray:
        g = self.g
        return self.entries[:g, g:]

    @property
    def gamma(self) -> np.ndarray:
        g = self.g
        return self.entries[g:, :g]

    @property
    def delta(self) -> np.ndarray:
        g = self.g
        return self.entries[g:, g:]

    def __matmul__(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        if self.g != other.g:
            raise DimensionMismatch("cannot multiply matrices of different genus")
        return SymplecticMatrix(np.dot(self.entries, other.entries))

    def inverse(self) -> "SymplecticMatrix":
        # sigma^-1 = (tdelta, -tbeta; -tgamma, talpha), exact
        g = self.g
        inv = np.empty((2 * g, 2 * g), dtype=object)
        inv[:g, :g] = self.delta.T
        inv[:g, g:] = -self.beta.T
        inv[g:, :g] = -self.gamma.T
        inv[g:, g:] = self.alpha.T
        return SymplecticMatrix(inv)

    def transpose(self) -> "SymplecticMatrix":
        return SymplecticMatrix(self.entries.T)

    def __pow__(self, k: int) -> "SymplecticMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        out = SymplecticMatrix.identity(self.g)
        for _ in range(k):
            out = out @ self
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymplecticMatrix)
            and self.g == other.g
            and np.array_equal(self.entries, other.entries)
        )

    def __hash__(self):
        return hash(tuple(int(x) for x in self.entries.flat))

    def apply(self, coords):
        """Image of a column vector of 2g integers."""
        v = [int(x) for x in coords]
        if len(v) != 2 * self.g:
            raise DimensionMismatch("vector length does not match genus")
        return tuple(
            sum(int(self.entries[i, j]) * v[j] for j in range(2 * self.g))
            for i in range(2 * self.g)
        )

    def mod(self, d: int) -> np.ndarray:
        return np.array([[int(x) % d for x in row] for row in self.entries], dtype=np.int64)

    def __repr__(self):
        return f"SymplecticMatrix(g={self.g}, entries={self.entries.tolist()})"


def validate_symplectic(entries) -> SymplecticMatrix:
    """Constructor enforcing the Sp relation; raises on failure."""
    return SymplecticMatrix(entries)


def igusa_generator(kind: str, i: int, j: int, g: int) -> SymplecticMatrix:
    """One of the standard generators of the level-2 group Gamma_g[2].

    alpha_ij = I + 2e_ij - 2e_{g+j,g+i}      (i != j)
    alpha_ii = I - 2e_ii - 2e_{g+i,g+i}
    beta_ij  = I + 2e_{i,j+g} + 2e_{j,i+g}   (i < j)
    beta_ii  = I + 2e_{i,i+g}
    gamma_ij = transpose(beta_ij)            (i <= j)

    Indices are 1-based, as in the classical listing.
    """
    if not (1 <= i <= g and 1 <= j <= g):
        raise IndexOutOfRange(f"indices ({i},{j}) out of range for genus {g}")
    n = 2 * g
    m = np.eye(n, dtype=object)
    i0, j0 = i - 1, j - 1
    if kind == "alpha":
        if i == j:
            m[i0, i0] -= 2
            m[g + i0, g + i0] -= 2
        else:
            m[i0, j0] += 2
            m[g + j0, g + i0] -= 2
    elif kind == "beta":
        if i > j:
            raise IndexOutOfRange("beta generators require i <= j")
        if i == j:
            m[i0, g + i0] += 2
        else:
            m[i0, g + j0] += 2
            m[j0, g + i0] += 2
    elif kind == "gamma":
        if i > j:
            raise IndexOutOfRange("gamma generators require i <= j")
        return igusa_generator("beta", i, j, g).transpose()
    else:
        raise IndexOutOfRange(f"unknown generator kind {kind!r}")
    return SymplecticMatrix(m)


def all_igusa_generators(g: int) -> list[SymplecticMatrix]:
    gens = []
    for i in range(1, g + 1):
        for j in range(1, g + 1):
            gens.append(igusa_generator("alpha", i, j, g))
    for i in range(1, g + 1):
        for j in range(i, g + 1):
            gens.append(igusa_generator("beta", i, j, g))
            gens.append(igusa_generator("gamma", i, j, g))
    return gens


def in_level(sigma: SymplecticMatrix, d: int) -> bool:
    """True iff sigma is congruent to the identity mod d."""
    n = 2 * sigma.g
    e = sigma.entries
    return all(
        (int(e[i, j]) - (1 if i == j else 0)) % d == 0
        for i in range(n)
        for j in range(n)
    )


def in_gamma_p2(sigma: SymplecticMatrix) -> bool:
    """Membership in the mod-2 stabilizer of the class B_g.

    Row g must be the unit row e_g and column 2g the unit column e_2g, mod 2.
    """
    g, n = sigma.g, 2 * sigma.g
    e = sigma.entries
    row_ok = all(int(e[g - 1, j]) % 2 == (1 if j == g - 1 else 0) for j in range(n))
    col_ok = all(int(e[i, n - 1]) % 2 == (1 if i == n - 1 else 0) for i in range(n))
    return row_ok and col_ok


def psi(sigma: SymplecticMatrix):
    """The Z/2-valued homomorphism sigma -> (sigma_{g,2g}/2) mod 2."""
    if not in_gamma_p2(sigma):
        raise NotInSubgroup("psi is only defined on the mod-2 stabilizer of B_g")
    g = sigma.g
    entry = int(sigma.entries[g - 1, 2 * g - 1])
    return (entry // 2) % 2


@dataclass(frozen=True)
class Characteristic:
    """A row vector m = (m' | m'') of 2g integers."""

    g: int
    entries: tuple

    def __init__(self, entries):
        entries = tuple(int(x) for x in entries)
        if len(entries) % 2 != 0 or not entries:
            raise OddDimension("characteristic length must be 2g")
        object.__setattr__(self, "g", len(entries) // 2)
        object.__setattr__(self, "entries", entries)

    @property
    def m_prime(self) -> tuple:
        return self.entries[: self.g]

    @property
    def m_dprime(self) -> tuple:
        return self.entries[self.g :]

    def parity(self) -> int:
        return sum(a * b for a, b in zip(self.m_prime, self.m_dprime)) % 2

    def is_even(self) -> bool:
        return self.parity() == 0

    def __add__(self, other: "Characteristic") -> "Characteristic":
        if self.g != other.g:
            raise DimensionMismatch("characteristic sizes differ")
        return Characteristic(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Characteristic") -> "Characteristic":
        if self.g != other.g:
            raise DimensionMismatch("characteristic sizes differ")
        return Characteristic(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def mod(self, d: int) -> tuple:
        return tuple(x % d for x in self.entries)


def char_apply(sigma: SymplecticMatrix, m: Characteristic) -> Characteristic:
    """The twisted affine action on characteristics,

        sigma . m = m (talpha, -tgamma; -tbeta, tdelta)
                    + ((tbeta alpha)_0 | (tdelta gamma)_0),

    where (.)_0 takes the diagonal of a g x g matrix.  This is not a group
    action; its composites differ by even vectors.
    """
    if sigma.g != m.g:
        raise DimensionMismatch("genus of matrix and characteristic differ")
    g = sigma.g
    t = np.empty((2 * g, 2 * g), dtype=object)
    t[:g, :g] = sigma.alpha.T
    t[:g, g:] = -sigma.gamma.T
    t[g:, :g] = -sigma.beta.T
    t[g:, g:] = sigma.delta.T
    row = np.array(m.entries, dtype=object)
    linear = np.dot(row, t)
    ba = np.dot(sigma.beta.T, sigma.alpha)
    dg = np.dot(sigma.delta.T, sigma.gamma)
    corr = [int(ba[i, i]) for i in range(g)] + [int(dg[i, i]) for i in range(g)]
    return Characteristic(tuple(int(linear[k]) + corr[k] for k in range(2 * g)))


class SiegelPoint:
    """A complex symmetric matrix with positive-definite imaginary part."""

    __slots__ = ("size", "entries", "lambda_min")

    def __init__(self, entries, sym_tol: float = 1e-12):
        a = np.array(entries, dtype=complex)
        if a.ndim == 0:
            a = a.reshape(1, 1)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise NotSiegel(f"expected a square matrix, got shape {a.shape}")
        if np.max(np.abs(a - a.T)) > sym_tol:
            raise NotSiegel("matrix is not symmetric within tolerance")
        a = (a + a.T) / 2
        lam = float(np.min(np.linalg.eigvalsh(a.imag)))
        if lam <= 0:
            raise NotSiegel("imaginary part is not positive definite")
        self.size = a.shape[0]
        self.entries = a
        self.lambda_min = lam
        a.setflags(write=False)

    def __repr__(self):
        return f"SiegelPoint(size={self.size}, lambda_min={self.lambda_min:.3g})"


def siegel_apply(sigma: SymplecticMatrix, tau: SiegelPoint) -> SiegelPoint:
    """The action sigma . tau = (delta tau + gamma)(beta tau + alpha)^-1."""
    if sigma.g != tau.size:
        raise DimensionMismatch("genus of matrix and Siegel point differ")
    alpha = sigma.alpha.astype(float)
    beta = sigma.beta.astype(float)
    gamma = sigma.gamma.astype(float)
    delta = sigma.delta.astype(float)
    den = beta @ tau.entries + alpha
    if abs(np.linalg.det(den)) < 1e-12:
        raise SingularCocycle("det(beta tau + alpha) is numerically zero")
    num = delta @ tau.entries + gamma
    out = num @ np.linalg.inv(den)
    if np.max(np.abs(out - out.T)) > 1e-10:
        raise NotSiegel("image of Siegel point lost symmetry")
    return SiegelPoint((out + out.T) / 2, sym_tol=1e-10)


def cocycle_det(sigma: SymplecticMatrix, tau: SiegelPoint) -> complex:
    """det(beta tau + alpha), the automorphy factor of siegel_apply."""
    den = sigma.beta.astype(float) @ tau.entries + sigma.alpha.astype(float)
    return complex(np.linalg.det(den))


@dataclass(frozen=True)
class RootOfUnity:
    """exp(pi i k / 4), stored exactly as the exponent k mod 8."""

    k: int

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % 8)

    @property
    def value(self) -> complex:
        return complex(np.exp(1j * np.pi * self.k / 4))

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        return RootOfUnity(self.k + other.k)

    def __truediv__(self, other: "RootOfUnity") -> "RootOfUnity":
        return RootOfUnity(self.k - other.k)

    def __pow__(self, n: int) -> "RootOfUnity":
        return RootOfUnity(self.k * n)

    def order(self) -> int:
        from math import gcd

        return 8 // gcd(self.k, 8)


# ---------------------------------------------------------------------------
# mod-2 machinery: the stabilizer of B_g inside Sp(2g; Z/2)
# ---------------------------------------------------------------------------


def _j_mod2(g: int) -> np.ndarray:
    J = np.zeros((2 * g, 2 * g), dtype=np.int64)
    for i in range(g):
        J[i, g + i] = 1
        J[g + i, i] = 1
    return J


def is_symplectic_mod2(mat: np.ndarray) -> bool:
    mat = np.asarray(mat, dtype=np.int64) % 2
    n = mat.shape[0]
    if mat.ndim != 2 or mat.shape[1] != n or n % 2 != 0:
        return False
    J = _j_mod2(n // 2)
    return bool(np.array_equal((mat.T @ J @ mat) % 2, J))


def _transvection_mod2(v: np.ndarray) -> np.ndarray:
    """x -> x + (v . x) v over F2, as a matrix."""
    g = v.size // 2
    J = _j_mod2(g)
    return (np.eye(2 * g, dtype=np.int64) + np.outer(v, (v @ J) % 2)) % 2


def fixes_bg_mod2(mat: np.ndarray) -> bool:
    mat = np.asarray(mat, dtype=np.int64) % 2
    n = mat.shape[0]
    e = np.zeros(n, dtype=np.int64)
    e[n - 1] = 1
    return bool(np.array_equal((mat @ e) % 2, e))


def stabilizer_generators_mod2(g: int) -> list[np.ndarray]:
    """Generators of the stabilizer of B_g in Sp(2g; Z/2).

    The list is the union of transvections generating an embedded copy of
    Sp(2g-2; Z/2) on the sub-basis (A_1..A_{g-1}, B_1..B_{g-1}) and the
    explicit elementary symplectic matrices that move A_g and B_g while
    fixing the class B_g mod 2.  Every element is checked to be symplectic
    mod 2 and to fix B_g.
    """
    if g < 1:
        raise GenusTooLarge("stabilizer generator list needs genus >= 1")
    n = 2 * g
    gens: list[np.ndarray] = []

    def unit(*idx):
        v = np.zeros(n, dtype=np.int64)
        for i in idx:
            v[i] = 1
        return v

    if g == 1:
        # the stabilizer of B_1 in Sp(2; Z/2) is generated by the
        # transvection about B_1
        m = elem_g1 = np.array([[1, 0], [1, 1]], dtype=np.int64)
        if not (is_symplectic_mod2(m) and fixes_bg_mod2(m)):
            raise GeneratorNotInStabilizer("genus-1 stabilizer generator failed")
        return [elem_g1]

    # embedded symplectic transvections on the genus-(g-1) subsurface classes
    for i in range(g - 1):
        gens.append(_transvection_mod2(unit(i)))          # about A_{i+1}
        gens.append(_transvection_mod2(unit(g + i)))      # about B_{i+1}
    for i in range(g - 2):
        gens.append(_transvection_mod2(unit(g + i, i + 1)))  # about B_i + A_{i+1}

    def elem(*pairs):
        m = np.eye(n, dtype=np.int64)
        for (r, c) in pairs:
            m[r, c] = (m[r, c] + 1) % 2
        return m % 2

    gens.append(elem((0, g)))
    gens.append(elem((g, 0)))
    if g >= 2:
        gens.append(elem((0, 1), (g + 1, g)))
    for i in range(1, g - 1):
        gens.append(elem((g + i, 0), (g, i)))
        gens.append(elem((i, g), (0, g + i)))
    for j in range(g - 1):
        gens.append(elem((g + j, j)))
        gens.append(elem((j, g + j)))
    # A_g -> A_g + B_i paired with A_i -> A_i + B_g (the minimal symplectic
    # completion of the move on A_g that fixes B_g)
    for i in range(g - 1):
        gens.append(elem((g + i, g - 1), (n - 1, i)))
    # swap of handles 1 and i+1
    for i in range(1, g - 1):
        m = np.eye(n, dtype=np.int64)
        for (r, c) in ((0, 0), (i, i), (g, g), (g + i, g + i)):
            m[r, c] = 0
        for (r, c) in ((0, i), (i, 0), (g, g + i), (g + i, g)):
            m[r, c] = 1
        gens.append(m)
    # level-2 twist about B_g, reduced mod 2 (sends A_g to A_g + B_g)
    gens.append(elem((n - 1, g - 1)))

    for m in gens:
        if not is_symplectic_mod2(m):
            raise NotSymplecticMod2(f"stabilizer generator is not symplectic mod 2:\n{m}")
        if not fixes_bg_mod2(m):
            raise GeneratorNotInStabilizer(f"generator does not fix B_g mod 2:\n{m}")
    return gens


def off_stabilizer_generator_mod2(g: int) -> np.ndarray:
    """A symplectic mod-2 matrix moving B_g: the transvection about A_g."""
    v = np.zeros(2 * g, dtype=np.int64)
    v[g - 1] = 1
    return _transvection_mod2(v)


class OrbitCertificate(NamedTuple):
    orbit_size: int
    stabilizer_fixes_class: bool


def orbit_index(g: int) -> OrbitCertificate:
    """BFS orbit of B_g mod 2 under the stabilizer list plus one extra
    generator; the orbit must sweep out all 2^(2g) - 1 nonzero vectors."""
    if g > 8:
        raise GenusTooLarge("orbit BFS is limited to genus <= 8")
    n = 2 * g
    gens = stabilizer_generators_mod2(g)
    fixes = all(fixes_bg_mod2(m) for m in gens)
    gens = gens + [off_stabilizer_generator_mod2(g)]
    start = np.zeros(n, dtype=np.int64)
    start[n - 1] = 1
    seen = {tuple(start)}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for m in gens:
                w = (m @ v) % 2
                t = tuple(w)
                if t not in seen:
                    seen.add(t)
                    nxt.append(w)
        frontier = nxt
    return OrbitCertificate(orbit_size=len(seen), stabilizer_fixes_class=fixes)
