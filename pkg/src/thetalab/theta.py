"""Theta constants with characteristics and their root-of-unity multipliers.

The series is summed over an exactly certified box: the Gaussian tail
outside radius R is bounded shell by shell through the smallest eigenvalue
of Im(tau), and evaluations are rejected rather than silently truncated.

A note on orientation.  The integer matrix conventions elsewhere in this
package act on column vectors and are pinned by the squared-twist identity
beta_gg = T(A_g, 2).  The classical theta transformation law is stated for
the transposed (row) action, so every analytic operation here pushes its
matrix argument through a transpose before applying the characteristic,
Siegel, and cocycle formulas.  With the literal (untransposed) formulas the
gamma-type generator would act on tau by an integer translation and every
multiplier on the level-2 group would collapse to a sign, which contradicts
the quarter-period behaviour the e-homomorphism is built from; the
transpose restores it and leaves all exact integer checks untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    CompatibilityViolated,
    DimensionMismatch,
    GenusTooLarge,
    NoRootWithinTolerance,
    NotConverged,
    NotFourthRoot,
    SizeMismatch,
    ThetaNearZero,
)
from .symplectic import (
    Characteristic,
    RootOfUnity,
    SiegelPoint,
    SymplecticMatrix,
    char_apply,
    cocycle_det,
    in_gamma_p2,
    siegel_apply,
)

RADIUS_CAP = 40

_ROOT8 = np.exp(1j * np.pi * np.arange(8) / 4)


def _law(sigma: SymplecticMatrix) -> SymplecticMatrix:
    """The matrix actually fed to the analytic transformation formulas."""
    return sigma.transpose()


@dataclass(frozen=True)
class ThetaValue:
    value: complex
    radius: int
    tail_bound: float


def _tail_bound(g: int, lam_min: float, radius: int) -> float:
    """Bound on the series outside the box |q|_inf <= radius.

    Every lattice point in shell k has sup-norm offset at least k - 1/2
    after recentering, and the shell holds (2k+1)^g - (2k-1)^g points.
    """
    total = 0.0
    for k in range(radius + 1, radius + 200):
        term = ((2 * k + 1) ** g - (2 * k - 1) ** g) * np.exp(
            -np.pi * lam_min * (k - 0.5) ** 2
        )
        total += term
        if term < 1e-300:
            break
    return float(total)


def theta_eval(
    m: Characteristic,
    tau: SiegelPoint,
    tol: float = 1e-12,
    radius_cap: int = RADIUS_CAP,
) -> ThetaValue:
    """The theta constant

        theta_m(tau) = sum_p exp(pi i (p+m'/2) tau t(p+m'/2) + 2 pi i (p+m'/2).(m''/2))

    summed in a fixed deterministic order over a box whose Gaussian tail is
    certified below tol."""
    g = m.g
    if g != tau.size:
        raise DimensionMismatch("characteristic and Siegel point sizes differ")
    if g > 4:
        raise GenusTooLarge("theta evaluation supported for g <= 4")
    radius = None
    for r in range(1, radius_cap + 1):
        if _tail_bound(g, tau.lambda_min, r) < tol:
            radius = r
            break
    if radius is None:
        raise NotConverged(
            f"tail bound above {tol} at radius cap {radius_cap} "
            f"(lambda_min={tau.lambda_min:.3g})"
        )
    mp = np.array(m.m_prime, dtype=np.int64)
    mdp = np.array(m.m_dprime, dtype=np.int64)
    center = np.rint(mp / 2).astype(np.int64)
    # residual half-offsets: x = q + t/2 with t in {-1,0,1}
    t = mp - 2 * center
    axes = np.meshgrid(*([np.arange(-radius, radius + 1)] * g), indexing="ij")
    q = np.stack([a.ravel() for a in axes], axis=1)
    x = q + t / 2.0
    quad = np.einsum("ki,ij,kj->k", x, tau.entries, x)
    # linear phase exp(2 pi i x . m''/2): a power of i, reduced exactly
    s = (2 * q + t) @ mdp
    terms = np.exp(1j * np.pi * quad) * _ROOT8[(2 * s) % 8]
    value = complex(np.add.reduce(terms))
    return ThetaValue(value, radius, _tail_bound(g, tau.lambda_min, radius))


def char_reduce(u: Characteristic) -> tuple:
    """Canonical {0,1} representative and the exact shift-law sign:
    theta_canonical = sign * theta_u with sign = (-1)^(u'.v''),
    v = (canonical - u)/2."""
    canonical = Characteristic(u.mod(2))
    v_dprime = [(c - a) // 2 for a, c in zip(u.m_dprime, canonical.m_dprime)]
    sign = (-1) ** (sum(a * b for a, b in zip(u.m_prime, v_dprime)) % 2)
    return canonical, sign


def random_siegel(size: int, rng: np.random.Generator) -> SiegelPoint:
    """Im = identity plus a small random symmetric perturbation; Re random
    symmetric in [-0.5, 0.5]."""
    pert = rng.uniform(-0.05, 0.05, size=(size, size))
    re = rng.uniform(-0.5, 0.5, size=(size, size))
    im = np.eye(size) + (pert + pert.T) / 2
    return SiegelPoint((re + re.T) / 2 + 1j * im)


def siegel_samples(size: int, rng: np.random.Generator, count: int = 5) -> list:
    return [random_siegel(size, rng) for _ in range(count)]


def _theta(m: Characteristic, tau: SiegelPoint, tol: float, radius_cap: int) -> complex:
    return theta_eval(m, tau, tol, radius_cap).value


def _snap(values: Sequence[complex], res_tol: float, spread_tol: float) -> RootOfUnity:
    ks = set()
    for v in values:
        k = int(np.rint(np.angle(v) / (np.pi / 4))) % 8
        if abs(v - _ROOT8[k]) > res_tol:
            raise NoRootWithinTolerance(
                f"value {v} is {abs(v - _ROOT8[k]):.3g} away from the nearest 8th root"
            )
        ks.add(k)
    if len(ks) != 1:
        raise NoRootWithinTolerance(f"samples snap to different roots: {sorted(ks)}")
    spread = max(abs(v - w) for v in values for w in values)
    if spread > spread_tol:
        raise NoRootWithinTolerance(f"sample spread {spread:.3g} exceeds {spread_tol}")
    return RootOfUnity(ks.pop())


def multiplier_product(
    sigma: SymplecticMatrix,
    m: Characteristic,
    n: Characteristic,
    tau_samples: Sequence[SiegelPoint],
    res_tol: float = 1e-8,
    spread_tol: float = 1e-6,
    tol: float = 1e-12,
    radius_cap: int = RADIUS_CAP,
) -> RootOfUnity:
    """gamma_m(sigma) gamma_n(sigma), the branch-free product multiplier:

            theta_{sigma.m}(sigma.tau) theta_{sigma.n}(sigma.tau)
        ------------------------------------------------------------
            det(beta tau + alpha) theta_m(tau) theta_n(tau)

    snapped to an exact 8th root of unity across all tau samples.  The
    automorphy factor sits in the denominator: numerically
    |theta_{sigma.m}(sigma.tau)|^2 = |det(beta tau + alpha)| |theta_m(tau)|^2,
    i.e. the half-integral weight enters with a positive exponent."""
    t = _law(sigma)
    sm = char_apply(t, m)
    sn = char_apply(t, n)
    ratios = []
    for tau in tau_samples:
        denom_m = _theta(m, tau, tol, radius_cap)
        denom_n = _theta(n, tau, tol, radius_cap)
        if min(abs(denom_m), abs(denom_n)) <= 1e-8:
            raise ThetaNearZero("denominator theta constant too close to zero")
        stau = siegel_apply(t, tau)
        r = (
            _theta(sm, stau, tol, radius_cap)
            * _theta(sn, stau, tol, radius_cap)
            / (cocycle_det(t, tau) * denom_m * denom_n)
        )
        ratios.append(r)
    return _snap(ratios, res_tol, spread_tol)


def multiplier_squared(
    sigma: SymplecticMatrix,
    m: Characteristic,
    tau_samples: Sequence[SiegelPoint],
    res_tol: float = 1e-8,
    spread_tol: float = 1e-6,
    tol: float = 1e-12,
    radius_cap: int = RADIUS_CAP,
) -> RootOfUnity:
    """gamma_m(sigma)^2, computed as the m = n case of the product."""
    return multiplier_product(
        sigma, m, m, tau_samples, res_tol, spread_tol, tol, radius_cap
    )


def phi_eval(
    m_tilde: Characteristic,
    m: Characteristic,
    n: Characteristic,
    tau_tilde: SiegelPoint,
    tau: SiegelPoint,
    tol: float = 1e-12,
    radius_cap: int = RADIUS_CAP,
) -> complex:
    """The ratio theta_{m~}(tau~)^2 / (theta_m(tau) theta_n(tau))."""
    denom_m = _theta(m, tau, tol, radius_cap)
    denom_n = _theta(n, tau, tol, radius_cap)
    if min(abs(denom_m), abs(denom_n)) <= 1e-8:
        raise ThetaNearZero("denominator theta constant too close to zero")
    return _theta(m_tilde, tau_tilde, tol, radius_cap) ** 2 / (denom_m * denom_n)


def pair_compatible(sigma_tilde: SymplecticMatrix, sigma: SymplecticMatrix) -> bool:
    """Whether sigma (size 2g, stabilizing B_g mod 2) restricts mod 2 to
    sigma_tilde (size 2g-2) on the handles 1..g-1."""
    g = sigma.g
    if sigma_tilde.g != g - 1:
        raise SizeMismatch("pair sizes must be 2(g-1) and 2g")
    if not in_gamma_p2(sigma):
        return False
    idx = list(range(g - 1)) + list(range(g, 2 * g - 1))
    sub = sigma.mod(2)[np.ix_(idx, idx)].astype(np.int64)
    return bool(np.array_equal(sub, sigma_tilde.mod(2).astype(np.int64)))


@dataclass(frozen=True)
class CompatiblePair:
    """A matrix on the smaller (Prym) side together with a mod-2 lift."""

    sigma_tilde: SymplecticMatrix
    sigma: SymplecticMatrix

    def __post_init__(self):
        if not pair_compatible(self.sigma_tilde, self.sigma):
            raise CompatibilityViolated("blocks of sigma do not reduce to sigma_tilde")

    @property
    def g(self) -> int:
        return self.sigma.g

    def __matmul__(self, other: "CompatiblePair") -> "CompatiblePair":
        return CompatiblePair(
            self.sigma_tilde @ other.sigma_tilde, self.sigma @ other.sigma
        )


def embed_prym(sigma_tilde: SymplecticMatrix) -> SymplecticMatrix:
    """Extend a size-2(g-1) matrix by the identity on the last handle."""
    h = sigma_tilde.g
    g = h + 1
    m = np.eye(2 * g, dtype=object)
    m[0:h, 0:h] = sigma_tilde.alpha
    m[0:h, g : g + h] = sigma_tilde.beta
    m[g : g + h, 0:h] = sigma_tilde.gamma
    m[g : g + h, g : g + h] = sigma_tilde.delta
    return SymplecticMatrix(m)


def _split_char(m_tilde: Characteristic) -> tuple:
    """(m~', 0 | m~'', 1) and (m~', 0 | m~'', 0) one genus up."""
    m = Characteristic(m_tilde.m_prime + (0,) + m_tilde.m_dprime + (1,))
    n = Characteristic(m_tilde.m_prime + (0,) + m_tilde.m_dprime + (0,))
    return m, n


def d_sign(pair: CompatiblePair, m_tilde: Characteristic) -> int:
    """The exact sign relating the canonical reductions of sigma.(m~',0|m~'',1)
    and sigma.(m~',0|m~'',0) to the reduction of sigma_tilde.m_tilde.

    Pure integer combinatorics via the shift law; the postcondition that the
    two canonical forms differ exactly in the last entry (k1 + k2 = 1) is
    enforced."""
    g = pair.g
    if m_tilde.g != g - 1:
        raise SizeMismatch("characteristic size must be 2(g-1)")
    m, n = _split_char(m_tilde)
    t = _law(pair.sigma)
    sm_small = char_apply(_law(pair.sigma_tilde), m_tilde).mod(2)
    results = []
    for u in (m, n):
        canonical, sign = char_reduce(char_apply(t, u))
        e = canonical.entries
        body = e[: g - 1] + e[g : 2 * g - 1]
        if body != sm_small or e[g - 1] != 0:
            raise CompatibilityViolated(
                "canonical form does not match the reduced small-side characteristic"
            )
        results.append((e[2 * g - 1], sign))
    (k1, s1), (k2, s2) = results
    if k1 + k2 != 1:
        raise CompatibilityViolated(f"last-entry bits k1={k1}, k2={k2} do not sum to 1")
    return s1 * s2


def e_value(
    pair: CompatiblePair,
    m_tilde: Characteristic,
    tau_tilde_samples: Sequence[SiegelPoint],
    tau_samples: Sequence[SiegelPoint],
    res_tol: float = 1e-8,
    spread_tol: float = 1e-6,
    tol: float = 1e-12,
    radius_cap: int = RADIUS_CAP,
) -> RootOfUnity:
    """The Z/4-valued invariant d * gamma^2_{m~} / (gamma_m gamma_n)."""
    d = d_sign(pair, m_tilde)
    m, n = _split_char(m_tilde)
    g2 = multiplier_squared(
        pair.sigma_tilde, m_tilde, tau_tilde_samples, res_tol, spread_tol, tol, radius_cap
    )
    gmn = multiplier_product(
        pair.sigma, m, n, tau_samples, res_tol, spread_tol, tol, radius_cap
    )
    out = RootOfUnity(0 if d == 1 else 4) * g2 / gmn
    if out.k % 2:
        raise NotFourthRoot(f"value exp(pi i {out.k}/4) is not a 4th root of unity")
    return out
